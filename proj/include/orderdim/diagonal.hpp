#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orderdim/separators.hpp"

namespace orderdim {

/// Candidate separator program, evaluated on (element, order index, step
/// budget). `delay` is the first budget at which it converges.
struct ProgramSpec {
  enum class Kind { const0, const1, never, table, parity, threshold };
  Kind kind = Kind::const0;
  std::size_t delay = 0;
  std::map<std::size_t, int> table;  // table kind: element -> 0/1
  int fallback = 0;                  // table kind: value off the table
  std::size_t cutoff = 0;            // threshold kind: 1 iff element >= cutoff

  bool operator==(const ProgramSpec&) const = default;
};

std::string to_string(ProgramSpec::Kind kind);
/// Throws ParseError.
ProgramSpec::Kind program_kind(const std::string& name);

/// Wraps a ProgramSpec so that convergence is monotone in the budget: the
/// first converged value for an input is cached and returned for every
/// larger budget.
class CandidateProgram {
 public:
  explicit CandidateProgram(ProgramSpec spec) : spec_(std::move(spec)) {}

  /// 0, 1, or nullopt (no convergence within `budget` steps).
  std::optional<int> eval(std::size_t element, std::size_t j, std::size_t budget);
  const ProgramSpec& spec() const noexcept { return spec_; }

 private:
  std::optional<int> raw(std::size_t element, std::size_t budget) const;

  ProgramSpec spec_;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, int>> seen_;
};

struct StageAction {
  enum class Kind { grow, act0, act1 };
  std::size_t stage = 0;
  std::size_t j = 0;
  Kind kind = Kind::grow;
  std::optional<std::size_t> program;
  std::size_t z = 0;
  std::size_t w = 0;

  bool operator==(const StageAction&) const = default;
};

struct OrderSnapshot {
  std::vector<std::size_t> order;  // bottom first
  ElementSet lower;
  ElementSet upper;
  std::size_t marker = 0;

  bool operator==(const OrderSnapshot&) const = default;
};

struct DiagonalTranscript {
  std::size_t k = 0;
  std::vector<std::size_t> assignment;  // program id -> order index
  /// snapshots[s][j]: state at the beginning of stage s; the last entry is
  /// the final state.
  std::vector<std::vector<OrderSnapshot>> snapshots;
  /// flags[s][e]: whether requirement e was satisfied at the beginning of stage s.
  std::vector<std::vector<int>> flags;
  std::vector<StageAction> actions;

  /// One line per action: stage=<s> j=<j> action=<...> e=<id|-> z=<name> w=<name>.
  std::string log() const;
};

struct DiagonalRun {
  std::vector<SeparatorInstance> instances;
  DiagonalTranscript transcript;
};

/// Runs `stages` stages of the construction over k orders. Every program e
/// is assigned to order assignment[e] < k. Throws BadArity when k == 0 or an
/// assignment is out of range, SizeMismatch when the lists differ in length.
DiagonalRun run_diagonalization(std::size_t k, const std::vector<std::size_t>& assignment,
                                const std::vector<ProgramSpec>& programs, std::size_t stages);

struct Verdict {
  /// 2, 3, or 4 for the clause witnessing that the program is not a
  /// separator; 0 when no clause fired.
  int clause = 0;
  /// Some query diverged at the budget and no other clause fired.
  bool unresolved = false;
  std::size_t x = 0;
  std::size_t y = 0;  // second witness for clause 4

  bool defeated() const noexcept { return clause != 0; }
  std::string describe() const;
};

/// Evaluates every program on its assigned final order at `budget`. Throws
/// MismatchedInputs when insts/programs do not match the transcript.
std::vector<Verdict> check_requirements(const std::vector<SeparatorInstance>& insts,
                                        const DiagonalTranscript& transcript,
                                        const std::vector<ProgramSpec>& programs, std::size_t budget);

/// Table program answering 1 exactly on the minimal separator of `inst`.
ProgramSpec copy_minimal_separator(const SeparatorInstance& inst, std::size_t delay = 0);

/// Replaces every program flagged in `copies` by the table of the minimal
/// separator of its order, taken from a run in which the flagged programs
/// never converge.
std::vector<ProgramSpec> materialize_copies(std::size_t k, const std::vector<std::size_t>& assignment,
                                            std::vector<ProgramSpec> programs,
                                            const std::vector<bool>& copies, std::size_t stages);

}  // namespace orderdim
