#include "orderdim/diagonal.hpp"

#include <algorithm>
#include <sstream>

namespace orderdim {

std::string to_string(ProgramSpec::Kind kind) {
  switch (kind) {
    case ProgramSpec::Kind::const0: return "const0";
    case ProgramSpec::Kind::const1: return "const1";
    case ProgramSpec::Kind::never: return "never";
    case ProgramSpec::Kind::table: return "table";
    case ProgramSpec::Kind::parity: return "parity";
    case ProgramSpec::Kind::threshold: return "threshold";
  }
  return "?";
}

ProgramSpec::Kind program_kind(const std::string& name) {
  for (auto k : {ProgramSpec::Kind::const0, ProgramSpec::Kind::const1, ProgramSpec::Kind::never,
                 ProgramSpec::Kind::table, ProgramSpec::Kind::parity, ProgramSpec::Kind::threshold}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown program kind '" + name + "'");
}

std::optional<int> CandidateProgram::raw(std::size_t element, std::size_t budget) const {
  if (spec_.kind == ProgramSpec::Kind::never || budget < spec_.delay) return std::nullopt;
  switch (spec_.kind) {
    case ProgramSpec::Kind::const0: return 0;
    case ProgramSpec::Kind::const1: return 1;
    case ProgramSpec::Kind::parity: return static_cast<int>(element % 2);
    case ProgramSpec::Kind::threshold: return element >= spec_.cutoff ? 1 : 0;
    case ProgramSpec::Kind::table: {
      auto it = spec_.table.find(element);
      return it == spec_.table.end() ? spec_.fallback : it->second;
    }
    case ProgramSpec::Kind::never: break;
  }
  return std::nullopt;
}

std::optional<int> CandidateProgram::eval(std::size_t element, std::size_t j, std::size_t budget) {
  const auto key = std::make_pair(element, j);
  if (auto it = seen_.find(key); it != seen_.end() && it->second.first <= budget) return it->second.second;
  auto value = raw(element, budget);
  if (value) {
    auto [it, fresh] = seen_.try_emplace(key, budget, *value);
    if (!fresh) {
      // Converged earlier at a larger budget: keep the first answer.
      value = it->second.second;
      it->second.first = std::min(it->second.first, budget);
    }
  }
  return value;
}

namespace {

const char* action_name(StageAction::Kind k) {
  switch (k) {
    case StageAction::Kind::grow: return "grow";
    case StageAction::Kind::act0: return "act0";
    case StageAction::Kind::act1: return "act1";
  }
  return "?";
}

struct OrderState {
  std::vector<std::size_t> order{0};  // element 0 is the first marker
  ElementSet lower, upper;
  std::size_t marker = 0;
  std::size_t next = 1;

  OrderSnapshot snapshot() const {
    OrderSnapshot s{order, lower, upper, marker};
    std::sort(s.lower.begin(), s.lower.end());
    std::sort(s.upper.begin(), s.upper.end());
    return s;
  }
};

SeparatorInstance to_instance(const OrderSnapshot& s) {
  return make_instance(LinearExtension(s.order), s.lower, s.upper);
}

}  // namespace

std::string DiagonalTranscript::log() const {
  std::ostringstream out;
  for (const auto& a : actions) {
    out << "stage=" << a.stage << " j=" << a.j << " action=" << action_name(a.kind) << " e=";
    if (a.program) out << *a.program;
    else out << '-';
    out << " z=" << a.z << " w=" << a.w << '\n';
  }
  return out.str();
}

DiagonalRun run_diagonalization(std::size_t k, const std::vector<std::size_t>& assignment,
                                const std::vector<ProgramSpec>& programs, std::size_t stages) {
  if (k == 0) throw Error(ErrorCode::BadArity, "need at least one order");
  if (assignment.size() != programs.size()) {
    throw Error(ErrorCode::SizeMismatch, "assignment lists " + std::to_string(assignment.size()) +
                                             " programs, got " + std::to_string(programs.size()));
  }
  for (std::size_t e = 0; e < assignment.size(); ++e) {
    if (assignment[e] >= k) {
      throw Error(ErrorCode::BadArity, "program " + std::to_string(e) + " assigned to order " +
                                           std::to_string(assignment[e]) + " >= k");
    }
  }
  std::vector<CandidateProgram> progs;
  for (const auto& p : programs) progs.emplace_back(p);

  DiagonalRun run;
  DiagonalTranscript& tr = run.transcript;
  tr.k = k;
  tr.assignment = assignment;
  std::vector<OrderState> L(k);
  std::vector<int> done(programs.size(), 0);

  auto snap = [&] {
    std::vector<OrderSnapshot> row;
    for (const auto& st : L) row.push_back(st.snapshot());
    tr.snapshots.push_back(std::move(row));
    tr.flags.push_back(done);
  };

  for (std::size_t s = 0; s < stages; ++s) {
    snap();
    for (std::size_t j = 0; j < k; ++j) {
      OrderState& st = L[j];
      const std::size_t z = st.next++;
      const std::size_t w = st.next++;
      std::optional<std::size_t> actor;
      int value = 0;
      for (std::size_t e = 0; e < std::min(s, progs.size()); ++e) {
        if (assignment[e] != j || done[e]) continue;
        if (auto v = progs[e].eval(st.marker, j, s)) {
          actor = e;
          value = *v;
          break;
        }
      }
      StageAction act{s, j, StageAction::Kind::grow, actor, z, w};
      auto at_marker = std::find(st.order.begin(), st.order.end(), st.marker);
      if (!actor) {
        st.order.insert(st.order.begin(), z);
        st.order.push_back(w);
        st.lower.push_back(z);
        st.upper.push_back(w);
      } else if (value == 0) {
        act.kind = StageAction::Kind::act0;
        st.order.insert(at_marker + 1, {z, w});
        st.lower.push_back(z);
        st.marker = w;
      } else {
        act.kind = StageAction::Kind::act1;
        st.order.insert(at_marker, {w, z});
        st.upper.push_back(z);
        st.marker = w;
      }
      if (actor) done[*actor] = 1;
      tr.actions.push_back(act);
    }
  }
  snap();
  for (const auto& s : tr.snapshots.back()) run.instances.push_back(to_instance(s));
  return run;
}

std::string Verdict::describe() const {
  std::ostringstream out;
  switch (clause) {
    case 2: out << "clause 2 (x=" << x << " in I answers 0)"; break;
    case 3: out << "clause 3 (x=" << x << " in F answers 1)"; break;
    case 4: out << "clause 4 (x=" << x << " answers 1 above y=" << y << " answering 0)"; break;
    default: out << (unresolved ? "unresolved within budget" : "not defeated"); break;
  }
  return out.str();
}

std::vector<Verdict> check_requirements(const std::vector<SeparatorInstance>& insts,
                                        const DiagonalTranscript& transcript,
                                        const std::vector<ProgramSpec>& programs, std::size_t budget) {
  if (transcript.snapshots.empty() || insts.size() != transcript.k ||
      programs.size() != transcript.assignment.size()) {
    throw Error(ErrorCode::MismatchedInputs, "instances or programs do not match the transcript");
  }
  const auto& final_state = transcript.snapshots.back();
  for (std::size_t j = 0; j < insts.size(); ++j) {
    if (!(insts[j] == to_instance(final_state[j]))) {
      throw Error(ErrorCode::MismatchedInputs, "instance " + std::to_string(j) + " differs from the transcript");
    }
  }
  std::vector<Verdict> out;
  for (std::size_t e = 0; e < programs.size(); ++e) {
    const SeparatorInstance& inst = insts[transcript.assignment[e]];
    CandidateProgram prog(programs[e]);
    std::vector<std::optional<int>> value(inst.size());
    bool diverged = false;
    for (std::size_t x = 0; x < inst.size(); ++x) {
      value[x] = prog.eval(x, transcript.assignment[e], budget);
      diverged = diverged || !value[x];
    }
    Verdict v;
    for (std::size_t x : inst.lower) {
      if (value[x] == 0) {
        v.clause = 2;
        v.x = x;
        break;
      }
    }
    if (!v.clause) {
      for (std::size_t x : inst.upper) {
        if (value[x] == 1) {
          v.clause = 3;
          v.x = x;
          break;
        }
      }
    }
    if (!v.clause) {
      std::optional<std::size_t> zero;
      for (std::size_t x : inst.order.order()) {
        if (value[x] == 0 && !zero) zero = x;
        if (value[x] == 1 && zero) {
          v.clause = 4;
          v.x = x;
          v.y = *zero;
          break;
        }
      }
    }
    v.unresolved = !v.clause && diverged;
    out.push_back(v);
  }
  return out;
}

ProgramSpec copy_minimal_separator(const SeparatorInstance& inst, std::size_t delay) {
  ProgramSpec p;
  p.kind = ProgramSpec::Kind::table;
  p.delay = delay;
  p.fallback = 0;
  for (std::size_t x = 0; x < inst.size(); ++x) p.table[x] = 0;
  for (std::size_t x : ls(inst, SeparatorMode::minimal)) p.table[x] = 1;
  return p;
}

std::vector<ProgramSpec> materialize_copies(std::size_t k, const std::vector<std::size_t>& assignment,
                                            std::vector<ProgramSpec> programs,
                                            const std::vector<bool>& copies, std::size_t stages) {
  if (copies.size() != programs.size()) {
    throw Error(ErrorCode::SizeMismatch, "copy flags do not match the program list");
  }
  std::vector<ProgramSpec> first = programs;
  for (std::size_t e = 0; e < first.size(); ++e) {
    if (copies[e]) {
      first[e] = ProgramSpec{};
      first[e].kind = ProgramSpec::Kind::never;
    }
  }
  const DiagonalRun run = run_diagonalization(k, assignment, first, stages);
  for (std::size_t e = 0; e < programs.size(); ++e) {
    if (copies[e]) programs[e] = copy_minimal_separator(run.instances[assignment[e]], programs[e].delay);
  }
  return programs;
}

}  // namespace orderdim
