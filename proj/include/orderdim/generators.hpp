#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orderdim/core.hpp"
#include "orderdim/dimension.hpp"
#include "orderdim/separators.hpp"

namespace orderdim {

struct StandardExample {
  Poset poset;       // a0..a{n-1}, b0..b{n-1}; a_i < b_j iff i != j
  Realizer realizer;  // n extensions
};

/// Throws BadArity for n < 2.
StandardExample gen_fn(std::size_t n);

/// Label helpers for the standard example.
std::string fn_a(std::size_t i);
std::string fn_b(std::size_t i);

/// Partial injections given as value lists: f(r) = f[r], g(s) = g[s].
/// Every used value must be below N.
struct InjectionPair {
  std::vector<std::size_t> f;
  std::vector<std::size_t> g;
  std::size_t N = 0;

  bool operator==(const InjectionPair&) const = default;
};

/// Throws InvalidInjection.
void validate_injection(const InjectionPair& inj);

struct LevelTag {
  enum class Kind { plain, f_copy, g_copy };
  Kind kind = Kind::plain;
  std::size_t witness = 0;  // r for f_copy, s for g_copy

  bool operator==(const LevelTag&) const = default;
};

struct LeveledPoset {
  Poset poset;
  std::vector<std::size_t> level;  // per element
  std::vector<LevelTag> meta;      // per level
  std::vector<std::size_t> xs;     // x:m by level
  std::vector<std::size_t> ys;     // y:m by level
  std::size_t columns = 0;         // number of c (and d, p, q) per copy

  std::size_t levels() const noexcept { return meta.size(); }
};

/// Level-structured poset with levels 0..N-1. Each f level m = f(r) is a copy
/// of F_k on {x:m, c:r:*} below {y:m, d:r:*}; each g level is the mirrored
/// copy on {y:m, p:s:*} below {x:m, q:s:*}; other levels are {x:m, y:m}.
/// Lower levels lie entirely below higher ones. Throws BadArity (k < 3).
LeveledPoset gen_pk(std::size_t k, const InjectionPair& inj);

struct VariantSpec {
  enum class Kind { thm46, thm48, thm49 };
  Kind kind = Kind::thm46;
  std::size_t n = 0;            // ignored for thm46
  std::optional<std::size_t> k;  // if set, must agree with the variant

  std::string name() const;
};

struct ChainVariant {
  VariantSpec spec;
  LeveledPoset lp;
  ChainSet chains;
  Subposet reduced;   // lp.poset minus the union of the chains
  Realizer realizer;  // two extensions of reduced.poset
};

/// Throws VariantArityMismatch, InvalidInjection.
ChainVariant gen_pk_chain_variant(const VariantSpec& spec, const InjectionPair& inj);

struct PipelineResult {
  Realizer realizer;  // realizer of lp.poset
  std::size_t threshold = 0;
  std::vector<std::size_t> A;
};

/// Rebuilds a realizer of the whole poset (dbi for thm46/thm49, dbc for
/// thm48) and extracts the level set. `padded` runs thm46 through dbi with
/// the chain list (C, {}, {}) instead, giving five extensions.
PipelineResult run_pipeline(const ChainVariant& v, bool padded = false);

/// {m : #extensions placing y:m before x:m <= low_threshold}.
/// Throws InvalidRealizer.
std::vector<std::size_t> extract_separator(const LeveledPoset& lp, const Realizer& R,
                                           std::size_t low_threshold);

struct SharpnessSpec {
  enum class Kind { e31, e32, e33, e34, e35 };
  Kind kind = Kind::e31;
  std::size_t n = 0;  // ignored for e34, e35

  std::string name() const;
};

struct SharpnessExample {
  SharpnessSpec spec;
  Poset poset;
  ChainSet chains;
  std::size_t dim_before = 0;
  std::size_t dim_after = 0;
  Subposet reduced;
  Realizer reduced_realizer;  // dim_after extensions of reduced.poset
};

/// Throws BadArity.
SharpnessExample gen_sharpness(const SharpnessSpec& spec);

struct DbpReversal {
  Poset poset;  // element i is labelled by its code; code 0 is z0
  std::size_t z0 = 0;
  Subposet reduced;  // poset minus z0
  Realizer realizer;  // instances.size() + 1 extensions of reduced.poset
  std::vector<std::vector<std::size_t>> code_of;  // per instance, original element -> code
};

/// Throws NotSeparated (and IndexOutOfRange) for malformed instances.
DbpReversal gen_dbp_reversal(const std::vector<SeparatorInstance>& insts);

/// Separators for the original instances read off a realizer of the full
/// poset: elements placed before z0 in extension j.
std::vector<ElementSet> recover_separators(const DbpReversal& rev, const Realizer& full);

/// Random poset: each pair i < j with i < j in index order is related with
/// probability p, then closed. Deterministic for a given seed.
Poset random_poset(std::size_t n, double p, std::uint64_t seed);

/// Random injection pair with disjoint ranges below N.
InjectionPair random_injection_pair(std::size_t N, std::size_t max_domain, std::uint64_t seed);

/// Random separation instance on n elements.
SeparatorInstance random_instance(std::size_t n, std::uint64_t seed);

}  // namespace orderdim
