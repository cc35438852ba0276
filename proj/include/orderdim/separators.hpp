#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "orderdim/core.hpp"

namespace orderdim {

/// A finite linear order on elements 0..order.size()-1 together with a
/// lower set I and an upper set F that must lie entirely below F.
struct SeparatorInstance {
  LinearExtension order;
  ElementSet lower;  // I
  ElementSet upper;  // F

  std::size_t size() const noexcept { return order.size(); }
  bool operator==(const SeparatorInstance&) const = default;
};

/// Sorts I and F; throws IndexOutOfRange or NotSeparated.
SeparatorInstance make_instance(LinearExtension order, ElementSet lower, ElementSet upper);
void validate_instance(const SeparatorInstance& inst);

enum class SeparatorMode { minimal, maximal };

/// Downward closed B with I in B and B disjoint from F. Minimal mode returns
/// the down-closure of I; maximal mode the complement of the up-closure of F.
ElementSet ls(const SeparatorInstance& inst, SeparatorMode mode = SeparatorMode::minimal);

/// ls applied to every instance. NotSeparated messages name the instance index.
std::vector<ElementSet> ls_star(std::span<const SeparatorInstance> insts,
                                SeparatorMode mode = SeparatorMode::minimal);

bool is_separator(const SeparatorInstance& inst, std::span<const std::size_t> B);

/// Indices j such that some b in L_j satisfies i <= b <= f for all i in I_j
/// and f in F_j.
std::vector<std::size_t> separator_elements(std::span<const SeparatorInstance> insts);

using Rational = mpq_class;

/// Closed interval [lo, hi] with 0 <= lo <= hi <= 1.
struct RationalInterval {
  Rational lo;
  Rational hi;

  /// Throws InvalidInterval.
  RationalInterval(Rational lo_, Rational hi_);
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Order embedding of L x 2 (lexicographic) into (0, 1): the t-th point of
/// the product maps to (t + 1) / (2|L| + 1).
Rational embed(const SeparatorInstance& inst, std::size_t element, unsigned copy);

/// {x : embed(a, 1) <= x for a in I, x <= embed(b, 0) for b in F}.
RationalInterval solution_interval(const SeparatorInstance& inst);

/// Midpoint of solution_interval(inst).
Rational ls_to_point(const SeparatorInstance& inst);

/// B = {l : embed(l, 0) < x}. Throws PointOutsideInterval.
ElementSet point_to_separator(const SeparatorInstance& inst, const Rational& x);

/// Builds a separation instance over rationals approaching the interval's
/// endpoints from outside, separates it, and reads off a point of A.
Rational xc1_via_ls(const RationalInterval& A, std::size_t depth);

}  // namespace orderdim
