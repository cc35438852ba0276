#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orderdim/core.hpp"

namespace orderdim {

/// Nonempty family of linear extensions of one poset.
struct Realizer {
  std::vector<LinearExtension> exts;

  std::size_t size() const noexcept { return exts.size(); }
  bool operator==(const Realizer&) const = default;
};

/// Outcome of verify_realizer. When not ok, (`lower`, `upper`) is an
/// incomparable pair that no extension orders as `upper` before `lower`.
struct RealizerVerdict {
  bool ok = true;
  std::size_t lower = 0;
  std::size_t upper = 0;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks that every extension extends P (NotAnExtensionError otherwise) and
/// that every incomparable pair is reversed in both directions. Throws
/// SizeMismatch when an extension does not cover P's elements.
RealizerVerdict verify_realizer(const Poset& P, const Realizer& R);

/// Throws InvalidRealizer (with `what` as context) unless R realizes P.
void require_realizer(const Poset& P, const Realizer& R, const char* what);

/// One extension per ordered incomparable pair (a, b), forcing a below b; a
/// single linearization when P is a chain.
Realizer standard_realization(const Poset& P);

struct DimensionResult {
  std::size_t dim = 1;
  Realizer witness;
  /// Size dim-1 search was run to exhaustion (0 when dim == 1).
  std::size_t exhausted_size = 0;
  std::uint64_t nodes = 0;
};

struct DimensionOptions {
  std::size_t max_t = 64;
  std::uint64_t node_budget = 10'000'000;
};

/// Exact dimension by iterative deepening over the number of extensions.
/// Throws BudgetExceededError with the bounds known at the point of abort,
/// and TooLarge for posets over 64 elements.
DimensionResult dimension_exact(const Poset& P, const DimensionOptions& options = {});

/// Reference dimension by enumerating every linear extension. Only for
/// posets with at most 8 elements (TooLarge otherwise).
std::size_t dimension_oracle(const Poset& P);

/// All linear extensions of P in lexicographic order of their sequences.
std::vector<LinearExtension> all_linear_extensions(const Poset& P);

}  // namespace orderdim
