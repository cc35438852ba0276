#pragma once

#include <cstddef>
#include <span>

#include "orderdim/core.hpp"
#include "orderdim/dimension.hpp"

namespace orderdim {

/// Linearization of P that puts `bottom` at the bottom and `top` at the top:
/// every x incomparable to c0 in `bottom` and to c1 in `top` lands strictly
/// between them. Either chain may be empty; otherwise the two must be
/// incomparable (NotIncomparableChains).
LinearExtension anchor_linearization(const Poset& P, std::span<const std::size_t> bottom,
                                     std::span<const std::size_t> top);

/// Extends a linear extension of `sub.poset` to all of P by closing P's order
/// together with ext and linearizing. Throws NotAnExtension.
LinearExtension lift_extension(const Poset& P, const Subposet& sub, const LinearExtension& ext);

/// Realizer of P from a realizer R of P minus the union of `chains`, which
/// must be pairwise incomparable. Size |R| + max(2, n).
Realizer dbi(const Poset& P, const ChainSet& chains, const Realizer& R);

/// Same for arbitrary chains. Size |R| + 2n.
Realizer dbc(const Poset& P, const ChainSet& chains, const Realizer& R);

/// Realizer of P from a realizer R (m >= 1 extensions) of P minus {x0}.
/// Extensions j < m-1 keep R[j] verbatim with x0 inserted at the minimal
/// separator cut; R[m-1] is split into the variants "I, x0, rest" and
/// "rest, x0, F". Size m + 1.
Realizer db_point(const Poset& P, std::size_t x0, const Realizer& R);

}  // namespace orderdim
