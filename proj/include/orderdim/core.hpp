#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "orderdim/error.hpp"

namespace orderdim {

using Row = boost::dynamic_bitset<std::uint64_t>;

/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<std::size_t>;
using IndexPair = std::pair<std::size_t, std::size_t>;
using NamePair = std::pair<std::string, std::string>;

/// Finite strict partial order over labeled elements. Elements are the dense
/// indices 0..size()-1 in label order; `less(x, y)` is the strict order.
///
/// Instances are immutable once built and always transitively closed and
/// irreflexive. Build them with build_poset / extend_acyclic or
/// Poset::from_relation.
class Poset {
 public:
  Poset() = default;

  /// Closes `edges` transitively over `labels`. Throws DuplicateLabel,
  /// IndexOutOfRange, or CycleError (with a witness cycle).
  static Poset from_relation(std::vector<std::string> labels, std::span<const IndexPair> edges);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t x) const { return labels_.at(x); }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownLabel.
  std::size_t index_of(std::string_view name) const;

  bool less(std::size_t x, std::size_t y) const { return above_[x].test(y); }
  bool incomparable(std::size_t x, std::size_t y) const {
    return x != y && !less(x, y) && !less(y, x);
  }

  /// Strict successors / predecessors of x as bit rows.
  const Row& above(std::size_t x) const { return above_.at(x); }
  const Row& below(std::size_t x) const { return below_.at(x); }

  /// Every pair with less(x, y), lexicographic.
  std::vector<IndexPair> strict_pairs() const;
  /// Hasse diagram edges, lexicographic.
  std::vector<IndexPair> cover_pairs() const;

  bool operator==(const Poset& other) const {
    return labels_ == other.labels_ && above_ == other.above_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Row> above_;
  std::vector<Row> below_;
};

/// A total order on a set of elements, stored bottom first. Used both as a
/// linear extension of a Poset and as a standalone finite linear order.
class LinearExtension {
 public:
  LinearExtension() = default;
  /// Throws SizeMismatch if `order` is not a permutation of 0..order.size()-1.
  explicit LinearExtension(std::vector<std::size_t> order);

  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  std::size_t at(std::size_t position) const { return order_.at(position); }
  std::size_t rank(std::size_t x) const { return rank_.at(x); }
  bool before(std::size_t x, std::size_t y) const { return rank_.at(x) < rank_.at(y); }

  /// First pair (x, y) with P.less(x, y) but rank(x) > rank(y), if any.
  std::optional<IndexPair> first_violation(const Poset& P) const;
  bool extends(const Poset& P) const { return size() == P.size() && !first_violation(P); }

  bool operator==(const LinearExtension& other) const { return order_ == other.order_; }

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
};

/// List of element subsets of one poset, each meant to be a chain.
using ChainSet = std::vector<ElementSet>;

Poset build_poset(std::vector<std::string> labels, std::span<const NamePair> pairs);
Poset extend_acyclic(std::vector<std::string> labels, std::span<const NamePair> pairs);

/// Pairs (x, y), x < y, with x | y, lexicographic.
std::vector<IndexPair> incomparable_pairs(const Poset& P);

/// Sorts and deduplicates; throws IndexOutOfRange for indices >= P.size().
ElementSet normalize_subset(const Poset& P, std::span<const std::size_t> subset);

bool is_chain(const Poset& P, std::span<const std::size_t> subset);
/// Throws NotAChain if either argument is not a chain.
bool chains_incomparable(const Poset& P, std::span<const std::size_t> c0,
                         std::span<const std::size_t> c1);

/// Kahn's algorithm, always emitting the smallest-index minimal element.
LinearExtension linearize(const Poset& P);

ElementSet down_set(const Poset& P, std::size_t x);
ElementSet up_set(const Poset& P, std::size_t x);

/// Stage-by-stage linearization of a poset presented one element at a time.
/// Each new element is placed directly above the highest (in the current
/// order) of its declared predecessors, or at the bottom if it has none.
/// Elements are numbered by arrival.
class OnlineLinearizer {
 public:
  /// `predecessors` are the strict predecessors of the new element among
  /// earlier arrivals and must be closed under the earlier declarations.
  /// Throws InconsistentStream. Returns the new element's index.
  std::size_t push(std::span<const std::size_t> predecessors);

  std::size_t size() const noexcept { return order_.size(); }
  /// Current order, bottom first.
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  LinearExtension extension() const { return LinearExtension(order_); }
  /// The poset presented so far (labels are arrival indices).
  Poset prefix_poset() const;

 private:
  std::vector<std::size_t> order_;
  std::vector<Row> preds_;
};

using StreamItem = std::vector<std::size_t>;

/// Runs OnlineLinearizer over a whole stream; element i is the i-th item.
LinearExtension online_linearize(std::span<const StreamItem> stream);

/// Induced subposet together with the index map back into the parent.
struct Subposet {
  Poset poset;
  std::vector<std::size_t> parent_index;
};

Subposet induced_subposet(const Poset& P, std::span<const std::size_t> keep);
Subposet remove_elements(const Poset& P, std::span<const std::size_t> drop);

/// Restriction of a linear extension of P to the elements of `sub`.
LinearExtension restrict_extension(const LinearExtension& ext, const Subposet& sub);

}  // namespace orderdim
