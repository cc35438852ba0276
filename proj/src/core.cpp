#include "orderdim/core.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

namespace orderdim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::InconsistentStream: return "InconsistentStream";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotAnExtension: return "NotAnExtension";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotIncomparableChains: return "NotIncomparableChains";
    case ErrorCode::ChainsNotPairwiseIncomparable: return "ChainsNotPairwiseIncomparable";
    case ErrorCode::InvalidRealizer: return "InvalidRealizer";
    case ErrorCode::ElementNotRemoved: return "ElementNotRemoved";
    case ErrorCode::NotSeparated: return "NotSeparated";
    case ErrorCode::PointOutsideInterval: return "PointOutsideInterval";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::InvalidInjection: return "InvalidInjection";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::VariantArityMismatch: return "VariantArityMismatch";
    case ErrorCode::MismatchedInputs: return "MismatchedInputs";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

// Shortest cycle through `start` in the raw edge relation.
std::vector<std::size_t> find_cycle_through(std::size_t start,
                                            const std::vector<std::vector<std::size_t>>& succ) {
  std::vector<std::size_t> parent(succ.size(), SIZE_MAX);
  std::deque<std::size_t> queue{start};
  std::vector<bool> seen(succ.size(), false);
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : succ[u]) {
      if (v == start) {
        std::vector<std::size_t> path{u};
        while (path.back() != start) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!seen[v]) {
        seen[v] = true;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  return {start};
}

std::vector<IndexPair> resolve_pairs(const std::vector<std::string>& labels,
                                     std::span<const NamePair> pairs) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "' appears twice");
    }
  }
  std::vector<IndexPair> edges;
  edges.reserve(pairs.size());
  for (const auto& [from, to] : pairs) {
    auto a = index.find(from);
    auto b = index.find(to);
    if (a == index.end()) throw Error(ErrorCode::UnknownLabel, "unknown element '" + from + "'");
    if (b == index.end()) throw Error(ErrorCode::UnknownLabel, "unknown element '" + to + "'");
    edges.emplace_back(a->second, b->second);
  }
  return edges;
}

}  // namespace

Poset Poset::from_relation(std::vector<std::string> labels, std::span<const IndexPair> edges) {
  Poset P;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!P.index_.emplace(labels[i], i).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "' appears twice");
    }
  }
  P.labels_ = std::move(labels);
  P.above_.assign(n, Row(n));
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw Error(ErrorCode::IndexOutOfRange, "relation index out of range");
    P.above_[a].set(b);
    succ[a].push_back(b);
  }
  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (P.above_[i].test(k)) P.above_[i] |= P.above_[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (P.above_[i].test(i)) {
      std::vector<std::string> witness;
      for (std::size_t v : find_cycle_through(i, succ)) witness.push_back(P.labels_[v]);
      std::string text;
      for (const auto& w : witness) text += w + " < ";
      text += witness.front();
      throw CycleError(std::move(witness), "relation is cyclic: " + text);
    }
  }
  P.below_.assign(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = P.above_[i].find_first(); j != Row::npos; j = P.above_[i].find_next(j)) {
      P.below_[j].set(i);
    }
  }
  return P;
}

std::optional<std::size_t> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Poset::index_of(std::string_view name) const {
  auto found = find(name);
  if (!found) throw Error(ErrorCode::UnknownLabel, "unknown element '" + std::string(name) + "'");
  return *found;
}

std::vector<IndexPair> Poset::strict_pairs() const {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = above_[i].find_first(); j != Row::npos; j = above_[i].find_next(j)) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<IndexPair> Poset::cover_pairs() const {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = above_[i].find_first(); j != Row::npos; j = above_[i].find_next(j)) {
      // i covers-below j iff nothing sits strictly between them.
      if (!(above_[i] & below_[j]).any()) out.emplace_back(i, j);
    }
  }
  return out;
}

LinearExtension::LinearExtension(std::vector<std::size_t> order) : order_(std::move(order)) {
  rank_.assign(order_.size(), SIZE_MAX);
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    std::size_t x = order_[pos];
    if (x >= order_.size() || rank_[x] != SIZE_MAX) {
      throw Error(ErrorCode::SizeMismatch, "order is not a permutation of 0.." +
                                               std::to_string(order_.size()) + "-1");
    }
    rank_[x] = pos;
  }
}

std::optional<IndexPair> LinearExtension::first_violation(const Poset& P) const {
  if (P.size() != size()) throw Error(ErrorCode::SizeMismatch, "extension and poset differ in size");
  for (const auto& [x, y] : P.strict_pairs()) {
    if (rank_[x] > rank_[y]) return IndexPair{x, y};
  }
  return std::nullopt;
}

Poset build_poset(std::vector<std::string> labels, std::span<const NamePair> pairs) {
  auto edges = resolve_pairs(labels, pairs);
  return Poset::from_relation(std::move(labels), edges);
}

Poset extend_acyclic(std::vector<std::string> labels, std::span<const NamePair> pairs) {
  return build_poset(std::move(labels), pairs);
}

std::vector<IndexPair> incomparable_pairs(const Poset& P) {
  std::vector<IndexPair> out;
  for (std::size_t x = 0; x < P.size(); ++x) {
    for (std::size_t y = x + 1; y < P.size(); ++y) {
      if (P.incomparable(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

ElementSet normalize_subset(const Poset& P, std::span<const std::size_t> subset) {
  ElementSet out(subset.begin(), subset.end());
  for (std::size_t x : out) {
    if (x >= P.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "element " + std::to_string(x) + " outside poset of size " + std::to_string(P.size()));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_chain(const Poset& P, std::span<const std::size_t> subset) {
  ElementSet s = normalize_subset(P, subset);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (P.incomparable(s[i], s[j])) return false;
    }
  }
  return true;
}

bool chains_incomparable(const Poset& P, std::span<const std::size_t> c0,
                         std::span<const std::size_t> c1) {
  if (!is_chain(P, c0) || !is_chain(P, c1)) throw Error(ErrorCode::NotAChain, "argument is not a chain");
  for (std::size_t a : c0) {
    for (std::size_t b : c1) {
      if (!P.incomparable(a, b)) return false;
    }
  }
  return true;
}

LinearExtension linearize(const Poset& P) {
  const std::size_t n = P.size();
  std::vector<std::size_t> pending(n);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x) {
    pending[x] = P.below(x).count();
    if (pending[x] == 0) ready.push(x);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::size_t x = ready.top();
    ready.pop();
    order.push_back(x);
    const Row& up = P.above(x);
    for (std::size_t y = up.find_first(); y != Row::npos; y = up.find_next(y)) {
      if (--pending[y] == 0) ready.push(y);
    }
  }
  return LinearExtension(std::move(order));
}

ElementSet down_set(const Poset& P, std::size_t x) {
  if (x >= P.size()) throw Error(ErrorCode::IndexOutOfRange, "element out of range");
  ElementSet out;
  const Row& row = P.below(x);
  for (std::size_t y = row.find_first(); y != Row::npos; y = row.find_next(y)) out.push_back(y);
  return out;
}

ElementSet up_set(const Poset& P, std::size_t x) {
  if (x >= P.size()) throw Error(ErrorCode::IndexOutOfRange, "element out of range");
  ElementSet out;
  const Row& row = P.above(x);
  for (std::size_t y = row.find_first(); y != Row::npos; y = row.find_next(y)) out.push_back(y);
  return out;
}

std::size_t OnlineLinearizer::push(std::span<const std::size_t> predecessors) {
  const std::size_t m = order_.size();
  Row preds(m + 1);
  for (std::size_t p : predecessors) {
    if (p >= m) {
      throw Error(ErrorCode::InconsistentStream,
                  "element " + std::to_string(m) + " names a predecessor that has not arrived");
    }
    preds.set(p);
  }
  for (std::size_t p = preds.find_first(); p != Row::npos; p = preds.find_next(p)) {
    Row inherited = preds_[p];
    inherited.resize(m + 1);
    if (!inherited.is_subset_of(preds)) {
      throw Error(ErrorCode::InconsistentStream,
                  "predecessors of element " + std::to_string(m) + " are not transitively closed");
    }
  }
  // Insert right above the highest predecessor in the current order.
  std::size_t position = 0;
  for (std::size_t pos = 0; pos < m; ++pos) {
    if (preds.test(order_[pos])) position = pos + 1;
  }
  order_.insert(order_.begin() + static_cast<std::ptrdiff_t>(position), m);
  for (auto& row : preds_) row.resize(m + 1);
  preds_.push_back(std::move(preds));
  return m;
}

Poset OnlineLinearizer::prefix_poset() const {
  std::vector<std::string> labels;
  std::vector<IndexPair> edges;
  for (std::size_t x = 0; x < preds_.size(); ++x) {
    labels.push_back(std::to_string(x));
    for (std::size_t p = preds_[x].find_first(); p != Row::npos; p = preds_[x].find_next(p)) {
      edges.emplace_back(p, x);
    }
  }
  return Poset::from_relation(std::move(labels), edges);
}

LinearExtension online_linearize(std::span<const StreamItem> stream) {
  OnlineLinearizer online;
  for (const auto& item : stream) online.push(item);
  return online.extension();
}

Subposet induced_subposet(const Poset& P, std::span<const std::size_t> keep) {
  ElementSet kept = normalize_subset(P, keep);
  std::vector<std::size_t> local(P.size(), SIZE_MAX);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    local[kept[i]] = i;
    labels.push_back(P.label(kept[i]));
  }
  std::vector<IndexPair> edges;
  for (const auto& [x, y] : P.strict_pairs()) {
    if (local[x] != SIZE_MAX && local[y] != SIZE_MAX) edges.emplace_back(local[x], local[y]);
  }
  return Subposet{Poset::from_relation(std::move(labels), edges), std::move(kept)};
}

Subposet remove_elements(const Poset& P, std::span<const std::size_t> drop) {
  ElementSet dropped = normalize_subset(P, drop);
  std::vector<std::size_t> keep;
  for (std::size_t x = 0, d = 0; x < P.size(); ++x) {
    if (d < dropped.size() && dropped[d] == x) {
      ++d;
      continue;
    }
    keep.push_back(x);
  }
  return induced_subposet(P, keep);
}

LinearExtension restrict_extension(const LinearExtension& ext, const Subposet& sub) {
  std::vector<std::size_t> local(ext.size(), SIZE_MAX);
  for (std::size_t i = 0; i < sub.parent_index.size(); ++i) local.at(sub.parent_index[i]) = i;
  std::vector<std::size_t> order;
  order.reserve(sub.parent_index.size());
  for (std::size_t x : ext.order()) {
    if (local[x] != SIZE_MAX) order.push_back(local[x]);
  }
  return LinearExtension(std::move(order));
}

}  // namespace orderdim
