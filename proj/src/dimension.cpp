#include "orderdim/dimension.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace orderdim {

RealizerVerdict verify_realizer(const Poset& P, const Realizer& R) {
  if (R.exts.empty()) throw Error(ErrorCode::InvalidRealizer, "a realizer needs at least one extension");
  for (std::size_t i = 0; i < R.exts.size(); ++i) {
    const LinearExtension& ext = R.exts[i];
    if (ext.size() != P.size()) {
      throw Error(ErrorCode::SizeMismatch, "extension " + std::to_string(i) + " has " +
                                               std::to_string(ext.size()) + " elements, poset has " +
                                               std::to_string(P.size()));
    }
    if (auto bad = ext.first_violation(P)) {
      throw NotAnExtensionError(i, bad->first, bad->second,
                                "extension " + std::to_string(i) + " puts " + P.label(bad->second) +
                                    " below " + P.label(bad->first));
    }
  }
  for (const auto& [x, y] : incomparable_pairs(P)) {
    bool y_first = false;
    bool x_first = false;
    for (const auto& ext : R.exts) {
      (ext.before(y, x) ? y_first : x_first) = true;
      if (y_first && x_first) break;
    }
    if (!y_first) return RealizerVerdict{false, x, y};
    if (!x_first) return RealizerVerdict{false, y, x};
  }
  return RealizerVerdict{};
}

void require_realizer(const Poset& P, const Realizer& R, const char* what) {
  RealizerVerdict verdict;
  try {
    verdict = verify_realizer(P, R);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidRealizer, std::string(what) + ": " + e.what());
  }
  if (!verdict) {
    throw Error(ErrorCode::InvalidRealizer, std::string(what) + ": no extension puts " +
                                                P.label(verdict.upper) + " below " +
                                                P.label(verdict.lower));
  }
}

Realizer standard_realization(const Poset& P) {
  auto pairs = incomparable_pairs(P);
  if (pairs.empty()) return Realizer{{linearize(P)}};
  std::vector<IndexPair> ordered;
  for (const auto& [x, y] : pairs) {
    ordered.emplace_back(x, y);
    ordered.emplace_back(y, x);
  }
  std::sort(ordered.begin(), ordered.end());
  const auto base = P.strict_pairs();
  Realizer R;
  for (const auto& [a, b] : ordered) {
    // x <= a and b <= y  ==>  x < y
    std::vector<IndexPair> edges = base;
    for (std::size_t x = 0; x < P.size(); ++x) {
      if (x != a && !P.less(x, a)) continue;
      for (std::size_t y = 0; y < P.size(); ++y) {
        if (y == b || P.less(b, y)) edges.emplace_back(x, y);
      }
    }
    R.exts.push_back(linearize(Poset::from_relation(P.labels(), edges)));
  }
  return R;
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

// Assigns every ordered incomparable pair (x, y) to one of t slots in which
// y is placed below x. Each slot holds the transitive closure of the poset
// plus its assigned reversals, one row per element.
class SlotSearch {
 public:
  SlotSearch(const Poset& P, std::size_t slots, std::uint64_t budget, std::uint64_t& nodes)
      : n_(P.size()), slots_(slots), budget_(budget), nodes_(nodes) {
    base_.assign(n_, 0);
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = 0; v < n_; ++v) {
        if (P.less(u, v)) base_[u] |= bit(v);
      }
    }
    for (const auto& [x, y] : incomparable_pairs(P)) {
      requirements_.emplace_back(y, x);  // y below x
      requirements_.emplace_back(x, y);
    }
    std::sort(requirements_.begin(), requirements_.end(),
              [](const IndexPair& l, const IndexPair& r) {
                return std::pair(l.second, l.first) < std::pair(r.second, r.first);
              });
  }

  std::optional<std::vector<Mask>> run() {
    std::vector<Mask> state;
    for (std::size_t j = 0; j < slots_; ++j) state.insert(state.end(), base_.begin(), base_.end());
    std::vector<std::uint16_t> pending(requirements_.size());
    for (std::size_t i = 0; i < pending.size(); ++i) pending[i] = static_cast<std::uint16_t>(i);
    if (dfs(state, 0, pending)) return solution_;
    return std::nullopt;
  }

  struct BudgetHit {};

 private:

  void add_edge(std::vector<Mask>& state, std::size_t slot, std::size_t a, std::size_t b) const {
    Mask* rows = state.data() + slot * n_;
    const Mask gain = bit(b) | rows[b];
    for (std::size_t u = 0; u < n_; ++u) {
      if (u == a || (rows[u] & bit(a))) rows[u] |= gain;
    }
  }

  bool dfs(const std::vector<Mask>& state, std::size_t used, const std::vector<std::uint16_t>& pending) {
    if (++nodes_ > budget_) throw BudgetHit{};
    const std::size_t open = std::min(used + 1, slots_);
    std::vector<std::uint16_t> remaining;
    remaining.reserve(pending.size());
    std::size_t best = SIZE_MAX;
    std::size_t best_count = SIZE_MAX;
    for (std::uint16_t idx : pending) {
      const auto [a, b] = requirements_[idx];
      bool covered = false;
      for (std::size_t j = 0; j < used && !covered; ++j) covered = (state[j * n_ + a] & bit(b)) != 0;
      if (covered) continue;
      std::size_t count = 0;
      for (std::size_t j = 0; j < open; ++j) {
        if (!(state[j * n_ + b] & bit(a))) ++count;
      }
      if (count == 0) return false;
      remaining.push_back(idx);
      if (count < best_count) {
        best_count = count;
        best = idx;
      }
    }
    if (remaining.empty()) {
      solution_ = state;
      return true;
    }
    const auto [a, b] = requirements_[best];
    for (std::size_t j = 0; j < open; ++j) {
      if (state[j * n_ + b] & bit(a)) continue;
      std::vector<Mask> next = state;
      add_edge(next, j, a, b);
      if (dfs(next, std::max(used, j + 1), remaining)) return true;
    }
    return false;
  }

  std::size_t n_;
  std::size_t slots_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<Mask> base_;
  std::vector<IndexPair> requirements_;
  std::vector<Mask> solution_;
};

std::size_t known_upper_bound(const Poset& P) {
  Realizer R = standard_realization(P);
  std::set<std::vector<std::size_t>> distinct;
  for (const auto& ext : R.exts) distinct.insert(ext.order());
  return distinct.size();
}

}  // namespace

DimensionResult dimension_exact(const Poset& P, const DimensionOptions& options) {
  const std::size_t n = P.size();
  if (n > 64) throw Error(ErrorCode::TooLarge, "exact search supports at most 64 elements");
  DimensionResult result;
  if (incomparable_pairs(P).empty()) {
    result.witness = Realizer{{linearize(P)}};
    return result;
  }
  // A non-chain needs two extensions, so size 1 is exhausted without search.
  result.exhausted_size = 1;
  for (std::size_t t = 2;; ++t) {
    if (t > options.max_t) {
      throw BudgetExceededError(t, known_upper_bound(P), result.nodes,
                                "no realizer with at most " + std::to_string(options.max_t) +
                                    " extensions was searched for");
    }
    SlotSearch search(P, t, options.node_budget, result.nodes);
    std::optional<std::vector<Mask>> found;
    try {
      found = search.run();
    } catch (const SlotSearch::BudgetHit&) {
      throw BudgetExceededError(t, known_upper_bound(P), result.nodes,
                                "node budget of " + std::to_string(options.node_budget) +
                                    " exhausted while testing " + std::to_string(t) + " extensions");
    }
    if (!found) {
      result.exhausted_size = t;
      continue;
    }
    result.dim = t;
    for (std::size_t j = 0; j < t; ++j) {
      std::vector<IndexPair> edges;
      for (std::size_t u = 0; u < n; ++u) {
        const Mask row = (*found)[j * n + u];
        for (std::size_t v = 0; v < n; ++v) {
          if (row & bit(v)) edges.emplace_back(u, v);
        }
      }
      result.witness.exts.push_back(linearize(Poset::from_relation(P.labels(), edges)));
    }
    return result;
  }
}

std::vector<LinearExtension> all_linear_extensions(const Poset& P) {
  const std::size_t n = P.size();
  std::vector<LinearExtension> out;
  std::vector<std::size_t> prefix;
  std::vector<bool> placed(n, false);
  // Plain backtracking: an element may be placed once all its predecessors are.
  auto extend = [&](auto&& self) -> void {
    if (prefix.size() == n) {
      out.emplace_back(prefix);
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x]) continue;
      bool minimal = true;
      for (std::size_t y = 0; y < n && minimal; ++y) {
        if (!placed[y] && P.less(y, x)) minimal = false;
      }
      if (!minimal) continue;
      placed[x] = true;
      prefix.push_back(x);
      self(self);
      prefix.pop_back();
      placed[x] = false;
    }
  };
  extend(extend);
  return out;
}

namespace {

// Does some choice of `budget` masks from `masks` cover every bit of `need`?
bool covers(Mask need, std::size_t budget, const std::vector<Mask>& masks,
            const std::vector<std::vector<std::uint32_t>>& holders) {
  if (need == 0) return true;
  if (budget == 0) return false;
  std::size_t pick = 64;
  for (Mask rest = need; rest; rest &= rest - 1) {
    std::size_t b = static_cast<std::size_t>(__builtin_ctzll(rest));
    if (pick == 64 || holders[b].size() < holders[pick].size()) pick = b;
  }
  for (std::uint32_t m : holders[pick]) {
    if (covers(need & ~masks[m], budget - 1, masks, holders)) return true;
  }
  return false;
}

}  // namespace

std::size_t dimension_oracle(const Poset& P) {
  if (P.size() > 8) throw Error(ErrorCode::TooLarge, "oracle is limited to 8 elements");
  // Bit k of an extension's mask: the k-th ordered incomparable pair (x, y)
  // appears with y before x.
  std::vector<IndexPair> ordered;
  for (std::size_t x = 0; x < P.size(); ++x) {
    for (std::size_t y = 0; y < P.size(); ++y) {
      if (P.incomparable(x, y)) ordered.emplace_back(x, y);
    }
  }
  if (ordered.empty()) return 1;
  const auto exts = all_linear_extensions(P);
  std::vector<Mask> masks;
  std::vector<std::vector<std::uint32_t>> holders(ordered.size());
  for (const auto& ext : exts) {
    Mask m = 0;
    for (std::size_t k = 0; k < ordered.size(); ++k) {
      if (ext.before(ordered[k].second, ordered[k].first)) m |= bit(k);
    }
    for (std::size_t k = 0; k < ordered.size(); ++k) {
      if (m & bit(k)) holders[k].push_back(static_cast<std::uint32_t>(masks.size()));
    }
    masks.push_back(m);
  }
  const Mask full = ordered.size() == 64 ? ~Mask{0} : bit(ordered.size()) - 1;
  for (std::size_t t = 1;; ++t) {
    if (covers(full, t, masks, holders)) return t;
  }
}

}  // namespace orderdim
