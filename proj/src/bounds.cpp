#include "orderdim/bounds.hpp"

#include <algorithm>
#include <string>

#include "orderdim/separators.hpp"

namespace orderdim {

namespace {

std::vector<bool> membership(std::size_t n, const ElementSet& set) {
  std::vector<bool> in(n, false);
  for (std::size_t x : set) in[x] = true;
  return in;
}

void ensure_realizes(const Poset& P, const Realizer& R, const char* what) {
  if (!verify_realizer(P, R)) throw std::logic_error(std::string(what) + " produced a non-realizer");
}

ElementSet chain_union(const Poset& P, const ChainSet& chains) {
  ElementSet all;
  for (const auto& c : chains) all.insert(all.end(), c.begin(), c.end());
  return normalize_subset(P, all);
}

std::vector<LinearExtension> lift_all(const Poset& P, const Subposet& sub, const Realizer& R) {
  std::vector<LinearExtension> out;
  out.reserve(R.size());
  for (const auto& ext : R.exts) out.push_back(lift_extension(P, sub, ext));
  return out;
}

}  // namespace

LinearExtension anchor_linearization(const Poset& P, std::span<const std::size_t> bottom,
                                     std::span<const std::size_t> top) {
  const ElementSet c0 = normalize_subset(P, bottom);
  const ElementSet c1 = normalize_subset(P, top);
  if (!is_chain(P, c0) || !is_chain(P, c1)) throw Error(ErrorCode::NotAChain, "anchor set is not a chain");
  if (!c0.empty() && !c1.empty() && !chains_incomparable(P, c0, c1)) {
    throw Error(ErrorCode::NotIncomparableChains, "bottom and top chains are comparable");
  }
  const auto in0 = membership(P.size(), c0);
  const auto in1 = membership(P.size(), c1);
  std::vector<IndexPair> edges = P.strict_pairs();
  for (std::size_t x = 0; x < P.size(); ++x) {
    for (std::size_t y = 0; y < P.size(); ++y) {
      if (!P.incomparable(x, y)) continue;
      if (in0[x] && !in0[y]) edges.emplace_back(x, y);
      if (!in1[x] && in1[y]) edges.emplace_back(x, y);
    }
  }
  Poset closed;
  try {
    closed = Poset::from_relation(P.labels(), edges);
  } catch (const CycleError& e) {
    throw std::logic_error(std::string("anchoring relation is cyclic: ") + e.what());
  }
  LinearExtension ext = linearize(closed);
  for (std::size_t x = 0; x < P.size(); ++x) {
    for (std::size_t a : c0) {
      for (std::size_t b : c1) {
        if (P.incomparable(x, a) && P.incomparable(x, b) && !(ext.before(a, x) && ext.before(x, b))) {
          throw std::logic_error("anchored linearization violates its contract");
        }
      }
    }
  }
  return ext;
}

LinearExtension lift_extension(const Poset& P, const Subposet& sub, const LinearExtension& ext) {
  if (ext.size() != sub.poset.size()) {
    throw Error(ErrorCode::SizeMismatch, "extension does not cover the subposet");
  }
  if (auto bad = ext.first_violation(sub.poset)) {
    throw NotAnExtensionError(0, bad->first, bad->second, "extension does not extend the subposet");
  }
  std::vector<IndexPair> edges = P.strict_pairs();
  for (std::size_t pos = 0; pos + 1 < ext.size(); ++pos) {
    edges.emplace_back(sub.parent_index[ext.at(pos)], sub.parent_index[ext.at(pos + 1)]);
  }
  Poset closed;
  try {
    closed = Poset::from_relation(P.labels(), edges);
  } catch (const CycleError& e) {
    throw std::logic_error(std::string("lifted relation is cyclic: ") + e.what());
  }
  return linearize(closed);
}

Realizer dbi(const Poset& P, const ChainSet& chains, const Realizer& R) {
  if (chains.empty()) throw Error(ErrorCode::BadArity, "dbi needs at least one chain");
  ChainSet C;
  for (const auto& c : chains) {
    C.push_back(normalize_subset(P, c));
    if (!is_chain(P, C.back())) {
      throw Error(ErrorCode::ChainsNotPairwiseIncomparable, "chain " + std::to_string(C.size() - 1) +
                                                                " is not a chain");
    }
  }
  for (std::size_t i = 0; i < C.size(); ++i) {
    for (std::size_t j = i + 1; j < C.size(); ++j) {
      if (!chains_incomparable(P, C[i], C[j])) {
        throw Error(ErrorCode::ChainsNotPairwiseIncomparable,
                    "chains " + std::to_string(i) + " and " + std::to_string(j) + " are comparable");
      }
    }
  }
  const Subposet sub = remove_elements(P, chain_union(P, C));
  require_realizer(sub.poset, R, "realizer of the reduced poset");

  Realizer out{lift_all(P, sub, R)};
  const std::size_t n = C.size();
  if (n == 1) {
    out.exts.push_back(anchor_linearization(P, C[0], {}));
    out.exts.push_back(anchor_linearization(P, {}, C[0]));
  } else {
    for (std::size_t j = 0; j < n; ++j) out.exts.push_back(anchor_linearization(P, C[j], C[(j + 1) % n]));
  }
  ensure_realizes(P, out, "dbi");
  return out;
}

Realizer dbc(const Poset& P, const ChainSet& chains, const Realizer& R) {
  ChainSet C;
  for (const auto& c : chains) {
    C.push_back(normalize_subset(P, c));
    if (!is_chain(P, C.back())) {
      throw Error(ErrorCode::NotAChain, "chain " + std::to_string(C.size() - 1) + " is not a chain");
    }
  }
  const Subposet sub = remove_elements(P, chain_union(P, C));
  require_realizer(sub.poset, R, "realizer of the reduced poset");

  Realizer out{lift_all(P, sub, R)};
  for (const auto& c : C) {
    out.exts.push_back(anchor_linearization(P, c, {}));
    out.exts.push_back(anchor_linearization(P, {}, c));
  }
  ensure_realizes(P, out, "dbc");
  return out;
}

Realizer db_point(const Poset& P, std::size_t x0, const Realizer& R) {
  if (x0 >= P.size()) throw Error(ErrorCode::IndexOutOfRange, "point outside the poset");
  if (R.exts.empty()) throw Error(ErrorCode::InvalidRealizer, "a realizer needs at least one extension");
  for (const auto& ext : R.exts) {
    if (ext.size() == P.size()) {
      throw Error(ErrorCode::ElementNotRemoved, "realizer still contains " + P.label(x0));
    }
  }
  const std::size_t drop[] = {x0};
  const Subposet sub = remove_elements(P, drop);
  require_realizer(sub.poset, R, "realizer of the poset without the point");

  std::vector<std::size_t> local(P.size(), SIZE_MAX);
  for (std::size_t i = 0; i < sub.parent_index.size(); ++i) local[sub.parent_index[i]] = i;
  ElementSet lower, upper;
  for (std::size_t x : down_set(P, x0)) lower.push_back(local[x]);
  for (std::size_t x : up_set(P, x0)) upper.push_back(local[x]);

  const std::size_t m = R.size();
  std::vector<SeparatorInstance> insts;
  for (std::size_t j = 0; j + 1 < m; ++j) insts.push_back(make_instance(R.exts[j], lower, upper));
  const auto cuts = ls_star(insts, SeparatorMode::minimal);

  Realizer out;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    // B is a prefix of R[j]; x0 goes right after it.
    std::vector<std::size_t> order;
    for (std::size_t pos = 0; pos < R.exts[j].size(); ++pos) {
      if (pos == cuts[j].size()) order.push_back(x0);
      order.push_back(sub.parent_index[R.exts[j].at(pos)]);
    }
    if (cuts[j].size() == R.exts[j].size()) order.push_back(x0);
    out.exts.emplace_back(std::move(order));
  }

  const LinearExtension& last = R.exts[m - 1];
  const auto in_lower = membership(sub.poset.size(), lower);
  const auto in_upper = membership(sub.poset.size(), upper);
  std::vector<std::size_t> low_first, high_last;
  for (std::size_t x : last.order()) {
    if (in_lower[x]) low_first.push_back(sub.parent_index[x]);
  }
  low_first.push_back(x0);
  for (std::size_t x : last.order()) {
    if (!in_lower[x]) low_first.push_back(sub.parent_index[x]);
  }
  for (std::size_t x : last.order()) {
    if (!in_upper[x]) high_last.push_back(sub.parent_index[x]);
  }
  high_last.push_back(x0);
  for (std::size_t x : last.order()) {
    if (in_upper[x]) high_last.push_back(sub.parent_index[x]);
  }
  out.exts.emplace_back(std::move(low_first));
  out.exts.emplace_back(std::move(high_last));
  ensure_realizes(P, out, "db_point");
  return out;
}

}  // namespace orderdim
