#include "orderdim/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "orderdim/bounds.hpp"

namespace orderdim {

namespace {

std::string num(std::size_t i) { return std::to_string(i); }

// Extension of `P` given bottom first by labels.
LinearExtension by_names(const Poset& P, const std::vector<std::string>& names) {
  std::vector<std::size_t> order;
  order.reserve(names.size());
  for (const auto& s : names) order.push_back(P.index_of(s));
  return LinearExtension(std::move(order));
}

std::vector<std::string> names_of(const Poset& P, const LinearExtension& ext) {
  std::vector<std::string> out;
  for (std::size_t x : ext.order()) out.push_back(P.label(x));
  return out;
}

enum class Role { x, y, c, d, p, q };

struct Element {
  Role role;
  std::size_t level;
  std::size_t witness = 0;  // r or s
  std::size_t column = 0;
};

bool is_dq(const Element& e) { return e.role == Role::d || e.role == Role::q; }

// Elements of a leveled poset before the order is fixed.
struct Skeleton {
  std::vector<std::string> labels;
  std::vector<Element> elems;
  std::vector<LevelTag> meta;
  std::vector<std::size_t> xs, ys;
  std::size_t columns = 0;

  void add(std::string label, Element e) {
    labels.push_back(std::move(label));
    elems.push_back(e);
  }
};

Skeleton skeleton(std::size_t columns, const InjectionPair& inj) {
  validate_injection(inj);
  Skeleton sk;
  sk.columns = columns;
  sk.meta.assign(inj.N, LevelTag{});
  for (std::size_t r = 0; r < inj.f.size(); ++r) sk.meta[inj.f[r]] = {LevelTag::Kind::f_copy, r};
  for (std::size_t s = 0; s < inj.g.size(); ++s) sk.meta[inj.g[s]] = {LevelTag::Kind::g_copy, s};
  for (std::size_t m = 0; m < inj.N; ++m) {
    sk.xs.push_back(sk.labels.size());
    sk.add("x:" + num(m), {Role::x, m});
    sk.ys.push_back(sk.labels.size());
    sk.add("y:" + num(m), {Role::y, m});
    const LevelTag& tag = sk.meta[m];
    if (tag.kind == LevelTag::Kind::plain) continue;
    const bool f = tag.kind == LevelTag::Kind::f_copy;
    const std::string w = num(tag.witness);
    for (std::size_t j = 0; j < columns; ++j) {
      sk.add((f ? "c:" : "p:") + w + ":" + num(j), {f ? Role::c : Role::p, m, tag.witness, j});
    }
    for (std::size_t j = 0; j < columns; ++j) {
      sk.add((f ? "d:" : "q:") + w + ":" + num(j), {f ? Role::d : Role::q, m, tag.witness, j});
    }
  }
  return sk;
}

// The six within-level alternatives.
bool same_level_less(const Element& u, const Element& v) {
  switch (u.role) {
    case Role::x: return v.role == Role::d;
    case Role::y: return v.role == Role::q;
    case Role::c: return v.role == Role::y || (v.role == Role::d && v.column != u.column);
    case Role::p: return v.role == Role::x || (v.role == Role::q && v.column != u.column);
    default: return false;
  }
}

// Order with restricted cross-level comparabilities for the d/q columns.
bool column_order_less(const Element& u, const Element& v) {
  if (!is_dq(u) && !is_dq(v)) {
    if (u.level != v.level) return u.level < v.level;
    return (u.role == Role::c && v.role == Role::y) || (u.role == Role::p && v.role == Role::x);
  }
  if (is_dq(u)) return is_dq(v) && v.column == u.column && v.level > u.level;
  // v is d or q, u is not
  if (u.level < v.level) return true;
  if (u.level > v.level) return false;
  if (v.role == Role::d) return u.role == Role::x || (u.role == Role::c && u.column != v.column);
  return u.role == Role::y || (u.role == Role::p && u.column != v.column);
}

LeveledPoset finish(Skeleton&& sk, Poset poset) {
  LeveledPoset lp;
  lp.poset = std::move(poset);
  for (const auto& e : sk.elems) lp.level.push_back(e.level);
  lp.meta = std::move(sk.meta);
  lp.xs = std::move(sk.xs);
  lp.ys = std::move(sk.ys);
  lp.columns = sk.columns;
  return lp;
}

LeveledPoset build_standard(std::size_t columns, const InjectionPair& inj) {
  Skeleton sk = skeleton(columns, inj);
  // Consecutive levels plus within-level pairs; closure supplies the rest.
  std::vector<std::vector<std::size_t>> by_level(inj.N);
  for (std::size_t i = 0; i < sk.elems.size(); ++i) by_level[sk.elems[i].level].push_back(i);
  std::vector<IndexPair> edges;
  for (std::size_t m = 0; m < inj.N; ++m) {
    for (std::size_t u : by_level[m]) {
      for (std::size_t v : by_level[m]) {
        if (same_level_less(sk.elems[u], sk.elems[v])) edges.emplace_back(u, v);
      }
      if (m + 1 < inj.N) {
        for (std::size_t v : by_level[m + 1]) edges.emplace_back(u, v);
      }
    }
  }
  Poset P = Poset::from_relation(sk.labels, edges);
  return finish(std::move(sk), std::move(P));
}

LeveledPoset build_column_order(std::size_t columns, const InjectionPair& inj) {
  Skeleton sk = skeleton(columns, inj);
  std::vector<IndexPair> edges;
  for (std::size_t u = 0; u < sk.elems.size(); ++u) {
    for (std::size_t v = 0; v < sk.elems.size(); ++v) {
      if (u != v && column_order_less(sk.elems[u], sk.elems[v])) edges.emplace_back(u, v);
    }
  }
  Poset P = Poset::from_relation(sk.labels, edges);
  if (P.strict_pairs().size() != edges.size()) {
    throw std::logic_error("column order is not transitive");
  }
  return finish(std::move(sk), std::move(P));
}

using Listing = std::vector<std::string>;

// Per-level listing in one of the two extensions of a reduced variant.
using LevelLister = Listing (*)(const LevelTag&, std::size_t m, std::size_t n, int which);

std::string lab(char role, std::size_t w, std::size_t j) {
  return std::string(1, role) + ":" + num(w) + ":" + num(j);
}

Listing list_thm46(const LevelTag& tag, std::size_t m, std::size_t, int which) {
  const std::string x = "x:" + num(m), y = "y:" + num(m);
  const std::size_t w = tag.witness;
  auto c = [&](std::size_t j) { return lab('c', w, j); };
  auto d = [&](std::size_t j) { return lab('d', w, j); };
  auto p = [&](std::size_t j) { return lab('p', w, j); };
  auto q = [&](std::size_t j) { return lab('q', w, j); };
  switch (tag.kind) {
    case LevelTag::Kind::plain:
      return which == 0 ? Listing{x, y} : Listing{y, x};
    case LevelTag::Kind::f_copy:
      return which == 0 ? Listing{x, c(2), d(0), c(0), d(1), y} : Listing{c(0), c(2), y, x, d(1), d(0)};
    case LevelTag::Kind::g_copy:
      return which == 0 ? Listing{p(0), p(2), x, y, q(1), q(0)} : Listing{y, p(2), q(0), p(0), q(1), x};
  }
  return {};
}

Listing list_thm48(const LevelTag& tag, std::size_t m, std::size_t n, int which) {
  const std::string x = "x:" + num(m), y = "y:" + num(m);
  const std::size_t w = tag.witness;
  Listing out;
  auto put = [&](char role, std::size_t j) { out.push_back(lab(role, w, j)); };
  switch (tag.kind) {
    case LevelTag::Kind::plain:
      return which == 0 ? Listing{x, y} : Listing{y, x};
    case LevelTag::Kind::f_copy:
      if (which == 0) {
        out.push_back(x);
        for (std::size_t j = 2 * n - 1;; j -= 2) {
          put('c', j);
          if (j == 1) break;
        }
        put('d', 0);
        put('c', 0);
        for (std::size_t j = 2; j <= 2 * n; j += 2) put('d', j);
        out.push_back(y);
      } else {
        put('c', 0);
        for (std::size_t j = 1; j <= 2 * n - 1; j += 2) put('c', j);
        out.push_back(y);
        out.push_back(x);
        for (std::size_t j = 2 * n;; j -= 2) {
          put('d', j);
          if (j == 0) break;
        }
      }
      return out;
    case LevelTag::Kind::g_copy:
      if (which == 0) {
        put('p', 0);
        for (std::size_t j = 1; j <= 2 * n - 1; j += 2) put('p', j);
        out.push_back(x);
        out.push_back(y);
        for (std::size_t j = 2 * n;; j -= 2) {
          put('q', j);
          if (j == 0) break;
        }
      } else {
        out.push_back(y);
        for (std::size_t j = 2 * n - 1;; j -= 2) {
          put('p', j);
          if (j == 1) break;
        }
        put('q', 0);
        put('p', 0);
        for (std::size_t j = 2; j <= 2 * n; j += 2) put('q', j);
        out.push_back(x);
      }
      return out;
  }
  return out;
}

Listing list_thm49(const LevelTag& tag, std::size_t m, std::size_t n, int which) {
  const std::string x = "x:" + num(m), y = "y:" + num(m);
  const std::size_t w = tag.witness;
  Listing out;
  switch (tag.kind) {
    case LevelTag::Kind::plain:
      return which == 0 ? Listing{x, y} : Listing{y, x};
    case LevelTag::Kind::f_copy:
      if (which == 0) {
        out.push_back(x);
        for (std::size_t j = 0; j < n; ++j) out.push_back(lab('c', w, j));
        out.push_back(y);
      } else {
        for (std::size_t j = n; j-- > 0;) out.push_back(lab('c', w, j));
        out.push_back(y);
        out.push_back(x);
      }
      return out;
    case LevelTag::Kind::g_copy:
      if (which == 0) {
        out.push_back(y);
        for (std::size_t j = 0; j < n; ++j) out.push_back(lab('p', w, j));
        out.push_back(x);
      } else {
        for (std::size_t j = n; j-- > 0;) out.push_back(lab('p', w, j));
        out.push_back(x);
        out.push_back(y);
      }
      return out;
  }
  return out;
}

ElementSet chain_by_names(const Poset& P, const std::vector<std::string>& names) {
  ElementSet out;
  for (const auto& s : names) out.push_back(P.index_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

// Elements c:r:j (and the other three roles) for every copy present.
std::vector<std::string> column_members(const LeveledPoset& lp, char f_role, std::size_t f_col, char g_role,
                                        std::size_t g_col) {
  std::vector<std::string> out;
  for (const auto& tag : lp.meta) {
    if (tag.kind == LevelTag::Kind::f_copy) out.push_back(lab(f_role, tag.witness, f_col));
    if (tag.kind == LevelTag::Kind::g_copy) out.push_back(lab(g_role, tag.witness, g_col));
  }
  return out;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

// Fisher-Yates with a fixed draw rule, so results do not depend on the
// standard library's shuffle.
template <class T>
void shuffle_fixed(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

bool coin(std::mt19937_64& rng, double p) {
  // 53 random bits compared against p.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

std::string fn_a(std::size_t i) { return "a" + num(i); }
std::string fn_b(std::size_t i) { return "b" + num(i); }

StandardExample gen_fn(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::BadArity, "F_n needs n >= 2, got " + num(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(fn_a(i));
  for (std::size_t i = 0; i < n; ++i) labels.push_back(fn_b(i));
  std::vector<IndexPair> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) edges.emplace_back(i, n + j);
    }
  }
  StandardExample out{Poset::from_relation(std::move(labels), edges), {}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) order.push_back(j);
    }
    order.push_back(n + i);
    order.push_back(i);
    for (std::size_t j = n; j-- > 0;) {
      if (j != i) order.push_back(n + j);
    }
    out.realizer.exts.emplace_back(std::move(order));
  }
  return out;
}

void validate_injection(const InjectionPair& inj) {
  std::vector<int> used(inj.N, 0);
  auto mark = [&](const std::vector<std::size_t>& values, const char* name) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::size_t v = values[i];
      if (v >= inj.N) {
        throw Error(ErrorCode::InvalidInjection,
                    std::string(name) + "(" + num(i) + ") = " + num(v) + " is not below N = " + num(inj.N));
      }
      if (used[v]) {
        throw Error(ErrorCode::InvalidInjection,
                    std::string(name) + "(" + num(i) + ") = " + num(v) + " repeats a value already taken");
      }
      used[v] = 1;
    }
  };
  mark(inj.f, "f");
  mark(inj.g, "g");
}

LeveledPoset gen_pk(std::size_t k, const InjectionPair& inj) {
  if (k < 3) throw Error(ErrorCode::BadArity, "P^k needs k >= 3, got " + num(k));
  return build_standard(k - 1, inj);
}

std::string VariantSpec::name() const {
  switch (kind) {
    case Kind::thm46: return "thm46";
    case Kind::thm48: return "thm48(" + num(n) + ")";
    case Kind::thm49: return "thm49(" + num(n) + ")";
  }
  return "?";
}

ChainVariant gen_pk_chain_variant(const VariantSpec& spec, const InjectionPair& inj) {
  std::size_t k = 0;
  LevelLister lister = nullptr;
  switch (spec.kind) {
    case VariantSpec::Kind::thm46:
      k = 4;
      lister = list_thm46;
      break;
    case VariantSpec::Kind::thm48:
      if (spec.n < 1) throw Error(ErrorCode::VariantArityMismatch, "thm48 needs n >= 1");
      k = 2 * spec.n + 2;
      lister = list_thm48;
      break;
    case VariantSpec::Kind::thm49:
      if (spec.n < 3) throw Error(ErrorCode::VariantArityMismatch, "thm49 needs n >= 3");
      k = spec.n + 1;
      lister = list_thm49;
      break;
  }
  if (spec.k && *spec.k != k) {
    throw Error(ErrorCode::VariantArityMismatch,
                spec.name() + " fixes k = " + num(k) + ", got k = " + num(*spec.k));
  }

  ChainVariant out;
  out.spec = spec;
  out.spec.k = k;
  const Poset* P = nullptr;
  switch (spec.kind) {
    case VariantSpec::Kind::thm46:
      out.lp = build_standard(3, inj);
      P = &out.lp.poset;
      out.chains.push_back(chain_by_names(*P, [&] {
        auto v = column_members(out.lp, 'c', 1, 'p', 1);
        auto w = column_members(out.lp, 'd', 2, 'q', 2);
        v.insert(v.end(), w.begin(), w.end());
        return v;
      }()));
      break;
    case VariantSpec::Kind::thm48:
      out.lp = build_standard(2 * spec.n + 1, inj);
      P = &out.lp.poset;
      for (std::size_t i = 1; i <= spec.n; ++i) {
        auto v = column_members(out.lp, 'c', 2 * i, 'p', 2 * i);
        auto w = column_members(out.lp, 'd', 2 * i - 1, 'q', 2 * i - 1);
        v.insert(v.end(), w.begin(), w.end());
        out.chains.push_back(chain_by_names(*P, v));
      }
      break;
    case VariantSpec::Kind::thm49:
      out.lp = build_column_order(spec.n, inj);
      P = &out.lp.poset;
      for (std::size_t j = 0; j < spec.n; ++j) {
        out.chains.push_back(chain_by_names(*P, column_members(out.lp, 'd', j, 'q', j)));
      }
      for (std::size_t i = 0; i < out.chains.size(); ++i) {
        for (std::size_t j = i + 1; j < out.chains.size(); ++j) {
          if (!chains_incomparable(*P, out.chains[i], out.chains[j])) {
            throw std::logic_error("column chains are not pairwise incomparable");
          }
        }
      }
      break;
  }
  for (const auto& c : out.chains) {
    if (!is_chain(*P, c)) throw std::logic_error("variant chain is not a chain");
  }

  ElementSet all;
  for (const auto& c : out.chains) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  out.reduced = remove_elements(*P, all);

  const std::size_t n = spec.n;
  for (int which = 0; which < 2; ++which) {
    std::vector<std::string> names;
    for (std::size_t m = 0; m < out.lp.levels(); ++m) {
      auto part = lister(out.lp.meta[m], m, n, which);
      names.insert(names.end(), part.begin(), part.end());
    }
    out.realizer.exts.push_back(by_names(out.reduced.poset, names));
  }
  if (!verify_realizer(out.reduced.poset, out.realizer)) {
    throw std::logic_error(spec.name() + ": listed extensions do not realize the reduced poset");
  }
  return out;
}

PipelineResult run_pipeline(const ChainVariant& v, bool padded) {
  PipelineResult out;
  const Poset& P = v.lp.poset;
  switch (v.spec.kind) {
    case VariantSpec::Kind::thm46:
      if (padded) {
        out.realizer = dbi(P, {v.chains[0], {}, {}}, v.realizer);
        out.threshold = 2;
      } else {
        out.realizer = dbi(P, v.chains, v.realizer);
        out.threshold = 1;
      }
      break;
    case VariantSpec::Kind::thm48:
      out.realizer = dbc(P, v.chains, v.realizer);
      out.threshold = 1;
      break;
    case VariantSpec::Kind::thm49:
      out.realizer = dbi(P, v.chains, v.realizer);
      out.threshold = 2;
      break;
  }
  out.A = extract_separator(v.lp, out.realizer, out.threshold);
  return out;
}

std::vector<std::size_t> extract_separator(const LeveledPoset& lp, const Realizer& R,
                                           std::size_t low_threshold) {
  require_realizer(lp.poset, R, "realizer of the leveled poset");
  std::vector<std::size_t> A;
  for (std::size_t m = 0; m < lp.levels(); ++m) {
    std::size_t count = 0;
    for (const auto& ext : R.exts) count += ext.before(lp.ys[m], lp.xs[m]) ? 1 : 0;
    if (count <= low_threshold) A.push_back(m);
  }
  return A;
}

std::string SharpnessSpec::name() const {
  switch (kind) {
    case Kind::e31: return "e31(" + num(n) + ")";
    case Kind::e32: return "e32(" + num(n) + ")";
    case Kind::e33: return "e33(" + num(n) + ")";
    case Kind::e34: return "e34";
    case Kind::e35: return "e35";
  }
  return "?";
}

SharpnessExample gen_sharpness(const SharpnessSpec& spec) {
  using K = SharpnessSpec::Kind;
  const std::size_t n = spec.n;
  if ((spec.kind == K::e31 || spec.kind == K::e32) && n < 2) {
    throw Error(ErrorCode::BadArity, spec.name() + " needs n >= 2");
  }
  if (spec.kind == K::e33 && n < 3) throw Error(ErrorCode::BadArity, spec.name() + " needs n >= 3");

  SharpnessExample out;
  out.spec = spec;
  std::size_t size = 0;
  std::vector<std::vector<std::string>> chains;
  std::vector<Listing> listings;
  switch (spec.kind) {
    case K::e31: {
      size = n + 2;
      chains = {{fn_a(n), fn_b(n + 1)}};
      out.dim_after = n;
      // First n extensions of F_{n+1}, with a_n renamed a_{n+1}.
      StandardExample small = gen_fn(n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        Listing names = names_of(small.poset, small.realizer.exts[i]);
        for (auto& s : names) {
          if (s == fn_a(n)) s = fn_a(n + 1);
        }
        listings.push_back(std::move(names));
      }
      break;
    }
    case K::e32: {
      size = n + 2;
      chains = {{fn_a(n + 1), fn_b(n)}, {fn_a(n), fn_b(n + 1)}};
      out.dim_after = n;
      StandardExample small = gen_fn(n);
      for (const auto& ext : small.realizer.exts) listings.push_back(names_of(small.poset, ext));
      break;
    }
    case K::e33: {
      size = n + 2;
      for (std::size_t i = 0; i < n; ++i) chains.push_back({fn_b(i)});
      out.dim_after = 2;
      Listing l0{fn_a(n + 1)}, l1{fn_a(n)};
      for (std::size_t i = 0; i < n; ++i) l0.push_back(fn_a(i));
      for (std::size_t i = n; i-- > 0;) l1.push_back(fn_a(i));
      l0.insert(l0.end(), {fn_b(n), fn_a(n), fn_b(n + 1)});
      l1.insert(l1.end(), {fn_b(n + 1), fn_a(n + 1), fn_b(n)});
      listings = {l0, l1};
      break;
    }
    case K::e34:
      size = 5;
      chains = {{"a0", "b1"}, {"a2", "b3"}};
      out.dim_after = 2;
      listings = {{"a1", "a3", "b4", "a4", "b0", "b2"}, {"a4", "a3", "a1", "b2", "b0", "b4"}};
      break;
    case K::e35:
      size = 6;
      chains = {{"a0", "b1"}, {"a2", "b3"}};
      out.dim_after = 2;
      listings = {{"a5", "a3", "a1", "b4", "a4", "b0", "b2", "b5"},
                  {"a4", "a1", "a3", "b5", "a5", "b2", "b0", "b4"}};
      break;
  }
  out.poset = gen_fn(size).poset;
  out.dim_before = size;
  ElementSet all;
  for (const auto& c : chains) {
    out.chains.push_back(chain_by_names(out.poset, c));
    all.insert(all.end(), out.chains.back().begin(), out.chains.back().end());
  }
  std::sort(all.begin(), all.end());
  out.reduced = remove_elements(out.poset, all);
  for (const auto& l : listings) out.reduced_realizer.exts.push_back(by_names(out.reduced.poset, l));
  if (!verify_realizer(out.reduced.poset, out.reduced_realizer)) {
    throw std::logic_error(spec.name() + ": listed extensions do not realize the reduced poset");
  }
  return out;
}

DbpReversal gen_dbp_reversal(const std::vector<SeparatorInstance>& insts) {
  for (std::size_t j = 0; j < insts.size(); ++j) {
    try {
      validate_instance(insts[j]);
    } catch (const Error& e) {
      throw Error(e.code(), "instance " + num(j) + ": " + e.what());
    }
  }
  // Pad every instance to T elements in each of the classes I, F, other.
  std::size_t widest = 0, pad = 3;
  for (const auto& inst : insts) {
    const std::size_t others = inst.size() - inst.lower.size() - inst.upper.size();
    widest = std::max({widest, inst.lower.size(), inst.upper.size(), others});
    pad = std::max(pad, inst.size());
  }
  const std::size_t T = widest + pad;
  const std::size_t total = 3 * T;  // codes 1..3T; code 0 is z0

  DbpReversal out;
  out.z0 = 0;
  std::vector<std::vector<std::size_t>> orders;  // codes, bottom first
  for (const auto& inst : insts) {
    std::vector<int> cls(inst.size(), 2);
    for (std::size_t x : inst.lower) cls[x] = 0;
    for (std::size_t x : inst.upper) cls[x] = 1;
    std::size_t count[3] = {0, 0, 0};
    for (int c : cls) ++count[c];
    // Code of the t-th member of class c: 3(t+1) for I, 3t+1 for F, 3t+2 otherwise.
    std::size_t next[3] = {0, 0, 0};
    auto code = [&](int c) {
      const std::size_t t = next[c]++;
      return c == 0 ? 3 * (t + 1) : 3 * t + static_cast<std::size_t>(c);
    };
    std::vector<std::size_t> code_of(inst.size());
    for (std::size_t x = 0; x < inst.size(); ++x) code_of[x] = code(cls[x]);
    std::vector<std::size_t> fresh_lower, fresh_upper, fresh_other;
    while (next[0] < T) fresh_lower.push_back(code(0));
    while (next[1] < T) fresh_upper.push_back(code(1));
    while (next[2] < T) fresh_other.push_back(code(2));
    std::vector<std::size_t> order(fresh_lower.rbegin(), fresh_lower.rend());
    for (std::size_t x : inst.order.order()) order.push_back(code_of[x]);
    order.insert(order.end(), fresh_upper.begin(), fresh_upper.end());
    order.insert(order.end(), fresh_other.begin(), fresh_other.end());
    orders.push_back(std::move(order));
    out.code_of.push_back(std::move(code_of));
  }
  {
    std::vector<std::size_t> aux;
    for (std::size_t c : {0, 2, 1}) {
      for (std::size_t t = 0; t < T; ++t) aux.push_back(c == 0 ? 3 * (t + 1) : 3 * t + c);
    }
    orders.push_back(std::move(aux));
  }

  std::vector<std::vector<std::size_t>> ranks;
  for (const auto& o : orders) {
    std::vector<std::size_t> r(total + 1, 0);
    for (std::size_t i = 0; i < o.size(); ++i) r[o[i]] = i;
    ranks.push_back(std::move(r));
  }
  std::vector<IndexPair> edges;
  for (std::size_t u = 1; u <= total; ++u) {
    for (std::size_t v = 1; v <= total; ++v) {
      if (u == v) continue;
      bool all = true;
      for (const auto& r : ranks) {
        if (r[u] > r[v]) {
          all = false;
          break;
        }
      }
      if (all) edges.emplace_back(u, v);
    }
    if (u % 3 == 0) edges.emplace_back(u, 0);
    if (u % 3 == 1) edges.emplace_back(0, u);
  }
  std::vector<std::string> labels;
  for (std::size_t c = 0; c <= total; ++c) labels.push_back(num(c));
  out.poset = Poset::from_relation(std::move(labels), edges);
  if (out.poset.strict_pairs().size() != edges.size()) {
    throw std::logic_error("reversal relation is not transitive");
  }
  const std::size_t drop[] = {0};
  out.reduced = remove_elements(out.poset, drop);
  for (const auto& o : orders) {
    std::vector<std::size_t> local;
    for (std::size_t c : o) local.push_back(c - 1);
    out.realizer.exts.emplace_back(std::move(local));
  }
  if (!verify_realizer(out.reduced.poset, out.realizer)) {
    throw std::logic_error("padded orders do not realize the reversal poset");
  }
  return out;
}

std::vector<ElementSet> recover_separators(const DbpReversal& rev, const Realizer& full) {
  if (full.size() < rev.code_of.size()) {
    throw Error(ErrorCode::SizeMismatch, "realizer has fewer extensions than instances");
  }
  std::vector<ElementSet> out;
  for (std::size_t j = 0; j < rev.code_of.size(); ++j) {
    const LinearExtension& ext = full.exts[j];
    if (ext.size() != rev.poset.size()) {
      throw Error(ErrorCode::SizeMismatch, "extension " + num(j) + " does not cover the reversal poset");
    }
    ElementSet B;
    for (std::size_t x = 0; x < rev.code_of[j].size(); ++x) {
      if (ext.before(rev.code_of[j][x], rev.z0)) B.push_back(x);
    }
    out.push_back(std::move(B));
  }
  return out;
}

Poset random_poset(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  shuffle_fixed(perm, rng);
  std::vector<IndexPair> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng, p)) edges.emplace_back(perm[i], perm[j]);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + num(i));
  return Poset::from_relation(std::move(labels), edges);
}

InjectionPair random_injection_pair(std::size_t N, std::size_t max_domain, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> values(N);
  for (std::size_t i = 0; i < N; ++i) values[i] = i;
  shuffle_fixed(values, rng);
  const std::size_t cap = std::min(max_domain, N / 2);
  const std::size_t nf = static_cast<std::size_t>(draw(rng, cap + 1));
  const std::size_t ng = static_cast<std::size_t>(draw(rng, cap + 1));
  InjectionPair inj;
  inj.N = N;
  inj.f.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(nf));
  inj.g.assign(values.begin() + static_cast<std::ptrdiff_t>(nf),
               values.begin() + static_cast<std::ptrdiff_t>(nf + ng));
  return inj;
}

SeparatorInstance random_instance(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  shuffle_fixed(order, rng);
  const std::size_t cut = static_cast<std::size_t>(draw(rng, n + 1));
  ElementSet lower, upper;
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (coin(rng, 0.5)) (pos < cut ? lower : upper).push_back(order[pos]);
  }
  return make_instance(LinearExtension(std::move(order)), std::move(lower), std::move(upper));
}

}  // namespace orderdim
