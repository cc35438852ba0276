#include "orderdim/separators.hpp"

#include <algorithm>
#include <string>

namespace orderdim {

namespace {

void check_range(const SeparatorInstance& inst, const ElementSet& set) {
  for (std::size_t x : set) {
    if (x >= inst.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(x) +
                                                  " outside linear order of size " +
                                                  std::to_string(inst.size()));
    }
  }
}

std::size_t max_rank(const SeparatorInstance& inst, const ElementSet& set) {
  std::size_t best = 0;
  for (std::size_t x : set) best = std::max(best, inst.order.rank(x));
  return best;
}

std::size_t min_rank(const SeparatorInstance& inst, const ElementSet& set) {
  std::size_t best = inst.size();
  for (std::size_t x : set) best = std::min(best, inst.order.rank(x));
  return best;
}

// Elements whose rank lies in [0, end).
ElementSet prefix(const SeparatorInstance& inst, std::size_t end) {
  ElementSet out(inst.order.order().begin(), inst.order.order().begin() + static_cast<std::ptrdiff_t>(end));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SeparatorInstance make_instance(LinearExtension order, ElementSet lower, ElementSet upper) {
  auto tidy = [](ElementSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  };
  tidy(lower);
  tidy(upper);
  SeparatorInstance inst{std::move(order), std::move(lower), std::move(upper)};
  validate_instance(inst);
  return inst;
}

void validate_instance(const SeparatorInstance& inst) {
  check_range(inst, inst.lower);
  check_range(inst, inst.upper);
  if (!inst.lower.empty() && !inst.upper.empty() &&
      max_rank(inst, inst.lower) >= min_rank(inst, inst.upper)) {
    throw Error(ErrorCode::NotSeparated, "some element of I is not strictly below every element of F");
  }
}

ElementSet ls(const SeparatorInstance& inst, SeparatorMode mode) {
  validate_instance(inst);
  if (mode == SeparatorMode::minimal) {
    return inst.lower.empty() ? ElementSet{} : prefix(inst, max_rank(inst, inst.lower) + 1);
  }
  return prefix(inst, min_rank(inst, inst.upper));
}

std::vector<ElementSet> ls_star(std::span<const SeparatorInstance> insts, SeparatorMode mode) {
  std::vector<ElementSet> out;
  out.reserve(insts.size());
  for (std::size_t j = 0; j < insts.size(); ++j) {
    try {
      out.push_back(ls(insts[j], mode));
    } catch (const Error& e) {
      throw Error(e.code(), "instance " + std::to_string(j) + ": " + e.what());
    }
  }
  return out;
}

bool is_separator(const SeparatorInstance& inst, std::span<const std::size_t> B) {
  std::vector<bool> in(inst.size(), false);
  for (std::size_t x : B) {
    if (x >= inst.size()) return false;
    in[x] = true;
  }
  for (std::size_t x : inst.lower) {
    if (!in[x]) return false;
  }
  for (std::size_t x : inst.upper) {
    if (in[x]) return false;
  }
  // Downward closed: membership never switches back on going up.
  bool left = false;
  for (std::size_t x : inst.order.order()) {
    if (!in[x]) left = true;
    else if (left) return false;
  }
  return true;
}

std::vector<std::size_t> separator_elements(std::span<const SeparatorInstance> insts) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < insts.size(); ++j) {
    const SeparatorInstance& inst = insts[j];
    validate_instance(inst);
    if (inst.size() == 0) continue;
    // Ranks admissible for b form the interval [max rank of I, min rank of F].
    const std::size_t lo = inst.lower.empty() ? 0 : max_rank(inst, inst.lower);
    const std::size_t hi = inst.upper.empty() ? inst.size() - 1 : min_rank(inst, inst.upper);
    if (lo <= hi) out.push_back(j);
  }
  return out;
}

RationalInterval::RationalInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  lo.canonicalize();
  hi.canonicalize();
  if (lo < 0 || hi > 1 || lo > hi) {
    throw Error(ErrorCode::InvalidInterval, "need 0 <= lo <= hi <= 1, got [" + lo.get_str() + ", " +
                                                hi.get_str() + "]");
  }
}

Rational embed(const SeparatorInstance& inst, std::size_t element, unsigned copy) {
  const unsigned long t = 2 * inst.order.rank(element) + (copy ? 1 : 0);
  Rational q(static_cast<unsigned long>(t + 1), static_cast<unsigned long>(2 * inst.size() + 1));
  q.canonicalize();
  return q;
}

RationalInterval solution_interval(const SeparatorInstance& inst) {
  validate_instance(inst);
  Rational lo = 0;
  Rational hi = 1;
  for (std::size_t a : inst.lower) lo = std::max<Rational>(lo, embed(inst, a, 1));
  for (std::size_t b : inst.upper) hi = std::min<Rational>(hi, embed(inst, b, 0));
  if (lo > hi) throw std::logic_error("solution interval of a valid separation instance is empty");
  return RationalInterval(lo, hi);
}

Rational ls_to_point(const SeparatorInstance& inst) {
  RationalInterval A = solution_interval(inst);
  Rational mid = (A.lo + A.hi) / 2;
  mid.canonicalize();
  return mid;
}

ElementSet point_to_separator(const SeparatorInstance& inst, const Rational& x) {
  RationalInterval A = solution_interval(inst);
  if (!A.contains(x)) {
    throw Error(ErrorCode::PointOutsideInterval,
                x.get_str() + " is outside [" + A.lo.get_str() + ", " + A.hi.get_str() + "]");
  }
  ElementSet B;
  for (std::size_t l = 0; l < inst.size(); ++l) {
    // Otherwise embed(l, 1) > x holds, since the two copies straddle x.
    if (embed(inst, l, 0) < x) B.push_back(l);
  }
  if (!is_separator(inst, B)) throw std::logic_error("point_to_separator produced an invalid separator");
  return B;
}

Rational xc1_via_ls(const RationalInterval& A, std::size_t depth) {
  // a_n = lo (1 - 2^-(n+1)) increases to lo; b_n = hi + (1 - hi) 2^-(n+1)
  // decreases to hi. Endpoints already on the boundary get no sequence.
  std::vector<Rational> points;
  std::vector<bool> is_lower;
  for (std::size_t n = 0; n < depth; ++n) {
    Rational scale(1, 1);
    scale /= Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(n + 1));
    if (A.lo > 0) {
      points.push_back(A.lo * (1 - scale));
      is_lower.push_back(true);
    }
    if (A.hi < 1) {
      points.push_back(A.hi + (1 - A.hi) * scale);
      is_lower.push_back(false);
    }
  }
  for (auto& p : points) p.canonicalize();
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return points[l] < points[r]; });
  ElementSet lower, upper;
  for (std::size_t i = 0; i < points.size(); ++i) (is_lower[i] ? lower : upper).push_back(i);
  SeparatorInstance inst = make_instance(LinearExtension(std::move(order)), lower, upper);

  const ElementSet B = ls(inst, SeparatorMode::minimal);
  std::vector<bool> in(points.size(), false);
  for (std::size_t b : B) in[b] = true;
  Rational left = 0;
  Rational right = 1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (in[i]) left = std::max<Rational>(left, points[i]);
    else right = std::min<Rational>(right, points[i]);
  }
  Rational cut = (left + right) / 2;
  cut.canonicalize();
  if (cut < A.lo) cut = A.lo;
  if (cut > A.hi) cut = A.hi;
  return cut;
}

}  // namespace orderdim
