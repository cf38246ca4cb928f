#include "seshadri/stats.hpp"

#include "seshadri/bounds.hpp"

namespace seshadri::stats {

namespace {

void require(bool ok, const char* condition) {
  if (!ok) throw PreconditionViolation(condition);
}

// eps^2 > (l/n)(1 - 1/(a n))  <=>  p^2 a n^2 > q^2 l (a n - 1)
bool exceeds(const Rational& eps, const Integer& n, const Integer& l, const Integer& a) {
  const Integer& p = eps.num();
  const Integer& q = eps.den();
  return Integer(p * p * a * n * n) > Integer(q * q * l * (a * n - 1));
}

}  // namespace

bool star_holds(const Integer& n, const Integer& l) {
  require(n >= 2, "n >= 2");
  require(l >= 1, "l >= 1");
  return exceeds(bounds::epsilon_basic(n, l).value, n, l, 1);
}

bool interval_I_contains(const Integer& n, const Integer& l) {
  require(n >= 2 && l >= 1, "n >= 2 and l >= 1");
  // sqrt(l(n-1)) < k < sqrt(n^2 l/(n-1))
  return integer_in_open_sqrt_interval(Integer(l * (n - 1)), 1, Integer(n * n * l), Integer(n - 1)).has_value();
}

bool interval_J_contains(const Integer& n, const Integer& l) {
  require(n >= 2 && l >= 1, "n >= 2 and l >= 1");
  // (k+1)(n+1) > (n+2) sqrt(nl)  and  k(n+1) < n sqrt(nl)
  Integer n1sq = (n + 1) * (n + 1);
  Integer lower = (n + 2) * (n + 2) * n * l;
  // least k+1 with (k+1)^2 (n+1)^2 > lower
  Integer kp1 = isqrt(floor_div(lower, n1sq)) + 1;
  Integer k = kp1 - 1;
  return Integer(k * k * n1sq) < Integer(n * n * n * l);
}

ScanReport star_scan(const Integer& n, const Integer& l_lo, const Integer& l_hi, bool detail) {
  require(n >= 2, "n >= 2");
  require(l_lo >= 1 && l_lo <= l_hi, "1 <= l_lo <= l_hi");
  ScanReport rep;
  rep.n = n;
  rep.total_l = l_hi - l_lo + 1;
  rep.holds_count = 0;
  for (Integer l = l_lo; l <= l_hi; ++l) {
    auto eb = bounds::epsilon_basic(n, l);
    bool star = exceeds(eb.value, n, l, 1);
    if (star && !eb.square_case) rep.holds_count += 1;
    if (detail) {
      rep.rows.push_back(ScanRow{l, eb.value, eb.square_case, star, interval_I_contains(n, l),
                                 interval_J_contains(n, l)});
    }
  }
  rep.percentage = Rational(Integer(100 * rep.holds_count), rep.total_l);
  return rep;
}

ScanReport star_fraction(const Integer& n, bool detail) { return star_scan(n, 1, n, detail); }

HalfRange half_range_check(const Integer& n) {
  require(n > 2, "n > 2");
  Integer lo = ceil_div(Integer(n - 1), 2);
  HalfRange out;
  out.count = 0;
  out.range_size = n - 1 - lo + 1;
  for (Integer l = lo; l <= n - 1; ++l) {
    if (star_holds(n, l)) out.count += 1;
  }
  out.pass = 2 * out.count >= out.range_size;
  return out;
}

std::pair<Integer, Integer> dirichlet_witness(const Integer& n, const Integer& l) {
  require(n >= 1 && l >= 1, "n >= 1 and l >= 1");
  Integer nl = n * l;
  if (is_perfect_square(nl)) throw DomainError("nl is a perfect square: (d, r) = (1, sqrt(nl)) is exact");
  // u = (n+1) r, v = (n+1) d:  (v-1) sqrt(nl) <= u <= (v+1) sqrt(nl)
  Integer dmax = isqrt(floor_div(n, l)) + 2;
  for (Integer d = 1; d <= dmax; ++d) {
    Integer v = (n + 1) * d;
    for (Integer r = 1; r <= n; ++r) {
      Integer u = (n + 1) * r;
      Integer uu = u * u;
      if (uu >= (v - 1) * (v - 1) * nl && uu <= (v + 1) * (v + 1) * nl) return {r, d};
    }
  }
  throw DomainError("no Dirichlet witness found in range");
}

bool doublestar_holds(const Integer& n, const Integer& l, const Integer& a) {
  require(n >= 1 && l >= 1 && a >= 1, "n, l, a >= 1");
  return exceeds(bounds::epsilon_basic(n, l).value, n, l, a);
}

DoubleStar doublestar_failure_count(const Integer& l, const Integer& s, const Integer& a) {
  require(s > 2, "s > 2");
  require(a >= 1, "a >= 1");
  require(l >= 1, "l >= 1");
  DoubleStar out;
  out.failures = 0;
  for (Integer n = s * s * l; n < (s + 1) * (s + 1) * l; ++n) {
    if (!doublestar_holds(n, l, a)) out.failures += 1;
  }
  if (a > 2) out.bound = (2 * a * a - a + 8) * l + 3;
  else if (a == 2) out.bound = 14 * l + 3;
  else out.bound = 4 * l + 2;
  out.pass = out.failures <= out.bound;
  return out;
}

}  // namespace seshadri::stats
