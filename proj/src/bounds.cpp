#include "seshadri/bounds.hpp"

#include "seshadri/nefcert.hpp"

#include <cstdint>
#include <limits>

namespace seshadri::bounds {

namespace {

void require(bool ok, const char* condition) {
  if (!ok) throw PreconditionViolation(condition);
}

Integer ceil_sqrt_ratio(const Integer& n, const Integer& l) {
  // least k with k^2 l >= n
  Integer k = isqrt(floor_div(n, l));
  if (k * k * l < n) k += 1;
  return k;
}

SeshadriBound square_marker(const Integer& n, const Integer& l, bool refined) {
  SeshadriBound out;
  out.n = n;
  out.l = l;
  out.square_case = true;
  out.refined = refined;
  out.value = Rational(isqrt(Integer(n * l)), n);
  return out;
}

struct Best {
  std::optional<BoundWitness> w;
  // strict improvement only, so the first maximizer (smallest d, then the
  // S1 candidate, which carries the smaller r) is kept
  void offer(BoundWitness cand) {
    if (!w || cand.value > w->value) w = std::move(cand);
  }
};

template <typename T>
struct Frac64 {
  T p;
  T q;
};

// Brute force over the defining sets. T is int64_t for small inputs.
template <typename T, typename Wide>
Rational oracle_impl(T n, T l) {
  T dmax = 1;
  while (Wide(dmax) * dmax * l < n) ++dmax;
  Frac64<T> best{0, 1};
  T nl = n * l;
  for (T d = 1; d <= dmax; ++d) {
    Wide rhs = Wide(nl) * d * d;
    for (T r = 1; r <= n; ++r) {
      Wide lhs = Wide(r) * r;
      if (lhs <= rhs) {
        Frac64<T> c{r, n * d};
        if (Wide(c.p) * best.q > Wide(best.p) * c.q) best = c;
      }
      if (lhs >= rhs) {
        Frac64<T> c{d * l, r};
        if (Wide(c.p) * best.q > Wide(best.p) * c.q) best = c;
      }
    }
  }
  if constexpr (std::is_same_v<T, Integer>) {
    return Rational(best.p, best.q);
  } else {
    return Rational(Integer(static_cast<long>(best.p)), Integer(static_cast<long>(best.q)));
  }
}

bool is_power_of_two(const Integer& s) {
  return s > 0 && mpz_popcount(s.get_mpz_t()) == 1;
}

std::optional<Integer> least_odd_prime_factor(Integer s) {
  while (s > 0 && mpz_even_p(s.get_mpz_t())) s /= 2;
  if (s <= 1) return std::nullopt;
  for (Integer p = 3; p * p <= s; p += 2) {
    if (mpz_divisible_p(s.get_mpz_t(), p.get_mpz_t())) return p;
  }
  return s;
}

}  // namespace

std::string tag_name(SetTag tag) {
  switch (tag) {
    case SetTag::S1: return "S1";
    case SetTag::S2: return "S2";
    case SetTag::S1Refined: return "S1'";
    case SetTag::S2Refined: return "S2'";
  }
  return "?";
}

Integer refined_mult_limit(const Integer& d) { return d > 2 ? Integer(d - 1) : Integer(1); }

SeshadriBound epsilon_basic(const Integer& n, const Integer& l) {
  require(n >= 1, "n >= 1");
  require(l >= 1, "l >= 1");
  Integer nl = n * l;
  if (l <= n && is_perfect_square(nl)) return square_marker(n, l, false);

  SeshadriBound out;
  out.n = n;
  out.l = l;
  if (l >= n) {
    // r = n, d = 1 lies in S1 since n <= sqrt(nl)
    out.value = 1;
    out.witness = BoundWitness{n, 1, 1, SetTag::S1, Rational(1)};
    return out;
  }

  // Only the largest element of S1 and the smallest-r element of S2 matter
  // for each d; d stops at floor(sqrt(n/l)), plus the single value 1/d*.
  Integer d_lo = isqrt(floor_div(n, l));
  Best best;
  for (Integer d = 1; d <= d_lo; ++d) {
    Integer x = d * d * nl;
    Integer f = isqrt(x);  // x is not a square: nl is not
    Integer c = f + 1;
    best.offer(BoundWitness{f, d, 1, SetTag::S1, Rational(f, Integer(d * n))});
    best.offer(BoundWitness{c, d, 1, SetTag::S2, Rational(Integer(d * l), c)});
  }
  Integer d_up = d_lo + 1;
  best.offer(BoundWitness{n, d_up, 1, SetTag::S1, Rational(Integer(1), d_up)});
  out.value = best.w->value;
  out.witness = best.w;
  return out;
}

Rational epsilon_oracle(const Integer& n, const Integer& l) {
  require(n >= 1 && l >= 1, "n >= 1 and l >= 1");
  require(l < n, "l < n");
  require(!is_perfect_square(Integer(n * l)), "n*l is not a perfect square");
  if (n < (1 << 20) && l < (1 << 20)) {
    return oracle_impl<std::int64_t, __int128>(n.get_si(), l.get_si());
  }
  return oracle_impl<Integer, Integer>(n, l);
}

SeshadriBound epsilon_refined(const Integer& n, const Integer& l) {
  require(n >= 1, "n >= 1");
  require(l >= 1, "l >= 1");
  Integer nl = n * l;
  if (l <= n && is_perfect_square(nl)) return square_marker(n, l, true);

  // R = r + m - 1 runs over 1..n+f(d)-1. For each d the best S'1 element
  // is min(Rmax, floor(d sqrt(nl))) and the best S'2 element uses
  // ceil(d sqrt(nl)) when that fits under Rmax. Once it does not (d >= 2)
  // it never will again, and the S'1 values (n+d-2)/(nd) only decrease.
  auto split = [&](const Integer& R, const Integer& d, SetTag tag, Rational v) {
    Integer r = R < n ? R : n;
    return BoundWitness{r, d, R - r + 1, tag, std::move(v)};
  };
  Best best;
  for (Integer d = 1;; ++d) {
    Integer rmax = n + refined_mult_limit(d) - 1;
    Integer x = d * d * nl;
    Integer fl = isqrt(x);
    Integer ce = (fl * fl == x) ? fl : Integer(fl + 1);
    Integer r1 = fl < rmax ? fl : rmax;
    if (r1 >= 1) best.offer(split(r1, d, SetTag::S1Refined, Rational(r1, Integer(n * d))));
    bool s2 = ce <= rmax;
    if (s2) best.offer(split(ce, d, SetTag::S2Refined, Rational(Integer(d * l), ce)));
    if (d >= 2 && !s2) break;
  }
  SeshadriBound out;
  out.n = n;
  out.l = l;
  out.refined = true;
  out.value = best.w->value;
  out.witness = best.w;
  return out;
}

Integer delta(const Integer& r, const Integer& d, const Integer& n, const Integer& l) {
  return r * r - n * l * d * d;
}

ClosedForms closed_form_scspec(const Integer& n, const Integer& l) {
  require(n >= 1 && l >= 1, "n >= 1 and l >= 1");
  ClosedForms out;
  out.d_lower = isqrt(floor_div(n, l));
  out.d_upper = ceil_sqrt_ratio(n, l);
  out.inv_d_upper = Rational(Integer(1), out.d_upper);
  if (l <= n) {
    Integer x = out.d_lower * out.d_lower * n * l;
    Integer r_lo = isqrt(x);
    Integer r_up = ceil_sqrt(x);
    out.lower_ratio = Rational(r_lo, Integer(n * out.d_lower));
    out.upper_ratio = Rational(Integer(out.d_lower * l), r_up);
  }
  return out;
}

std::vector<CaseBound> ptwocor(const Integer& n) {
  require(n >= 2, "n >= 2");
  Integer s = isqrt(n);
  Integer rem = n - s * s;
  Integer t = rem / 2;
  std::vector<CaseBound> out;
  if (rem % 2 == 0) {
    out.push_back({"a", Rational(s, Integer(s * s + t)), {}, 0, 0, true});
    return out;
  }
  out.push_back({"b", Rational(Integer(s * s + t), Integer(s * n)), {}, 0, 0, true});
  if (s > 1) {
    Integer r = s * (s - 1) + t;
    Integer lhs = (t + s - 1) * (t + s - 1);
    Integer two = 2 * (s - 1) * (s - 1);
    if (t > 0 && lhs < two) {
      out.push_back({"c", Rational(r, Integer((s - 1) * n)), {}, r, s - 1, true});
    }
    if (lhs > two && (2 * t + s) * (2 * t + s) < 5 * s * s - 4 * s) {
      out.push_back({"d", Rational(Integer(s - 1), r), {}, r, s - 1, true});
    }
  }
  return out;
}

CaseBound adhoc_family_bound(const Integer& s, const Integer& a, const Integer& b, const Integer& c,
                             const Integer& i, const Integer& j) {
  require(s >= 1 && a >= 1 && b >= 1 && c >= 1, "s, a, b, c >= 1");
  require(s == a * b, "s = a*b");
  require(i >= 0, "i >= 0");
  require(i <= j, "i <= j");
  Integer n = s * s + j;
  Integer d = a * b * c;
  Integer rp = c * a * a * b * b + i;
  Integer del = rp * rp - n * d * d;
  require(del != 0, "r'^2 != n*d^2");
  nef::NefCertificate cert = nef::build_adhoc(n, a, b, c, rp);
  CaseBound out;
  out.tag = "adhoc i=" + i.get_str() + " j=" + j.get_str();
  out.value = del > 0 ? Rational(d, rp) : Rational(rp, Integer(n * d));
  out.flags = cert.validity_flags;
  if (!cert.valid) out.flags.push_back("certificate failed: " + cert.failed_checks().front());
  out.R = rp;
  out.d = d;
  out.in_refined_set = rp <= n + refined_mult_limit(d) - 1;
  return out;
}

std::vector<CaseBound> adhoc_family_search(const Integer& n) {
  require(n >= 1, "n >= 1");
  std::vector<CaseBound> out;
  Integer s = isqrt(n);
  Integer j = n - s * s;
  if (j == 0 || is_power_of_two(s)) return out;
  auto a = least_odd_prime_factor(s);
  if (!a) return out;
  Integer b = s / *a;
  for (Integer i : {j, Integer(j - 1)}) {
    if (i < 0) continue;
    Integer d = *a * b * 2;
    Integer rp = 2 * s * s + i;
    if (rp * rp == n * d * d) continue;
    CaseBound cb = adhoc_family_bound(s, *a, b, 2, i, j);
    cb.flags.push_back("s is not a power of 2");
    out.push_back(std::move(cb));
  }
  return out;
}

std::vector<CaseBound> special_square_bounds(const Integer& n) {
  require(n >= 1, "n >= 1");
  std::vector<CaseBound> out;
  bool any = false;
  auto attach = [&](CaseBound cb, const nef::NefCertificate& cert) {
    cb.flags = cert.validity_flags;
    if (!cert.valid) cb.flags.push_back("certificate failed");
    out.push_back(std::move(cb));
  };

  if (is_perfect_square(Integer(n + 2))) {
    any = true;
    Integer s = isqrt(Integer(n + 2)) - 1;
    if (s >= 2) {
      // r = n, m = 2, d = s+1 in the refined sets
      Integer d = s + 1;
      auto cert = nef::build_nefcorRef(n, 1, n, d, 2);
      attach({"n+2 square", Rational(d, Integer(s * s + 2 * s)), {}, n + 1, d, true}, cert);
    }
  }
  if (is_perfect_square(Integer(n + 1))) {
    any = true;
    Integer s = isqrt(Integer(n + 1)) - 1;
    if (n >= 8) {
      Integer d = s + 2;
      Integer rp = n + d - 1;
      auto cert = nef::build_plusonecor(n, d, rp);
      bool inside = rp <= n + refined_mult_limit(d) - 1;
      attach({"n+1 square", Rational(Integer(s * s + 3 * s + 1), Integer(s * (s + 2) * (s + 2))), {}, rp, d, inside},
             cert);
    }
  }
  if (n >= 2 && is_perfect_square(Integer(n - 1))) {
    any = true;
    Integer s = isqrt(Integer(n - 1));
    if (n >= 10) {
      Integer d = s + 1;
      Integer rp = n + d - 1;
      auto cert = nef::build_plusonecor(n, d, rp);
      bool inside = rp <= n + refined_mult_limit(d) - 1;
      attach({"n-1 square", Rational(Integer(s + 1), Integer(s * s + s + 1)), {}, rp, d, inside}, cert);
    }
  }
  if (any) {
    for (auto& cb : adhoc_family_search(n)) {
      cb.in_refined_set = false;
      out.push_back(std::move(cb));
    }
  }
  return out;
}

PellSolution pell_fundamental(const Integer& nl) {
  if (nl < 2) throw DomainError("pell: N must be at least 2");
  if (is_perfect_square(nl)) throw DomainError("pell: N is a perfect square");
  Integer a0 = isqrt(nl);
  Integer m = 0, den = 1, a = a0;
  Integer p_prev = 1, p = a0;
  Integer q_prev = 0, q = 1;
  for (;;) {
    Integer v = p * p - nl * q * q;
    if (v == 1 || v == -1) return PellSolution{p, q, v == 1 ? 1 : -1};
    m = den * a - m;
    den = (nl - m * m) / den;
    a = (a0 + m) / den;
    Integer pn = a * p + p_prev;
    Integer qn = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
  }
}

PellSolution pell_positive(const Integer& nl) {
  PellSolution s = pell_fundamental(nl);
  if (s.rhs == 1) return s;
  // (r + d sqrt N)^2
  return PellSolution{s.r * s.r + nl * s.d * s.d, 2 * s.r * s.d, 1};
}

Rational corA_scaled_bound(const Integer& n, const Integer& l, const Integer& r, const Integer& d,
                           const Integer& a, const Integer& b) {
  require(n >= 1 && l >= 1 && r >= 1 && d >= 1 && a >= 1 && b >= 1, "all parameters positive");
  require(d == a * b, "d = a*b");
  require(r * r - n * l * d * d == 1, "r^2 - n*l*d^2 = 1");
  require(a * a * n > b * b * l, "a^2*n > b^2*l");
  // the uniform construction on a^2 n points with degree multiple b
  Integer big_n = a * a * n;
  require(r * r > b * b * big_n * l, "r^2 > b^2*(a^2*n)*l");
  require(r <= big_n, "r <= a^2*n");
  return Rational(Integer(b * l), r);
}

ReferenceRow compare_references(const Integer& n) {
  require(n >= 2, "n >= 2");
  ReferenceRow row;
  row.n = n;
  row.eps = epsilon_basic(n, 1).value;
  row.eps_refined = epsilon_refined(n, 1).value;
  row.refined_improves = row.eps_refined > row.eps;
  // eps vs 1/sqrt(n+1):  p^2 (n+1) vs q^2
  int c = cmp(Integer(row.eps.num() * row.eps.num() * (n + 1)), Integer(row.eps.den() * row.eps.den()));
  row.vs_inv_sqrt_n_plus_1 = (c > 0) - (c < 0);
  row.n_pm1_square = is_perfect_square(Integer(n - 1)) || is_perfect_square(Integer(n + 1));
  if (!is_perfect_square(n)) {
    PellSolution p = pell_positive(n);
    row.pell = p;
    row.biran = Rational(p.d, p.r);
    row.pell_r_le_n = p.r <= n;
  }
  return row;
}

}  // namespace seshadri::bounds
