#include "seshadri/lptest.hpp"

#include "seshadri/bounds.hpp"

#include <array>
#include <cstdint>

namespace seshadri::lp {

namespace {

using i128 = __int128;

void require(bool ok, const char* condition) {
  if (!ok) throw PreconditionViolation(condition);
}

std::size_t checked_size(const Integer& v) {
  require(v >= 0 && v.fits_ulong_p(), "size fits in memory");
  return v.get_ui();
}

// Dense tableau; only nonzero entries of the pivot row/column are touched.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1)) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    Rational inv = Rational(1) / at(pr, pc);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (at(pr, j).sign() != 0) {
        at(pr, j) *= inv;
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == pr) continue;
      Rational f = at(i, pc);
      if (f.sign() == 0) continue;
      for (std::size_t j : nz) at(i, j) -= f * at(pr, j);
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> t_;  // last row is the objective, last column the rhs
};

std::vector<Integer> prefix_sums(const std::vector<Integer>& b) {
  std::vector<Integer> out(b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    s += b[i];
    out[i] = s;
  }
  return out;
}

bool fits40(const Integer& v) { return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 40; }

i128 det2(i128 a, i128 b, i128 c, i128 d) { return a * d - b * c; }

}  // namespace

void validate_mults(const std::vector<Integer>& b, const Integer& n) {
  require(n >= 1, "n >= 1");
  require(Integer(static_cast<unsigned long>(b.size())) == n, "length of b equals n");
  for (std::size_t i = 0; i < b.size(); ++i) {
    require(b[i] >= 0, "multiplicities nonnegative");
    if (i > 0) require(b[i - 1] >= b[i], "multiplicities nonincreasing");
  }
}

void validate(const TargetSystem& target) {
  require(target.l >= 1, "l >= 1");
  validate_mults(target.b, target.n);
}

LpSolution solve_simplex(const std::vector<Integer>& b, const Integer& l, const Integer& r, const Integer& d) {
  const std::size_t n = b.size();
  require(n >= 1, "n >= 1");
  require(r >= 1 && r <= Integer(static_cast<unsigned long>(n)), "1 <= r <= n");
  require(d >= 1 && l >= 1, "d, l >= 1");
  const std::size_t rr = checked_size(r);

  // rows: a_1 <= 1; a_{i+1} - a_i <= 0; prefix sum <= d^2 l; total <= r
  const std::size_t m = n + 2;
  Tableau tab(m, n + m);
  tab.at(0, 0) = 1;
  tab.at(0, n + m) = 1;
  for (std::size_t i = 1; i < n; ++i) {
    tab.at(i, i) = 1;
    tab.at(i, i - 1) = -1;
  }
  for (std::size_t j = 0; j < rr; ++j) tab.at(n, j) = 1;
  tab.at(n, n + m) = Rational(Integer(d * d * l));
  for (std::size_t j = 0; j < n; ++j) tab.at(n + 1, j) = 1;
  tab.at(n + 1, n + m) = Rational(r);
  for (std::size_t i = 0; i < m; ++i) tab.at(i, n + i) = 1;
  for (std::size_t j = 0; j < n; ++j) tab.at(m, j) = Rational(Integer(-b[j]));

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    // Bland: lowest-index improving column, lowest-index basic variable on ties
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (tab.at(m, j).sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n + m) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& coef = tab.at(i, enter);
      if (coef.sign() <= 0) continue;
      Rational ratio = tab.at(i, n + m) / coef;
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw DomainError("simplex: unbounded (cannot happen for this polytope)");
    tab.pivot(leave, enter);
    basis[leave] = enter;
  }

  LpSolution sol;
  sol.a.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) sol.a[basis[i]] = tab.at(i, n + m);
  }
  for (std::size_t j = 0; j < n; ++j) sol.objective += sol.a[j] * Rational(b[j]);
  return sol;
}

LpSolution solve_block(const std::vector<Integer>& b, const Integer& l, const Integer& r, const Integer& d) {
  const std::size_t n = b.size();
  require(n >= 1, "n >= 1");
  require(r >= 1 && r <= Integer(static_cast<unsigned long>(n)), "1 <= r <= n");
  require(d >= 1 && l >= 1, "d, l >= 1");
  auto B = prefix_sums(b);
  Integer D = d * d * l;
  if (!fits40(B.back()) || !fits40(D) || n > 4096) {
    // out of the fixed-width range; fall back to the tableau
    return solve_simplex(b, l, r, d);
  }
  const std::int64_t rr = r.get_si();
  const std::array<i128, 3> rhs{1, static_cast<i128>(D.get_si()), rr};
  auto coef = [&](std::size_t k, int row) -> i128 {
    // column for g_k (k is 1-based): (1, min(k, r), k)
    i128 kk = static_cast<i128>(k);
    if (row == 0) return 1;
    if (row == 1) return kk < rr ? kk : rr;
    return kk;
  };
  std::vector<i128> Bv(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) Bv[k] = B[k - 1].get_si();

  // best value num/den (den > 0) and its support
  i128 best_num = 0, best_den = 1;
  std::array<std::size_t, 3> best_cols{0, 0, 0};
  std::array<i128, 3> best_g{0, 0, 0};
  i128 best_det = 1;
  std::size_t best_size = 0;

  auto consider = [&](std::size_t sz, const std::array<std::size_t, 3>& cols, const std::array<i128, 3>& g,
                      i128 det) {
    // g_i / det, det > 0, all g_i >= 0 already
    for (int row = 0; row < 3; ++row) {
      i128 lhs = 0;
      for (std::size_t i = 0; i < sz; ++i) lhs += coef(cols[i], row) * g[i];
      if (lhs > rhs[row] * det) return;
    }
    i128 val = 0;
    for (std::size_t i = 0; i < sz; ++i) val += Bv[cols[i]] * g[i];
    if (val * best_den > best_num * det) {
      best_num = val;
      best_den = det;
      best_cols = cols;
      best_g = g;
      best_det = det;
      best_size = sz;
    }
  };

  for (std::size_t k1 = 1; k1 <= n; ++k1) {
    for (int t = 0; t < 3; ++t) {
      i128 a = coef(k1, t);
      consider(1, {k1, 0, 0}, {rhs[t], 0, 0}, a);
    }
    for (std::size_t k2 = k1 + 1; k2 <= n; ++k2) {
      for (int t1 = 0; t1 < 3; ++t1) {
        for (int t2 = t1 + 1; t2 < 3; ++t2) {
          i128 det = det2(coef(k1, t1), coef(k2, t1), coef(k1, t2), coef(k2, t2));
          if (det == 0) continue;
          i128 g1 = det2(rhs[t1], coef(k2, t1), rhs[t2], coef(k2, t2));
          i128 g2 = det2(coef(k1, t1), rhs[t1], coef(k1, t2), rhs[t2]);
          if (det < 0) {
            det = -det;
            g1 = -g1;
            g2 = -g2;
          }
          if (g1 < 0 || g2 < 0) continue;
          consider(2, {k1, k2, 0}, {g1, g2, 0}, det);
        }
      }
      for (std::size_t k3 = k2 + 1; k3 <= n; ++k3) {
        std::array<std::size_t, 3> cols{k1, k2, k3};
        auto M = [&](int row, int col) { return coef(cols[col], row); };
        i128 det = M(0, 0) * det2(M(1, 1), M(1, 2), M(2, 1), M(2, 2)) -
                   M(0, 1) * det2(M(1, 0), M(1, 2), M(2, 0), M(2, 2)) +
                   M(0, 2) * det2(M(1, 0), M(1, 1), M(2, 0), M(2, 1));
        if (det == 0) continue;
        std::array<i128, 3> g{};
        for (int c = 0; c < 3; ++c) {
          auto Mc = [&](int row, int col) { return col == c ? rhs[row] : M(row, col); };
          g[c] = Mc(0, 0) * det2(Mc(1, 1), Mc(1, 2), Mc(2, 1), Mc(2, 2)) -
                 Mc(0, 1) * det2(Mc(1, 0), Mc(1, 2), Mc(2, 0), Mc(2, 2)) +
                 Mc(0, 2) * det2(Mc(1, 0), Mc(1, 1), Mc(2, 0), Mc(2, 1));
        }
        if (det < 0) {
          det = -det;
          for (auto& x : g) x = -x;
        }
        if (g[0] < 0 || g[1] < 0 || g[2] < 0) continue;
        consider(3, cols, g, det);
      }
    }
  }

  auto to_int = [](i128 v) {
    // |v| < 2^126; split into two 63-bit halves
    bool neg = v < 0;
    if (neg) v = -v;
    Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 63)));
    Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v & ((i128(1) << 63) - 1))));
    Integer out = hi * (Integer(1) << 63) + lo;
    return neg ? Integer(-out) : out;
  };

  LpSolution sol;
  sol.a.assign(n, Rational(0));
  std::vector<Rational> g(n + 1, Rational(0));
  for (std::size_t i = 0; i < best_size; ++i) g[best_cols[i]] = Rational(to_int(best_g[i]), to_int(best_det));
  Rational run;
  for (std::size_t k = n; k >= 1; --k) {
    run += g[k];
    sol.a[k - 1] = run;
  }
  sol.objective = Rational(to_int(best_num), to_int(best_den));
  return sol;
}

TestDivisor optimal_test_divisor(const std::vector<Integer>& b, const Integer& n, const Integer& l,
                                 std::optional<Integer> r_max, std::optional<Integer> d_max, Solver solver) {
  validate_mults(b, n);
  require(l >= 1, "l >= 1");
  Integer rmax = r_max ? *r_max : n;
  require(rmax >= 1 && rmax <= n, "1 <= r_max <= n");
  // Once d^2 l >= n the prefix constraint is implied by the total one
  // (a_1 + ... + a_r <= r <= n <= d^2 l), so the optimum stops depending on d
  // and obj/(d l) only shrinks. ceil(sqrt(n/l)) already has d^2 l >= n.
  Integer dmax = d_max ? *d_max : Integer(bounds::closed_form_scspec(n, l).d_upper + 1);
  require(dmax >= 1, "d_max >= 1");

  std::optional<TestDivisor> best;
  for (Integer d = 1; d <= dmax; ++d) {
    for (Integer r = 1; r <= rmax; ++r) {
      LpSolution s = solver == Solver::Simplex ? solve_simplex(b, l, r, d) : solve_block(b, l, r, d);
      Rational thr = s.objective / Rational(Integer(d * l));
      if (!best || thr > best->threshold) {
        TestDivisor td;
        td.threshold = thr;
        td.r = r;
        td.d = d;
        td.lp = std::move(s);
        best = std::move(td);
      }
    }
  }

  TestDivisor& out = *best;
  Rational squares;
  for (const auto& x : out.lp.a) squares += x * x;
  Rational d2l(Integer(out.d * out.d * l));
  std::vector<Rational> a = out.lp.a;
  if (squares >= d2l && squares.sign() > 0) {
    out.scaled = true;
    Rational factor = Rational(1) - Rational(Integer(1), Integer(1000000));
    for (auto& x : a) x *= factor;
  }
  nef::CurveData curve{out.d, std::vector<Integer>(checked_size(out.r), Integer(1))};
  out.certificate = nef::check_neflemA(Rational(1), a, curve, l, "lp");
  return out;
}

Rational uniform_threshold(const std::vector<Integer>& b, const Integer& n, const Integer& l) {
  validate_mults(b, n);
  Integer total = 0;
  for (const auto& x : b) total += x;
  return bounds::epsilon_basic(n, l).value * Rational(total, l);
}

nef::BlowupDivisorClass target_class(const TargetSystem& target) {
  std::vector<Rational> e;
  e.reserve(target.b.size());
  for (const auto& x : target.b) e.emplace_back(x);
  return nef::BlowupDivisorClass{target.n, target.l, target.t, std::move(e)};
}

EffectivityVerdict certify_empty(const TargetSystem& target) {
  validate(target);
  TestDivisor td = optimal_test_divisor(target.b, target.n, target.l, std::nullopt, std::nullopt, Solver::Block);
  EffectivityVerdict v;
  v.threshold = td.threshold;
  v.empty_certified = target.t < td.threshold;
  nef::BlowupDivisorClass h = target_class(target);

  if (td.scaled && v.empty_certified) {
    // smallest K = 10^k keeping F . H < 0 after the strictness repair
    nef::CurveData curve{td.d, std::vector<Integer>(checked_size(td.r), Integer(1))};
    for (unsigned k = 1;; ++k) {
      Integer K;
      mpz_ui_pow_ui(K.get_mpz_t(), 10, k);
      Rational factor = Rational(1) - Rational(Integer(1), K);
      std::vector<Rational> a = td.lp.a;
      for (auto& x : a) x *= factor;
      nef::NefCertificate cert = nef::check_neflemA(Rational(1), a, curve, target.l, "lp");
      Rational p = nef::pairing(cert.divisor, h);
      if (p.sign() < 0) {
        v.scale_power = k;
        v.best_test_divisor = std::move(cert);
        v.test_pairing = p;
        break;
      }
    }
  } else {
    if (td.scaled) v.scale_power = 6;
    v.test_pairing = nef::pairing(td.certificate.divisor, h);
    v.best_test_divisor = std::move(td.certificate);
  }
  return v;
}

}  // namespace seshadri::lp
