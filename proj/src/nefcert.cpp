#include "seshadri/nefcert.hpp"

namespace seshadri::nef {

namespace {

void require(bool ok, const char* condition) {
  if (!ok) throw PreconditionViolation(condition);
}

std::size_t as_size(const Integer& v) {
  require(v >= 0 && v.fits_ulong_p(), "size fits in memory");
  return v.get_ui();
}

CurveData simple_curve(const Integer& d, const Integer& r) {
  return CurveData{d, std::vector<Integer>(as_size(r), Integer(1))};
}

std::vector<Rational> constant(const Integer& n, const Rational& v) {
  return std::vector<Rational>(as_size(n), v);
}

}  // namespace

Rational BlowupDivisorClass::self_pairing() const { return pairing(*this, *this); }

Rational pairing(const BlowupDivisorClass& a, const BlowupDivisorClass& b) {
  if (a.n != b.n || a.l != b.l) throw DomainError("pairing: classes live on different blow-ups");
  if (a.e.size() != b.e.size()) throw DomainError("pairing: coefficient vectors differ in length");
  Rational s = a.c0 * b.c0 * Rational(a.l);
  for (std::size_t i = 0; i < a.e.size(); ++i) s -= a.e[i] * b.e[i];
  return s;
}

BlowupDivisorClass uniform_divisor(const Integer& n, const Integer& l, const Rational& c0, const Rational& ei) {
  return BlowupDivisorClass{n, l, c0, constant(n, ei)};
}

std::vector<std::string> NefCertificate::failed_checks() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!checks[i]) out.emplace_back(kCheckNames[i]);
  }
  return out;
}

std::optional<Rational> NefCertificate::uniform_ratio() const {
  if (divisor.e.empty() || divisor.c0.sign() == 0) return std::nullopt;
  for (const auto& x : divisor.e) {
    if (x != divisor.e.front()) return std::nullopt;
  }
  return divisor.e.front() / divisor.c0;
}

NefCertificate check_neflemA(const Rational& a0, const std::vector<Rational>& a, const CurveData& curve,
                             const Integer& l, std::string provenance) {
  require(l >= 1, "l >= 1");
  require(curve.d >= 1, "d >= 1");
  require(!a.empty(), "n >= 1");
  require(curve.mults.size() <= a.size(), "curve length r <= n");
  for (std::size_t i = 0; i < curve.mults.size(); ++i) {
    require(curve.mults[i] >= 0, "curve multiplicities nonnegative");
    if (i > 0) require(curve.mults[i - 1] >= curve.mults[i], "curve multiplicities nonincreasing");
  }

  NefCertificate cert;
  const Integer n(static_cast<unsigned long>(a.size()));
  cert.divisor = BlowupDivisorClass{n, l, a0 * Rational(curve.d), a};
  cert.a0 = a0;
  cert.curve = curve;
  cert.provenance = std::move(provenance);

  const std::size_t r = curve.mults.size();

  // every bullet is homogeneous in (a0, a), so clear denominators once
  Integer L = a0.den();
  for (const auto& x : a) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.den().get_mpz_t());
  auto scaled = [&L](const Rational& x) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), L.get_mpz_t(), x.den().get_mpz_t());
    return Integer(x.num() * q);
  };
  const Integer A0 = scaled(a0);
  std::vector<Integer> A;
  A.reserve(a.size());
  for (const auto& x : a) A.push_back(scaled(x));
  const Integer d2l = curve.d * curve.d * l;

  bool ordered = sgn(A.back()) >= 0;
  for (std::size_t i = 1; i < A.size() && ordered; ++i) ordered = A[i - 1] >= A[i];

  Integer weighted = 0;
  for (std::size_t i = 0; i < r; ++i) weighted += A[i] * curve.mults[i];
  bool degree = A0 * d2l >= weighted;

  Integer squares = 0;
  for (const auto& x : A) squares += x * x;
  bool self_int = A0 * A0 * d2l > squares;

  bool partial = true;
  Integer msum = 0, asum = 0;
  for (std::size_t i = 0; i < r; ++i) {
    msum += curve.mults[i];
    asum += A[i];
    if (msum * A0 < asum) partial = false;
  }
  Integer total = 0;
  for (const auto& x : A) total += x;
  bool total_ok = msum * A0 >= total;

  cert.checks = {ordered, degree, self_int, partial, total_ok};
  cert.valid = ordered && degree && self_int && partial && total_ok;
  return cert;
}

NefCertificate build_nefcor(const Integer& n, const Integer& l, const Integer& r, const Integer& d,
                            UniformCase which, const std::optional<Rational>& t, bool check_preconditions) {
  require(n >= 1 && l >= 1 && d >= 1, "n, l, d >= 1");
  require(r >= 1 && r <= n, "1 <= r <= n");
  Integer rr = r * r;
  Integer nd2l = n * d * d * l;
  switch (which) {
    case UniformCase::A:
      if (check_preconditions) require(rr > nd2l, "r^2 > n*d^2*l");
      return check_neflemA(Rational(r, d), constant(n, Rational(Integer(l * d))), simple_curve(d, r), l,
                           "nefcor(a)");
    case UniformCase::B:
      if (check_preconditions) require(rr < nd2l, "r^2 < n*d^2*l");
      return check_neflemA(Rational(Integer(n)), constant(n, Rational(r)), simple_curve(d, r), l, "nefcor(b)");
    case UniformCase::C: {
      if (check_preconditions) require(rr == nd2l, "r^2 = n*d^2*l");
      Rational tt = t ? *t : suggest_rational_above_sqrt(n, l);
      if (check_preconditions) {
        require(tt.sign() > 0 && tt * tt * Rational(l) > Rational(n), "t^2*l > n");
      }
      return check_neflemA(tt / Rational(d), constant(n, Rational(1)), simple_curve(d, r), l, "nefcor(c)");
    }
  }
  throw DomainError("unknown case");
}

Rational nefcorB_lambda(const Integer& n, const Integer& l, const Integer& r, const Integer& d, const Integer& j) {
  Integer D = d * d * l;
  require(j >= 0 && j < D, "0 <= j < d^2*l");
  require(r > j, "r > j");
  Rational lam = Rational(r) + Rational(Integer((r - D) * (r - j)), Integer(D - j));
  return lam < Rational(n) ? lam : Rational(n);
}

NefCertificate build_nefcorB(const Integer& n, const Integer& l, const Integer& r, const Integer& d,
                             const std::optional<Integer>& j, const std::optional<Rational>& dprime,
                             bool check_preconditions) {
  require(n >= 1 && l >= 1 && d >= 1, "n, l, d >= 1");
  require(r >= 1 && r <= n, "1 <= r <= n");
  Integer D = d * d * l;
  std::size_t nn = as_size(n);

  bool case_a = D > r || (!check_preconditions && !j && !dprime);
  if (case_a) {
    if (check_preconditions) require(!j, "d^2*l <= r for the j-form");
    std::vector<Rational> a(nn, Rational(0));
    for (std::size_t i = 0; i < as_size(r); ++i) a[i] = 1;
    return check_neflemA(Rational(1), a, simple_curve(d, r), l, "nefcorB(a)");
  }

  if (!j) {
    // first form of (b): a_i = 1 for i <= d^2 l
    if (check_preconditions) require(dprime.has_value(), "d' given");
    Rational dp = dprime ? *dprime : Rational(d);
    if (check_preconditions) require(dp > Rational(d), "d' > d");
    std::vector<Rational> a(nn, Rational(0));
    for (std::size_t i = 0; i < as_size(D) && i < nn; ++i) a[i] = 1;
    return check_neflemA(dp / Rational(d), a, simple_curve(d, r), l, "nefcorB(b)");
  }

  Rational lam = nefcorB_lambda(n, l, r, d, *j);
  Rational c(Integer(D - *j), Integer(r - *j));
  Rational dp = dprime ? *dprime : Rational(d);
  if (check_preconditions) {
    require(dp >= Rational(d), "d' >= d");
    if (lam.is_integer()) require(dp > Rational(d), "d' > d when lambda is an integer");
  }
  std::vector<Rational> a(nn, Rational(0));
  std::size_t jj = as_size(*j);
  std::size_t fl = as_size(lam.floor());
  for (std::size_t i = 0; i < jj; ++i) a[i] = 1;
  for (std::size_t i = jj; i < fl; ++i) a[i] = c;
  Rational frac = lam - Rational(lam.floor());
  if (frac.sign() > 0) a[fl] = frac * c;  // position ceil(lambda), 1-based
  return check_neflemA(dp / Rational(d), a, simple_curve(d, r), l, "nefcorB(b,j=" + j->get_str() + ")");
}

NefCertificate build_nefcorRef(const Integer& n, const Integer& l, const Integer& r, const Integer& d,
                               const Integer& m, const std::optional<Rational>& t) {
  require(n >= 1 && l >= 1 && d >= 1, "n, l, d >= 1");
  require(r >= 1 && r <= n, "1 <= r <= n");
  require(m >= 1, "m >= 1");
  Integer f = d > 2 ? Integer(d - 1) : Integer(1);
  require(m <= f, "m exceeds f(d) = max(1, d-1)");

  Integer R = r + m - 1;
  CurveData curve{d, std::vector<Integer>(as_size(r), Integer(1))};
  curve.mults[0] = m;
  Integer lhs = R * R;
  Integer rhs = n * d * d * l;
  if (lhs > rhs) {
    return check_neflemA(Rational(R, d), constant(n, Rational(Integer(l * d))), curve, l, "nefcorRef(a)");
  }
  if (lhs < rhs) {
    return check_neflemA(Rational(Integer(n)), constant(n, Rational(R)), curve, l, "nefcorRef(b)");
  }
  Rational tt = t ? *t : suggest_rational_above_sqrt(n, l);
  require(tt.sign() > 0 && tt * tt * Rational(l) > Rational(n), "t^2*l > n");
  return check_neflemA(tt / Rational(d), constant(n, Rational(1)), curve, l, "nefcorRef(c)");
}

NefCertificate build_plusonecor(const Integer& n, const Integer& d, const Integer& rprime) {
  require(d >= 4, "d >= 4");
  require(n >= 5, "n >= 5");
  require(rprime >= 1 && rprime <= n + d - 1, "1 <= r' <= n+d-1");
  require(rprime * rprime != n * d * d, "r'^2 != n*d^2");

  if (rprime <= n + d - 2) {
    // r + m - 1 = r' with r <= n and m <= d - 1
    Integer r = rprime < n ? rprime : n;
    NefCertificate cert = build_nefcorRef(n, 1, r, d, rprime - r + 1);
    cert.provenance = "plusonecor via " + cert.provenance;
    return cert;
  }

  // r' = n + d - 1: the class d L' - (d-2)E'_1 - 2E'_2 - 2E'_3 - E'_4 - ... - E'_n
  CurveData curve{d, std::vector<Integer>(as_size(n), Integer(1))};
  curve.mults[0] = d - 2;
  curve.mults[1] = 2;
  curve.mults[2] = 2;
  NefCertificate cert = rprime * rprime > n * d * d
                            ? check_neflemA(Rational(rprime, d), constant(n, Rational(d)), curve, 1, "plusonecor(a)")
                            : check_neflemA(Rational(Integer(n)), constant(n, Rational(rprime)), curve, 1,
                                            "plusonecor(b)");
  cert.validity_flags.push_back("plane only (l = 1)");
  return cert;
}

NefCertificate build_adhoc(const Integer& n, const Integer& a, const Integer& b, const Integer& c,
                           const Integer& rprime) {
  require(a >= 1 && b >= 1 && c >= 1, "a, b, c >= 1");
  require(c < a, "c < a");
  require(gcd(a, c) == 1, "gcd(a, c) = 1");
  Integer block = a * a * b * b;
  require(rprime >= block * c, "r' >= a^2*b^2*c");
  require(n >= block + (rprime - block * c), "n >= a^2*b^2 + (r' - a^2*b^2*c)");
  Integer d = a * b * c;
  require(rprime * rprime != n * d * d, "r'^2 != n*d^2");

  Integer r = block + (rprime - block * c);
  CurveData curve{d, std::vector<Integer>(as_size(r), Integer(1))};
  for (std::size_t i = 0; i < as_size(block); ++i) curve.mults[i] = c;
  NefCertificate cert = rprime * rprime > n * d * d
                            ? check_neflemA(Rational(rprime, d), constant(n, Rational(d)), curve, 1, "adhoc(a)")
                            : check_neflemA(Rational(Integer(n)), constant(n, Rational(rprime)), curve, 1, "adhoc(b)");
  cert.validity_flags.push_back("characteristic does not divide c");
  cert.validity_flags.push_back("plane only (l = 1)");
  return cert;
}

Rational suggest_rational_above_sqrt(const Integer& n, const Integer& l, const Integer& max_den) {
  require(n >= 0 && l >= 1, "n >= 0 and l >= 1");
  return smallest_rational_above_sqrt(Rational(n, l), max_den);
}

}  // namespace seshadri::nef
