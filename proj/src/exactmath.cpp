#include "seshadri/exactmath.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace seshadri {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_ == 1) return;
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::string buf(s);
    while (!buf.empty() && std::isspace(static_cast<unsigned char>(buf.back()))) buf.pop_back();
    std::size_t start = 0;
    while (start < buf.size() && std::isspace(static_cast<unsigned char>(buf[start]))) ++start;
    buf = buf.substr(start);
    std::size_t digits_from = (!buf.empty() && (buf[0] == '-' || buf[0] == '+')) ? 1 : 0;
    if (buf.size() == digits_from) throw DomainError("malformed rational: '" + std::string(text) + "'");
    for (std::size_t i = digits_from; i < buf.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(buf[i])))
        throw DomainError("malformed rational: '" + std::string(text) + "'");
    }
    if (buf[0] == '+') buf = buf.substr(1);
    return Integer(buf);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::abs() const {
  Integer a = num_;
  if (a < 0) a = -a;
  return Rational(std::move(a), den_, Normalized{});
}

Integer Rational::floor() const { return floor_div(num_, den_); }
Integer Rational::ceil() const { return ceil_div(num_, den_); }

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("division by zero");
  Integer n = num_ * o.den_;
  Integer d = den_ * o.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = (a.den_ == b.den_) ? cmp(a.num_, b.num_) : cmp(Integer(a.num_ * b.den_), Integer(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer a = num_;
  bool negative = a < 0;
  if (negative) a = -a;
  Integer q, rem;
  Integer scaled = a * scale;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den_.get_mpz_t());
  Integer twice = rem * 2;
  int c = cmp(twice, den_);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  Integer whole, frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), q.get_mpz_t(), scale.get_mpz_t());
  std::string out = (negative && q != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

double Rational::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer isqrt(const Integer& x) {
  if (x < 0) throw DomainError("isqrt of negative integer");
  if (x < 2) return x;
  // 2^ceil(bits/2) is at least sqrt(x); Newton then decreases monotonically.
  std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  Integer y;
  mpz_setbit(y.get_mpz_t(), (bits + 1) / 2);
  for (;;) {
    Integer z = (y + x / y) / 2;
    if (z >= y) break;
    y = std::move(z);
  }
  while (y * y > x) y -= 1;
  while ((y + 1) * (y + 1) <= x) y += 1;
  return y;
}

Integer ceil_sqrt(const Integer& x) {
  Integer s = isqrt(x);
  if (s * s != x) s += 1;
  return s;
}

bool is_perfect_square(const Integer& x) {
  if (x < 0) return false;
  Integer s = isqrt(x);
  return s * s == x;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("division by zero");
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

int cmp_ratio_vs_sqrt(const Integer& p, const Integer& q, const Integer& m) {
  if (q <= 0) throw DomainError("cmp_ratio_vs_sqrt: denominator must be positive");
  if (m < 0) throw DomainError("cmp_ratio_vs_sqrt: negative radicand");
  if (p < 0) return -1;
  int c = cmp(Integer(p * p), Integer(q * q * m));
  return (c > 0) - (c < 0);
}

int cmp_rational_vs_sqrt(const Rational& v, const Rational& radicand) {
  if (radicand.sign() < 0) throw DomainError("cmp_rational_vs_sqrt: negative radicand");
  if (v.sign() < 0) return -1;
  // (p/q)^2 vs a/b  <=>  p^2 b vs q^2 a
  int c = cmp(Integer(v.num() * v.num() * radicand.den()), Integer(v.den() * v.den() * radicand.num()));
  return (c > 0) - (c < 0);
}

std::optional<Integer> integer_in_open_sqrt_interval(const Integer& a_num, const Integer& a_den,
                                                     const Integer& b_num, const Integer& b_den) {
  if (a_den <= 0 || b_den <= 0) throw DomainError("interval radicand denominators must be positive");
  if (a_num < 0 || b_num < 0) throw DomainError("interval radicands must be nonnegative");
  // k^2 > a_num/a_den  <=>  k^2 > floor(a_num/a_den)
  Integer k = isqrt(floor_div(a_num, a_den)) + 1;
  if (k * k * b_den < b_num) return k;
  return std::nullopt;
}

namespace {

struct Frac {
  Integer p;
  Integer q;
};

// Largest k >= 0 such that ok(k) holds, where ok is monotone (true then false)
// and ok(0) is assumed. `cap` bounds k when present.
template <typename Pred>
Integer largest_true(Pred ok, const std::optional<Integer>& cap) {
  if (cap && *cap <= 0) return 0;
  if (!ok(Integer(1))) return 0;
  Integer lo = 1;
  Integer hi = 2;
  for (;;) {
    if (cap && hi > *cap) {
      hi = *cap + 1;
      if (ok(*cap)) return *cap;
      break;
    }
    if (!ok(hi)) break;
    lo = hi;
    hi *= 2;
  }
  // ok(lo) true, ok(hi) false
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (ok(mid)) lo = mid;
    else hi = mid;
  }
  return lo;
}

template <typename Above>
Rational stern_brocot_above(Above above, const Integer& max_den) {
  if (max_den < 1) throw DomainError("denominator bound must be positive");
  Frac left{0, 1};
  Frac right{1, 0};
  for (;;) {
    // Move left bound toward right while staying at or below the target.
    std::optional<Integer> cap_left;
    if (right.q > 0) cap_left = floor_div(max_den - left.q, right.q);
    Integer k1 = largest_true(
        [&](const Integer& k) { return !above(Integer(left.p + k * right.p), Integer(left.q + k * right.q)); },
        cap_left);
    if (k1 > 0) {
      left.p += k1 * right.p;
      left.q += k1 * right.q;
    }
    std::optional<Integer> cap_right = floor_div(max_den - right.q, left.q);
    Integer k2 = largest_true(
        [&](const Integer& k) { return above(Integer(right.p + k * left.p), Integer(right.q + k * left.q)); },
        cap_right);
    if (k2 > 0) {
      right.p += k2 * left.p;
      right.q += k2 * left.q;
    }
    if (k1 == 0 && k2 == 0) break;
  }
  return Rational(right.p, right.q);
}

}  // namespace

Rational smallest_rational_above_sqrt(const Rational& radicand, const Integer& max_den) {
  if (radicand.sign() < 0) throw DomainError("negative radicand");
  auto above = [&](const Integer& p, const Integer& q) {
    return Integer(p * p * radicand.den()) > Integer(q * q * radicand.num());
  };
  return stern_brocot_above(above, max_den);
}

Rational smallest_rational_above(const Rational& x, const Integer& max_den) {
  if (x.sign() < 0) throw DomainError("smallest_rational_above expects a nonnegative bound");
  auto above = [&](const Integer& p, const Integer& q) {
    return Integer(p * x.den()) > Integer(q * x.num());
  };
  return stern_brocot_above(above, max_den);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace seshadri
