#include "seshadri/apps.hpp"

#include "seshadri/bounds.hpp"

namespace seshadri::apps {

namespace {

void require(bool ok, const char* condition) {
  if (!ok) throw PreconditionViolation(condition);
}

void require_nm(const Integer& n, const Integer& m) {
  require(n >= 1, "n >= 1");
  require(m >= 1, "m >= 1");
}

Rational eps_plane(const Integer& n) { return bounds::epsilon_basic(n, 1).value; }

}  // namespace

Rational effectivity_lower_bound(const Integer& n, const Integer& m) {
  require_nm(n, m);
  return Rational(Integer(m * n)) * eps_plane(n);
}

Rational ampleness_lower_bound(const Integer& n, const Integer& m) {
  require_nm(n, m);
  return Rational(m) / eps_plane(n);
}

Integer RegularityBounds::best() const {
  if (b_threshold && *b_threshold < a_threshold) return *b_threshold;
  return a_threshold;
}

RegularityBounds regularity_bounds(const Integer& n, const Integer& m) {
  require_nm(n, m);
  // small n is settled by other means and not handled here
  require(n > 9, "n > 9");
  Integer ds = ceil_sqrt(n);
  RegularityBounds out;
  out.a_threshold = m * ds + ceil_div(Integer(ds - 3), 2);
  if (!is_perfect_square(n)) {
    Rational q = Rational(Integer(m + 1)) / eps_plane(n);
    out.b_threshold = q.ceil() - 3;
  } else {
    out.sharp = 4 * m > ds - 2;
  }
  return out;
}

FreenessBounds freeness_va_bounds(const Integer& n, const Integer& m) {
  RegularityBounds reg = regularity_bounds(n, m);
  Integer N = reg.best();
  FreenessBounds out{N + 1, N + 2, false};
  if (is_perfect_square(n)) {
    Integer s = isqrt(n);
    if (s % 2 == 0 && 4 * m > s - 2) {
      out.free_lb = m * s + (s - 2) / 2;
      out.va_lb = m * s + s / 2;
      out.even_square_override = true;
    }
  }
  return out;
}

ThresholdReport threshold_report(const Integer& n, const Integer& m) {
  require_nm(n, m);
  ThresholdReport rep;
  rep.n = n;
  rep.m = m;
  auto eb = bounds::epsilon_basic(n, 1);
  rep.epsilon = eb.value;
  rep.square_case = eb.square_case;
  rep.effectivity_lb = effectivity_lower_bound(n, m);
  rep.ampleness_lb = ampleness_lower_bound(n, m);
  if (eb.square_case) {
    rep.notes.push_back("square case: eps_n = 1/sqrt(n) is a supremum; effectivity bound holds for t below it");
  }
  if (n > 9) {
    rep.regularity = regularity_bounds(n, m);
    rep.freeness = freeness_va_bounds(n, m);
    if (rep.regularity->sharp) rep.notes.push_back("regularity threshold a is sharp (n square, 4m > d* - 2)");
    if (rep.freeness->even_square_override) {
      rep.notes.push_back("even-square freeness/very-ampleness formulas used (characteristic caveat applies)");
    }
  } else {
    rep.notes.push_back("regularity, freeness and very ampleness not computed: requires n > 9");
  }
  rep.notes.push_back("ampleness: any degree strictly above the bound gives an ample class");
  return rep;
}

}  // namespace seshadri::apps
