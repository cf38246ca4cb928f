#pragma once

#include "seshadri/exactmath.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace seshadri::nef {

// c0 * L' - sum e_i E_i on the blow-up at n = e.size() points, l = L^2.
struct BlowupDivisorClass {
  Integer n;
  Integer l;
  Rational c0;
  std::vector<Rational> e;

  Rational self_pairing() const;
};

Rational pairing(const BlowupDivisorClass& a, const BlowupDivisorClass& b);

BlowupDivisorClass uniform_divisor(const Integer& n, const Integer& l, const Rational& c0, const Rational& ei);

struct CurveData {
  Integer d;
  std::vector<Integer> mults;
};

enum class Check { Ordered = 0, Degree, SelfIntersection, PartialSums, TotalSum };

inline constexpr std::array<const char*, 5> kCheckNames = {"ordered", "degree", "self_intersection",
                                                           "partial_sums", "total_sum"};

struct NefCertificate {
  BlowupDivisorClass divisor;  // c0 = a0 * d
  Rational a0;
  CurveData curve;
  std::array<bool, 5> checks{};
  bool valid = false;
  std::string provenance;
  std::vector<std::string> validity_flags;

  bool passed(Check c) const { return checks[static_cast<int>(c)]; }
  std::vector<std::string> failed_checks() const;
  // e_1 / c0 when all e_i agree, the Seshadri-type ratio of the class.
  std::optional<Rational> uniform_ratio() const;
};

// The five conditions for a0*d L' - sum a_i E_i against a curve class
// d L' - m_1 E'_1 - ... - m_r E'_r. n is a.size().
NefCertificate check_neflemA(const Rational& a0, const std::vector<Rational>& a, const CurveData& curve,
                             const Integer& l, std::string provenance = "neflemA");

// Building blocks for the uniform constructions below.
enum class UniformCase { A, B, C };

// With check_preconditions = false the case hypotheses are skipped (only
// basic ranges are enforced) so wrong-case coefficient choices can be
// inspected; the certificate then reports which bullet breaks.
NefCertificate build_nefcor(const Integer& n, const Integer& l, const Integer& r, const Integer& d,
                            UniformCase which, const std::optional<Rational>& t = std::nullopt,
                            bool check_preconditions = true);

// Case (a) when d^2 l > r. Otherwise case (b): without j the first form
// (needs d' > d); with j the lambda form.
NefCertificate build_nefcorB(const Integer& n, const Integer& l, const Integer& r, const Integer& d,
                             const std::optional<Integer>& j = std::nullopt,
                             const std::optional<Rational>& dprime = std::nullopt,
                             bool check_preconditions = true);

// lambda = min(r + (r - d^2 l)(r - j)/(d^2 l - j), n)
Rational nefcorB_lambda(const Integer& n, const Integer& l, const Integer& r, const Integer& d, const Integer& j);

// The case follows from the sign of (r+m-1)^2 - n d^2 l; t is needed only
// when that is zero.
NefCertificate build_nefcorRef(const Integer& n, const Integer& l, const Integer& r, const Integer& d,
                               const Integer& m, const std::optional<Rational>& t = std::nullopt);

// Plane only (l = 1).
NefCertificate build_plusonecor(const Integer& n, const Integer& d, const Integer& rprime);

NefCertificate build_adhoc(const Integer& n, const Integer& a, const Integer& b, const Integer& c,
                           const Integer& rprime);

// Least p/q > sqrt(n/l) with q <= max_den.
Rational suggest_rational_above_sqrt(const Integer& n, const Integer& l, const Integer& max_den = 1000000);

}  // namespace seshadri::nef
