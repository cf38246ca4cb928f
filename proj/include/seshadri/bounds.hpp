#pragma once

#include "seshadri/exactmath.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seshadri::bounds {

enum class SetTag { S1, S2, S1Refined, S2Refined };

// "S1", "S2", "S1'", "S2'"
std::string tag_name(SetTag tag);

struct BoundWitness {
  Integer r;
  Integer d;
  Integer m = 1;
  SetTag tag = SetTag::S1;
  Rational value;
};

struct SeshadriBound {
  Integer n;
  Integer l;
  Rational value;
  std::optional<BoundWitness> witness;  // absent in the square case
  bool square_case = false;
  bool refined = false;
};

struct PellSolution {
  Integer r;
  Integer d;
  int rhs = 1;
};

// f(d) = max(1, d-1), the largest admissible first multiplicity.
Integer refined_mult_limit(const Integer& d);

SeshadriBound epsilon_basic(const Integer& n, const Integer& l);

// Direct enumeration over 1 <= r <= n, 1 <= d <= ceil(sqrt(n/l)).
// Refuses the square case and l >= n.
Rational epsilon_oracle(const Integer& n, const Integer& l);

SeshadriBound epsilon_refined(const Integer& n, const Integer& l);

Integer delta(const Integer& r, const Integer& d, const Integer& n, const Integer& l);

struct ClosedForms {
  Integer d_upper;  // ceil(sqrt(n/l))
  Integer d_lower;  // floor(sqrt(n/l))
  Rational inv_d_upper;
  std::optional<Rational> lower_ratio;  // r_*/(n d_*), needs l <= n
  std::optional<Rational> upper_ratio;  // d_* l / r^*, needs l <= n
};

ClosedForms closed_form_scspec(const Integer& n, const Integer& l);

// One closed-form or constructed bound. `in_refined_set` says whether the
// underlying (R, d) pair already lies in S'(n, l); if not the bound comes
// from a construction outside the finite-set formulas.
struct CaseBound {
  std::string tag;
  Rational value;
  std::vector<std::string> flags;
  Integer R = 0;
  Integer d = 0;
  bool in_refined_set = true;
};

std::vector<CaseBound> ptwocor(const Integer& n);

std::vector<CaseBound> special_square_bounds(const Integer& n);

// n = s^2 + j, d = abc, r' = c a^2 b^2 + i. Needs s = ab.
CaseBound adhoc_family_bound(const Integer& s, const Integer& a, const Integer& b, const Integer& c,
                             const Integer& i, const Integer& j);

// c = 2, a = least odd prime factor of s = isqrt(n), i in {j, j-1}.
std::vector<CaseBound> adhoc_family_search(const Integer& n);

// Least solution of r^2 - N d^2 = +-1 from the continued fraction of sqrt(N).
PellSolution pell_fundamental(const Integer& nl);

// Least solution of r^2 - N d^2 = +1.
PellSolution pell_positive(const Integer& nl);

Rational corA_scaled_bound(const Integer& n, const Integer& l, const Integer& r, const Integer& d,
                           const Integer& a, const Integer& b);

struct ReferenceRow {
  Integer n;
  Rational eps;
  Rational eps_refined;
  int vs_inv_sqrt_n_plus_1 = 0;  // sign of eps - 1/sqrt(n+1)
  bool n_pm1_square = false;
  bool refined_improves = false;
  std::optional<PellSolution> pell;  // +1 solution for N = n
  std::optional<Rational> biran;     // d/r from that solution
  bool pell_r_le_n = false;
};

ReferenceRow compare_references(const Integer& n);

}  // namespace seshadri::bounds
