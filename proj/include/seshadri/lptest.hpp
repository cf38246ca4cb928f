#pragma once

#include "seshadri/exactmath.hpp"
#include "seshadri/nefcert.hpp"

#include <optional>
#include <vector>

namespace seshadri::lp {

struct TargetSystem {
  Rational t;
  std::vector<Integer> b;  // nonincreasing, nonnegative
  Integer n;
  Integer l = 1;
};

void validate(const TargetSystem& target);
void validate_mults(const std::vector<Integer>& b, const Integer& n);

struct LpSolution {
  Rational objective;
  std::vector<Rational> a;
};

// max sum a_i b_i  s.t.  1 >= a_1 >= ... >= a_n >= 0,
//                        a_1 + ... + a_r <= d^2 l,  a_1 + ... + a_n <= r.
// Tableau simplex over the rationals, Bland's rule.
LpSolution solve_simplex(const std::vector<Integer>& b, const Integer& l, const Integer& r, const Integer& d);

// Same program after a_k = g_k + ... + g_n: three constraints, so some
// optimum is supported on at most three blocks of equal coefficients.
LpSolution solve_block(const std::vector<Integer>& b, const Integer& l, const Integer& r, const Integer& d);

enum class Solver { Simplex, Block };

struct TestDivisor {
  nef::NefCertificate certificate;
  Rational threshold;  // emptiness of t L' - sum b_i E_i certified for t < threshold
  Integer r;
  Integer d;
  LpSolution lp;       // unscaled optimum
  bool scaled = false; // optimum sat on sum a_i^2 = d^2 l
};

TestDivisor optimal_test_divisor(const std::vector<Integer>& b, const Integer& n, const Integer& l,
                                 std::optional<Integer> r_max = std::nullopt,
                                 std::optional<Integer> d_max = std::nullopt, Solver solver = Solver::Simplex);

// eps_{n,l} * sum(b) / l: the best a uniform test divisor can do.
Rational uniform_threshold(const std::vector<Integer>& b, const Integer& n, const Integer& l);

struct EffectivityVerdict {
  bool empty_certified = false;
  std::optional<nef::NefCertificate> best_test_divisor;
  Rational threshold;
  Integer scale_power = 0;  // K = 10^scale_power used to repair strictness
  Rational test_pairing;    // F . H for the returned divisor
};

nef::BlowupDivisorClass target_class(const TargetSystem& target);

EffectivityVerdict certify_empty(const TargetSystem& target);

}  // namespace seshadri::lp
