#pragma once

#include "seshadri/exactmath.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace seshadri::stats {

// eps_{n,l} > sqrt(l/n) sqrt(1 - 1/n)
bool star_holds(const Integer& n, const Integer& l);

bool interval_I_contains(const Integer& n, const Integer& l);
bool interval_J_contains(const Integer& n, const Integer& l);

struct ScanRow {
  Integer l;
  Rational eps;
  bool square_case = false;
  bool star = false;
  bool in_I = false;
  bool in_J = false;
};

struct ScanReport {
  Integer n;
  Integer total_l;
  Integer holds_count;
  Rational percentage;  // 100 * holds_count / total_l
  std::vector<ScanRow> rows;
};

// l ranges over [l_lo, l_hi]. A value of l is counted when (*) holds and
// nl is not a square-case pair (there eps is only a supremum).
ScanReport star_fraction(const Integer& n, bool detail = false);
ScanReport star_scan(const Integer& n, const Integer& l_lo, const Integer& l_hi, bool detail);

struct HalfRange {
  Integer count;
  Integer range_size;
  bool pass = false;
};

HalfRange half_range_check(const Integer& n);

// Lexicographically least (d, r) with 0 < r < n+1, d >= 1 and
// |r/sqrt(nl) - d| <= 1/(n+1). Returned as (r, d).
std::pair<Integer, Integer> dirichlet_witness(const Integer& n, const Integer& l);

// eps_{n,l} > sqrt(l/n) sqrt(1 - 1/(a n))
bool doublestar_holds(const Integer& n, const Integer& l, const Integer& a);

struct DoubleStar {
  Integer failures;
  Integer bound;
  bool pass = false;
};

DoubleStar doublestar_failure_count(const Integer& l, const Integer& s, const Integer& a);

}  // namespace seshadri::stats
