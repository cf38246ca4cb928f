#pragma once

#include "seshadri/exactmath.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seshadri::apps {

// Uniform systems F_t = t L' - m (E_1 + ... + E_n) on the plane.

Rational effectivity_lower_bound(const Integer& n, const Integer& m);
Rational ampleness_lower_bound(const Integer& n, const Integer& m);

struct RegularityBounds {
  Integer a_threshold;
  std::optional<Integer> b_threshold;  // only for non-square n
  bool sharp = false;
  Integer best() const;
};

RegularityBounds regularity_bounds(const Integer& n, const Integer& m);

struct FreenessBounds {
  Integer free_lb;
  Integer va_lb;
  bool even_square_override = false;
};

FreenessBounds freeness_va_bounds(const Integer& n, const Integer& m);

struct ThresholdReport {
  Integer n;
  Integer m;
  Rational epsilon;
  bool square_case = false;
  Rational effectivity_lb;
  Rational ampleness_lb;
  std::optional<RegularityBounds> regularity;
  std::optional<FreenessBounds> freeness;
  std::vector<std::string> notes;
};

ThresholdReport threshold_report(const Integer& n, const Integer& m);

}  // namespace seshadri::apps
