#pragma once
// Self-contained SVG figures.

#include <string>
#include <vector>

#include "lozlab/tiling/pattern.hpp"

namespace lozlab {

/// Density histogram of `values` over [lo, hi] with the standard normal curve
/// on top. `bin_width` <= 0 picks 40 bins.
std::string svg_histogram(const std::vector<double>& values, double lo, double hi, double bin_width,
                          const std::string& title);

/// Paired bars per r: analytic and empirical (with +-2 SE whiskers).
std::string svg_moments(const std::vector<double>& analytic, const std::vector<double>& empirical,
                        const std::vector<double>& standard_errors, const std::string& title);

/// Lozenge picture of a pattern, lines 0..depth drawn left to right.
std::string svg_tiling(const GTPattern& pattern, const std::string& title);

}  // namespace lozlab
