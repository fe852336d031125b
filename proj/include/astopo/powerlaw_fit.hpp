#pragma once

#include <cstddef>
#include <span>

#include "astopo/metrics.hpp"

namespace astopo {

// Most nodes the tail trim may discard, as a fraction of all nodes.
inline constexpr double kMaxTrimFraction = 0.05;

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double correlation = 0.0;  // Pearson r; 0 when either variable is constant
};

// Ordinary least squares of y on x. Needs at least two points.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

struct FitResult {
  double exponent = 0.0;
  double correlation = 0.0;
  std::size_t points_used = 0;
  std::size_t nodes_trimmed = 0;
  double trim_fraction = 0.0;
};

// Power-law exponent of P(k) ~ k^-gamma from a log-log regression of bin
// count against degree, reported as gamma (positive for a decaying law).
//
// Before regressing, sparse high-degree bins are dropped from the top end one
// at a time while the bin's count is below the median bin count and the total
// number of dropped nodes stays within kMaxTrimFraction of n. Degree-0 nodes
// and empty bins never enter the regression.
//
// Throws InsufficientData when fewer than three points remain.
FitResult fit_degree_exponent(const DegreeHistogram& h);

// Slope of log(phi) against log(r/n) over points with phi > 0; sign kept.
FitResult fit_rich_club_exponent(std::span<const RichClubPoint> curve);

}  // namespace astopo
