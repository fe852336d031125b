#include "astopo/powerlaw_fit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "astopo/error.hpp"

namespace astopo {
namespace {

constexpr std::size_t kMinPoints = 3;

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InsufficientData("least squares needs two or more paired points");
  }
  const auto count = static_cast<double>(x.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0) throw InsufficientData("regression abscissae are all equal");

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.correlation = syy == 0.0 ? 0.0 : sxy / std::sqrt(sxx * syy);
  return fit;
}

FitResult fit_degree_exponent(const DegreeHistogram& h) {
  struct Bin {
    std::size_t degree;
    std::size_t count;
  };
  std::vector<Bin> bins;
  for (const auto& [degree, count] : h.counts) {
    if (degree >= 1 && count > 0) bins.push_back({degree, count});
  }
  if (bins.size() < kMinPoints) {
    throw InsufficientData("degree fit needs at least 3 populated degrees");
  }

  std::vector<double> counts;
  counts.reserve(bins.size());
  for (const Bin& b : bins) counts.push_back(static_cast<double>(b.count));
  const double threshold = median(std::move(counts));
  const double budget = kMaxTrimFraction * static_cast<double>(h.n);

  std::size_t trimmed = 0;
  while (bins.size() > kMinPoints) {
    const Bin& top = bins.back();
    if (static_cast<double>(top.count) >= threshold) break;
    if (static_cast<double>(trimmed + top.count) > budget) break;
    trimmed += top.count;
    bins.pop_back();
  }

  std::vector<double> x;
  std::vector<double> y;
  for (const Bin& b : bins) {
    x.push_back(std::log(static_cast<double>(b.degree)));
    y.push_back(std::log(static_cast<double>(b.count)));
  }
  const LinearFit line = least_squares(x, y);

  FitResult result;
  result.exponent = -line.slope;
  result.correlation = line.correlation;
  result.points_used = bins.size();
  result.nodes_trimmed = trimmed;
  result.trim_fraction =
      h.n == 0 ? 0.0 : static_cast<double>(trimmed) / static_cast<double>(h.n);
  return result;
}

FitResult fit_rich_club_exponent(std::span<const RichClubPoint> curve) {
  std::vector<double> x;
  std::vector<double> y;
  for (const RichClubPoint& point : curve) {
    if (point.phi > 0.0 && point.fraction > 0.0) {
      x.push_back(std::log(point.fraction));
      y.push_back(std::log(point.phi));
    }
  }
  if (x.size() < kMinPoints) {
    throw InsufficientData("rich-club fit needs at least 3 points with phi > 0");
  }
  const LinearFit line = least_squares(x, y);
  FitResult result;
  result.exponent = line.slope;
  result.correlation = line.correlation;
  result.points_used = x.size();
  return result;
}

}  // namespace astopo
