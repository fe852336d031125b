#pragma once

#include <cstddef>

namespace astopo::theory {

// Continuum (mean-field) predictions for the rewiring model with attachment
// weight k + eps * mean_degree. Time is counted in events.
struct TheoryParams {
  double p = 0.0;
  double q = 0.0;
  std::size_t m = 1;
  double eps = 0.0;

  // Throws InvalidParameter unless 0 <= p, 0 <= q, p + q < 1, m >= 1.
  void validate() const;

  double a() const;  // 2m(p - q)(1 - q)(1 + eps) / (1 - p - q)
  double b() const;  // 2(1 - q)(1 + eps)
  double e() const;  // eps * expected mean degree
};

// gamma = 2(1 - q)(1 + eps) + 1. Domain: 0 <= q < 1, eps > -1.
double gamma_ours(double q, double eps);

// Exponent of the extended BA model: 1 + (2m(1 - q) + 1 - p - q) / m.
// Only defined in the scale-free regime q < (1 - p + m) / (1 + 2m), which is
// exactly where the result exceeds 2.
double gamma_eba(double p, double q, std::size_t m);

// Steady-state mean degree 2(1 - q)m / (1 - p - q).
double expected_avg_degree(double p, double q, std::size_t m);

// Link-addition probability that makes the expected mean degree equal to
// `mean_degree` for the given q and m. Throws if the result falls outside
// [0, 1 - q).
double p_for_avg_degree(double q, std::size_t m, double mean_degree);

// Degree at event t of a node born at event t_birth:
// (A + m + E)(t / t_birth)^(1/B) - A - E.
double degree_trajectory(double t, double t_birth, const TheoryParams& params);

// P(k) = t B (m + A + E)^B / (t + m0) * (k + A + E)^(-B - 1).
double pk_theoretical(double k, double t, std::size_t m0, const TheoryParams& params);

}  // namespace astopo::theory
