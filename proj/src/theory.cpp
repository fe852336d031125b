#include "astopo/theory.hpp"

#include <cmath>
#include <string>

#include "astopo/error.hpp"

namespace astopo::theory {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParameter(what);
}

void require_decaying(const TheoryParams& params) {
  require(params.b() > 0.0, "B = 2(1-q)(1+eps) must be positive");
}

}  // namespace

void TheoryParams::validate() const {
  require(std::isfinite(p) && std::isfinite(q) && std::isfinite(eps),
          "parameters must be finite");
  require(p >= 0.0 && q >= 0.0, "p and q must be non-negative");
  require(p + q < 1.0, "p + q must be below 1");
  require(m >= 1, "m must be at least 1");
}

double TheoryParams::a() const {
  const auto mm = static_cast<double>(m);
  return 2.0 * mm * (p - q) * (1.0 - q) * (1.0 + eps) / (1.0 - p - q);
}

double TheoryParams::b() const { return 2.0 * (1.0 - q) * (1.0 + eps); }

double TheoryParams::e() const {
  return 2.0 * eps * (1.0 - q) * static_cast<double>(m) / (1.0 - p - q);
}

double gamma_ours(double q, double eps) {
  require(std::isfinite(q) && std::isfinite(eps), "parameters must be finite");
  require(q >= 0.0 && q < 1.0, "q must lie in [0, 1)");
  require(eps > -1.0, "eps must exceed -1");
  return 2.0 * (1.0 - q) * (1.0 + eps) + 1.0;
}

double gamma_eba(double p, double q, std::size_t m) {
  TheoryParams{p, q, m, 0.0}.validate();
  const auto mm = static_cast<double>(m);
  require(q < (1.0 - p + mm) / (1.0 + 2.0 * mm),
          "q must stay below (1 - p + m) / (1 + 2m), outside it EBA is not scale-free");
  return 1.0 + (2.0 * mm * (1.0 - q) + 1.0 - p - q) / mm;
}

double expected_avg_degree(double p, double q, std::size_t m) {
  TheoryParams{p, q, m, 0.0}.validate();
  return 2.0 * (1.0 - q) * static_cast<double>(m) / (1.0 - p - q);
}

double p_for_avg_degree(double q, std::size_t m, double mean_degree) {
  require(q >= 0.0 && q < 1.0, "q must lie in [0, 1)");
  require(m >= 1, "m must be at least 1");
  require(mean_degree > 0.0, "mean degree must be positive");
  const double p = 1.0 - q - 2.0 * (1.0 - q) * static_cast<double>(m) / mean_degree;
  if (p < 0.0 || p + q >= 1.0) {
    throw InvalidParameter("mean degree " + std::to_string(mean_degree) +
                           " is unreachable with q = " + std::to_string(q) +
                           ", m = " + std::to_string(m));
  }
  return p;
}

double degree_trajectory(double t, double t_birth, const TheoryParams& params) {
  params.validate();
  require_decaying(params);
  require(t_birth > 0.0 && t >= t_birth, "need t >= t_birth > 0");
  const double shift = params.a() + params.e();
  const auto m = static_cast<double>(params.m);
  return (shift + m) * std::pow(t / t_birth, 1.0 / params.b()) - shift;
}

double pk_theoretical(double k, double t, std::size_t m0, const TheoryParams& params) {
  params.validate();
  require_decaying(params);
  require(k >= static_cast<double>(params.m), "k must be at least m");
  require(t > 0.0, "t must be positive");
  const double shift = params.a() + params.e();
  const double b = params.b();
  const auto m = static_cast<double>(params.m);
  require(m + shift > 0.0 && k + shift > 0.0, "m + A + E must be positive");
  return t * b * std::pow(m + shift, b) / (t + static_cast<double>(m0)) *
         std::pow(k + shift, -b - 1.0);
}

}  // namespace astopo::theory
