#include "ctc/impact.hpp"

#include <algorithm>
#include <cmath>

#include "ctc/errors.hpp"

namespace ctc {

namespace {

constexpr double kWeightSumTol = 1e-12;
constexpr double kLogDomainAlpha = 30.0;
constexpr double kLogDomainFactorFloor = 1e-12;

void check_arguments(const ImpactParams& params, std::span<const double> v) {
  if (v.size() != params.weights.size()) {
    throw UsageError("impact function: input dimension " +
                     std::to_string(v.size()) + " does not match weight count " +
                     std::to_string(params.weights.size()));
  }
  for (double vi : v) {
    if (!std::isfinite(vi)) {
      throw DataError("impact function: non-finite input component");
    }
    if (vi < 0.0 || vi > 1.0) {
      throw DataError("impact function: input component outside [0, 1]");
    }
  }
}

double clamp_unit(double h) { return std::clamp(h, 0.0, 1.0); }

double direct_impl(double c, std::span<const double> w,
                   std::span<const double> v) {
  double prod = 1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    prod *= std::pow(1.0 - v[i] * c, w[i]);
  }
  return clamp_unit((1.0 - prod) / c);
}

double log_impl(double alpha, double c, std::span<const double> w,
                std::span<const double> v) {
  double log_prod = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    // log(1 - c) = -alpha analytically; for v_i = 1 the rounded value of c
    // would otherwise send log1p to -inf at large alpha.
    const double term = (v[i] == 1.0) ? -alpha : std::log1p(-v[i] * c);
    log_prod += w[i] * term;
  }
  return clamp_unit(-std::expm1(log_prod) / c);
}

}  // namespace

ImpactParams::ImpactParams(double a, std::vector<double> w)
    : alpha(a), weights(std::move(w)) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw UsageError("impact function: alpha must be a positive real");
  }
  if (weights.empty()) {
    throw UsageError("impact function: weight vector must have p >= 1 entries");
  }
  double sum = 0.0;
  for (double wi : weights) {
    if (!std::isfinite(wi) || wi < 0.0) {
      throw UsageError("impact function: weights must be non-negative reals");
    }
    sum += wi;
  }
  if (std::abs(sum - 1.0) > kWeightSumTol) {
    throw UsageError(
        "impact function: weights must sum to 1 (got " + std::to_string(sum) +
        "); call normalize_weights() to construct a simplex vector");
  }
}

ImpactParams ImpactParams::uniform(double alpha, std::size_t p) {
  if (p == 0) {
    throw UsageError("impact function: p must be >= 1");
  }
  return ImpactParams(alpha,
                      std::vector<double>(p, 1.0 / static_cast<double>(p)));
}

std::vector<double> normalize_weights(std::vector<double> raw) {
  if (raw.empty()) {
    throw UsageError("normalize_weights: empty input");
  }
  double sum = 0.0;
  for (double w : raw) {
    if (!std::isfinite(w) || w < 0.0) {
      throw UsageError("normalize_weights: entries must be non-negative reals");
    }
    sum += w;
  }
  if (sum <= 0.0) {
    throw UsageError("normalize_weights: weights sum to zero");
  }
  for (double& w : raw) w /= sum;
  return raw;
}

double evaluate(const ImpactParams& params, std::span<const double> v) {
  check_arguments(params, v);
  const double c = -std::expm1(-params.alpha);  // 1 - e^{-alpha}, accurately
  return direct_impl(c, params.weights, v);
}

double evaluate_log_domain(const ImpactParams& params,
                           std::span<const double> v) {
  check_arguments(params, v);
  const double c = -std::expm1(-params.alpha);
  return log_impl(params.alpha, c, params.weights, v);
}

double impact_value(const ImpactParams& params, std::span<const double> v) {
  check_arguments(params, v);
  const double c = -std::expm1(-params.alpha);
  bool log_domain = params.alpha > kLogDomainAlpha;
  if (!log_domain) {
    for (double vi : v) {
      if (1.0 - vi * c < kLogDomainFactorFloor) {
        log_domain = true;
        break;
      }
    }
  }
  return log_domain ? log_impl(params.alpha, c, params.weights, v)
                    : direct_impl(c, params.weights, v);
}

}  // namespace ctc
