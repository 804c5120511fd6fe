#include "ctc/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "ctc/errors.hpp"
#include "ctc/gpd.hpp"

namespace ctc {

namespace {

void check_pair(const Series& x, const Series& y, std::size_t p,
                std::size_t k) {
  const std::size_t n = x.size();
  if (y.size() != n) {
    throw UsageError("estimator: series lengths differ (" +
                     std::to_string(n) + " vs " + std::to_string(y.size()) +
                     ")");
  }
  if (p < 1 || p > n - 1) {
    throw UsageError("estimator: extremal delay p must satisfy 1 <= p <= n-1");
  }
  if (k < 1 || k > n) {
    throw UsageError("estimator: extreme count k must satisfy 1 <= k <= n");
  }
}

std::size_t resolve_k(std::size_t k, std::size_t n) {
  return k == kAutoExtremes ? auto_extreme_count(n) : k;
}

// Ranks r[t] = F_Y(y_t) over the full sample.
std::vector<double> ecdf_ranks(const Series& y) {
  EcdfTable table(y);
  std::vector<double> r(y.size());
  for (std::size_t t = 0; t < y.size(); ++t) r[t] = table(y.values[t]);
  return r;
}

}  // namespace

std::string to_string(CtcVariant v) {
  switch (v) {
    case CtcVariant::Compound: return "compound";
    case CtcVariant::Max: return "max";
    case CtcVariant::Gpd: return "gpd";
    case CtcVariant::ConditionalCompound: return "conditional";
    case CtcVariant::MultivariateCompound: return "multivariate";
  }
  return "unknown";
}

std::size_t auto_extreme_count(std::size_t n) {
  return static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
}

CompoundCtcContext::CompoundCtcContext(const Series& x,
                                       const std::vector<Series>& ys,
                                       std::size_t p, std::size_t k) {
  if (ys.empty()) {
    throw UsageError("estimator: need at least one effect series");
  }
  for (const Series& y : ys) check_pair(x, y, p, k == kAutoExtremes ? 1 : k);
  const std::size_t n = x.size();
  k_ = resolve_k(k, n);
  check_pair(x, ys.front(), p, k_);
  p_ = p;
  window_width_ = ys.size() * p;

  std::vector<std::vector<double>> ranks;
  ranks.reserve(ys.size());
  for (const Series& y : ys) ranks.push_back(ecdf_ranks(y));

  const double threshold = kth_largest(x, k_);
  for (std::size_t t = 0; t + p < n; ++t) {  // t <= n - p - 1, 0-based
    if (x.values[t] < threshold) continue;
    std::vector<double> window;
    window.reserve(window_width_);
    for (const auto& r : ranks) {
      for (std::size_t j = 1; j <= p; ++j) window.push_back(r[t + j]);
    }
    windows_.push_back(std::move(window));
  }
  if (windows_.empty()) {
    throw DegenerateEstimateError(
        "estimator: no extreme index of '" + x.name + "' lies in [1, n-p]; "
        "all " + std::to_string(k_) + " extremes fall in the last " +
        std::to_string(p) + " positions");
  }
}

CompoundCtcContext::CompoundCtcContext(const Series& x, const Series& y,
                                       std::size_t p, std::size_t k)
    : CompoundCtcContext(x, std::vector<Series>{y}, p, k) {}

double CompoundCtcContext::value(const ImpactParams& params) const {
  if (params.dimension() != window_width_) {
    throw UsageError("estimator: weight count " +
                     std::to_string(params.dimension()) +
                     " does not match window width " +
                     std::to_string(window_width_));
  }
  double sum = 0.0;
  for (const auto& window : windows_) {
    sum += impact_value(params, window);
  }
  return sum / static_cast<double>(k_);
}

CtcEstimate compound_ctc(const Series& x, const Series& y, std::size_t p,
                         std::size_t k, const ImpactParams& params) {
  CompoundCtcContext ctx(x, y, p, k);
  return CtcEstimate{ctx.value(params),
                     {x.name, y.name},
                     p,
                     ctx.k(),
                     CtcVariant::Compound,
                     ctx.k()};
}

CtcEstimate max_ctc(const Series& x, const Series& y, std::size_t p,
                    std::size_t k) {
  check_pair(x, y, p, k == kAutoExtremes ? 1 : k);
  const std::size_t n = x.size();
  const std::size_t kk = resolve_k(k, n);
  check_pair(x, y, p, kk);

  const std::vector<double> ranks = ecdf_ranks(y);
  const double threshold = kth_largest(x, kk);
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t t = 0; t + p < n; ++t) {
    if (x.values[t] < threshold) continue;
    double m = 0.0;
    for (std::size_t j = 1; j <= p; ++j) m = std::max(m, ranks[t + j]);
    sum += m;
    ++hits;
  }
  if (hits == 0) {
    throw DegenerateEstimateError(
        "estimator: no extreme index of '" + x.name + "' lies in [1, n-p]");
  }
  return CtcEstimate{sum / static_cast<double>(kk),
                     {x.name, y.name},
                     p,
                     kk,
                     CtcVariant::Max,
                     kk};
}

CtcEstimate gpd_ctc(const Series& x, const Series& y, std::size_t p,
                    std::size_t k) {
  check_pair(x, y, p, k == kAutoExtremes ? 1 : k);
  const std::size_t n = x.size();
  const std::size_t kk = resolve_k(k, n);
  check_pair(x, y, p, kk);

  const GpdFit fit_x = gpd_fit(x, kk);
  const GpdFit fit_y = gpd_fit(y, kk);
  const EcdfTable table_x(x);
  const EcdfTable table_y(y);

  std::vector<double> hx(n), hy(n);
  for (std::size_t t = 0; t < n; ++t) {
    hx[t] = gpd_hybrid_cdf(fit_x, table_x, x.values[t]);
    hy[t] = gpd_hybrid_cdf(fit_y, table_y, y.values[t]);
  }

  const double level = 1.0 - static_cast<double>(kk) / static_cast<double>(n);
  std::size_t k_g = 0;  // exceedance count under the fitted CDF, full sample
  for (std::size_t t = 0; t < n; ++t) {
    if (hx[t] >= level) ++k_g;
  }
  if (k_g == 0) {
    throw DegenerateEstimateError("gpd_ctc: no fitted-CDF exceedances");
  }

  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t t = 0; t + p < n; ++t) {
    if (hx[t] < level) continue;
    double m = 0.0;
    for (std::size_t j = 1; j <= p; ++j) m = std::max(m, hy[t + j]);
    sum += m;
    ++hits;
  }
  if (hits == 0) {
    throw DegenerateEstimateError(
        "gpd_ctc: no fitted-CDF exceedance of '" + x.name +
        "' lies in [1, n-p]");
  }
  return CtcEstimate{sum / static_cast<double>(k_g),
                     {x.name, y.name},
                     p,
                     kk,
                     CtcVariant::Gpd,
                     k_g};
}

CtcEstimate conditional_compound_ctc(const Series& x, const Series& y,
                                     const Series& z, std::size_t p,
                                     std::size_t k,
                                     const ImpactParams& params) {
  check_pair(x, y, p, k == kAutoExtremes ? 1 : k);
  check_pair(x, z, p, k == kAutoExtremes ? 1 : k);
  const std::size_t n = x.size();
  const std::size_t kk = resolve_k(k, n);
  check_pair(x, y, p, kk);
  if (params.dimension() != p) {
    throw UsageError("conditional estimator: weight count must equal p");
  }

  const std::vector<double> ranks = ecdf_ranks(y);
  const double thr_x = kth_largest(x, kk);
  const double thr_z = kth_largest(z, kk);

  double sum = 0.0;
  std::size_t k_c = 0;
  std::vector<double> window(p);
  for (std::size_t t = 0; t + p < n; ++t) {
    if (x.values[t] < thr_x) continue;
    // Keep the window only if every available confounder value within the
    // extremal delay before the conditioning index is non-extreme.
    bool clean = true;
    for (std::size_t j = 1; j <= std::min(p, t); ++j) {
      if (z.values[t - j] >= thr_z) {
        clean = false;
        break;
      }
    }
    if (!clean) continue;
    for (std::size_t j = 1; j <= p; ++j) window[j - 1] = ranks[t + j];
    sum += impact_value(params, window);
    ++k_c;
  }
  if (k_c == 0) {
    throw DegenerateEstimateError(
        "conditional estimator: no valid extreme windows (every extreme of '" +
        x.name + "' has an extreme '" + z.name + "' value within the delay)");
  }
  return CtcEstimate{sum / static_cast<double>(k_c),
                     {x.name, y.name},
                     p,
                     kk,
                     CtcVariant::ConditionalCompound,
                     k_c};
}

CtcEstimate multivariate_compound_ctc(const Series& x,
                                      const std::vector<Series>& ys,
                                      std::size_t p, std::size_t k,
                                      const ImpactParams& params) {
  CompoundCtcContext ctx(x, ys, p, k);
  std::string effect_names;
  for (const Series& y : ys) {
    if (!effect_names.empty()) effect_names += "+";
    effect_names += y.name;
  }
  return CtcEstimate{ctx.value(params),
                     {x.name, effect_names},
                     p,
                     ctx.k(),
                     CtcVariant::MultivariateCompound,
                     ctx.k()};
}

}  // namespace ctc
