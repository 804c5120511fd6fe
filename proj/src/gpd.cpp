#include "ctc/gpd.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "ctc/errors.hpp"

namespace ctc {

namespace {

constexpr double kShapeZeroTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Negative log-likelihood of excesses under GPD(sigma = exp(theta[0]),
// xi = theta[1]); +inf outside the feasible region (xi <= -1 or an excess
// beyond the support endpoint).
double negloglik(const std::array<double, 2>& theta,
                 std::span<const double> z) {
  const double sigma = std::exp(theta[0]);
  const double xi = theta[1];
  if (!std::isfinite(sigma) || sigma <= 0.0 || xi <= -1.0) return kInf;
  const double m = static_cast<double>(z.size());
  if (std::abs(xi) < kShapeZeroTol) {
    double sum = 0.0;
    for (double zi : z) sum += zi;
    return m * theta[0] + sum / sigma;
  }
  double sum = 0.0;
  for (double zi : z) {
    const double t = 1.0 + xi * zi / sigma;
    if (t <= 0.0) return kInf;
    sum += std::log(t);
  }
  return m * theta[0] + (1.0 + 1.0 / xi) * sum;
}

struct NmResult {
  std::array<double, 2> point;
  double value = kInf;
};

// Nelder-Mead on (log sigma, xi).
NmResult nelder_mead(std::array<double, 2> start, std::span<const double> z) {
  constexpr int kMaxIter = 600;
  constexpr double kTol = 1e-10;
  const double steps[2] = {0.5, 0.2};

  std::array<std::array<double, 2>, 3> simplex;
  std::array<double, 3> f;
  simplex[0] = start;
  for (int i = 0; i < 2; ++i) {
    simplex[i + 1] = start;
    simplex[i + 1][i] += steps[i];
  }
  for (int i = 0; i < 3; ++i) f[i] = negloglik(simplex[i], z);

  auto order = [&] {
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return f[a] < f[b]; });
    std::array<std::array<double, 2>, 3> s2;
    std::array<double, 3> f2;
    for (int i = 0; i < 3; ++i) {
      s2[i] = simplex[idx[i]];
      f2[i] = f[idx[i]];
    }
    simplex = s2;
    f = f2;
  };

  for (int iter = 0; iter < kMaxIter; ++iter) {
    order();
    if (std::isfinite(f[0]) && std::isfinite(f[2]) &&
        f[2] - f[0] < kTol * (1.0 + std::abs(f[0]))) {
      break;
    }
    std::array<double, 2> centroid = {
        0.5 * (simplex[0][0] + simplex[1][0]),
        0.5 * (simplex[0][1] + simplex[1][1])};
    auto blend = [&](double coef) {
      std::array<double, 2> p;
      for (int d = 0; d < 2; ++d) {
        p[d] = centroid[d] + coef * (centroid[d] - simplex[2][d]);
      }
      return p;
    };

    auto reflected = blend(1.0);
    double fr = negloglik(reflected, z);
    if (fr < f[0]) {
      auto expanded = blend(2.0);
      double fe = negloglik(expanded, z);
      if (fe < fr) {
        simplex[2] = expanded;
        f[2] = fe;
      } else {
        simplex[2] = reflected;
        f[2] = fr;
      }
    } else if (fr < f[1]) {
      simplex[2] = reflected;
      f[2] = fr;
    } else {
      auto contracted = blend(fr < f[2] ? 0.5 : -0.5);
      double fc = negloglik(contracted, z);
      if (fc < std::min(fr, f[2])) {
        simplex[2] = contracted;
        f[2] = fc;
      } else {
        // shrink toward the best vertex
        for (int i = 1; i < 3; ++i) {
          for (int d = 0; d < 2; ++d) {
            simplex[i][d] = simplex[0][d] + 0.5 * (simplex[i][d] - simplex[0][d]);
          }
          f[i] = negloglik(simplex[i], z);
        }
      }
    }
  }
  order();
  return {simplex[0], f[0]};
}

}  // namespace

double gpd_cdf(double z, double scale, double shape) {
  if (scale <= 0.0) {
    throw UsageError("gpd_cdf: scale must be positive");
  }
  if (z <= 0.0) return 0.0;
  if (std::abs(shape) < kShapeZeroTol) {
    return -std::expm1(-z / scale);
  }
  const double t = 1.0 + shape * z / scale;
  if (t <= 0.0) return shape < 0.0 ? 1.0 : 0.0;
  return -std::expm1(-std::log1p(shape * z / scale) / shape);
}

GpdFit fit_gpd_excesses(std::span<const double> excesses) {
  const std::size_t m = excesses.size();
  if (m < 2) {
    throw FitError("GPD fit: need at least 2 positive excesses, got " +
                   std::to_string(m));
  }
  double mean = 0.0;
  for (double z : excesses) {
    if (!(z > 0.0) || !std::isfinite(z)) {
      throw UsageError("GPD fit: excesses must be positive finite reals");
    }
    mean += z;
  }
  mean /= static_cast<double>(m);
  double var = 0.0;
  for (double z : excesses) var += (z - mean) * (z - mean);
  var /= static_cast<double>(m - 1);
  if (var <= 0.0 || var < 1e-24 * mean * mean) {
    throw FitError("GPD fit: degenerate sample (constant excesses)");
  }

  // Probability-weighted moment b1 = E[Z (1 - F(Z))] from plotting positions.
  std::vector<double> sorted(excesses.begin(), excesses.end());
  std::sort(sorted.begin(), sorted.end());
  double b1 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double pi = (static_cast<double>(i) + 0.65) / static_cast<double>(m);
    b1 += (1.0 - pi) * sorted[i];
  }
  b1 /= static_cast<double>(m);

  const double ratio = mean * mean / var;
  const double xi_mom = std::clamp(0.5 * (1.0 - ratio), -0.9, 0.9);
  const double sigma_mom = std::max(0.5 * mean * (ratio + 1.0), 1e-12 * mean);
  const double denom = mean - 2.0 * b1;
  double xi_pwm = 0.0;
  double sigma_pwm = mean;
  if (std::abs(denom) > 1e-12 * mean) {
    xi_pwm = std::clamp(2.0 - mean / denom, -0.9, 0.9);
    sigma_pwm = std::max(2.0 * mean * b1 / denom, 1e-12 * mean);
  }

  const std::array<std::array<double, 2>, 3> starts = {{
      {std::log(sigma_mom), xi_mom},   // moment estimator
      {std::log(mean), 0.0},           // exponential sub-model
      {std::log(sigma_pwm), xi_pwm},   // probability-weighted moments
  }};

  NmResult best;
  for (const auto& start : starts) {
    if (!std::isfinite(negloglik(start, excesses))) continue;
    NmResult r = nelder_mead(start, excesses);
    if (r.value < best.value) best = r;
  }
  // The exponential sub-model MLE itself is a candidate: the reported optimum
  // must never fall below that benchmark.
  const std::array<double, 2> expo = {std::log(mean), 0.0};
  const double f_expo = negloglik(expo, excesses);
  if (f_expo < best.value) best = {expo, f_expo};

  if (!std::isfinite(best.value)) {
    throw FitError("GPD fit: optimizer failed from every start (m = " +
                   std::to_string(m) + ", mean = " + std::to_string(mean) +
                   ", var = " + std::to_string(var) + ")");
  }
  return GpdFit{0.0, std::exp(best.point[0]), best.point[1], m, -best.value};
}

GpdFit gpd_fit(const Series& s, std::size_t k) {
  const std::size_t n = s.size();
  if (k < 10 || k > n) {
    throw UsageError("gpd_fit: need 10 <= k <= n exceedances");
  }
  const double u = kth_largest(s, k);
  std::vector<double> excesses;
  excesses.reserve(k);
  for (double x : s.values) {
    if (x > u) excesses.push_back(x - u);
  }
  if (excesses.size() < 2) {
    throw FitError("gpd_fit: fewer than 2 values strictly above the threshold " +
                   std::to_string(u));
  }
  GpdFit fit = fit_gpd_excesses(excesses);
  fit.threshold = u;
  return fit;
}

double gpd_hybrid_cdf(const GpdFit& fit, const EcdfTable& table, double q) {
  if (!std::isfinite(q)) {
    throw DataError("gpd_hybrid_cdf: non-finite query");
  }
  if (q <= fit.threshold) return table(q);
  const double fu = table(fit.threshold);
  return fu + (1.0 - fu) * gpd_cdf(q - fit.threshold, fit.scale, fit.shape);
}

}  // namespace ctc
