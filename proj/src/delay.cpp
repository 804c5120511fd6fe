#include "ctc/delay.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "ctc/errors.hpp"

namespace ctc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kConditionLimit = 1e12;
constexpr double kRidgeScale = 1e-8;

// OLS residuals of rhs against the columns of design (intercept included by
// the caller). Householder QR with column pivoting; if the R diagonal signals
// a condition estimate beyond kConditionLimit, refit with a trace-scaled
// ridge term on the normal equations.
Eigen::VectorXd ols_residuals(const Eigen::MatrixXd& design,
                              const Eigen::VectorXd& rhs) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  const Eigen::VectorXd diag = qr.matrixR().diagonal().cwiseAbs();
  const double dmax = diag.maxCoeff();
  const double dmin = diag.minCoeff();
  if (dmin > 0.0 && dmax / dmin < kConditionLimit) {
    return rhs - design * qr.solve(rhs);
  }
  const Eigen::MatrixXd gram = design.transpose() * design;
  const double ridge =
      kRidgeScale * gram.trace() / static_cast<double>(design.cols());
  Eigen::MatrixXd regularized = gram;
  regularized.diagonal().array() += ridge;
  const Eigen::VectorXd beta =
      regularized.ldlt().solve(design.transpose() * rhs);
  return rhs - design * beta;
}

double correlation(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double ma = a.mean();
  const double mb = b.mean();
  const Eigen::VectorXd da = a.array() - ma;
  const Eigen::VectorXd db = b.array() - mb;
  const double va = da.squaredNorm();
  const double vb = db.squaredNorm();
  if (va <= 0.0 || vb <= 0.0) return kNaN;
  return da.dot(db) / std::sqrt(va * vb);
}

}  // namespace

std::string to_string(LagMethod m) {
  return m == LagMethod::Extremogram ? "extremogram" : "pccf";
}

LagProfile cross_extremogram(const Series& x, const Series& y,
                             std::size_t max_lag, double q) {
  const std::size_t n = x.size();
  if (y.size() != n) {
    throw UsageError("cross_extremogram: series lengths differ");
  }
  if (max_lag < 1 || max_lag >= n) {
    throw UsageError("cross_extremogram: need 1 <= max_lag < n");
  }
  if (!(q > 0.0 && q < 1.0)) {
    throw UsageError("cross_extremogram: quantile level must be in (0, 1)");
  }
  const auto k = static_cast<std::size_t>(
      std::ceil((1.0 - q) * static_cast<double>(n)));
  const double qx = kth_largest(x, std::max<std::size_t>(k, 1));
  const double qy = kth_largest(y, std::max<std::size_t>(k, 1));

  LagProfile profile;
  profile.method = LagMethod::Extremogram;
  profile.values.assign(max_lag, kNaN);
  profile.defined.assign(max_lag, false);
  for (std::size_t tau = 1; tau <= max_lag; ++tau) {
    std::size_t cond = 0, joint = 0;
    for (std::size_t t = 0; t + tau < n; ++t) {
      if (x.values[t] > qx) {
        ++cond;
        if (y.values[t + tau] > qy) ++joint;
      }
    }
    if (cond == 0) continue;  // undefined at this lag
    profile.values[tau - 1] =
        static_cast<double>(joint) / static_cast<double>(cond);
    profile.defined[tau - 1] = true;
  }
  return profile;
}

LagProfile pccf(const Series& x, const Series& y, std::size_t max_lag) {
  const std::size_t n = x.size();
  if (y.size() != n) {
    throw UsageError("pccf: series lengths differ");
  }
  if (max_lag < 1 || max_lag >= n) {
    throw UsageError("pccf: need 1 <= max_lag < n");
  }
  if (n - max_lag <= max_lag + 2) {
    throw UsageError("pccf: too few points for the lag-" +
                     std::to_string(max_lag) + " regression (need n - tau > tau + 2)");
  }

  LagProfile profile;
  profile.method = LagMethod::Pccf;
  profile.values.assign(max_lag, kNaN);
  profile.defined.assign(max_lag, false);

  for (std::size_t tau = 1; tau <= max_lag; ++tau) {
    const std::size_t rows = n - tau;
    Eigen::VectorXd cause(rows), effect(rows);
    for (std::size_t t = 0; t < rows; ++t) {
      cause(static_cast<Eigen::Index>(t)) = x.values[t];
      effect(static_cast<Eigen::Index>(t)) = y.values[t + tau];
    }

    double value;
    if (tau == 1) {
      // Empty conditioning block: plain lagged correlation.
      value = correlation(cause, effect);
    } else {
      Eigen::MatrixXd design(rows, static_cast<Eigen::Index>(tau));
      design.col(0).setOnes();
      for (std::size_t j = 1; j < tau; ++j) {
        for (std::size_t t = 0; t < rows; ++t) {
          design(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j)) =
              y.values[t + j];
        }
      }
      const Eigen::VectorXd res_cause = ols_residuals(design, cause);
      const Eigen::VectorXd res_effect = ols_residuals(design, effect);
      value = correlation(res_cause, res_effect);
    }
    if (std::isfinite(value)) {
      profile.values[tau - 1] = value;
      profile.defined[tau - 1] = true;
    }
  }
  return profile;
}

std::size_t select_delay(LagProfile& profile, double c_bar) {
  if (profile.values.empty()) {
    throw UsageError("select_delay: empty profile");
  }
  bool any_defined = false;
  std::optional<std::size_t> best;
  for (std::size_t tau = 1; tau <= profile.max_lag(); ++tau) {
    if (!profile.defined[tau - 1]) continue;
    any_defined = true;
    if (profile.values[tau - 1] >= c_bar) best = tau;
  }
  if (!any_defined) {
    throw UsageError("select_delay: profile has no defined entries");
  }
  profile.threshold = c_bar;
  profile.selected_p = best;
  if (!best) {
    throw NoDelayError("select_delay: no lag reaches the threshold " +
                       std::to_string(c_bar));
  }
  return *best;
}

}  // namespace ctc
