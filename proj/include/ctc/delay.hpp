#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ctc/series.hpp"

namespace ctc {

enum class LagMethod { Extremogram, Pccf };

std::string to_string(LagMethod m);

/// Per-lag dependence statistics for lags tau = 1..max_lag. Extremogram
/// values lie in [0, 1], PCCF values in [-1, 1]. Entries can be undefined
/// (no conditioning exceedances, or zero residual variance); undefined lags
/// carry no evidence and are excluded from selection rather than imputed.
struct LagProfile {
  LagMethod method = LagMethod::Pccf;
  std::vector<double> values;    ///< values[tau - 1]; NaN when undefined
  std::vector<bool> defined;     ///< defined[tau - 1]
  double threshold = 0.0;        ///< last c-bar used for selection
  std::optional<std::size_t> selected_p;

  std::size_t max_lag() const { return values.size(); }
};

/// Conditional upper-tail exceedance rate of y given an exceedance of x,
/// per lag: the proportion of times y_{t+tau} exceeds its q-quantile given
/// x_t exceeds its own. Quantiles use the k-th-largest convention with
/// k = ceil((1-q) n); exceedance is strict.
LagProfile cross_extremogram(const Series& x, const Series& y,
                             std::size_t max_lag, double q = 0.95);

/// Asymmetric partial cross-correlation: the correlation of x_t and
/// y_{t+tau} after regressing both (with intercept) on the intermediate
/// effect lags y_{t+1}, ..., y_{t+tau-1} only. For tau = 1 this is the plain
/// lagged correlation. Near-singular designs fall back to a trace-scaled
/// ridge solve.
LagProfile pccf(const Series& x, const Series& y, std::size_t max_lag);

/// Largest tau whose (defined) profile value reaches c_bar; records the
/// selection in the profile. Recommended thresholds: 0.1 for the
/// extremogram and 0.10-0.15 for the PCCF. Throws NoDelayError if no lag
/// qualifies.
std::size_t select_delay(LagProfile& profile, double c_bar);

}  // namespace ctc
