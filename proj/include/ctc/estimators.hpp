#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ctc/impact.hpp"
#include "ctc/series.hpp"

namespace ctc {

enum class CtcVariant {
  Compound,
  Max,
  Gpd,
  ConditionalCompound,
  MultivariateCompound,
};

std::string to_string(CtcVariant v);

/// A directional causal tail coefficient with its estimation context.
/// effective_k is the divisor actually used: k for the compound and max
/// estimators, the fitted-CDF exceedance count for the GPD variant, and the
/// count of valid extreme windows for the conditional variant.
///
/// Values are in [0, 1] whenever at most k sample points tie with the k-th
/// largest threshold; with heavily tied data (e.g. integer-valued series) the
/// indicator can admit more than k indices while the divisor stays k, exactly
/// as the defining formula prescribes, and the raw average may then exceed 1.
struct CtcEstimate {
  double value;
  std::pair<std::string, std::string> direction;  ///< (cause, effect) names
  std::size_t p;                                  ///< extremal delay
  std::size_t k;                                  ///< requested extreme count
  CtcVariant variant;
  std::size_t effective_k;
};

/// Pass as k to use the default number of extremes, floor(sqrt(n)).
inline constexpr std::size_t kAutoExtremes = 0;

std::size_t auto_extreme_count(std::size_t n);

/// Compound causal tail coefficient from x to the p-lag window of y:
///
///   (1/k) sum_{i=1}^{n-p} h(F_Y(y_{i+1}), ..., F_Y(y_{i+p}))
///                         * 1{x_i >= x_{(n-k+1)}},
///
/// with F_Y the empirical CDF over the full y sample and h the impact
/// function. The summation stops at n - p: indices within the last p
/// positions never condition, even if extreme. Raises
/// DegenerateEstimateError when no index in [1, n-p] is extreme.
CtcEstimate compound_ctc(const Series& x, const Series& y, std::size_t p,
                         std::size_t k, const ImpactParams& params);

/// Max-aggregated comparator: the impact function is replaced by
/// max(F_Y(y_{i+1}), ..., F_Y(y_{i+p})).
CtcEstimate max_ctc(const Series& x, const Series& y, std::size_t p,
                    std::size_t k);

/// Parametric comparator: both empirical CDFs are replaced by hybrid
/// empirical/generalized-Pareto estimates (upper-tail fit with k
/// exceedances per series), and the extreme set is
/// {i : F_X(x_i) >= 1 - k/n} under the fitted CDF, whose size k_g over the
/// whole sample becomes the divisor.
CtcEstimate gpd_ctc(const Series& x, const Series& y, std::size_t p,
                    std::size_t k);

/// Compound coefficient conditioned on a confounder series z: windows are
/// kept only when every available z value within the extremal delay before
/// the conditioning index is below z's own k-th-largest threshold. The
/// divisor k_c is the number of windows kept.
CtcEstimate conditional_compound_ctc(const Series& x, const Series& y,
                                     const Series& z, std::size_t p,
                                     std::size_t k,
                                     const ImpactParams& params);

/// Multivariate extension: the impact function is evaluated on the
/// concatenation of the per-series ECDF windows of all effect series, so
/// params must carry ys.size() * p weights.
CtcEstimate multivariate_compound_ctc(const Series& x,
                                      const std::vector<Series>& ys,
                                      std::size_t p, std::size_t k,
                                      const ImpactParams& params);

/// Precomputed state for repeated compound-CTC evaluations on the same data
/// with varying impact parameters (the weight optimizer's objective).
/// Windows of ECDF values at the x-extreme indices are materialized once.
class CompoundCtcContext {
 public:
  /// Bivariate: one effect series. Throws like compound_ctc.
  CompoundCtcContext(const Series& x, const Series& y, std::size_t p,
                     std::size_t k);
  /// Multivariate: concatenated windows over several effect series.
  CompoundCtcContext(const Series& x, const std::vector<Series>& ys,
                     std::size_t p, std::size_t k);

  /// Estimator value for the given parameters (dimension() weights).
  double value(const ImpactParams& params) const;

  std::size_t extreme_count() const { return windows_.size(); }
  std::size_t dimension() const { return window_width_; }
  std::size_t k() const { return k_; }
  std::size_t p() const { return p_; }

 private:
  std::vector<std::vector<double>> windows_;
  std::size_t window_width_ = 0;
  std::size_t p_ = 0;
  std::size_t k_ = 0;
};

}  // namespace ctc
