#pragma once

#include <cstddef>
#include <span>

#include "ctc/series.hpp"

namespace ctc {

/// Generalized Pareto fit for the exceedances of a sample over a high
/// threshold. With shape < 0 the fitted support is bounded above by
/// threshold - scale/shape, which the fitting routine keeps beyond every
/// modeled exceedance.
struct GpdFit {
  double threshold;          ///< u, in data units
  double scale;              ///< sigma > 0
  double shape;              ///< xi
  std::size_t exceedances;   ///< number of modeled excesses above u
  double log_likelihood;     ///< at the optimum
};

/// CDF of the generalized Pareto distribution at excess z >= 0.
double gpd_cdf(double z, double scale, double shape);

/// Maximum-likelihood fit to positive excesses. Derivative-free local search
/// started from a ladder of initializers (moment, exponential, probability-
/// weighted moments); shape is constrained to (-1, inf) and support
/// feasibility is enforced by penalty. Degenerate samples raise FitError.
GpdFit fit_gpd_excesses(std::span<const double> excesses);

/// Peaks-over-threshold fit with threshold u = kth_largest(s, k); the
/// excesses are the values strictly above u, shifted by u. Requires k >= 10.
GpdFit gpd_fit(const Series& s, std::size_t k);

/// Hybrid distribution estimate: the empirical CDF at and below u, and
/// F(u) + (1 - F(u)) * GPD(q - u) above. Continuous at u from the right.
/// The fit and the table must come from the same sample.
double gpd_hybrid_cdf(const GpdFit& fit, const EcdfTable& table, double q);

}  // namespace ctc
