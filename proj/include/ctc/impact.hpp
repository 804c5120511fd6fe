#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ctc {

/// Parameters of the compound-extreme impact function
///
///   h(v_1,...,v_p; w, alpha) = [1 - prod_i (1 - v_i c)^{w_i}] / c,
///   c = 1 - exp(-alpha),
///
/// Firth's generalization of the Blalock aggregation formula. The shape
/// parameter alpha interpolates between a weighted sum (alpha -> 0) and the
/// Blalock nil-cancellation form 1 - prod (1 - v_i)^{w_i} (alpha -> infinity);
/// neither limit is accepted as a literal parameter value. The weights are
/// marginal importances on the probability simplex.
///
/// Weights are validated, not silently renormalized; use normalize_weights()
/// to build a simplex vector from raw non-negative magnitudes.
struct ImpactParams {
  double alpha;
  std::vector<double> weights;

  /// Validates alpha > 0, weights >= 0 summing to 1 within 1e-12, p >= 1.
  ImpactParams(double alpha, std::vector<double> weights);

  /// Equal weights 1/p on p components.
  static ImpactParams uniform(double alpha, std::size_t p);

  std::size_t dimension() const { return weights.size(); }
};

/// Scale raw non-negative weights to unit sum. Rejects negative entries and
/// all-zero input.
std::vector<double> normalize_weights(std::vector<double> raw);

/// Direct closed-form evaluation of h. Preconditions: v matches the weight
/// dimension and every v_i lies in [0, 1]. Accurate for moderate alpha; the
/// factors (1 - v_i c)^{w_i} underflow in this form when alpha is large.
double evaluate(const ImpactParams& params, std::span<const double> v);

/// Log-domain evaluation exp(sum w_i log(1 - v_i c)) via log1p. At v_i = 1
/// exactly, log(1 - c) = -alpha is substituted analytically, so the all-ones
/// case yields 1 without overflow for any alpha. Agrees with evaluate() to
/// 1e-12 away from the degenerate corners.
double evaluate_log_domain(const ImpactParams& params,
                           std::span<const double> v);

/// Canonical evaluation used by the estimators: switches to the log-domain
/// path when alpha > 30 or any 1 - v_i c < 1e-12.
double impact_value(const ImpactParams& params, std::span<const double> v);

}  // namespace ctc
