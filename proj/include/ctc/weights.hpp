#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ctc/estimators.hpp"
#include "ctc/series.hpp"

namespace ctc {

/// Differential evolution settings (rand/1/bin). population_size 0 means the
/// default of ten times the search dimension.
struct DeConfig {
  std::size_t population_size = 0;
  std::size_t max_generations = 200;
  double differential_weight = 0.8;  ///< F in (0, 2]
  double crossover_rate = 0.9;       ///< CR in [0, 1]
  std::uint64_t seed = 0;
  double tolerance = 1e-8;           ///< relative stagnation threshold
  std::size_t stagnation_window = 20;
};

/// Softmax with max-subtraction: w_i = exp(r_i) / sum_j exp(r_j). Output
/// sums to 1 within 1e-12 with every entry positive.
std::vector<double> softmax(std::span<const double> raw);

struct WeightOptResult {
  std::vector<double> weights;  ///< best simplex vector found
  CtcEstimate estimate;         ///< compound CTC at those weights
  std::size_t generations;      ///< generations actually run
  bool stagnated;               ///< true if stopped by the tolerance rule
  std::vector<double> best_by_generation;  ///< best objective trace
};

/// Maximize the compound CTC over the weight simplex by differential
/// evolution in an unconstrained softmax parameterization (search box
/// [-10, 10]^p for initialization). The uniform-weight candidate is seeded
/// into the initial population, so the result never scores below uniform
/// weights. Deterministic for a fixed seed.
WeightOptResult optimize_weights(const Series& x, const Series& y,
                                 std::size_t p, std::size_t k, double alpha,
                                 const DeConfig& cfg = {});

/// Multivariate variant: windows concatenate all effect series, so the
/// search dimension is ys.size() * p.
WeightOptResult optimize_weights_multivariate(const Series& x,
                                              const std::vector<Series>& ys,
                                              std::size_t p, std::size_t k,
                                              double alpha,
                                              const DeConfig& cfg = {});

}  // namespace ctc
