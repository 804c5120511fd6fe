#include "ctc/weights.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "ctc/errors.hpp"
#include "ctc/rng.hpp"

namespace ctc {

namespace {

constexpr double kInitBox = 10.0;  // initialization box for the raw weights

void check_config(const DeConfig& cfg) {
  if (!(cfg.differential_weight > 0.0 && cfg.differential_weight <= 2.0)) {
    throw UsageError("differential evolution: F must lie in (0, 2]");
  }
  if (!(cfg.crossover_rate >= 0.0 && cfg.crossover_rate <= 1.0)) {
    throw UsageError("differential evolution: CR must lie in [0, 1]");
  }
}

WeightOptResult run_de(const CompoundCtcContext& ctx,
                       const std::pair<std::string, std::string>& direction,
                       CtcVariant variant, double alpha, const DeConfig& cfg) {
  check_config(cfg);
  const std::size_t dim = ctx.dimension();

  auto objective = [&](const std::vector<double>& raw) {
    return ctx.value(ImpactParams(alpha, softmax(raw)));
  };

  if (dim == 1) {
    // Zero-dimensional simplex: the only feasible weight vector is (1).
    const std::vector<double> w = {1.0};
    const double value = ctx.value(ImpactParams(alpha, w));
    return WeightOptResult{
        w,
        CtcEstimate{value, direction, ctx.p(), ctx.k(), variant, ctx.k()},
        0, false, {value}};
  }

  const std::size_t np = std::max<std::size_t>(
      cfg.population_size == 0 ? 10 * dim : cfg.population_size, 4);
  std::mt19937_64 rng = make_rng(cfg.seed);
  std::uniform_real_distribution<double> box(-kInitBox, kInitBox);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::vector<double>> population(np, std::vector<double>(dim, 0.0));
  // population[0] stays at zero: the uniform-weights candidate.
  for (std::size_t i = 1; i < np; ++i) {
    for (double& v : population[i]) v = box(rng);
  }
  std::vector<double> fitness(np);
  for (std::size_t i = 0; i < np; ++i) fitness[i] = objective(population[i]);

  std::size_t best = static_cast<std::size_t>(
      std::max_element(fitness.begin(), fitness.end()) - fitness.begin());
  std::deque<double> history = {fitness[best]};
  std::vector<double> trace = {fitness[best]};

  std::size_t generation = 0;
  bool stagnated = false;
  std::vector<double> trial(dim);
  for (; generation < cfg.max_generations; ++generation) {
    for (std::size_t i = 0; i < np; ++i) {
      std::size_t r1, r2, r3;
      do { r1 = rng() % np; } while (r1 == i);
      do { r2 = rng() % np; } while (r2 == i || r2 == r1);
      do { r3 = rng() % np; } while (r3 == i || r3 == r1 || r3 == r2);
      const std::size_t j_rand = rng() % dim;
      for (std::size_t d = 0; d < dim; ++d) {
        if (d == j_rand || unit(rng) < cfg.crossover_rate) {
          trial[d] = population[r1][d] +
                     cfg.differential_weight *
                         (population[r2][d] - population[r3][d]);
        } else {
          trial[d] = population[i][d];
        }
      }
      const double f_trial = objective(trial);
      if (f_trial >= fitness[i]) {
        population[i] = trial;
        fitness[i] = f_trial;
        if (f_trial > fitness[best]) best = i;
      }
    }
    history.push_back(fitness[best]);
    trace.push_back(fitness[best]);
    if (history.size() > cfg.stagnation_window + 1) history.pop_front();
    if (history.size() == cfg.stagnation_window + 1) {
      const double gain = history.back() - history.front();
      if (gain <= cfg.tolerance * std::max(1.0, std::abs(history.back()))) {
        stagnated = true;
        ++generation;
        break;
      }
    }
  }

  std::vector<double> weights = softmax(population[best]);
  const double value = ctx.value(ImpactParams(alpha, weights));
  return WeightOptResult{
      std::move(weights),
      CtcEstimate{value, direction, ctx.p(), ctx.k(), variant, ctx.k()},
      generation, stagnated, std::move(trace)};
}

}  // namespace

std::vector<double> softmax(std::span<const double> raw) {
  if (raw.empty()) {
    throw UsageError("softmax: empty input");
  }
  double hi = raw[0];
  for (double r : raw) {
    if (!std::isfinite(r)) {
      throw DataError("softmax: non-finite entry");
    }
    hi = std::max(hi, r);
  }
  std::vector<double> out(raw.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out[i] = std::exp(raw[i] - hi);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

WeightOptResult optimize_weights(const Series& x, const Series& y,
                                 std::size_t p, std::size_t k, double alpha,
                                 const DeConfig& cfg) {
  CompoundCtcContext ctx(x, y, p, k);
  return run_de(ctx, {x.name, y.name}, CtcVariant::Compound, alpha, cfg);
}

WeightOptResult optimize_weights_multivariate(const Series& x,
                                              const std::vector<Series>& ys,
                                              std::size_t p, std::size_t k,
                                              double alpha,
                                              const DeConfig& cfg) {
  CompoundCtcContext ctx(x, ys, p, k);
  std::string effect_names;
  for (const Series& y : ys) {
    if (!effect_names.empty()) effect_names += "+";
    effect_names += y.name;
  }
  return run_de(ctx, {x.name, effect_names}, CtcVariant::MultivariateCompound,
                alpha, cfg);
}

}  // namespace ctc
