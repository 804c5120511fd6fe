#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ctc/estimators.hpp"
#include "ctc/impact.hpp"
#include "ctc/series.hpp"

namespace ctc {

/// Settings for the time-shifted moving-block-bootstrap test. block_len 0
/// resolves to ceil(n^{1/3}); an unset shift resolves to the extremal delay
/// p. A resolved block length not exceeding the shift is a hard error.
struct BootstrapConfig {
  std::size_t replicates = 100;          ///< b
  std::size_t block_len = 0;             ///< ell; 0 = ceil(n^{1/3})
  std::optional<std::size_t> shift;      ///< s; unset = p
  std::uint64_t seed = 0;
  double level = 0.05;
};

/// Outcome of one directional test. p_value is exactly the proportion of
/// replicates >= the observed value (no smoothing), and reject holds iff
/// p_value < level.
struct BootstrapResult {
  CtcEstimate observed;
  std::vector<double> replicates;
  double p_value;
  bool reject;
  BootstrapConfig config;  ///< echo with block_len and shift resolved
};

/// Circular shift: out[t] = in[(t - shift) mod n]. Shifts of 0 and n are
/// identities.
Series time_shift(const Series& s, std::size_t shift);

/// Joint moving-block bootstrap: ceil(n/len) overlapping block starts drawn
/// uniformly with replacement, the aligned blocks of every series copied
/// jointly, concatenated, and truncated to n. All outputs share one block
/// layout, preserving cross-series dependence.
std::vector<Series> mbb_resample_joint(const std::vector<const Series*>& series,
                                       std::size_t block_len,
                                       std::mt19937_64& rng);

std::pair<Series, Series> mbb_resample(const Series& x, const Series& y,
                                       std::size_t block_len,
                                       std::mt19937_64& rng);

/// Test of H0 "x does not cause y in extremes": the hypothesized effect
/// series is circularly shifted by s, breaking cause-effect alignment within
/// the extremal delay while preserving serial and feedback structure, then b
/// joint block resamples of (x, shifted y) are re-estimated with identical
/// settings. Each replicate uses an independent RNG stream derived from
/// (seed, replicate index); degenerate replicates are redrawn (at most 10
/// times each) rather than scored. Supported variants: Compound and Max
/// (params are ignored for Max).
///
/// The asymptotic justification of the procedure assumes a fixed, non-random
/// extreme threshold; as is standard practice, the implementation uses the
/// data-dependent k-th largest value.
BootstrapResult mbb_test(const Series& x, const Series& y, std::size_t p,
                         std::size_t k, const ImpactParams& params,
                         const BootstrapConfig& cfg = {},
                         CtcVariant variant = CtcVariant::Compound);

/// Multivariate form: every effect series is shifted by the same s and all
/// series are resampled jointly.
BootstrapResult mbb_test_multivariate(const Series& x,
                                      const std::vector<Series>& ys,
                                      std::size_t p, std::size_t k,
                                      const ImpactParams& params,
                                      const BootstrapConfig& cfg = {});

/// Convenience wrapper returning the (x -> y, y -> x) test pair; swapping
/// the arguments swaps the results exactly.
std::pair<BootstrapResult, BootstrapResult> test_both_directions(
    const Series& x, const Series& y, std::size_t p, std::size_t k,
    const ImpactParams& params, const BootstrapConfig& cfg = {},
    CtcVariant variant = CtcVariant::Compound);

std::size_t default_block_len(std::size_t n);

}  // namespace ctc
