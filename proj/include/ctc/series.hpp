#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ctc {

/// A finite univariate sample. Construction rejects empty input and
/// non-finite values; every downstream formula assumes finite reals.
struct Series {
  std::vector<double> values;
  std::string name;

  Series() = default;
  Series(std::vector<double> v, std::string n = "");

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

/// Empirical CDF F(q) = #{x_j <= q} / n as a non-decreasing, right-continuous
/// step function. Immutable after construction; queries are read-only and
/// logarithmic in n.
class EcdfTable {
 public:
  explicit EcdfTable(const Series& s);
  explicit EcdfTable(std::span<const double> values);

  /// F(q); 0 below the sample minimum, 1 at and above the maximum.
  double operator()(double q) const;

  std::size_t size() const { return sorted_.size(); }
  double min() const { return sorted_.front(); }
  double max() const { return sorted_.back(); }

 private:
  std::vector<double> sorted_;
};

EcdfTable ecdf_build(const Series& s);

/// The k-th largest element, i.e. the order statistic x_{(n-k+1)} of the
/// ascending sort. Duplicates count separately: kth_largest((3,1,4,1,5), 4)
/// is 1.
double kth_largest(const Series& s, std::size_t k);
double kth_largest(std::span<const double> values, std::size_t k);

}  // namespace ctc
