#include "ctc/series.hpp"

#include <algorithm>
#include <cmath>

#include "ctc/errors.hpp"

namespace ctc {

Series::Series(std::vector<double> v, std::string n)
    : values(std::move(v)), name(std::move(n)) {
  if (values.empty()) {
    throw UsageError("series '" + name + "' is empty");
  }
  for (double x : values) {
    if (!std::isfinite(x)) {
      throw DataError("series '" + name + "' contains a non-finite value");
    }
  }
}

EcdfTable::EcdfTable(std::span<const double> values)
    : sorted_(values.begin(), values.end()) {
  if (sorted_.empty()) {
    throw UsageError("cannot build an ECDF from an empty sample");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

EcdfTable::EcdfTable(const Series& s) : EcdfTable(std::span(s.values)) {}

double EcdfTable::operator()(double q) const {
  auto it = std::upper_bound(sorted_.begin(), sorted_.end(), q);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

EcdfTable ecdf_build(const Series& s) { return EcdfTable(s); }

double kth_largest(std::span<const double> values, std::size_t k) {
  const std::size_t n = values.size();
  if (k < 1 || k > n) {
    throw UsageError("kth_largest: k must be in [1, n]");
  }
  std::vector<double> copy(values.begin(), values.end());
  // x_{(n-k+1)} in 1-based order statistics = index n-k after ascending sort.
  auto nth = copy.begin() + static_cast<std::ptrdiff_t>(n - k);
  std::nth_element(copy.begin(), nth, copy.end());
  return *nth;
}

double kth_largest(const Series& s, std::size_t k) {
  return kth_largest(std::span(s.values), k);
}

}  // namespace ctc
