#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "poisson/configuration.hpp"
#include "poisson/estimate.hpp"
#include "poisson/point_space.hpp"

namespace poisson {

/// Everything one estimator run needs: the base space (sigma), the
/// intensity factor lambda, and the Monte Carlo and quadrature settings.
struct Model {
  PointSpace space = PointSpace::unit_interval();
  double lambda = 1.0;
  McSpec mc;
  QuadSpec quad;

  /// lambda * sigma(X).
  double intensity_mass() const { return lambda * space.total_mass(); }
  void validate() const;
};

/// One outer sample: omega ~ pi_lambda and its sigma rule (scaled to
/// lambda * sigma), both drawn from substreams of the sample index.
struct Sample {
  std::size_t index = 0;
  Configuration omega;
  SigmaRule rule;
};

Sample make_sample(const Model& model, std::size_t index);

/// Per-sample values stored column by column. Reductions run serially in
/// index order, so results do not depend on the thread count.
class SampleTable {
 public:
  SampleTable(std::size_t rows, std::size_t columns);

  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return columns_; }
  std::span<const double> column(std::size_t j) const;
  std::span<double> column(std::size_t j);
  Estimate estimate(std::size_t j, double ci_level) const;

 private:
  std::size_t rows_;
  std::size_t columns_;
  std::vector<double> data_;
};

/// Calls fn(i, row) for i in [0, n) on `threads` workers (0 = hardware
/// concurrency) and stores row j of sample i in column j. If any call
/// throws, the exception of the lowest index is rethrown.
SampleTable run_indexed(std::size_t n, std::size_t columns, unsigned threads,
                        const std::function<void(std::size_t, std::span<double>)>& fn);

/// run_indexed over the Poisson samples of `model`.
SampleTable run_samples(const Model& model, std::size_t columns,
                        const std::function<void(const Sample&, std::span<double>)>& fn);

}  // namespace poisson
