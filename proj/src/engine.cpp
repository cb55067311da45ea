#include "poisson/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "poisson/error.hpp"

namespace poisson {

void Model::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw PreconditionError("lambda must be positive");
  if (mc.n_outer < 2) throw PreconditionError("n_outer must be at least 2");
  if (!(mc.ci_level > 0.0 && mc.ci_level < 1.0))
    throw PreconditionError("ci_level must lie in (0, 1)");
  if (quad.n_sigma_samples == 0) throw PreconditionError("n_sigma_samples must be positive");
}

Sample make_sample(const Model& model, std::size_t index) {
  Rng config_rng = make_stream(model.mc.seed, index, role::configuration);
  Rng quad_rng = make_stream(model.quad.seed, index, role::quadrature);
  Sample s;
  s.index = index;
  s.omega = sample_configuration(model.space, model.lambda, config_rng);
  s.rule = make_rule(model.space, model.quad, quad_rng, model.lambda);
  return s;
}

SampleTable::SampleTable(std::size_t rows, std::size_t columns)
    : rows_(rows), columns_(columns), data_(rows * columns, 0.0) {}

std::span<const double> SampleTable::column(std::size_t j) const {
  return {data_.data() + j * rows_, rows_};
}

std::span<double> SampleTable::column(std::size_t j) { return {data_.data() + j * rows_, rows_}; }

Estimate SampleTable::estimate(std::size_t j, double ci_level) const {
  return estimate_from_samples(column(j), ci_level);
}

SampleTable run_indexed(std::size_t n, std::size_t columns, unsigned threads,
                        const std::function<void(std::size_t, std::span<double>)>& fn) {
  SampleTable table(n, columns);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

  constexpr std::size_t kBlock = 256;
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = n;
  std::exception_ptr error;

  auto worker = [&] {
    std::vector<double> row(columns);
    for (;;) {
      const std::size_t begin = next.fetch_add(kBlock);
      if (begin >= n) return;
      const std::size_t end = std::min(n, begin + kBlock);
      for (std::size_t i = begin; i < end; ++i) {
        try {
          std::fill(row.begin(), row.end(), 0.0);
          fn(i, row);
          for (std::size_t j = 0; j < columns; ++j) table.column(j)[i] = row[j];
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
          return;
        }
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return table;
}

SampleTable run_samples(const Model& model, std::size_t columns,
                        const std::function<void(const Sample&, std::span<double>)>& fn) {
  model.validate();
  return run_indexed(model.mc.n_outer, columns, model.mc.threads,
                     [&](std::size_t i, std::span<double> row) { fn(make_sample(model, i), row); });
}

}  // namespace poisson
