#include "copex/sequences.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace copex {

double vdc(std::uint64_t n, unsigned base) {
  if (base < 2) throw std::invalid_argument("vdc: base must be >= 2");
  const std::uint64_t b = base;
  std::uint64_t num = 0, den = 1;
  while (n > 0) {
    if (den > std::numeric_limits<std::uint64_t>::max() / b)
      throw std::overflow_error("vdc: index too large for exact arithmetic");
    num = num * b + n % b;
    den *= b;
    n /= b;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

std::vector<double> vdc_batch(std::uint64_t start, std::size_t count,
                              unsigned base) {
  if (base < 2) throw std::invalid_argument("vdc: base must be >= 2");
  std::vector<double> out(count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i)
    out[i] = vdc(start + static_cast<std::uint64_t>(i), base);
  return out;
}

std::vector<double> vdc_batch_serial(std::uint64_t start, std::size_t count,
                                     unsigned base) {
  if (base < 2) throw std::invalid_argument("vdc: base must be >= 2");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = vdc(start + static_cast<std::uint64_t>(i), base);
  return out;
}

double avg_consecutive_distance(unsigned base, std::size_t n_terms) {
  if (n_terms < 2)
    throw std::invalid_argument("avg_consecutive_distance: need N >= 2");
  const std::vector<double> xs = vdc_batch(0, n_terms + 1, base);
  double acc = 0.0;
  for (std::size_t n = 0; n < n_terms; ++n) acc += std::abs(xs[n + 1] - xs[n]);
  return acc / static_cast<double>(n_terms);
}

double empirical_limit_average(std::span<const double> xs,
                               std::span<const double> ys,
                               const CostFunction& c) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("empirical_limit_average: length mismatch");
  if (xs.empty())
    throw std::invalid_argument("empirical_limit_average: empty sequences");
  double acc = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) acc += c(xs[i], ys[i]);
  return acc / static_cast<double>(xs.size());
}

std::vector<std::pair<double, double>> consecutive_pairs(unsigned base,
                                                         std::size_t count,
                                                         std::uint64_t start) {
  const std::vector<double> xs = vdc_batch(start, count + 1, base);
  std::vector<std::pair<double, double>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(xs[i], xs[i + 1]);
  return out;
}

}  // namespace copex
