#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "copex/costfn.hpp"

namespace copex {

// Radical inverse of n in base b (van der Corput sequence), computed with
// exact integer digit arithmetic.
double vdc(std::uint64_t n, unsigned base);

// Elements phi_b(start), ..., phi_b(start + count - 1), order-stable.
std::vector<double> vdc_batch(std::uint64_t start, std::size_t count,
                              unsigned base);
std::vector<double> vdc_batch_serial(std::uint64_t start, std::size_t count,
                                     unsigned base);

// (1/N) sum_{n=0}^{N-1} |phi_b(n+1) - phi_b(n)|.
double avg_consecutive_distance(unsigned base, std::size_t n_terms);

// (1/N) sum c(x_n, y_n).
double empirical_limit_average(std::span<const double> xs,
                               std::span<const double> ys,
                               const CostFunction& c);

// (phi_b(n), phi_b(n+1)) for n = start .. start + count - 1.
std::vector<std::pair<double, double>> consecutive_pairs(
    unsigned base, std::size_t count, std::uint64_t start = 1);

}  // namespace copex
