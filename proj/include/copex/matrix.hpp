#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace copex {

// Dense square matrix of doubles, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t m, double fill = 0.0)
      : m_(m), v_(m * m, fill) {}

  static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    SquareMatrix out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw std::invalid_argument("matrix is not square");
      for (std::size_t j = 0; j < rows.size(); ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  double& operator()(std::size_t i, std::size_t j) { return v_[i * m_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return v_[i * m_ + j];
  }

  std::size_t size() const { return m_; }
  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

 private:
  std::size_t m_ = 0;
  std::vector<double> v_;
};

}  // namespace copex
