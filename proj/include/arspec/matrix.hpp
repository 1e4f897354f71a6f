#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "arspec/error.hpp"

namespace arspec {

/// Dense row-major square matrix.
///
/// Integer instantiations hold adjacency and inverse-adjacency matrices so
/// that identities such as A * A^-1 = I can be checked exactly; the
/// eigensolvers take `RealMatrix`.
template <typename T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order, T fill = T{})
      : order_(order), entries_(order * order, fill) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
      : order_(rows.size()) {
    entries_.reserve(order_ * order_);
    for (const auto& row : rows) {
      if (row.size() != order_) {
        throw Error(ErrorKind::InvalidOrder, "matrix rows must all have length equal to the row count");
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static SquareMatrix identity(std::size_t order) {
    SquareMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t order() const noexcept { return order_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  std::span<const T> row(std::size_t i) const {
    return {entries_.data() + i * order_, order_};
  }
  std::span<const T> entries() const noexcept { return entries_; }

  bool operator==(const SquareMatrix&) const = default;

  template <typename U>
  SquareMatrix<U> cast() const {
    SquareMatrix<U> out(order_);
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
    return out;
  }

  SquareMatrix transposed() const {
    SquareMatrix out(order_);
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

 private:
  std::size_t order_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = SquareMatrix<std::int64_t>;
using RealMatrix = SquareMatrix<double>;

template <typename T>
SquareMatrix<T> operator*(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::InvalidOrder, "matrix product needs equal orders");
  }
  const std::size_t n = a.order();
  SquareMatrix<T> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const T ail = a(i, l);
      if (ail == T{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += ail * b(l, j);
    }
  return out;
}

template <typename T>
bool is_symmetric(const SquareMatrix<T>& m, double tol = 0.0) {
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = i + 1; j < m.order(); ++j) {
      const double d = static_cast<double>(m(i, j)) - static_cast<double>(m(j, i));
      if (d > tol || -d > tol) return false;
    }
  return true;
}

// One row per line, comma separated, no header.
template <typename T>
std::string to_csv(const SquareMatrix<T>& m);

template <typename T>
std::string to_json(const SquareMatrix<T>& m);

RealMatrix real_matrix_from_json(const std::string& text);

}  // namespace arspec
