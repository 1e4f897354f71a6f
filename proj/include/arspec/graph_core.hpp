#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arspec/matrix.hpp"

namespace arspec {

/// Binary creation sequence of a threshold graph. Bit i (0-based) is 1 when
/// vertex i joined as a dominating vertex, 0 when it joined isolated. The
/// first bit is always 0.
class CreationSequence {
 public:
  explicit CreationSequence(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters such as "01010101".
  static CreationSequence parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// Connected iff the last vertex dominates.
  bool connected() const noexcept { return bits_.back() == 1; }

  std::string str() const;

  auto operator<=>(const CreationSequence&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Degrees in non-increasing order.
using DegreeSequence = std::vector<std::int64_t>;

/// 0-based vertex relabeling: `images[i]` is the new label of vertex i.
struct Permutation {
  std::vector<std::size_t> images;

  bool is_bijection() const;
};

/// Creation sequence of the connected anti-regular graph A_n:
/// 0101...01 for even n, 00101...01 for odd n.
CreationSequence antiregular_sequence(std::size_t n);

/// Canonical-labeling adjacency matrix: for i < j, entry (i, j) = b_j.
IntMatrix adjacency_from_sequence(const CreationSequence& b);

/// Throws ErrorKind::Role unless `a` is symmetric 0/1 with zero diagonal.
void require_adjacency(const IntMatrix& a);

DegreeSequence degree_sequence(const IntMatrix& a);

/// Relabeling that turns the canonical adjacency matrix of A_n (n even) into
/// the block form [[0, B], [B, J - I]].
///
/// In 1-based form the images are v_{n/2}, v_{n/2+1}, v_{n/2-1}, v_{n/2+2},
/// ..., v_{n-1}, v_1, v_n: odd positions walk down from n/2, even positions
/// walk up from n/2 + 1, and the last vertex stays fixed.
Permutation block_permutation(std::size_t n);

/// Returns P A P^T, i.e. entry (sigma(i), sigma(j)) of the result is a(i, j).
IntMatrix permute(const IntMatrix& a, const Permutation& sigma);

/// [[0, B], [B, J - I]] with B the k x k Hankel matrix of ones on and below
/// the anti-diagonal.
IntMatrix block_adjacency(std::size_t k);

/// [[V, W], [W, 0]]: W has 1 on the anti-diagonal and -1 just above it; V is
/// tridiagonal with diagonal (2, ..., 2, 0) and off-diagonal -1.
IntMatrix inverse_block_adjacency(std::size_t k);

/// D - A.
IntMatrix laplacian(const IntMatrix& a);

}  // namespace arspec
