#include "arspec/graph_core.hpp"

#include <algorithm>
#include <functional>

namespace arspec {

CreationSequence::CreationSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.size() < 2) {
    throw Error(ErrorKind::InvalidOrder, "creation sequence needs at least 2 vertices");
  }
  if (bits_[0] != 0) {
    throw Error(ErrorKind::Parse, "creation sequence must start with 0");
  }
  for (auto b : bits_) {
    if (b > 1) throw Error(ErrorKind::Parse, "creation sequence entries must be 0 or 1");
  }
}

CreationSequence CreationSequence::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::Parse, "creation sequence may only contain '0' and '1'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return CreationSequence(std::move(bits));
}

std::string CreationSequence::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

bool Permutation::is_bijection() const {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

CreationSequence antiregular_sequence(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "anti-regular graph needs n >= 2");
  std::vector<std::uint8_t> bits(n, 0);
  // The last vertex always dominates; walking backwards the bits alternate.
  for (std::size_t i = n; i-- > 1;) bits[i] = ((n - 1 - i) % 2 == 0) ? 1 : 0;
  bits[0] = 0;
  return CreationSequence(std::move(bits));
}

IntMatrix adjacency_from_sequence(const CreationSequence& b) {
  const std::size_t n = b.size();
  IntMatrix a(n);
  for (std::size_t j = 1; j < n; ++j) {
    if (!b[j]) continue;
    for (std::size_t i = 0; i < j; ++i) {
      a(i, j) = 1;
      a(j, i) = 1;
    }
  }
  return a;
}

void require_adjacency(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (a(i, i) != 0) throw Error(ErrorKind::Role, "adjacency matrix must have a zero diagonal");
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (a(i, j) != 0 && a(i, j) != 1) throw Error(ErrorKind::Role, "adjacency entries must be 0 or 1");
      if (a(i, j) != a(j, i)) throw Error(ErrorKind::Role, "adjacency matrix must be symmetric");
    }
  }
}

DegreeSequence degree_sequence(const IntMatrix& a) {
  require_adjacency(a);
  DegreeSequence d(a.order(), 0);
  for (std::size_t i = 0; i < a.order(); ++i)
    for (auto v : a.row(i)) d[i] += v;
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Permutation block_permutation(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "block permutation needs n >= 2");
  if (n % 2 != 0) throw Error(ErrorKind::Parity, "block permutation is defined for even n only");
  const std::size_t k = n / 2;
  Permutation sigma;
  sigma.images.resize(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t m = (i + 1) / 2;
    const std::size_t image = (i % 2 == 1) ? k - m + 1 : k + m;
    sigma.images[i - 1] = image - 1;
  }
  return sigma;
}

IntMatrix permute(const IntMatrix& a, const Permutation& sigma) {
  if (sigma.images.size() != a.order() || !sigma.is_bijection()) {
    throw Error(ErrorKind::InvalidOrder, "permutation does not match matrix order");
  }
  IntMatrix out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) out(sigma.images[i], sigma.images[j]) = a(i, j);
  return out;
}

IntMatrix block_adjacency(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidOrder, "block adjacency needs k >= 1");
  IntMatrix a(2 * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const std::int64_t hankel = (i + j >= k - 1) ? 1 : 0;
      a(i, k + j) = hankel;
      a(k + i, j) = hankel;
      a(k + i, k + j) = (i == j) ? 0 : 1;
    }
  return a;
}

IntMatrix inverse_block_adjacency(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidOrder, "block adjacency needs k >= 1");
  IntMatrix inv(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    inv(i, i) = (i + 1 < k) ? 2 : 0;
    if (i + 1 < k) {
      inv(i, i + 1) = -1;
      inv(i + 1, i) = -1;
    }
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t w = 0;
      if (i + j == k - 1) w = 1;
      else if (i + j == k - 2) w = -1;
      inv(i, k + j) = w;
      inv(k + i, j) = w;
    }
  }
  return inv;
}

IntMatrix laplacian(const IntMatrix& a) {
  require_adjacency(a);
  IntMatrix l(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    std::int64_t deg = 0;
    for (std::size_t j = 0; j < a.order(); ++j) {
      l(i, j) = -a(i, j);
      deg += a(i, j);
    }
    l(i, i) = deg;
  }
  return l;
}

}  // namespace arspec
