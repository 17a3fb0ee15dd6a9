#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "birkhoff/rational.hpp"

namespace birkhoff {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is the unique shape of size 0. No trailing zeros stored.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  /// Parses "a,b,c" (descending); "" is the empty partition.
  static Partition parse(const std::string& s) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= s.size() && !s.empty()) {
      auto comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw std::invalid_argument("Partition: empty part in '" + s + "'");
      for (char ch : tok)
        if (ch < '0' || ch > '9')
          throw std::invalid_argument("Partition: bad part '" + tok + "'");
      parts.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int height() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int part(int i) const { return i < height() ? parts_[i] : 0; }  // 0-based, 0 past the end
  int first() const { return parts_.empty() ? 0 : parts_[0]; }

  Partition transposed() const {
    std::vector<int> t;
    for (int col = 1; col <= first(); ++col) {
      int cnt = 0;
      for (int p : parts_)
        if (p >= col) ++cnt;
      t.push_back(cnt);
    }
    return Partition(std::move(t));
  }

  /// Column heights: col_height(j) = number of rows with at least j+1 cells.
  int col_height(int j) const {
    int cnt = 0;
    for (int p : parts_)
      if (p > j) ++cnt;
    return cnt;
  }

  /// Hook length of cell (i, j), 0-based; cell must lie in the diagram.
  int hook_length(int i, int j) const {
    return (parts_[i] - 1 - j) + (col_height(j) - 1 - i) + 1;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// All partitions of n in canonical (descending lexicographic) order,
/// starting at (n) and ending at (1^n).
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int max_part) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Shape index (k, beta): leg length k >= max(1, height(beta)) plus belly.
struct BellyShape {
  int leg = 1;
  Partition belly;

  BellyShape() = default;
  BellyShape(int k, Partition b) : leg(k), belly(std::move(b)) {
    if (leg < 1 || leg < belly.height())
      throw std::invalid_argument("BellyShape: need k >= max(1, height(belly))");
  }
};

/// The partition (n - |beta| - k, beta_1 + 1, ..., beta_t + 1, 1^(k-t)).
inline Partition realize_belly(const BellyShape& b, int n) {
  const int bsize = b.belly.size();
  if (n < bsize + b.leg + b.belly.first() + 1)
    throw std::invalid_argument("realize_belly: n too small for this shape");
  std::vector<int> parts;
  parts.push_back(n - bsize - b.leg);
  for (int p : b.belly.parts()) parts.push_back(p + 1);
  for (int i = b.belly.height(); i < b.leg; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

/// The realized shape minus its first row; independent of n.
inline Partition mu_shape(const BellyShape& b) {
  std::vector<int> parts;
  for (int p : b.belly.parts()) parts.push_back(p + 1);
  for (int i = b.belly.height(); i < b.leg; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

struct RimHookRemoval {
  Partition remaining;
  int height = 1;  // rows spanned by the removed rim
};

/// All removable rim hooks of the given size. A rim hook of size s
/// starting in row i corresponds to a cell (i, j) with hook length s;
/// results are ordered by starting row (at most one per row).
inline std::vector<RimHookRemoval> enumerate_rim_hooks(const Partition& shape, int size) {
  if (size < 1) throw std::invalid_argument("enumerate_rim_hooks: size < 1");
  std::vector<RimHookRemoval> out;
  const auto& parts = shape.parts();
  for (int i = 0; i < shape.height(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      if (shape.hook_length(i, j) != size) continue;
      int q = shape.col_height(j);  // last row of the hook, 0-based is q-1
      std::vector<int> rem;
      for (int r = 0; r < i; ++r) rem.push_back(parts[r]);
      for (int r = i; r < q - 1; ++r) rem.push_back(parts[r + 1] - 1);
      rem.push_back(j);
      for (int r = q; r < shape.height(); ++r) rem.push_back(parts[r]);
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      out.push_back(RimHookRemoval{Partition(std::move(rem)), q - i});
    }
  }
  return out;
}

struct XiShape {
  bool valid = false;
  Partition shape;
  int height = 1;
};

/// Remainder and height of the rim hook through the hand when a cycle of
/// the realized size minus ell is removed; independent of the realizing n.
inline XiShape xi_shape(const BellyShape& b, int ell) {
  if (ell < 0) throw std::invalid_argument("xi_shape: ell < 0");
  const int bsize = b.belly.size();
  const int n = bsize + b.leg + std::max(b.belly.first() + 1, ell + 1);
  const Partition lam = realize_belly(b, n);
  const int s = n - ell;
  for (int j = 0; j < lam.first(); ++j) {
    if (lam.hook_length(0, j) != s) continue;
    int q = lam.col_height(j);
    std::vector<int> rem;
    for (int r = 0; r < q - 1; ++r) rem.push_back(lam.parts()[r + 1] - 1);
    rem.push_back(j);
    for (int r = q; r < lam.height(); ++r) rem.push_back(lam.parts()[r]);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    return XiShape{true, Partition(std::move(rem)), q};
  }
  return XiShape{false, Partition{}, 1};
}

/// Number of standard tableaux, by the hook length formula.
inline Int standard_count(const Partition& shape) {
  const int n = shape.size();
  Int hooks = 1;
  for (int i = 0; i < shape.height(); ++i)
    for (int j = 0; j < shape.parts()[i]; ++j) hooks *= shape.hook_length(i, j);
  Int nf = factorial(n);
  if (nf % hooks != 0) throw std::logic_error("standard_count: hook product does not divide n!");
  return nf / hooks;
}

/// Standard fillings of the skew shape lambda / (strip): the cells of
/// lambda minus the first `strip` cells of row 1. Aitken determinant.
inline Int skew_standard_count(const Partition& shape, int strip) {
  if (strip < 0 || strip > shape.first())
    throw std::invalid_argument("skew_standard_count: strip must lie in row 1");
  const int h = shape.height();
  const int cells = shape.size() - strip;
  if (h == 0) return 1;

  // det( 1 / (lambda_i - i - mu_j + j)! ) for 1-based i, j with mu = (strip).
  std::vector<std::vector<Rational>> m(h, std::vector<Rational>(h));
  for (int i = 1; i <= h; ++i) {
    for (int j = 1; j <= h; ++j) {
      int mu_j = (j == 1) ? strip : 0;
      long e = shape.parts()[i - 1] - i - mu_j + j;
      m[i - 1][j - 1] = (e < 0) ? Rational(0) : Rational(Int(1), factorial(e));
    }
  }
  Rational det(1);
  for (int col = 0; col < h; ++col) {
    int pivot = -1;
    for (int row = col; row < h; ++row)
      if (!m[row][col].is_zero()) { pivot = row; break; }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < h; ++row) {
      if (m[row][col].is_zero()) continue;
      Rational f = m[row][col] / m[col][col];
      for (int k = col; k < h; ++k) m[row][k] -= f * m[col][k];
    }
  }
  Rational count = det * Rational(factorial(cells));
  if (count.den() != 1 || count.sign() < 0)
    throw std::logic_error("skew_standard_count: determinant not a nonnegative integer");
  return count.num();
}

/// Kostka number of shape lambda against the hook palette (n-m, 1^m),
/// n = |lambda|. Every copy of color 1 is forced into row 1, so this is
/// a strip-skew standard count (or zero when row 1 is too short).
inline Int kostka_hook(const Partition& shape, int m) {
  const int n = shape.size();
  if (m < 0 || m > n - 1) throw std::invalid_argument("kostka_hook: need 0 <= m <= n-1");
  if (shape.first() < n - m) return 0;
  return skew_standard_count(shape, n - m);
}

/// Closed form binom(m, k + |beta|) * f_mu for the Kostka number of a
/// realized belly shape against (n-m, 1^m); valid for m <= n - beta_1 - 1.
inline Int kostka_belly(const BellyShape& b, int m, int n) {
  const int bsize = b.belly.size();
  if (n < bsize + b.leg + b.belly.first() + 1)
    throw std::invalid_argument("kostka_belly: n too small for this shape");
  if (m > n - b.belly.first() - 1)
    throw std::invalid_argument("kostka_belly: need m <= n - beta_1 - 1");
  if (m < 0) throw std::invalid_argument("kostka_belly: m < 0");
  return binomial(m, b.leg + bsize) * standard_count(mu_shape(b));
}

}  // namespace birkhoff
