#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "birkhoff/partitions.hpp"

namespace birkhoff {

namespace detail {

inline Int mn_character_rec(const std::vector<int>& shape, const std::vector<int>& type,
                            std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
  if (shape.empty()) return 1;
  auto key = std::make_pair(shape, type);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Remove the largest remaining part first; any order gives the same value.
  const int p = type.front();
  std::vector<int> rest(type.begin() + 1, type.end());
  Int total = 0;
  for (const auto& rem : enumerate_rim_hooks(Partition(shape), p)) {
    Int sub = mn_character_rec(rem.remaining.parts(), rest, memo);
    total += (rem.height % 2 == 0) ? -sub : sub;  // sign (-1)^(height-1)
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// Irreducible character chi^shape at the class of cycle type `type`.
inline Int mn_character(const Partition& shape, const Partition& type) {
  if (shape.size() != type.size())
    throw std::invalid_argument("mn_character: |shape| != |type|");
  static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return detail::mn_character_rec(shape.parts(), type.parts(), memo);
}

/// Full table chi^lambda(mu), rows and columns both in canonical
/// partition order. Guarded by a size cap; p(n)^2 entries.
inline std::vector<std::vector<Int>> character_table(int n, int limit = 12) {
  if (n < 1) throw std::invalid_argument("character_table: n < 1");
  if (n > limit) throw std::invalid_argument("character_table: n exceeds limit");
  auto shapes = enumerate_partitions(n);
  std::vector<std::vector<Int>> table(shapes.size(), std::vector<Int>(shapes.size()));
  for (std::size_t a = 0; a < shapes.size(); ++a)
    for (std::size_t b = 0; b < shapes.size(); ++b)
      table[a][b] = mn_character(shapes[a], shapes[b]);
  return table;
}

/// Stabilized Parseval coefficient lim_n chi^{b^n_{k,beta}}((n-ell, 1^ell)):
/// zero when the hand rim hook leaves no valid shape, else the signed
/// standard count of the remainder.
inline Int limit_coeff(const BellyShape& b, int ell) {
  XiShape xi = xi_shape(b, ell);
  if (!xi.valid) return 0;
  Int f = standard_count(xi.shape);
  return (xi.height % 2 == 0) ? -f : f;  // sign (-1)^(height-1)
}

/// Number of m-cycles in S_n: binom(n, m) (m-1)!.
inline Int cycle_class_size(int n, int m) {
  if (m < 2 || m > n) throw std::invalid_argument("cycle_class_size: need 2 <= m <= n");
  return binomial(n, m) * factorial(m - 1);
}

/// Cycle type (n - ell, 1^ell) of an (n-ell)-cycle in S_n.
inline Partition cycle_with_fixed_points(int n, int ell) {
  if (ell < 0 || n - ell < 2)
    throw std::invalid_argument("cycle_with_fixed_points: need 0 <= ell <= n-2");
  std::vector<int> parts{n - ell};
  for (int i = 0; i < ell; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

}  // namespace birkhoff
