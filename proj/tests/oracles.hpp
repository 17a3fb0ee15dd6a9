#pragma once

// Test-only oracles, deliberately independent of the library's production
// code paths: path-counting for tableaux instead of hook lengths and
// determinants, direct semistandard enumeration for Kostka numbers, and a
// vertex-enumeration solver for small linear programs.

#include <map>
#include <optional>
#include <vector>

#include "birkhoff/graph.hpp"
#include "birkhoff/lp_model.hpp"
#include "birkhoff/partitions.hpp"
#include "birkhoff/simplex.hpp"

namespace oracle {

using birkhoff::Int;
using birkhoff::Partition;
using birkhoff::Rational;

/// p(n) by the Euler pentagonal-number recurrence.
inline Int pentagonal_partition_count(int n) {
  static std::vector<Int> cache{1};
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    Int total = 0;
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      Int term = 0;
      if (g1 <= m) term += cache[m - g1];
      if (g2 <= m) term += cache[m - g2];
      total += (k % 2 == 1) ? term : -term;
    }
    cache.push_back(total);
  }
  return cache[n];
}

/// Standard fillings of lambda/(strip) counted as growth paths in the
/// Young lattice, one cell at a time.
inline Int brute_skew_standard_count(const Partition& shape, int strip) {
  std::map<std::vector<int>, Int> memo;
  std::vector<int> base;
  if (strip > 0) base.push_back(strip);
  auto rec = [&](auto&& self, const std::vector<int>& cur) -> Int {
    if (cur == base) return 1;
    auto it = memo.find(cur);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (i + 1 < cur.size() && cur[i] == cur[i + 1]) continue;  // not a corner
      std::vector<int> prev = cur;
      if (--prev[i] == 0) prev.pop_back();
      // stay above the inner strip
      if (strip > 0 && (prev.empty() || prev[0] < strip)) continue;
      bool valid = true;
      for (std::size_t j = 0; j + 1 < prev.size(); ++j)
        if (prev[j] < prev[j + 1]) valid = false;
      if (!valid) continue;
      total += self(self, prev);
    }
    memo[cur] = total;
    return total;
  };
  if (strip > shape.first()) return 0;
  if (shape.empty()) return strip == 0 ? 1 : 0;
  return rec(rec, shape.parts());
}

inline Int brute_standard_count(const Partition& shape) {
  return brute_skew_standard_count(shape, 0);
}

/// Kostka number by direct enumeration of semistandard tableaux of the
/// given shape and content (row-weak, column-strict).
inline Int brute_kostka(const Partition& shape, const std::vector<int>& content) {
  const int h = shape.height();
  if (h == 0) return content.empty() ? 1 : 0;
  std::vector<std::vector<int>> cells(h);
  for (int i = 0; i < h; ++i) cells[i].assign(shape.parts()[i], 0);
  std::vector<int> budget = content;
  Int count = 0;
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == h) {
      ++count;
      return;
    }
    int ni = i, nj = j + 1;
    if (nj >= shape.parts()[i]) {
      ni = i + 1;
      nj = 0;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, cells[i][j - 1]);
    if (i > 0 && j < shape.parts()[i - 1]) lo = std::max(lo, cells[i - 1][j] + 1);
    for (int v = lo; v <= static_cast<int>(budget.size()); ++v) {
      if (budget[v - 1] == 0) continue;
      --budget[v - 1];
      cells[i][j] = v;
      self(self, ni, nj);
      ++budget[v - 1];
    }
  };
  rec(rec, 0, 0);
  return count;
}

inline std::vector<int> hook_content(int n, int m) {
  std::vector<int> content{n - m};
  for (int i = 0; i < m; ++i) content.push_back(1);
  return content;
}

/// Size of the centralizer of the class with the given cycle type.
inline Int centralizer_size(const Partition& type) {
  std::map<int, int> mult;
  for (int p : type.parts()) ++mult[p];
  Int total = 1;
  for (auto [len, cnt] : mult) {
    for (int i = 0; i < cnt; ++i) total *= len;
    total *= birkhoff::factorial(cnt);
  }
  return total;
}

/// Every rim hook of the given size found by scanning all sub-partitions
/// and testing the border-strip conditions directly.
inline std::vector<birkhoff::RimHookRemoval> brute_rim_hooks(const Partition& shape, int size) {
  std::vector<birkhoff::RimHookRemoval> out;
  const int h = shape.height();
  std::vector<int> mu(h, 0);
  auto consider = [&]() {
    int removed = 0;
    for (int i = 0; i < h; ++i) removed += shape.parts()[i] - mu[i];
    if (removed != size) return;
    // collect difference cells
    std::vector<std::pair<int, int>> diff;
    for (int i = 0; i < h; ++i)
      for (int j = mu[i]; j < shape.parts()[i]; ++j) diff.emplace_back(i, j);
    // no 2x2 block
    auto has = [&](int i, int j) {
      return i >= 0 && i < h && j >= mu[i] && j < shape.parts()[i];
    };
    for (auto [i, j] : diff)
      if (has(i, j) && has(i + 1, j) && has(i, j + 1) && has(i + 1, j + 1)) return;
    // edge-connected
    std::vector<bool> seen(diff.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
      auto [ci, cj] = diff[stack.back()];
      stack.pop_back();
      for (std::size_t t = 0; t < diff.size(); ++t) {
        if (seen[t]) continue;
        auto [ti, tj] = diff[t];
        if (std::abs(ti - ci) + std::abs(tj - cj) == 1) {
          seen[t] = true;
          ++visited;
          stack.push_back(t);
        }
      }
    }
    if (visited != diff.size()) return;
    int top = diff.front().first, bottom = diff.back().first;
    std::vector<int> rem;
    for (int i = 0; i < h; ++i)
      if (mu[i] > 0) rem.push_back(mu[i]);
    out.push_back(birkhoff::RimHookRemoval{Partition(std::move(rem)), bottom - top + 1});
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == h) {
      consider();
      return;
    }
    int hi = shape.parts()[i];
    if (i > 0) hi = std::min(hi, mu[i - 1]);
    int lo = (i + 1 < h) ? 0 : 0;
    for (int v = hi; v >= lo; --v) {
      mu[i] = v;
      bool partition_ok = i == 0 || mu[i - 1] >= v;
      if (partition_ok) self(self, i + 1);
    }
    mu[i] = 0;
  };
  rec(rec, 0);
  return out;
}

// ---- vertex-enumeration LP oracle -----------------------------------------

struct OracleResult {
  birkhoff::SolveStatus status = birkhoff::SolveStatus::optimal;
  Rational objective;
};

namespace detail {

/// Solves A x = b exactly; nullopt if singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (!a[row][col].is_zero()) { piv = row; break; }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Rational f = a[row][col] / a[col][col];
      for (int k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// One-dimensional nullspace direction of the given rows, if the rank is
/// exactly nvars - 1.
inline std::optional<std::vector<Rational>> nullspace_dir(std::vector<std::vector<Rational>> a,
                                                          int nvars) {
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < nvars && rank < static_cast<int>(a.size()); ++col) {
    int piv = -1;
    for (int row = rank; row < static_cast<int>(a.size()); ++row)
      if (!a[row][col].is_zero()) { piv = row; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int row = 0; row < static_cast<int>(a.size()); ++row) {
      if (row == rank || a[row][col].is_zero()) continue;
      Rational f = a[row][col] / a[rank][col];
      for (int k = col; k < nvars; ++k) a[row][k] -= f * a[rank][k];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank != nvars - 1) return std::nullopt;
  std::vector<bool> is_pivot(nvars, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> dir(nvars);
  dir[free_col] = Rational(1);
  for (int r = rank - 1; r >= 0; --r) {
    int pc = pivot_col[r];
    Rational s;
    for (int k = pc + 1; k < nvars; ++k) s += a[r][k] * dir[k];
    dir[pc] = -s / a[r][pc];
  }
  return dir;
}

}  // namespace detail

/// Brute-force solve by enumerating basic points and extreme rays. Sound
/// for pointed feasible regions (the generators always add x >= 0 rows).
inline OracleResult oracle_solve(const birkhoff::LinearProgram& lp) {
  using birkhoff::Relation;
  using birkhoff::Sense;
  const int nv = static_cast<int>(lp.variables.size());

  std::vector<std::vector<Rational>> rows;  // all as <= rows
  std::vector<Rational> rhs;
  auto add_le = [&](const birkhoff::SparseRow& row, const Rational& b, bool negate) {
    std::vector<Rational> dense(nv);
    for (const auto& [v, c] : row) dense[v] = negate ? -c : c;
    rows.push_back(std::move(dense));
    rhs.push_back(negate ? -b : b);
  };
  for (const auto& con : lp.constraints) {
    if (con.rel != Relation::ge) add_le(con.row, con.rhs, false);
    if (con.rel != Relation::le) add_le(con.row, con.rhs, true);
  }
  std::vector<Rational> obj(nv);
  for (const auto& [v, c] : lp.objective) obj[v] = c;

  auto feasible = [&](const std::vector<Rational>& x) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational lhs;
      for (int v = 0; v < nv; ++v) lhs += rows[r][v] * x[v];
      if (lhs > rhs[r]) return false;
    }
    return true;
  };
  auto objective_of = [&](const std::vector<Rational>& x) {
    Rational v = lp.objective_constant;
    for (int i = 0; i < nv; ++i) v += obj[i] * x[i];
    return v;
  };

  const int m = static_cast<int>(rows.size());
  bool any_feasible = false;
  Rational best;
  std::vector<int> idx;
  auto subsets = [&](auto&& self, int start, int want, auto&& fn) -> void {
    if (want == 0) {
      fn();
      return;
    }
    for (int i = start; i + want <= m; ++i) {
      idx.push_back(i);
      self(self, i + 1, want - 1, fn);
      idx.pop_back();
    }
  };

  subsets(subsets, 0, nv, [&]() {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int i : idx) {
      a.push_back(rows[i]);
      b.push_back(rhs[i]);
    }
    auto x = detail::solve_square(std::move(a), std::move(b));
    if (!x || !feasible(*x)) return;
    Rational val = objective_of(*x);
    bool better = lp.sense == Sense::maximize ? val > best : val < best;
    if (!any_feasible || better) best = val;
    any_feasible = true;
  });
  if (!any_feasible) return {birkhoff::SolveStatus::infeasible, Rational(0)};

  bool unbounded = false;
  auto ray_check = [&](const std::vector<Rational>& d) {
    bool nonzero = false;
    for (const auto& v : d)
      if (!v.is_zero()) nonzero = true;
    if (!nonzero) return;
    for (const auto& row : rows) {
      Rational s;
      for (int v = 0; v < nv; ++v) s += row[v] * d[v];
      if (s > Rational(0)) return;
    }
    Rational gain;
    for (int v = 0; v < nv; ++v) gain += obj[v] * d[v];
    if ((lp.sense == Sense::maximize && gain > Rational(0)) ||
        (lp.sense == Sense::minimize && gain < Rational(0)))
      unbounded = true;
  };
  if (nv == 1) {
    ray_check({Rational(1)});
    ray_check({Rational(-1)});
  } else {
    subsets(subsets, 0, nv - 1, [&]() {
      std::vector<std::vector<Rational>> a;
      for (int i : idx) a.push_back(rows[i]);
      auto d = detail::nullspace_dir(std::move(a), nv);
      if (!d) return;
      ray_check(*d);
      std::vector<Rational> neg(nv);
      for (int v = 0; v < nv; ++v) neg[v] = -(*d)[v];
      ray_check(neg);
    });
  }
  if (unbounded) return {birkhoff::SolveStatus::unbounded, Rational(0)};
  return {birkhoff::SolveStatus::optimal, best};
}

}  // namespace oracle
