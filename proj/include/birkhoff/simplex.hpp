#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "birkhoff/lp_model.hpp"

namespace birkhoff {

enum class SolveStatus { optimal, infeasible, unbounded };
enum class PivotRule { bland, dantzig };

struct SolveResult {
  SolveStatus status = SolveStatus::optimal;
  Rational objective;                         // original sense, constant included
  std::map<std::string, Rational> assignment;
  long pivot_count = 0;
  std::vector<std::pair<int, int>> pivot_log;  // (entering column, leaving row)
};

struct FeasibilityCheck {
  bool feasible = true;
  std::string violated_tag;
};

/// Exact feasibility check; reports the first violated constraint tag in
/// declaration order. The assignment must cover every variable.
inline FeasibilityCheck check_point(const LinearProgram& lp,
                                    const std::map<std::string, Rational>& assignment) {
  std::vector<Rational> x(lp.variables.size());
  for (std::size_t v = 0; v < lp.variables.size(); ++v) {
    auto it = assignment.find(lp.variables[v]);
    if (it == assignment.end())
      throw std::invalid_argument("check_point: missing variable " + lp.variables[v]);
    x[v] = it->second;
  }
  for (const auto& con : lp.constraints) {
    Rational lhs = eval_row(con.row, x);
    bool ok = con.rel == Relation::le ? lhs <= con.rhs
            : con.rel == Relation::ge ? lhs >= con.rhs
                                      : lhs == con.rhs;
    if (!ok) return {false, con.tag};
  }
  return {true, ""};
}

namespace detail {

class SimplexTableau {
 public:
  explicit SimplexTableau(const LinearProgram& lp, PivotRule rule) : lp_(lp), rule_(rule) {
    standardize();
  }

  SolveResult run() {
    SolveResult res;
    if (!artificial_cols_.empty()) {
      std::vector<Rational> cost(ncols_);
      for (int a : artificial_cols_) cost[a] = 1;
      install_objective(cost);
      if (!iterate(ncols_, res)) throw std::logic_error("simplex: phase 1 unbounded");
      if (objective_value() > 0) {
        res.status = SolveStatus::infeasible;
        return res;
      }
      purge_artificials(res);
    }

    std::vector<Rational> cost(ncols_);
    for (const auto& [v, c] : lp_.objective) {
      Rational ci = lp_.sense == Sense::minimize ? c : -c;
      cost[col_pos_[v]] += ci;
      if (col_neg_[v] >= 0) cost[col_neg_[v]] -= ci;
    }
    install_objective(cost);
    if (!iterate(phase2_cols_, res)) {
      res.status = SolveStatus::unbounded;
      return res;
    }

    res.status = SolveStatus::optimal;
    Rational z = objective_value();
    res.objective = (lp_.sense == Sense::minimize ? z : -z) + lp_.objective_constant;
    std::vector<Rational> col_val(ncols_);
    for (std::size_t i = 0; i < rows_.size(); ++i) col_val[basis_[i]] = rows_[i][ncols_];
    for (std::size_t v = 0; v < lp_.variables.size(); ++v) {
      Rational val = col_val[col_pos_[v]];
      if (col_neg_[v] >= 0) val -= col_val[col_neg_[v]];
      res.assignment[lp_.variables[v]] = val;
    }
    return res;
  }

 private:
  void standardize() {
    const int nvars = static_cast<int>(lp_.variables.size());
    std::vector<bool> nonneg(nvars, false);
    std::vector<bool> consumed(lp_.constraints.size(), false);

    // Singleton rows "c*x >= 0 (c>0)" or "c*x <= 0 (c<0)" become variable
    // nonnegativity, sparing the split into a difference of two columns.
    for (std::size_t i = 0; i < lp_.constraints.size(); ++i) {
      const auto& con = lp_.constraints[i];
      if (con.row.size() != 1 || !con.rhs.is_zero()) continue;
      const auto& [v, c] = con.row[0];
      if ((con.rel == Relation::ge && c.sign() > 0) ||
          (con.rel == Relation::le && c.sign() < 0)) {
        nonneg[v] = true;
        consumed[i] = true;
      }
    }

    col_pos_.assign(nvars, -1);
    col_neg_.assign(nvars, -1);
    int col = 0;
    for (int v = 0; v < nvars; ++v) {
      col_pos_[v] = col++;
      if (!nonneg[v]) col_neg_[v] = col++;
    }
    const int nslack = static_cast<int>(lp_.constraints.size());
    const int slack_base = col;
    col += nslack;  // at most one slack per row; unused ones stay zero columns
    phase2_cols_ = col;

    std::vector<std::vector<Rational>> pending;
    std::vector<int> pending_slack;  // column of a +1 slack usable as basis, or -1
    for (std::size_t i = 0; i < lp_.constraints.size(); ++i) {
      if (consumed[i]) continue;
      const auto& con = lp_.constraints[i];
      std::vector<Rational> row(col + 1);
      for (const auto& [v, c] : con.row) {
        row[col_pos_[v]] += c;
        if (col_neg_[v] >= 0) row[col_neg_[v]] -= c;
      }
      int slack = -1;
      if (con.rel != Relation::eq) {
        slack = slack_base + static_cast<int>(i);
        row[slack] = con.rel == Relation::le ? 1 : -1;
      }
      row[col] = con.rhs;
      normalize_row(row);
      // orient so the rhs is nonnegative; a zero-rhs surplus row flips too,
      // which turns its slack into a ready-made basic column
      bool flip = row[col].sign() < 0 ||
                  (row[col].is_zero() && slack >= 0 && row[slack].sign() < 0);
      if (flip)
        for (auto& e : row) e = -e;
      bool slack_basic = slack >= 0 && row[slack] == Rational(1);
      pending.push_back(std::move(row));
      pending_slack.push_back(slack_basic ? slack : -1);
    }

    int n_art = 0;
    for (std::size_t i = 0; i < pending.size(); ++i)
      if (pending_slack[i] < 0) ++n_art;
    ncols_ = phase2_cols_ + n_art;
    int next_art = phase2_cols_;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      std::vector<Rational> row(ncols_ + 1);
      for (int j = 0; j < phase2_cols_; ++j) row[j] = pending[i][j];
      row[ncols_] = pending[i][phase2_cols_];
      int basic;
      if (pending_slack[i] >= 0) {
        basic = pending_slack[i];
      } else {
        basic = next_art++;
        row[basic] = 1;
        artificial_cols_.push_back(basic);
      }
      basis_.push_back(basic);
      rows_.push_back(std::move(row));
    }
  }

  // Divide by the gcd of numerators over the lcm of denominators.
  static void normalize_row(std::vector<Rational>& row) {
    Int g = 0, l = 1;
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      Int num = e.num();
      mpz_abs(num.get_mpz_t(), num.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
      Int den = e.den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    if (g == 0 || (g == 1 && l == 1)) return;
    Rational content(g, l);
    for (auto& e : row) e /= content;
  }

  void install_objective(const std::vector<Rational>& cost) {
    obj_.assign(ncols_ + 1, Rational(0));
    for (int j = 0; j < ncols_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      int b = basis_[i];
      if (obj_[b].is_zero()) continue;
      Rational f = obj_[b];
      for (int j = 0; j <= ncols_; ++j) obj_[j] -= f * rows_[i][j];
    }
  }

  Rational objective_value() const { return -obj_[ncols_]; }

  // Pivots until optimal over columns [0, allowed_cols). Returns false on
  // an unbounded direction.
  bool iterate(int allowed_cols, SolveResult& res) {
    for (;;) {
      int enter = -1;
      if (rule_ == PivotRule::bland) {
        for (int j = 0; j < allowed_cols; ++j)
          if (obj_[j].sign() < 0) { enter = j; break; }
      } else {
        for (int j = 0; j < allowed_cols; ++j)
          if (obj_[j].sign() < 0 && (enter < 0 || obj_[j] < obj_[enter])) enter = j;
      }
      if (enter < 0) return true;

      int leave = -1;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        Rational ratio = rows_[i][ncols_] / rows_[i][enter];
        if (leave < 0 || ratio < best_ratio) {
          leave = static_cast<int>(i);
          best_ratio = ratio;
        } else if (ratio == best_ratio) {
          bool take = rule_ == PivotRule::bland
                          ? basis_[i] < basis_[leave]
                          : lex_less(static_cast<int>(i), leave, enter);
          if (take) leave = static_cast<int>(i);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      res.pivot_count++;
      res.pivot_log.emplace_back(enter, leave);
    }
  }

  bool lex_less(int a, int b, int enter) const {
    for (int j = 0; j <= ncols_; ++j) {
      Rational va = rows_[a][j] / rows_[a][enter];
      Rational vb = rows_[b][j] / rows_[b][enter];
      if (va != vb) return va < vb;
    }
    return false;
  }

  void pivot(int r, int c) {
    Rational piv = rows_[r][c];
    for (int j = 0; j <= ncols_; ++j) rows_[r][j] /= piv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == r || rows_[i][c].is_zero()) continue;
      Rational f = rows_[i][c];
      for (int j = 0; j <= ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    if (!obj_[c].is_zero()) {
      Rational f = obj_[c];
      for (int j = 0; j <= ncols_; ++j) obj_[j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  // Pivot basic artificials out after phase 1; drop rows that are zero on
  // every structural column (redundant constraints).
  void purge_artificials(SolveResult& res) {
    for (std::size_t i = 0; i < rows_.size();) {
      bool is_art = basis_[i] >= phase2_cols_;
      if (!is_art) { ++i; continue; }
      int enter = -1;
      for (int j = 0; j < phase2_cols_; ++j)
        if (!rows_[i][j].is_zero()) { enter = j; break; }
      if (enter >= 0) {
        pivot(static_cast<int>(i), enter);
        res.pivot_count++;
        res.pivot_log.emplace_back(enter, static_cast<int>(i));
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
      }
    }
  }

  const LinearProgram& lp_;
  PivotRule rule_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> obj_;
  std::vector<int> basis_;
  std::vector<int> col_pos_, col_neg_;
  std::vector<int> artificial_cols_;
  int ncols_ = 0;
  int phase2_cols_ = 0;
};

}  // namespace detail

/// Two-phase exact simplex. Deterministic given the variable and
/// constraint order; Bland's least-index rule by default, optional
/// Dantzig pricing with lexicographic ratio tie-breaking.
inline SolveResult solve(const LinearProgram& lp, PivotRule rule = PivotRule::bland) {
  for (const auto& con : lp.constraints) {
    int prev = -1;
    for (const auto& [v, c] : con.row) {
      if (v <= prev) throw std::invalid_argument("solve: row not sorted/duplicate-free");
      if (v >= static_cast<int>(lp.variables.size()))
        throw std::invalid_argument("solve: undeclared variable index");
      prev = v;
    }
  }
  detail::SimplexTableau tab(lp, rule);
  SolveResult res = tab.run();
  if (res.status == SolveStatus::optimal) {
    auto feas = check_point(lp, res.assignment);
    if (!feas.feasible)
      throw std::logic_error("solve: optimal point violates " + feas.violated_tag);
    std::vector<Rational> x(lp.variables.size());
    for (std::size_t v = 0; v < lp.variables.size(); ++v)
      x[v] = res.assignment.at(lp.variables[v]);
    if (eval_row(lp.objective, x) + lp.objective_constant != res.objective)
      throw std::logic_error("solve: objective mismatch");
  }
  return res;
}

}  // namespace birkhoff
