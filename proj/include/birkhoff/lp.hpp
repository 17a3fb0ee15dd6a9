#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "birkhoff/characters.hpp"
#include "birkhoff/lp_model.hpp"

namespace birkhoff {

struct LpParams {
  int l0 = 0;          // even, >= 0
  int k0 = 1;          // odd, >= 1
  int m0 = 2;          // even, >= 2
  Rational c;
  std::optional<int> n;  // odd; only families I and II

  void validate_limit() const {
    if (l0 < 0 || l0 % 2 != 0) throw std::invalid_argument("l0 must be a non-negative even integer");
    if (k0 < 1 || k0 % 2 != 1) throw std::invalid_argument("k0 must be a positive odd integer");
    if (m0 < 2 || m0 % 2 != 0) throw std::invalid_argument("m0 must be a positive even integer");
    if (!(c > Rational(1) && c < Rational(2))) throw std::invalid_argument("c must lie in (1,2)");
  }
};

/// Tail value of the n-dependent family: two sums over odd k, the first
/// with central binomials, the second with a fixed power of c.
inline Rational tail_Tn(int n, int ell, int k0, const Rational& c) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("tail_Tn: n must be odd and positive");
  if (ell < 0 || ell % 2 != 0) throw std::invalid_argument("tail_Tn: ell must be even and >= 0");
  if (k0 < 1 || k0 % 2 != 1) throw std::invalid_argument("tail_Tn: k0 must be odd and positive");
  const int cap1 = (n - 3 * ell - 1) / 2;
  const int cap2 = (n - ell - 1) / 2;
  Rational total;
  for (int k = k0 + 2; k <= cap1; k += 2) {
    Int b = binomial(2 * (k + ell), k + ell);
    total += rational_pow(c, 2 * k + 2 * ell) / Rational(b);
  }
  int start = cap1 + 1;
  if (start % 2 == 0) ++start;
  for (int k = start; k <= cap2; k += 2) {
    Int b = binomial(n - ell - 1, k + ell);
    if (b == 0) throw std::domain_error("tail_Tn: vanishing binomial (n too small for ell)");
    total += rational_pow(c, n - 1) / Rational(b);
  }
  return total;
}

/// Closed-form limit tail: 1.5 * ((2(k0+l)+4) q^(2(k0+l)+4) - 2(k0+l) q^(2(k0+l)+8)) / (1-q^4)^2
/// with q = c/2. Requires c < 2.
inline Rational tail_T(int ell, int k0, const Rational& c) {
  if (!(c < Rational(2))) throw std::invalid_argument("tail_T: c must be < 2");
  if (ell < 0 || k0 < 1) throw std::invalid_argument("tail_T: bad parameters");
  const Rational q = c / Rational(2);
  const int a = k0 + ell;
  Rational numer = Rational(2 * a + 4) * rational_pow(q, 2 * a + 4)
                 - Rational(2 * a) * rational_pow(q, 2 * a + 8);
  Rational denom = (Rational(1) - rational_pow(q, 4));
  denom *= denom;
  return Rational(3, 2) * numer / denom;
}

/// Shape indices (k, beta) with |beta| <= l0 and max(1, height(beta)) <= k <= k0,
/// in canonical order: |beta| ascending, beta descending-lex, k ascending.
inline std::vector<BellyShape> belly_index_set(int l0, int k0) {
  std::vector<BellyShape> out;
  for (int i = 0; i <= l0; ++i)
    for (const auto& beta : enumerate_partitions(i))
      for (int k = std::max(1, beta.height()); k <= k0; ++k)
        out.emplace_back(k, beta);
  return out;
}

namespace detail {

inline std::string belly_var_name(int k, const Partition& beta) {
  return "x" + std::to_string(k) + "[" + beta.to_string() + "]";
}
inline std::string shape_var_name(const Partition& lam) { return "x[" + lam.to_string() + "]"; }
inline std::string psi_name(int ell) { return "Psi" + std::to_string(ell); }
inline std::string w_name(int ell) { return "w" + std::to_string(ell); }
inline std::string y_name(int m) { return "y" + std::to_string(m); }

struct RestrictTag {
  int k;
  Partition beta;
};

inline std::string restrict_tag(int k, const Partition& beta) {
  return "restrict|k=" + std::to_string(k) + ";b=" + beta.to_string();
}
inline std::string joint_tag(int k, int s) {
  return "joint|k=" + std::to_string(k) + ";s=" + std::to_string(s);
}

inline std::optional<RestrictTag> parse_restrict_tag(const std::string& tag) {
  const std::string prefix = "restrict|k=";
  if (tag.rfind(prefix, 0) != 0) return std::nullopt;
  auto semi = tag.find(";b=");
  if (semi == std::string::npos) return std::nullopt;
  RestrictTag out;
  out.k = std::stoi(tag.substr(prefix.size(), semi - prefix.size()));
  out.beta = Partition::parse(tag.substr(semi + 3));
  return out;
}

}  // namespace detail

/// Linear Program I on all partitions of n: minimize the largest Psi_ell,
/// with Parseval equalities, Young rows, transposition ties and unit pins.
inline LinearProgram build_lp1(const LpParams& p) {
  if (!p.n) throw std::invalid_argument("build_lp1: n required");
  const int n = *p.n;
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("build_lp1: n must be odd and >= 3");
  if (p.l0 < 0 || p.l0 % 2 != 0 || p.l0 > n - 2)
    throw std::invalid_argument("build_lp1: l0 must be even with 0 <= l0 <= n-2");
  if (!(p.c > Rational(1))) throw std::invalid_argument("build_lp1: c must be > 1");

  LinearProgram lp;
  const int vM = lp.add_variable("M");
  std::map<int, int> vpsi;
  for (int ell = 0; ell <= p.l0; ell += 2) vpsi[ell] = lp.add_variable(detail::psi_name(ell));
  const auto shapes = enumerate_partitions(n);
  std::map<Partition, int> vx;
  for (const auto& lam : shapes) vx[lam] = lp.add_variable(detail::shape_var_name(lam));

  lp.set_objective(Sense::minimize, {{vM, Rational(1)}}, Rational(0));

  for (int ell = 0; ell <= p.l0; ell += 2)
    lp.add_constraint({{vM, Rational(1)}, {vpsi[ell], Rational(-1)}}, Relation::ge, Rational(0),
                      "mpsi|l=" + std::to_string(ell));

  for (int ell = 0; ell <= p.l0; ell += 2) {
    const Partition cls = cycle_with_fixed_points(n, ell);
    std::map<int, Rational> row{{vpsi[ell], Rational(1)}};
    for (const auto& lam : shapes) {
      Int chi = mn_character(lam, cls);
      if (chi != 0) row[vx[lam]] = Rational(-chi);
    }
    lp.add_constraint(row, Relation::eq, Rational(0), "parseval|l=" + std::to_string(ell));
  }

  for (int m = 0; m <= n; m += 2) {
    std::map<int, Rational> row;
    for (const auto& lam : shapes) {
      Int kost = kostka_hook(lam, m);
      if (kost != 0) row[vx[lam]] = Rational(kost);
    }
    lp.add_constraint(row, Relation::le, rational_pow(p.c, m), "young|m=" + std::to_string(m));
  }

  for (const auto& lam : shapes) {
    Partition t = lam.transposed();
    if (lam < t)
      lp.add_constraint({{vx[lam], Rational(1)}, {vx[t], Rational(-1)}}, Relation::eq, Rational(0),
                        "transpose|" + detail::shape_var_name(lam));
  }

  const Partition row_shape(std::vector<int>{n});
  const Partition col_shape(std::vector<int>(n, 1));
  lp.add_constraint({{vx[row_shape], Rational(1)}}, Relation::eq, Rational(1),
                    "unit|" + detail::shape_var_name(row_shape));
  lp.add_constraint({{vx[col_shape], Rational(1)}}, Relation::eq, Rational(1),
                    "unit|" + detail::shape_var_name(col_shape));

  for (const auto& lam : shapes)
    lp.add_constraint({{vx[lam], Rational(1)}}, Relation::ge, Rational(0),
                      "nonneg|" + detail::shape_var_name(lam));
  return lp;
}

/// Linear Program II on belly shapes realized at a concrete odd n.
inline LinearProgram build_lp2(const LpParams& p) {
  if (!p.n) throw std::invalid_argument("build_lp2: n required");
  const int n = *p.n;
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("build_lp2: n must be odd");
  if (p.l0 < 0 || p.l0 % 2 != 0) throw std::invalid_argument("build_lp2: l0 must be even");
  if (p.k0 < 1 || p.k0 % 2 != 1) throw std::invalid_argument("build_lp2: k0 must be odd");
  if (!(p.l0 <= p.k0 && 2 * p.k0 <= n - p.l0 - 3))
    throw std::invalid_argument("build_lp2: need l0 <= k0 <= (n - l0 - 3)/2");
  if (!(p.c > Rational(1))) throw std::invalid_argument("build_lp2: c must be > 1");

  LinearProgram lp;
  const int vM = lp.add_variable("M");
  std::map<int, int> vpsi;
  for (int ell = 0; ell <= p.l0; ell += 2) vpsi[ell] = lp.add_variable(detail::psi_name(ell));
  const int vx0 = lp.add_variable(detail::belly_var_name(0, Partition{}));  // pinned x_(n)
  const auto bellies = belly_index_set(p.l0, p.k0);
  std::vector<int> vx(bellies.size());
  std::vector<Partition> realized(bellies.size());
  for (std::size_t i = 0; i < bellies.size(); ++i) {
    vx[i] = lp.add_variable(detail::belly_var_name(bellies[i].leg, bellies[i].belly));
    realized[i] = realize_belly(bellies[i], n);
  }

  lp.set_objective(Sense::minimize, {{vM, Rational(1)}}, Rational(0));

  for (int ell = 0; ell <= p.l0; ell += 2)
    lp.add_constraint({{vM, Rational(1)}, {vpsi[ell], Rational(-1)}}, Relation::ge, Rational(0),
                      "mpsi|l=" + std::to_string(ell));

  for (int ell = 0; ell <= p.l0; ell += 2) {
    const Partition cls = cycle_with_fixed_points(n, ell);
    std::map<int, Rational> row{{vpsi[ell], Rational(1)}};
    for (std::size_t i = 0; i < bellies.size(); ++i) {
      Int chi = mn_character(realized[i], cls);
      if (chi != 0) row[vx[i]] = Rational(-2 * chi);
    }
    Rational rhs = Rational(2) - Rational(2) * tail_Tn(n, ell, p.k0, p.c);
    lp.add_constraint(row, Relation::eq, rhs, "parseval|l=" + std::to_string(ell));
  }

  const Partition full_row(std::vector<int>{n});
  for (int m = 0; m <= n; m += 2) {
    std::map<int, Rational> row;
    Int k0row = kostka_hook(full_row, m);
    if (k0row != 0) row[vx0] = Rational(k0row);
    for (std::size_t i = 0; i < bellies.size(); ++i) {
      Int kost = kostka_hook(realized[i], m);
      if (kost != 0) row[vx[i]] = Rational(kost);
    }
    lp.add_constraint(row, Relation::le, rational_pow(p.c, m), "young|m=" + std::to_string(m));
  }

  lp.add_constraint({{vx0, Rational(1)}}, Relation::eq, Rational(1), "unit|x0[]");
  lp.add_constraint({{vx0, Rational(1)}}, Relation::ge, Rational(0), "nonneg|x0[]");
  for (std::size_t i = 0; i < bellies.size(); ++i)
    lp.add_constraint({{vx[i], Rational(1)}}, Relation::ge, Rational(0),
                      "nonneg|" + detail::belly_var_name(bellies[i].leg, bellies[i].belly));
  return lp;
}

/// Linear Program III: the n-free limit family on (k, beta) variables.
inline LinearProgram build_lp3(const LpParams& p) {
  p.validate_limit();
  LinearProgram lp;
  const int vM = lp.add_variable("M");
  std::map<int, int> vpsi;
  for (int ell = 0; ell <= p.l0; ell += 2) vpsi[ell] = lp.add_variable(detail::psi_name(ell));
  const auto bellies = belly_index_set(p.l0, p.k0);
  std::vector<int> vx(bellies.size());
  for (std::size_t i = 0; i < bellies.size(); ++i)
    vx[i] = lp.add_variable(detail::belly_var_name(bellies[i].leg, bellies[i].belly));

  lp.set_objective(Sense::minimize, {{vM, Rational(1)}}, Rational(0));

  for (int ell = 0; ell <= p.l0; ell += 2)
    lp.add_constraint({{vM, Rational(1)}, {vpsi[ell], Rational(-1)}}, Relation::ge, Rational(0),
                      "mpsi|l=" + std::to_string(ell));

  for (int ell = 0; ell <= p.l0; ell += 2) {
    std::map<int, Rational> row{{vpsi[ell], Rational(1)}};
    for (std::size_t i = 0; i < bellies.size(); ++i) {
      Int chi = limit_coeff(bellies[i], ell);
      if (chi != 0) row[vx[i]] = Rational(-2 * chi);
    }
    Rational rhs = Rational(2) - Rational(2) * tail_T(ell, p.k0, p.c);
    lp.add_constraint(row, Relation::eq, rhs, "parseval|l=" + std::to_string(ell));
  }

  for (int m = 2; m <= p.m0; m += 2) {
    std::map<int, Rational> row;
    for (std::size_t i = 0; i < bellies.size(); ++i) {
      Int kost = binomial(m, bellies[i].leg + bellies[i].belly.size())
               * standard_count(mu_shape(bellies[i]));
      if (kost != 0) row[vx[i]] = Rational(kost);
    }
    lp.add_constraint(row, Relation::le, rational_pow(p.c, m) - Rational(1),
                      "young|m=" + std::to_string(m));
  }

  for (std::size_t i = 0; i < bellies.size(); ++i)
    lp.add_constraint({{vx[i], Rational(1)}}, Relation::ge, Rational(0),
                      "nonneg|" + detail::belly_var_name(bellies[i].leg, bellies[i].belly));
  return lp;
}

/// Dual of Linear Program III: variables w_ell and y_m, unit w-sum, one
/// restriction per (k, beta).
inline LinearProgram build_dual(const LpParams& p) {
  p.validate_limit();
  LinearProgram lp;
  std::map<int, int> vw, vy;
  for (int ell = 0; ell <= p.l0; ell += 2) vw[ell] = lp.add_variable(detail::w_name(ell));
  for (int m = 2; m <= p.m0; m += 2) vy[m] = lp.add_variable(detail::y_name(m));

  std::map<int, Rational> obj;
  for (int ell = 0; ell <= p.l0; ell += 2) obj[vw[ell]] = Rational(-2) * tail_T(ell, p.k0, p.c);
  for (int m = 2; m <= p.m0; m += 2) obj[vy[m]] = -(rational_pow(p.c, m) - Rational(1));
  lp.set_objective(Sense::maximize, obj, Rational(2));

  std::map<int, Rational> unit;
  for (auto& [ell, v] : vw) unit[v] = Rational(1);
  lp.add_constraint(unit, Relation::eq, Rational(1), "unit-sum");

  for (const auto& b : belly_index_set(p.l0, p.k0)) {
    std::map<int, Rational> row;
    for (int ell = 0; ell <= p.l0; ell += 2) {
      Int chi = limit_coeff(b, ell);
      if (chi != 0) row[vw[ell]] = Rational(2 * chi);
    }
    Int fmu = standard_count(mu_shape(b));
    for (int m = 2; m <= p.m0; m += 2) {
      Int kost = binomial(m, b.leg + b.belly.size()) * fmu;
      if (kost != 0) row[vy[m]] = Rational(kost);
    }
    lp.add_constraint(row, Relation::ge, Rational(0), detail::restrict_tag(b.leg, b.belly));
  }

  for (auto& [ell, v] : vw)
    lp.add_constraint({{v, Rational(1)}}, Relation::ge, Rational(0),
                      "nonneg|" + detail::w_name(ell));
  for (auto& [m, v] : vy)
    lp.add_constraint({{v, Rational(1)}}, Relation::ge, Rational(0), "nonneg|" + detail::y_name(m));
  return lp;
}

/// Replaces, for each leg k >= l0 and belly size s <= l0, all restrictions
/// with |beta| = s at that k by the single stronger row
/// 2 (-1)^k w_s + sum_m binom(m, k+s) y_m >= 0 (no w term when s is odd).
/// Restrictions with k < l0 are untouched.
inline LinearProgram apply_joint_large_leg(const LinearProgram& dual, const LpParams& p) {
  LinearProgram out;
  out.sense = dual.sense;
  for (const auto& name : dual.variables) out.add_variable(name);
  std::map<int, Rational> obj;
  for (const auto& [v, c] : dual.objective) obj[v] = c;
  out.set_objective(dual.sense, obj, dual.objective_constant);

  std::set<std::pair<int, int>> emitted;  // (k, s) joint rows already added
  for (const auto& con : dual.constraints) {
    auto parsed = detail::parse_restrict_tag(con.tag);
    if (!parsed || parsed->k < p.l0) {
      std::map<int, Rational> row;
      for (const auto& [v, c] : con.row) row[v] = c;
      out.add_constraint(row, con.rel, con.rhs, con.tag);
      continue;
    }
    const int k = parsed->k;
    const int s = parsed->beta.size();
    if (!emitted.insert({k, s}).second) continue;
    std::map<int, Rational> row;
    if (s % 2 == 0 && s <= p.l0) {
      Rational coef = (k % 2 == 0) ? Rational(2) : Rational(-2);
      row[out.var_index(detail::w_name(s))] = coef;
    }
    for (int m = 2; m <= p.m0; m += 2) {
      Int b = binomial(m, k + s);
      if (b != 0) row[out.var_index(detail::y_name(m))] = Rational(b);
    }
    out.add_constraint(row, Relation::ge, Rational(0), detail::joint_tag(k, s));
  }
  return out;
}

/// Fragment predicate on (k, beta); joint rows are screened with beta = (s).
struct FragmentSpec {
  enum class Kind { none, default_rule, height_bound };
  Kind kind = Kind::none;
  int bound = 0;

  static FragmentSpec parse(const std::string& text) {
    FragmentSpec f;
    if (text.empty() || text == "none") return f;
    if (text == "default") {
      f.kind = Kind::default_rule;
      return f;
    }
    if (text.rfind("ht<=", 0) == 0) {
      f.kind = Kind::height_bound;
      f.bound = std::stoi(text.substr(4));
      return f;
    }
    throw std::invalid_argument("fragment: expected none|default|ht<=K, got '" + text + "'");
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::none: return "none";
      case Kind::default_rule: return "default";
      case Kind::height_bound: return "ht<=" + std::to_string(bound);
    }
    return "none";
  }

  bool active() const { return kind != Kind::none; }

  bool keeps(const Partition& beta) const {
    switch (kind) {
      case Kind::none: return true;
      case Kind::default_rule:
        return beta.height() <= 1 || beta.parts() == std::vector<int>{1, 1};
      case Kind::height_bound: return beta.height() <= bound;
    }
    return true;
  }
};

/// Speed heuristics on a dual LP: pin listed y_m to zero, dyadically round
/// objective up and restriction coefficients down, keep only restrictions
/// whose belly survives the fragment predicate.
inline LinearProgram apply_heuristics(const LinearProgram& dual, const std::vector<int>& drop_y,
                                      std::optional<int> round_bits, const FragmentSpec& fragment) {
  std::set<int> dropped;
  for (int m : drop_y) dropped.insert(dual.var_index(detail::y_name(m)));
  auto is_y = [&](int v) { return dual.variables[static_cast<std::size_t>(v)][0] == 'y'; };

  LinearProgram out;
  out.sense = dual.sense;
  for (const auto& name : dual.variables) out.add_variable(name);

  std::map<int, Rational> obj;
  for (const auto& [v, c] : dual.objective) {
    if (dropped.count(v)) continue;
    Rational coef = c;
    if (round_bits && is_y(v)) coef = -round_dyadic(-c, *round_bits, RoundDir::up);
    obj[v] = coef;
  }
  out.set_objective(dual.sense, obj, dual.objective_constant);

  for (const auto& con : dual.constraints) {
    bool restriction = con.tag.rfind("restrict|", 0) == 0 || con.tag.rfind("joint|", 0) == 0;
    if (restriction && fragment.active()) {
      Partition beta;
      if (auto parsed = detail::parse_restrict_tag(con.tag)) {
        beta = parsed->beta;
      } else {
        auto semi = con.tag.find(";s=");
        int s = std::stoi(con.tag.substr(semi + 3));
        beta = s == 0 ? Partition{} : Partition(std::vector<int>{s});
      }
      if (!fragment.keeps(beta)) continue;
    }
    std::map<int, Rational> row;
    for (const auto& [v, c] : con.row) {
      if (dropped.count(v)) continue;
      Rational coef = c;
      if (round_bits && restriction && is_y(v)) coef = round_dyadic(c, *round_bits, RoundDir::down);
      row[v] = coef;
    }
    out.add_constraint(row, con.rel, con.rhs, con.tag);
  }
  return out;
}

struct CertMode {
  bool joint_large_leg = false;
  std::optional<std::string> fragment;
  std::optional<int> round_bits;
  std::vector<int> dropped_y;
};

struct DualCertificate {
  LpParams params;
  CertMode mode;
  std::map<int, Rational> w;  // even ell <= l0
  std::map<int, Rational> y;  // even m <= m0
  Rational objective;
};

/// The exact dual objective 2 - 2 sum tail_T w_ell - sum (c^m - 1) y_m.
inline Rational dual_objective(const LpParams& p, const std::map<int, Rational>& w,
                               const std::map<int, Rational>& y) {
  Rational obj(2);
  for (int ell = 0; ell <= p.l0; ell += 2) {
    auto it = w.find(ell);
    if (it != w.end()) obj -= Rational(2) * tail_T(ell, p.k0, p.c) * it->second;
  }
  for (const auto& [m, val] : y) obj -= (rational_pow(p.c, m) - Rational(1)) * val;
  return obj;
}

enum class CertVerdict { positive, nonpositive, infeasible };

struct VerifyResult {
  CertVerdict verdict = CertVerdict::infeasible;
  std::string violated_tag;
  Rational objective;
};

/// Independent re-check of a certificate: every coefficient and tail is
/// recomputed from scratch, ignoring rounding and fragment modes. Joint
/// rows replace the originals for k >= l0 only when the certificate says
/// it was produced under the joint-large-leg strengthening.
inline VerifyResult verify_dual_certificate(const DualCertificate& cert) {
  const LpParams& p = cert.params;
  p.validate_limit();
  for (const auto& [ell, val] : cert.w)
    if (ell < 0 || ell > p.l0 || ell % 2 != 0)
      throw std::invalid_argument("certificate: bad w index " + std::to_string(ell));
  for (const auto& [m, val] : cert.y)
    if (m < 0 || m > p.m0 || m % 2 != 0)
      throw std::invalid_argument("certificate: bad y index " + std::to_string(m));

  auto wval = [&](int ell) {
    auto it = cert.w.find(ell);
    return it == cert.w.end() ? Rational(0) : it->second;
  };
  auto yval = [&](int m) {
    auto it = cert.y.find(m);
    return it == cert.y.end() ? Rational(0) : it->second;
  };

  VerifyResult res;
  for (const auto& [ell, val] : cert.w)
    if (val.sign() < 0) {
      res.violated_tag = "nonneg|" + detail::w_name(ell);
      return res;
    }
  for (const auto& [m, val] : cert.y)
    if (val.sign() < 0) {
      res.violated_tag = "nonneg|" + detail::y_name(m);
      return res;
    }

  Rational wsum;
  for (int ell = 0; ell <= p.l0; ell += 2) wsum += wval(ell);
  if (wsum != Rational(1)) {
    res.violated_tag = "unit-sum";
    return res;
  }

  for (const auto& b : belly_index_set(p.l0, p.k0)) {
    if (cert.mode.joint_large_leg && b.leg >= p.l0) continue;
    Rational lhs;
    for (int ell = 0; ell <= p.l0; ell += 2) {
      Int chi = limit_coeff(b, ell);
      if (chi != 0) lhs += Rational(2 * chi) * wval(ell);
    }
    Int fmu = standard_count(mu_shape(b));
    for (int m = 2; m <= p.m0; m += 2)
      lhs += Rational(binomial(m, b.leg + b.belly.size()) * fmu) * yval(m);
    if (lhs.sign() < 0) {
      res.violated_tag = detail::restrict_tag(b.leg, b.belly);
      return res;
    }
  }
  if (cert.mode.joint_large_leg) {
    for (int k = std::max(1, p.l0); k <= p.k0; ++k) {
      for (int s = 0; s <= p.l0; ++s) {
        Rational lhs;
        if (s % 2 == 0) lhs += Rational(k % 2 == 0 ? 2 : -2) * wval(s);
        for (int m = 2; m <= p.m0; m += 2) lhs += Rational(binomial(m, k + s)) * yval(m);
        if (lhs.sign() < 0) {
          res.violated_tag = detail::joint_tag(k, s);
          return res;
        }
      }
    }
  }

  res.objective = dual_objective(p, cert.w, cert.y);
  if (res.objective != cert.objective) {
    res.violated_tag = "objective";
    res.verdict = CertVerdict::infeasible;
    return res;
  }
  res.verdict = res.objective > Rational(0) ? CertVerdict::positive : CertVerdict::nonpositive;
  return res;
}

// ---- certificate file format ------------------------------------------

inline nlohmann::ordered_json certificate_to_json(const DualCertificate& cert) {
  nlohmann::ordered_json j;
  j["params"] = {{"l0", cert.params.l0},
                 {"k0", cert.params.k0},
                 {"m0", cert.params.m0},
                 {"c", cert.params.c.to_string()}};
  nlohmann::ordered_json mode;
  mode["joint_large_leg"] = cert.mode.joint_large_leg;
  mode["fragment"] = cert.mode.fragment ? nlohmann::ordered_json(*cert.mode.fragment)
                                        : nlohmann::ordered_json(nullptr);
  mode["round_bits"] = cert.mode.round_bits ? nlohmann::ordered_json(*cert.mode.round_bits)
                                            : nlohmann::ordered_json(nullptr);
  mode["dropped_y"] = cert.mode.dropped_y;
  j["mode"] = mode;
  nlohmann::ordered_json w, y;
  for (const auto& [ell, val] : cert.w) w[std::to_string(ell)] = val.to_string();
  for (const auto& [m, val] : cert.y) y[std::to_string(m)] = val.to_string();
  j["w"] = w;
  j["y"] = y;
  j["objective"] = cert.objective.to_string();
  return j;
}

inline DualCertificate certificate_from_json(const nlohmann::json& j) {
  DualCertificate cert;
  cert.params.l0 = j.at("params").at("l0").get<int>();
  cert.params.k0 = j.at("params").at("k0").get<int>();
  cert.params.m0 = j.at("params").at("m0").get<int>();
  cert.params.c = Rational::from_string(j.at("params").at("c").get<std::string>());
  const auto& mode = j.at("mode");
  cert.mode.joint_large_leg = mode.at("joint_large_leg").get<bool>();
  if (!mode.at("fragment").is_null())
    cert.mode.fragment = mode.at("fragment").get<std::string>();
  if (!mode.at("round_bits").is_null())
    cert.mode.round_bits = mode.at("round_bits").get<int>();
  for (const auto& m : mode.at("dropped_y")) cert.mode.dropped_y.push_back(m.get<int>());
  for (const auto& [key, val] : j.at("w").items())
    cert.w[std::stoi(key)] = Rational::from_string(val.get<std::string>());
  for (const auto& [key, val] : j.at("y").items())
    cert.y[std::stoi(key)] = Rational::from_string(val.get<std::string>());
  cert.objective = Rational::from_string(j.at("objective").get<std::string>());
  return cert;
}

}  // namespace birkhoff
