#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "birkhoff/lp.hpp"
#include "birkhoff/simplex.hpp"
#include "oracles.hpp"

using namespace birkhoff;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

Rational row_coef(const LinearProgram& lp, const std::string& tag, const std::string& var) {
  int v = lp.var_index(var);
  for (const auto& con : lp.constraints) {
    if (con.tag != tag) continue;
    for (const auto& [idx, c] : con.row)
      if (idx == v) return c;
    return Rational(0);
  }
  throw std::runtime_error("no such tag " + tag);
}

const Constraint& row_by_tag(const LinearProgram& lp, const std::string& tag) {
  for (const auto& con : lp.constraints)
    if (con.tag == tag) return con;
  throw std::runtime_error("no such tag " + tag);
}

LpParams dual_params(int l0, int k0, const char* c, int m0 = -1) {
  LpParams p;
  p.l0 = l0;
  p.k0 = k0;
  p.m0 = m0 < 0 ? 2 * (l0 + k0) : m0;
  p.c = Rational::from_string(c);
  return p;
}

}  // namespace

TEST_CASE("tail_Tn") {
  CHECK(tail_Tn(5, 0, 3, Rational(7, 5)) == Rational(0));
  CHECK(tail_Tn(9, 0, 1, Rational(1)) == Rational(1, 20));
  for (int n : {31, 51, 71})
    CHECK(tail_Tn(n, 0, 1, Rational(3, 2)) <= tail_T(0, 1, Rational(3, 2)) + Rational(1, 1000));
  CHECK_THROWS_AS(tail_Tn(8, 0, 1, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(tail_Tn(9, 1, 1, Rational(1)), std::invalid_argument);
}

TEST_CASE("tail_T") {
  CHECK(tail_T(0, 1, Rational(1)) == Rational(47, 300));
  CHECK_THROWS_AS(tail_T(0, 1, Rational(2)), std::invalid_argument);
  for (int ell : {0, 2, 4})
    for (int k0 : {1, 3, 19})
      for (const char* c : {"1/10", "1", "3/2", "199/100"})
        CHECK(tail_T(ell, k0, Rational::from_string(c)) > Rational(0));
  CHECK(tail_T(0, 19, Rational::from_string("149/100")) > Rational(0));
}

TEST_CASE("finite tails are bounded by the limit tail") {
  // needs both n >= 2 k0 + 3 ell + 3 (second sum inside the series tail)
  // and n >= 9 ell + 1 (binomial-ratio step); below the latter the finite
  // tail genuinely overshoots for ell >= 2
  for (int k0 : {1, 3, 5}) {
    for (int ell : {0, 2, 4}) {
      for (const char* ctext : {"1", "3/2", "197/100"}) {
        Rational c = Rational::from_string(ctext);
        Rational cap = tail_T(ell, k0, c) + Rational(1, 1000000);
        int start = std::max(2 * k0 + 3 * ell + 3, 9 * ell + 1);
        if (start % 2 == 0) ++start;
        for (int n = start; n <= 501; n += 2) CHECK(tail_Tn(n, ell, k0, c) <= cap);
      }
    }
  }
}

TEST_CASE("series closed form") {
  // closed_form(n0) - closed_form(N+1) telescopes to the exact partial sum,
  // and the remainder closed_form(N+1) sits under a geometric cap.
  auto closed_form = [](long a, long b, long n0, const Rational& q) {
    Rational qb = rational_pow(q, b), qa_n0 = rational_pow(q, a * n0);
    Rational one_minus = Rational(1) - rational_pow(q, a);
    Rational inner = Rational(a * n0 + b) * qa_n0
                   + Rational(a - a * n0 - b) * qa_n0 * rational_pow(q, a);
    return qb * inner / (one_minus * one_minus);
  };
  struct Case { long a, b, n0; Rational q; long terms; };
  std::vector<Case> grid{
      {1, 0, 0, Rational(1, 2), 10000},
      {2, 1, 3, Rational(2, 3), 2000},
      {4, 2, 1, Rational(3, 4), 2000},
      {3, 0, 5, Rational(9, 10), 2000},
      {4, 6, 2, Rational(149, 200), 2000},
  };
  for (const auto& cs : grid) {
    Rational partial;
    Rational qa = rational_pow(cs.q, cs.a);
    Rational power = rational_pow(cs.q, cs.a * cs.n0 + cs.b);
    for (long n = cs.n0; n < cs.n0 + cs.terms; ++n) {
      partial += Rational(cs.a * n + cs.b) * power;
      power *= qa;
    }
    Rational remainder = closed_form(cs.a, cs.b, cs.n0 + cs.terms, cs.q);
    CHECK(closed_form(cs.a, cs.b, cs.n0, cs.q) - partial == remainder);
    CHECK(remainder >= Rational(0));
    // geometric cap: sum_{n >= N} (an+b) q^(an+b) <= (aN+b) q^(aN+b) / (1-q^a)^2
    long N = cs.n0 + cs.terms;
    Rational cap = Rational(cs.a * N + cs.b) * rational_pow(cs.q, cs.a * N + cs.b)
                 / ((Rational(1) - qa) * (Rational(1) - qa));
    CHECK(remainder <= cap);
  }
}

TEST_CASE("middle binomial lower bound") {
  // binom(2n,n) >= 2^(2n)/sqrt(n pi) e^(-2/(15n)), checked through safe
  // rational enclosures: sqrt lower bound via integer sqrt, e^-t <= 1/(1+t).
  const Rational pi_lo(Int("314159265358979323"), Int("100000000000000000"));
  Int pow10_20 = 1, pow10_40 = 1;
  mpz_ui_pow_ui(pow10_20.get_mpz_t(), 10, 20);
  mpz_ui_pow_ui(pow10_40.get_mpz_t(), 10, 40);
  for (long n = 1; n <= 60; ++n) {
    Rational npi = Rational(n) * pi_lo;
    Int scaled = npi.num() * pow10_40 / npi.den();
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Rational sqrt_lo(root, pow10_20);  // sqrt_lo^2 <= n pi
    CHECK(sqrt_lo * sqrt_lo <= npi);
    CHECK(sqrt_lo > Rational(0));
    Rational t(2, 15 * n);
    Rational rhs_cap = rational_pow(Rational(2), 2 * n) / (sqrt_lo * (Rational(1) + t));
    CHECK(Rational(binomial(2 * n, n)) >= rhs_cap);
  }
}

TEST_CASE("binomial ratio bound") {
  for (long s = 0; s <= 64; ++s)
    for (long d = 0; 2 * d <= s; ++d)
      CHECK(binomial(2 * s, s) * rational_pow(Rational(3), d).den() <=
            rational_pow(Rational(3), d).num() * binomial(2 * s - d, s));
}

TEST_CASE("build_lp1 structure") {
  LpParams p = dual_params(0, 1, "3/2");
  p.n = 5;
  auto lp = build_lp1(p);
  CHECK(lp.variables.size() == 9);  // M, Psi0, and p(5) = 7 shape variables

  // Parseval row is Psi - sum chi x = 0, so stored coefficients are -chi.
  CHECK(row_coef(lp, "parseval|l=0", "x[5]") == Rational(-1));
  CHECK(row_coef(lp, "parseval|l=0", "x[1,1,1,1,1]") == Rational(-1));
  CHECK(row_coef(lp, "young|m=2", "x[4,1]") == Rational(2));
  CHECK(row_by_tag(lp, "young|m=2").rhs == Rational(9, 4));
  CHECK(row_by_tag(lp, "unit|x[5]").rhs == Rational(1));
  CHECK_THROWS_AS(build_lp1(dual_params(0, 1, "3/2")), std::invalid_argument);
  LpParams even = p;
  even.n = 6;
  CHECK_THROWS_AS(build_lp1(even), std::invalid_argument);
}

TEST_CASE("build_lp2 structure") {
  LpParams p = dual_params(0, 1, "3/2");
  p.n = 9;
  auto lp = build_lp2(p);
  CHECK(lp.variables.size() == 4);  // M, Psi0, pinned x0:, free x1:
  CHECK(row_coef(lp, "parseval|l=0", "x1[]") == Rational(2));  // -2 * chi, chi = -1
  CHECK(row_by_tag(lp, "parseval|l=0").rhs ==
        Rational(2) - Rational(2) * tail_Tn(9, 0, 1, Rational(3, 2)));
  CHECK(row_coef(lp, "young|m=2", "x0[]") == Rational(1));
  CHECK(row_coef(lp, "young|m=2", "x1[]") == Rational(kostka_hook(P({8, 1}), 2)));

  LpParams bad = dual_params(2, 3, "3/2");
  bad.n = 9;  // k0 exceeds (n - l0 - 3)/2
  CHECK_THROWS_AS(build_lp2(bad), std::invalid_argument);
}

TEST_CASE("build_lp3 structure") {
  LpParams p = dual_params(2, 3, "3/2", 8);
  auto lp = build_lp3(p);
  for (int m = 2; m <= 8; m += 2)
    CHECK(row_coef(lp, "young|m=" + std::to_string(m), "x1[]") == Rational(m));
  for (int k = 1; k <= 3; ++k) {
    Rational expect = k % 2 == 0 ? Rational(-2) : Rational(2);  // -2 (-1)^k
    CHECK(row_coef(lp, "parseval|l=0", "x" + std::to_string(k) + "[]") == expect);
  }
  CHECK(row_by_tag(lp, "young|m=2").rhs == Rational(5, 4));
  CHECK(row_by_tag(lp, "parseval|l=2").rhs ==
        Rational(2) - Rational(2) * tail_T(2, 3, Rational(3, 2)));
}

TEST_CASE("build_dual structure and small optima") {
  {
    auto lp = build_dual(dual_params(0, 3, "3/2"));
    int wcount = 0;
    for (const auto& v : lp.variables)
      if (v[0] == 'w') ++wcount;
    CHECK(wcount == 1);
    int restrictions = 0;
    for (const auto& con : lp.constraints)
      if (con.tag.rfind("restrict|", 0) == 0) ++restrictions;
    CHECK(restrictions == 3);  // k = 1, 2, 3 with the empty belly
  }
  {
    auto lp = build_dual(dual_params(2, 29, "169/100"));
    int restrictions = 0;
    for (const auto& con : lp.constraints)
      if (con.tag.rfind("restrict|", 0) == 0) ++restrictions;
    CHECK(restrictions == 115);
  }
}

TEST_CASE("strong duality between family III and its dual") {
  for (auto [l0, k0] : std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {2, 3}}) {
    LpParams p = dual_params(l0, k0, "3/2");
    auto primal = solve(build_lp3(p), PivotRule::dantzig);
    auto dual = solve(build_dual(p), PivotRule::dantzig);
    REQUIRE(primal.status == SolveStatus::optimal);
    REQUIRE(dual.status == SolveStatus::optimal);
    CHECK(primal.objective == dual.objective);
  }
  // the headline certificate row, cross-checked through the primal route
  LpParams p = dual_params(0, 19, "149/100");
  auto primal = solve(build_lp3(p), PivotRule::dantzig);
  auto dual = solve(build_dual(p), PivotRule::dantzig);
  REQUIRE(primal.status == SolveStatus::optimal);
  CHECK(primal.objective == dual.objective);
  CHECK(primal.objective > Rational(0));
}

TEST_CASE("joint large leg") {
  {
    // l0 = 0: the joint rows coincide with the originals
    LpParams p = dual_params(0, 5, "3/2");
    auto plain = build_dual(p);
    auto joint = apply_joint_large_leg(plain, p);
    REQUIRE(plain.constraints.size() == joint.constraints.size());
    for (std::size_t i = 0; i < plain.constraints.size(); ++i) {
      CHECK(plain.constraints[i].row == joint.constraints[i].row);
      CHECK(plain.constraints[i].rhs == joint.constraints[i].rhs);
    }
  }
  {
    LpParams p = dual_params(2, 29, "169/100");
    auto joint = apply_joint_large_leg(build_dual(p), p);
    int restrict_rows = 0, joint_rows = 0;
    for (const auto& con : joint.constraints) {
      if (con.tag.rfind("restrict|", 0) == 0) ++restrict_rows;
      if (con.tag.rfind("joint|", 0) == 0) ++joint_rows;
    }
    CHECK(restrict_rows == 3);      // k = 1 with bellies (), (1), (2)
    CHECK(joint_rows == 28 * 3);    // k in [2, 29], s in {0, 1, 2}
  }
}

TEST_CASE("joint large leg soundness") {
  // random nonnegative (w, y) satisfying a joint row at (k, s) satisfy
  // every original restriction with |beta| = s at that k
  LpParams p = dual_params(4, 7, "3/2");
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(0, 12), den(1, 6), kd(p.l0, p.k0), sd(0, p.l0);
  int checked = 0;
  while (checked < 200) {
    int k = kd(rng), s = sd(rng);
    std::map<int, Rational> w, y;
    for (int ell = 0; ell <= p.l0; ell += 2) w[ell] = Rational(num(rng), den(rng));
    for (int m = 2; m <= p.m0; m += 2) y[m] = Rational(num(rng), den(rng));
    Rational joint_lhs;
    if (s % 2 == 0) joint_lhs += Rational(k % 2 == 0 ? 2 : -2) * w[s];
    for (int m = 2; m <= p.m0; m += 2) joint_lhs += Rational(binomial(m, k + s)) * y[m];
    if (joint_lhs < Rational(0)) continue;
    for (const auto& beta : enumerate_partitions(s)) {
      if (beta.height() > k) continue;
      BellyShape b(k, beta);
      Rational lhs;
      for (int ell = 0; ell <= p.l0; ell += 2)
        lhs += Rational(2 * limit_coeff(b, ell)) * w[ell];
      Int fmu = standard_count(mu_shape(b));
      for (int m = 2; m <= p.m0; m += 2)
        lhs += Rational(binomial(m, k + s) * fmu) * y[m];
      CHECK(lhs >= Rational(0));
    }
    ++checked;
  }
}

TEST_CASE("joint-strengthened certificates stay feasible for the original rows") {
  LpParams p = dual_params(2, 7, "8/5");
  auto res = solve(apply_joint_large_leg(build_dual(p), p), PivotRule::dantzig);
  REQUIRE(res.status == SolveStatus::optimal);
  DualCertificate cert;
  cert.params = p;
  cert.mode.joint_large_leg = true;
  for (int ell = 0; ell <= p.l0; ell += 2)
    cert.w[ell] = res.assignment.at("w" + std::to_string(ell));
  for (int m = 2; m <= p.m0; m += 2)
    cert.y[m] = res.assignment.at("y" + std::to_string(m));
  cert.objective = dual_objective(p, cert.w, cert.y);
  auto joint_verdict = verify_dual_certificate(cert);
  CHECK(joint_verdict.verdict != CertVerdict::infeasible);

  // same point re-checked against the unstrengthened system
  DualCertificate plain = cert;
  plain.mode.joint_large_leg = false;
  auto plain_verdict = verify_dual_certificate(plain);
  CHECK(plain_verdict.verdict != CertVerdict::infeasible);
  CHECK(plain_verdict.objective == joint_verdict.objective);
}

TEST_CASE("heuristics") {
  LpParams p = dual_params(2, 5, "3/2");
  auto plain = build_dual(p);
  LpHeader hdr{"dual", p.l0, p.k0, p.m0, p.c, {}};

  // no heuristics is the identity
  auto same = apply_heuristics(plain, {}, std::nullopt, FragmentSpec{});
  CHECK(export_lp_text(same, hdr) == export_lp_text(plain, hdr));

  // dropping every y leaves only the w part of the objective
  std::vector<int> all_m;
  for (int m = 2; m <= p.m0; m += 2) all_m.push_back(m);
  auto dropped = apply_heuristics(plain, all_m, std::nullopt, FragmentSpec{});
  for (const auto& [v, c] : dropped.objective) CHECK(dropped.variables[v][0] == 'w');

  // height-capped fragment drops the (1,1) rows at l0 = 2
  auto frag = apply_heuristics(plain, {}, std::nullopt, FragmentSpec::parse("ht<=1"));
  CHECK(frag.constraints.size() < plain.constraints.size());
  for (const auto& con : frag.constraints) {
    auto parsed = detail::parse_restrict_tag(con.tag);
    if (parsed) CHECK(parsed->beta.height() <= 1);
  }

  // the default rule keeps (1,1) but prunes taller bellies, visible at l0 = 4
  LpParams p4 = dual_params(4, 5, "3/2");
  auto plain4 = build_dual(p4);
  auto frag4 = apply_heuristics(plain4, {}, std::nullopt, FragmentSpec::parse("default"));
  CHECK(frag4.constraints.size() < plain4.constraints.size());
  bool kept_11 = false;
  for (const auto& con : frag4.constraints) {
    auto parsed = detail::parse_restrict_tag(con.tag);
    if (!parsed) continue;
    CHECK((parsed->beta.height() <= 1 || parsed->beta.parts() == std::vector<int>{1, 1}));
    if (parsed->beta.parts() == std::vector<int>{1, 1}) kept_11 = true;
  }
  CHECK(kept_11);
  CHECK_THROWS_AS(FragmentSpec::parse("bogus"), std::invalid_argument);
}

TEST_CASE("rounding soundness") {
  // a rounded-dual optimum stays feasible for the exact dual and its exact
  // objective dominates the rounded one
  LpParams p = dual_params(0, 19, "149/100");
  auto rounded_lp = apply_heuristics(build_dual(p), {}, 16, FragmentSpec{});
  auto res = solve(rounded_lp, PivotRule::dantzig);
  REQUIRE(res.status == SolveStatus::optimal);
  DualCertificate cert;
  cert.params = p;
  cert.mode.round_bits = 16;
  for (int ell = 0; ell <= p.l0; ell += 2)
    cert.w[ell] = res.assignment.at("w" + std::to_string(ell));
  for (int m = 2; m <= p.m0; m += 2)
    cert.y[m] = res.assignment.at("y" + std::to_string(m));
  cert.objective = dual_objective(p, cert.w, cert.y);
  auto vr = verify_dual_certificate(cert);
  CHECK(vr.verdict == CertVerdict::positive);
  CHECK(cert.objective >= res.objective);
}

TEST_CASE("verify_dual_certificate") {
  LpParams p = dual_params(0, 3, "3/2");
  {
    DualCertificate cert;
    cert.params = p;
    cert.w[0] = Rational(1);
    for (int m = 2; m <= p.m0; m += 2) cert.y[m] = Rational(0);
    cert.objective = dual_objective(p, cert.w, cert.y);
    auto vr = verify_dual_certificate(cert);
    CHECK(vr.verdict == CertVerdict::infeasible);
    CHECK(vr.violated_tag == "restrict|k=1;b=");
  }
  {
    DualCertificate cert;
    cert.params = p;
    cert.w[0] = Rational(-1);
    cert.objective = dual_objective(p, cert.w, cert.y);
    CHECK(verify_dual_certificate(cert).violated_tag == "nonneg|w0");
  }
  {
    DualCertificate cert;
    cert.params = p;
    cert.w[0] = Rational(1, 2);
    CHECK(verify_dual_certificate(cert).violated_tag == "unit-sum");
  }
  {
    // a genuine optimum verifies positive; corrupting the objective is caught
    LpParams q = dual_params(0, 19, "149/100");
    auto res = solve(build_dual(q), PivotRule::dantzig);
    DualCertificate cert;
    cert.params = q;
    for (int ell = 0; ell <= q.l0; ell += 2)
      cert.w[ell] = res.assignment.at("w" + std::to_string(ell));
    for (int m = 2; m <= q.m0; m += 2)
      cert.y[m] = res.assignment.at("y" + std::to_string(m));
    cert.objective = dual_objective(q, cert.w, cert.y);
    CHECK(verify_dual_certificate(cert).verdict == CertVerdict::positive);
    CHECK(cert.objective == res.objective);

    DualCertificate bad = cert;
    bad.objective = Rational(0);
    auto vr = verify_dual_certificate(bad);
    CHECK(vr.verdict == CertVerdict::infeasible);
    CHECK(vr.violated_tag == "objective");

    DualCertificate odd = cert;
    odd.w[1] = Rational(0);
    CHECK_THROWS_AS(verify_dual_certificate(odd), std::invalid_argument);
  }
}

TEST_CASE("certificate json round trip") {
  DualCertificate cert;
  cert.params = dual_params(2, 5, "169/100");
  cert.mode.joint_large_leg = true;
  cert.mode.fragment = "default";
  cert.mode.round_bits = 32;
  cert.mode.dropped_y = {4, 8};
  cert.w[0] = Rational(1, 3);
  cert.w[2] = Rational(2, 3);
  for (int m = 2; m <= cert.params.m0; m += 2) cert.y[m] = Rational(m, 7);
  cert.objective = dual_objective(cert.params, cert.w, cert.y);

  auto j = certificate_to_json(cert);
  auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.params.l0 == cert.params.l0);
  CHECK(back.params.c == cert.params.c);
  CHECK(back.mode.joint_large_leg == cert.mode.joint_large_leg);
  CHECK(back.mode.fragment == cert.mode.fragment);
  CHECK(back.mode.round_bits == cert.mode.round_bits);
  CHECK(back.mode.dropped_y == cert.mode.dropped_y);
  CHECK(back.w == cert.w);
  CHECK(back.y == cert.y);
  CHECK(back.objective == cert.objective);

  auto keys = std::vector<std::string>{};
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"params", "mode", "w", "y", "objective"});
}

TEST_CASE("lp text parsing rejects malformed input") {
  auto reject = [](const std::string& text) {
    std::istringstream is(text);
    CHECK_THROWS_AS(parse_lp_text(is), std::invalid_argument);
  };
  reject("");
  reject("LP dual params l0=0\n");  // missing objective line
  reject("nonsense header\nobjective min 0: w0=1\n");
  reject("LP dual params l0=0 bogus=3\nobjective min 0: w0=1\n");
  reject("LP dual params l0=0\nobjective min 0: w0=1\nrow >> 0: w0=1\n");   // bad relation
  reject("LP dual params l0=0\nobjective min 0: w0=1\nrow >= 0: w9=1\n");   // undeclared var
  reject("LP dual params l0=0\nobjective min 0: w0=x\n");                   // bad rational
}

TEST_CASE("lp text round trip is bit-exact") {
  std::vector<std::pair<LpHeader, LinearProgram>> cases;
  {
    LpParams p = dual_params(0, 1, "3/2");
    p.n = 5;
    cases.push_back({LpHeader{"1", 0, 0, 0, p.c, p.n}, build_lp1(p)});
  }
  {
    LpParams p = dual_params(0, 1, "3/2");
    p.n = 9;
    cases.push_back({LpHeader{"2", 0, 1, 0, p.c, p.n}, build_lp2(p)});
  }
  {
    LpParams p = dual_params(2, 3, "3/2");
    cases.push_back({LpHeader{"3", 2, 3, 10, p.c, {}}, build_lp3(p)});
  }
  {
    LpParams p = dual_params(0, 3, "3/2");
    cases.push_back({LpHeader{"dual", 0, 3, 6, p.c, {}}, build_dual(p)});
  }
  for (auto& [hdr, lp] : cases) {
    std::istringstream is(export_lp_text(lp, hdr));
    auto parsed = parse_lp_text(is);
    CHECK(parsed.lp.variables == lp.variables);
    auto a = solve(lp), b = solve(parsed.lp);
    CHECK(a.status == b.status);
    CHECK(a.objective == b.objective);
    CHECK(a.pivot_log == b.pivot_log);
    CHECK(a.assignment == b.assignment);
    CHECK(parsed.header.family == hdr.family);
    CHECK(parsed.header.c == hdr.c);
  }
}
