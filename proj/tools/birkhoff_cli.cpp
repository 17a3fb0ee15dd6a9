// Command-line surface: solve and verify dual certificates, export the LP
// families, run the explicit constructions, and run the brute-force
// oracles on small symmetric groups.
//
// Exit codes: 0 success / positive optimum, 1 nonpositive optimum,
// 2 invalid input, 3 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "birkhoff/graph.hpp"
#include "birkhoff/lp.hpp"
#include "birkhoff/simplex.hpp"

using namespace birkhoff;

namespace {

PivotRule parse_rule(const std::string& s) {
  if (s == "bland") return PivotRule::bland;
  if (s == "dantzig") return PivotRule::dantzig;
  throw std::invalid_argument("rule must be bland or dantzig");
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open output file " + path);
  return os;
}

struct DualSolveArgs {
  int l0 = 0, k0 = 1, m0 = -1;
  std::string c_text;
  bool joint = false;
  std::string fragment_text = "none";
  int round_bits = -1;  // -1 = off; bare flag takes the default width 64
  std::vector<int> drop_y;
  std::string out_path;
  std::string rule_text = "bland";
};

int run_dual_solve(const DualSolveArgs& a) {
  LpParams params;
  params.l0 = a.l0;
  params.k0 = a.k0;
  params.m0 = a.m0 < 0 ? 2 * (a.l0 + a.k0) : a.m0;
  params.c = Rational::from_string(a.c_text);
  params.validate_limit();
  for (int m : a.drop_y)
    require(m >= 2 && m <= params.m0 && m % 2 == 0, "--drop-y entries must be even in [2, m0]");
  require(a.round_bits == -1 || a.round_bits >= 1, "--round-bits must be positive");
  FragmentSpec fragment = FragmentSpec::parse(a.fragment_text);
  PivotRule rule = parse_rule(a.rule_text);

  LinearProgram lp = build_dual(params);
  if (a.joint) lp = apply_joint_large_leg(lp, params);
  std::optional<int> bits;
  if (a.round_bits >= 1) bits = a.round_bits;
  if (!a.drop_y.empty() || bits || fragment.active())
    lp = apply_heuristics(lp, a.drop_y, bits, fragment);

  std::cerr << "dual: " << lp.variables.size() << " variables, " << lp.constraints.size()
            << " rows\n";
  SolveResult res = solve(lp, rule);
  if (res.status != SolveStatus::optimal)
    throw std::invalid_argument("dual solve did not reach an optimum");
  std::cerr << "solved in " << res.pivot_count << " pivots\n";

  DualCertificate cert;
  cert.params = params;
  cert.mode.joint_large_leg = a.joint;
  if (fragment.active()) cert.mode.fragment = fragment.to_string();
  cert.mode.round_bits = bits;
  cert.mode.dropped_y = a.drop_y;
  for (int ell = 0; ell <= params.l0; ell += 2)
    cert.w[ell] = res.assignment.at("w" + std::to_string(ell));
  for (int m = 2; m <= params.m0; m += 2)
    cert.y[m] = res.assignment.at("y" + std::to_string(m));
  cert.objective = dual_objective(params, cert.w, cert.y);

  std::string text = certificate_to_json(cert).dump(2) + "\n";
  if (a.out_path.empty()) {
    std::cout << text;
  } else {
    open_out(a.out_path) << text;
    std::cout << "objective " << cert.objective.to_string() << "\n";
  }
  std::cerr << "objective " << cert.objective.to_string() << " (~"
            << cert.objective.to_double() << ")\n";

  if (fragment.active()) {
    // A fragment optimum need not satisfy the rows it never saw.
    VerifyResult vr = verify_dual_certificate(cert);
    if (vr.verdict == CertVerdict::infeasible) {
      std::cerr << "fragment solution violates full dual row " << vr.violated_tag << "\n";
      return 1;
    }
  }
  return cert.objective > Rational(0) ? 0 : 1;
}

int run_dual_verify(const std::string& path) {
  DualCertificate cert;
  try {
    std::ifstream is(path);
    require(static_cast<bool>(is), "cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(is);
    cert = certificate_from_json(j);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  VerifyResult vr;
  try {
    vr = verify_dual_certificate(cert);
  } catch (const std::exception& e) {
    std::cerr << "malformed certificate: " << e.what() << "\n";
    return 2;
  }
  switch (vr.verdict) {
    case CertVerdict::positive:
      std::cout << "positive " << vr.objective.to_string() << "\n";
      return 0;
    case CertVerdict::nonpositive:
      std::cout << "nonpositive " << vr.objective.to_string() << "\n";
      return 3;
    case CertVerdict::infeasible:
      std::cout << "violated " << vr.violated_tag << "\n";
      return 3;
  }
  return 3;
}

struct LpExportArgs {
  std::string family;
  int l0 = 0, k0 = 1, m0 = -1, n = -1;
  std::string c_text;
  std::string out_path;
};

int run_lp_export(const LpExportArgs& a) {
  LpParams params;
  params.l0 = a.l0;
  params.k0 = a.k0;
  params.c = Rational::from_string(a.c_text);
  params.m0 = a.m0 < 0 ? 2 * (a.l0 + a.k0) : a.m0;
  if (a.n >= 0) params.n = a.n;

  LinearProgram lp;
  LpHeader hdr{a.family, params.l0, params.k0, params.m0, params.c, params.n};
  if (a.family == "1") {
    hdr.k0 = hdr.m0 = 0;
    lp = build_lp1(params);
  } else if (a.family == "2") {
    hdr.m0 = 0;
    lp = build_lp2(params);
  } else if (a.family == "3") {
    lp = build_lp3(params);
  } else if (a.family == "dual") {
    lp = build_dual(params);
  } else {
    throw std::invalid_argument("family must be one of 1|2|3|dual");
  }
  std::string text = export_lp_text(lp, hdr);
  if (a.out_path.empty())
    std::cout << text;
  else
    open_out(a.out_path) << text;
  std::cerr << lp.variables.size() << " variables, " << lp.constraints.size() << " rows\n";
  return 0;
}

struct ConstructArgs {
  int n = 0;
  std::string kind;
  bool verify = false;
  std::string out_path;
};

int run_construct(const ConstructArgs& a) {
  require(a.n >= 1, "--n must be positive");
  const bool coloring = a.kind == "coloring" || a.kind == "coloring-pow2";
  const bool improved = a.kind == "indep-pow2" || a.kind == "coloring-pow2";
  require(coloring || a.kind == "indep" || a.kind == "indep-pow2",
          "kind must be indep|indep-pow2|coloring|coloring-pow2");
  if (improved) require((a.n & (a.n - 1)) == 0, "pow2 kinds need n to be a power of 2");

  if (coloring) {
    std::cout << "palette " << coloring_size_target(a.n, improved).get_str() << "\n";
    std::cout << "target " << coloring_closed_form(a.n, improved).get_str() << "\n";
    if (a.verify || !a.out_path.empty()) {
      require(a.n <= 8, "coloring materialization is capped at n <= 8");
      Coloring col = construct_coloring(a.n, improved);
      require(Int(col.palette) == coloring_size_target(a.n, improved),
              "palette does not match the closed form");
      if (!a.out_path.empty()) {
        auto os = open_out(a.out_path);
        write_coloring(os, col);
      }
      if (a.verify) {
        if (a.n <= 6) {
          bool ok = verify_coloring(col, improved);
          std::cout << "verified " << (ok ? "true" : "false") << "\n";
          if (!ok) return 3;
        } else {
          std::cerr << "verification skipped (n > 6)\n";
        }
      }
    }
    return 0;
  }

  std::cout << "size " << independent_size_target(a.n, improved).get_str() << "\n";
  std::cout << "target " << independent_closed_form(a.n, improved).get_str() << "\n";
  if (a.verify || !a.out_path.empty() || a.n <= 12) {
    require(a.n <= 14, "independent-set materialization is capped at n <= 14");
    PermSet A = construct_independent(a.n, improved);
    require(Int(static_cast<long>(A.size())) == independent_size_target(a.n, improved),
            "constructed size does not match the recursion product");
    if (!a.out_path.empty()) {
      auto os = open_out(a.out_path);
      write_permset(os, A);
    }
    if (a.verify) {
      if (a.n <= 7 || A.size() <= 256) {
        bool ok = verify_independent(A);
        std::cout << "verified " << (ok ? "true" : "false") << "\n";
        if (!ok) return 3;
      } else {
        std::cerr << "verification skipped (set too large for the pair scan)\n";
      }
    }
  }
  return 0;
}

struct BruteArgs {
  int n = 0;
  bool alpha = false;
  std::string edges_file, parseval_file;
  int ell = 0;
};

int run_brute(const BruteArgs& a) {
  if (a.alpha) {
    require(a.n >= 1 && a.n <= 6, "--alpha is capped at n <= 6");
    auto res = brute_alpha(a.n);
    std::cout << "alpha " << res.value << "\n";
    std::cerr << "witness:\n";
    write_permset(std::cerr, res.witness);
    return 0;
  }
  const std::string& path = a.edges_file.empty() ? a.parseval_file : a.edges_file;
  require(!path.empty(), "need one of --alpha, --edges, --parseval");
  std::ifstream is(path);
  require(static_cast<bool>(is), "cannot open " + path);
  PermSet A = read_permset(is);
  require(a.n == 0 || a.n == A.n, "--n does not match the set file");
  if (!a.edges_file.empty()) {
    std::cout << "edges " << count_edges_ell(A, a.ell).get_str() << "\n";
    return 0;
  }
  Int lhs = count_edges_ell(A, a.ell);
  bool equal = parseval_check(A, a.ell);
  std::cout << "lhs " << lhs.get_str() << "\n";
  std::cout << "equal " << (equal ? "true" : "false") << "\n";
  return equal ? 0 : 3;
}

int run_char(const std::string& lambda_text, const std::string& mu_text) {
  Partition lambda = Partition::parse(lambda_text);
  Partition mu = Partition::parse(mu_text);
  require(lambda.size() == mu.size(), "|lambda| must equal |mu|");
  std::cout << mn_character(lambda, mu).get_str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birkhoff graph independence-number toolkit"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker cap for pair scans")->check(CLI::PositiveNumber);

  DualSolveArgs ds;
  auto* solve_cmd = app.add_subcommand("dual-solve", "solve the dual LP and write a certificate");
  solve_cmd->add_option("--l0", ds.l0)->required();
  solve_cmd->add_option("--k0", ds.k0)->required();
  solve_cmd->add_option("--m0", ds.m0, "defaults to 2*(l0+k0)");
  solve_cmd->add_option("--c", ds.c_text, "rational p/q in (1,2)")->required();
  solve_cmd->add_flag("--joint-large-leg", ds.joint);
  solve_cmd->add_option("--fragment", ds.fragment_text, "none|default|ht<=K");
  solve_cmd->add_option("--round-bits", ds.round_bits, "dyadic width, 64 when given bare")
      ->expected(0, 1)
      ->default_str("64");
  solve_cmd->add_option("--drop-y", ds.drop_y)->delimiter(',');
  solve_cmd->add_option("--out", ds.out_path);
  solve_cmd->add_option("--rule", ds.rule_text, "bland|dantzig");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("dual-verify", "re-check a certificate from scratch");
  verify_cmd->add_option("file", verify_path)->required();

  LpExportArgs le;
  auto* export_cmd = app.add_subcommand("lp-export", "write an LP in text form");
  export_cmd->add_option("--family", le.family, "1|2|3|dual")->required();
  export_cmd->add_option("--l0", le.l0)->required();
  export_cmd->add_option("--k0", le.k0);
  export_cmd->add_option("--m0", le.m0);
  export_cmd->add_option("--n", le.n);
  export_cmd->add_option("--c", le.c_text)->required();
  export_cmd->add_option("--out", le.out_path);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "independent sets and proper colorings");
  construct_cmd->add_option("--n", ca.n)->required();
  construct_cmd->add_option("--kind", ca.kind, "indep|indep-pow2|coloring|coloring-pow2")->required();
  construct_cmd->add_flag("--verify", ca.verify);
  construct_cmd->add_option("--out", ca.out_path);

  BruteArgs ba;
  auto* brute_cmd = app.add_subcommand("brute", "brute-force oracles on small S_n");
  brute_cmd->add_option("--n", ba.n);
  brute_cmd->add_flag("--alpha", ba.alpha);
  brute_cmd->add_option("--edges", ba.edges_file);
  brute_cmd->add_option("--parseval", ba.parseval_file);
  brute_cmd->add_option("--ell", ba.ell);

  std::string lambda_text, mu_text;
  auto* char_cmd = app.add_subcommand("char", "irreducible character value");
  char_cmd->add_option("--lambda", lambda_text)->required();
  char_cmd->add_option("--mu", mu_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  worker_cap() = threads;
  try {
    if (*solve_cmd) return run_dual_solve(ds);
    if (*verify_cmd) return run_dual_verify(verify_path);
    if (*export_cmd) return run_lp_export(le);
    if (*construct_cmd) return run_construct(ca);
    if (*brute_cmd) return run_brute(ba);
    if (*char_cmd) return run_char(lambda_text, mu_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
