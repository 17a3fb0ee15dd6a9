#pragma once

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "birkhoff/rational.hpp"

namespace birkhoff {

enum class Sense { minimize, maximize };
enum class Relation { le, eq, ge };

/// Sparse row: (variable index, coefficient), sorted by index, no
/// duplicates, no zero coefficients.
using SparseRow = std::vector<std::pair<int, Rational>>;

struct Constraint {
  SparseRow row;
  Relation rel = Relation::le;
  Rational rhs;
  std::string tag;
};

struct LinearProgram {
  Sense sense = Sense::minimize;
  std::vector<std::string> variables;
  SparseRow objective;
  Rational objective_constant;
  std::vector<Constraint> constraints;

  int add_variable(const std::string& name) {
    index_.emplace(name, static_cast<int>(variables.size()));
    variables.push_back(name);
    return static_cast<int>(variables.size()) - 1;
  }

  int var_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("unknown variable: " + name);
    return it->second;
  }

  void add_constraint(const std::map<int, Rational>& terms, Relation rel, Rational rhs,
                      std::string tag) {
    SparseRow row;
    for (const auto& [v, c] : terms) {
      if (v < 0 || v >= static_cast<int>(variables.size()))
        throw std::invalid_argument("constraint references undeclared variable");
      if (!c.is_zero()) row.emplace_back(v, c);
    }
    constraints.push_back(Constraint{std::move(row), rel, std::move(rhs), std::move(tag)});
  }

  void set_objective(Sense s, const std::map<int, Rational>& terms, Rational constant) {
    sense = s;
    objective.clear();
    for (const auto& [v, c] : terms)
      if (!c.is_zero()) objective.emplace_back(v, c);
    objective_constant = std::move(constant);
  }

 private:
  std::unordered_map<std::string, int> index_;
};

inline Rational eval_row(const SparseRow& row,
                         const std::vector<Rational>& x) {
  Rational s;
  for (const auto& [v, c] : row) s += c * x[static_cast<std::size_t>(v)];
  return s;
}

inline const char* relation_text(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::eq: return "=";
    case Relation::ge: return ">=";
  }
  return "?";
}

inline Relation relation_from_text(const std::string& s) {
  if (s == "<=") return Relation::le;
  if (s == "=") return Relation::eq;
  if (s == ">=") return Relation::ge;
  throw std::invalid_argument("bad relation '" + s + "'");
}

struct LpHeader {
  std::string family;  // "1", "2", "3" or "dual"
  int l0 = 0, k0 = 0, m0 = 0;
  Rational c;
  std::optional<int> n;
};

/// Text form. First the header, then the objective line carrying every
/// variable (zero coefficients included, pinning variable order), then
/// one line per constraint: `<tag> <rel> <rhs>: <var>=<coef> ...`.
inline std::string export_lp_text(const LinearProgram& lp, const LpHeader& hdr) {
  std::ostringstream os;
  os << "LP " << hdr.family << " params l0=" << hdr.l0 << " k0=" << hdr.k0
     << " m0=" << hdr.m0 << " c=" << hdr.c.to_string();
  if (hdr.n) os << " n=" << *hdr.n;
  os << "\n";

  os << "objective " << (lp.sense == Sense::minimize ? "min" : "max") << " "
     << lp.objective_constant.to_string() << ":";
  std::vector<Rational> dense(lp.variables.size());
  for (const auto& [v, c] : lp.objective) dense[static_cast<std::size_t>(v)] = c;
  for (std::size_t v = 0; v < lp.variables.size(); ++v)
    os << " " << lp.variables[v] << "=" << dense[v].to_string();
  os << "\n";

  for (const auto& con : lp.constraints) {
    os << con.tag << " " << relation_text(con.rel) << " " << con.rhs.to_string() << ":";
    for (const auto& [v, c] : con.row)
      os << " " << lp.variables[static_cast<std::size_t>(v)] << "=" << c.to_string();
    os << "\n";
  }
  return os.str();
}

struct ParsedLp {
  LpHeader header;
  LinearProgram lp;
};

inline ParsedLp parse_lp_text(std::istream& in) {
  ParsedLp out;
  std::string line;

  if (!std::getline(in, line)) throw std::invalid_argument("parse_lp_text: empty input");
  {
    std::istringstream ls(line);
    std::string lit, fam, params, tok;
    ls >> lit >> fam >> params;
    if (lit != "LP" || params != "params")
      throw std::invalid_argument("parse_lp_text: bad header");
    out.header.family = fam;
    while (ls >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("parse_lp_text: bad header field");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "l0") out.header.l0 = std::stoi(val);
      else if (key == "k0") out.header.k0 = std::stoi(val);
      else if (key == "m0") out.header.m0 = std::stoi(val);
      else if (key == "c") out.header.c = Rational::from_string(val);
      else if (key == "n") out.header.n = std::stoi(val);
      else throw std::invalid_argument("parse_lp_text: unknown header field " + key);
    }
  }

  if (!std::getline(in, line)) throw std::invalid_argument("parse_lp_text: missing objective");
  auto colon = line.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("parse_lp_text: bad objective line");
  {
    std::istringstream head(line.substr(0, colon));
    std::string lit, sense, constant;
    head >> lit >> sense >> constant;
    if (lit != "objective") throw std::invalid_argument("parse_lp_text: bad objective line");
    std::map<int, Rational> terms;
    std::istringstream body(line.substr(colon + 1));
    std::string tok;
    while (body >> tok) {
      auto eq = tok.rfind('=');
      if (eq == std::string::npos) throw std::invalid_argument("parse_lp_text: bad term " + tok);
      int v = out.lp.add_variable(tok.substr(0, eq));
      Rational coef = Rational::from_string(tok.substr(eq + 1));
      if (!coef.is_zero()) terms[v] = coef;
    }
    out.lp.set_objective(sense == "min" ? Sense::minimize : Sense::maximize, terms,
                         Rational::from_string(constant));
  }

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("parse_lp_text: bad constraint line");
    std::istringstream head(line.substr(0, colon));
    std::string tag, rel, rhs;
    head >> tag >> rel >> rhs;
    std::map<int, Rational> terms;
    std::istringstream body(line.substr(colon + 1));
    std::string tok;
    while (body >> tok) {
      auto eq = tok.rfind('=');
      if (eq == std::string::npos) throw std::invalid_argument("parse_lp_text: bad term " + tok);
      terms[out.lp.var_index(tok.substr(0, eq))] = Rational::from_string(tok.substr(eq + 1));
    }
    out.lp.add_constraint(terms, relation_from_text(rel), Rational::from_string(rhs), tag);
  }
  return out;
}

}  // namespace birkhoff
