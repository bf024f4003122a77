#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lazard/cad.hpp"
#include "lazard/evaluator.hpp"

namespace lazard {

using Json = nlohmann::ordered_json;

/// A parsed problem: declared variable order plus the input polynomials.
struct ProblemFile {
  std::vector<std::string> variables;
  std::vector<Polynomial> polynomials;

  unsigned dimension() const { return static_cast<unsigned>(variables.size()); }
};

namespace detail {

inline std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline bool validIdentifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

}  // namespace detail

/// Parses the problem format: a `vars: x, y, z` header, then one polynomial
/// per nonempty line; `#` starts a comment. Zero polynomials are rejected.
inline ProblemFile parseProblem(const std::string& text) {
  ProblemFile problem;
  std::istringstream in(text);
  std::string line;
  std::size_t lineNo = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trimmed(line);
    if (line.empty()) continue;
    if (!header) {
      if (line.rfind("vars:", 0) != 0)
        throw input_error("line " + std::to_string(lineNo) + ": expected a 'vars:' header");
      std::string rest = line.substr(5);
      std::size_t pos = 0;
      while (pos <= rest.size()) {
        std::size_t comma = rest.find(',', pos);
        std::string name = detail::trimmed(
            comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos));
        if (!detail::validIdentifier(name))
          throw input_error("line " + std::to_string(lineNo) + ": bad variable name '" + name + "'");
        for (const auto& seen : problem.variables)
          if (seen == name)
            throw input_error("line " + std::to_string(lineNo) + ": duplicate variable '" + name + "'");
        problem.variables.push_back(name);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      header = true;
      continue;
    }
    Polynomial p;
    try {
      p = parsePolynomial(line, problem.variables);
    } catch (const input_error& e) {
      throw input_error("line " + std::to_string(lineNo) + ": " + e.what());
    }
    if (p.isZero())
      throw input_error("line " + std::to_string(lineNo) + ": zero polynomial rejected");
    problem.polynomials.push_back(std::move(p));
  }
  checkInput(header, "missing 'vars:' header");
  checkInput(!problem.polynomials.empty(), "empty polynomial list");
  return problem;
}

enum class Command { Cad, Project, Valuation, Eval, CompareProjections };

inline const char* commandName(Command c) {
  switch (c) {
    case Command::Cad: return "cad";
    case Command::Project: return "project";
    case Command::Valuation: return "valuation";
    case Command::Eval: return "eval";
    case Command::CompareProjections: return "compare-projections";
  }
  return "?";
}

struct RunOptions {
  Command command = Command::Cad;
  bool jsonOutput = false;
  std::uint64_t seed = 1;
  unsigned probes = 8;
  std::optional<std::vector<Rational>> point;
  std::optional<unsigned> maxLevel;
  bool delineability = false;  // cad only
};

/// One run's machine payload and its human rendering. The payload is
/// deterministic for identical input and seed; wall time is reported only in
/// the text view.
struct RunReport {
  Json payload;
  std::string text;
  double elapsedMs = 0;
};

// --- serialization helpers -------------------------------------------------

inline Json toJson(const RealAlgebraicNumber& x) {
  if (x.isRational()) return toString(x.rationalValue());
  Json j;
  Json coeffs = Json::array();
  for (const auto& c : x.definingPoly().c) coeffs.push_back(toString(c));
  j["poly"] = std::move(coeffs);
  j["interval"] = Json::array({toString(x.interval().lo), toString(x.interval().hi)});
  return j;
}

inline Json toJson(const Valuation& v) {
  Json j = Json::array();
  for (auto e : v.entries) j.push_back(e);
  return j;
}

inline Json toJson(const ProjectionSet& s, const std::vector<std::string>& names) {
  Json elements = Json::array();
  for (const auto& e : s.entries) {
    Json je;
    je["poly"] = printPolynomial(e.poly, names);
    Json prov = Json::array();
    for (const auto& p : e.provenance) {
      Json jp;
      jp["kind"] = provenanceKindName(p.kind);
      jp["source"] = p.source;
      if (p.source2) jp["source2"] = *p.source2;
      prov.push_back(std::move(jp));
    }
    je["provenance"] = std::move(prov);
    elements.push_back(std::move(je));
  }
  Json j;
  j["elements"] = std::move(elements);
  return j;
}

inline Json cellToJson(const Cell& c, const std::vector<std::string>& names) {
  (void)names;
  Json j;
  j["index"] = Json(c.index);
  Json sample = Json::array();
  for (unsigned i = 0; i < c.sample.size(); ++i) sample.push_back(toJson(c.sample.coord(i)));
  j["sample"] = std::move(sample);
  j["signs"] = Json(c.signs);
  Json sigs = Json::array();
  for (const auto& v : c.signatures) sigs.push_back(toJson(v));
  j["valuations"] = std::move(sigs);
  return j;
}

namespace detail {

inline Json reportHeader(const ProblemFile& problem, const RunOptions& opt) {
  Json j;
  j["format"] = 1;
  j["command"] = commandName(opt.command);
  j["vars"] = Json(problem.variables);
  Json polys = Json::array();
  for (const auto& p : problem.polynomials) polys.push_back(printPolynomial(p, problem.variables));
  j["input"] = std::move(polys);
  return j;
}

inline std::vector<std::string> levelNames(const std::vector<std::string>& names, unsigned k) {
  return std::vector<std::string>(names.begin(), names.begin() + k);
}

inline Json levelsToJson(const std::vector<Level>& levels, unsigned fromLevel,
                         const std::vector<std::string>& names) {
  Json out = Json::array();
  for (unsigned k = static_cast<unsigned>(levels.size()); k >= fromLevel && k >= 1; --k) {
    const Level& L = levels[k - 1];
    Json jl;
    jl["level"] = k;
    Json inputs = Json::array();
    for (const auto& p : L.inputs) inputs.push_back(printPolynomial(p, levelNames(names, k)));
    jl["inputs"] = std::move(inputs);
    Json basis = Json::array();
    for (const auto& p : L.basis.elements) basis.push_back(printPolynomial(p, levelNames(names, k)));
    jl["basis"] = std::move(basis);
    Json contents = Json::array();
    for (const auto& p : L.contents)
      contents.push_back(printPolynomial(p, levelNames(names, k - 1)));
    jl["contents"] = std::move(contents);
    if (L.projection) jl["projection"] = toJson(*L.projection, levelNames(names, k - 1));
    out.push_back(std::move(jl));
    if (k == fromLevel) break;
  }
  return out;
}

inline std::string renderSample(const Tower& t) {
  std::string s = "(";
  for (unsigned i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    if (t.isRational(i)) {
      s += toString(t.coord(i).rationalValue());
    } else {
      const Interval& iv = t.coord(i).interval();
      s += "root in [" + toString(iv.lo) + ", " + toString(iv.hi) + "]";
    }
  }
  return s + ")";
}

inline Json runCad(const ProblemFile& problem, const RunOptions& opt, std::string& text) {
  unsigned n = problem.dimension();
  std::vector<Polynomial> inputs = problem.polynomials;
  if (opt.maxLevel && *opt.maxLevel < n) {
    auto levels = projectionPhase(inputs, n, *opt.maxLevel);
    n = *opt.maxLevel;
    inputs = levels[n - 1].inputs;
  }
  Decomposition D = vcadl(inputs, n);
  Json j;
  j["dimension"] = D.dimension;
  j["cellCount"] = D.cells().size();
  Json perLevel = Json::array();
  for (const auto& cl : D.cellsPerLevel) perLevel.push_back(cl.size());
  j["cellsPerLevel"] = std::move(perLevel);
  j["levels"] = levelsToJson(D.levels, 1, problem.variables);
  Json cells = Json::array();
  for (const Cell& c : D.cells()) cells.push_back(cellToJson(c, problem.variables));
  j["cells"] = std::move(cells);

  std::ostringstream out;
  out << "CAD of R^" << D.dimension << " for " << D.inputs.size() << " input polynomial(s): "
      << D.cells().size() << " cells\n";
  for (const Cell& c : D.cells()) {
    out << "  " << toString(c.index) << "  sample " << renderSample(c.sample) << "  ";
    for (std::size_t i = 0; i < c.signatures.size(); ++i) {
      if (i) out << " ";
      out << "v=" << toString(c.signatures[i]) << " sign=" << c.signs[i];
    }
    out << "\n";
  }

  if (opt.delineability && D.dimension >= 2) {
    Decomposition base = baseOf(D);
    Json checks = Json::array();
    out << "delineability probes (seed " << opt.seed << ", " << opt.probes << " per cell):\n";
    for (const Polynomial& f : D.inputs) {
      auto verdicts = checkDelineability(f, base, opt.probes, opt.seed);
      Json jf;
      jf["poly"] = printPolynomial(f, problem.variables);
      Json cellsJson = Json::array();
      for (const auto& v : verdicts) {
        Json jv;
        jv["cell"] = Json(v.cell);
        jv["delineable"] = v.delineable;
        jv["vtuple"] = toJson(v.vTuple);
        jv["rootCount"] = v.rootCount;
        jv["multiplicities"] = Json(v.multiplicities);
        if (!v.delineable) jv["failure"] = v.failure;
        cellsJson.push_back(std::move(jv));
        out << "  " << printPolynomial(f, problem.variables) << " over " << toString(v.cell)
            << ": " << (v.delineable ? "delineable" : ("FAILED: " + v.failure)) << "\n";
      }
      jf["cells"] = std::move(cellsJson);
      checks.push_back(std::move(jf));
    }
    j["delineability"] = std::move(checks);
  }
  text = out.str();
  return j;
}

inline Json runProject(const ProblemFile& problem, const RunOptions& opt, std::string& text) {
  unsigned n = problem.dimension();
  checkInput(n >= 2, "projection needs at least two variables");
  unsigned stop = opt.maxLevel ? std::max(1u, std::min(*opt.maxLevel, n - 1)) : n - 1;
  auto levels = projectionPhase(problem.polynomials, n, stop);
  Json j;
  j["levels"] = levelsToJson(levels, stop + 1, problem.variables);

  std::ostringstream out;
  for (unsigned k = n; k > stop; --k) {
    const Level& L = levels[k - 1];
    out << "level " << k << " -> " << (k - 1) << ":\n";
    out << "  basis:";
    for (const auto& p : L.basis.elements)
      out << " " << printPolynomial(p, levelNames(problem.variables, k));
    out << "\n  contents:";
    for (const auto& p : L.contents)
      out << " " << printPolynomial(p, levelNames(problem.variables, k - 1));
    out << "\n  projection:\n";
    if (L.projection) {
      for (const auto& e : L.projection->entries) {
        out << "    " << printPolynomial(e.poly, levelNames(problem.variables, k - 1)) << "   [";
        for (std::size_t i = 0; i < e.provenance.size(); ++i) {
          if (i) out << ", ";
          out << provenanceKindName(e.provenance[i].kind) << " of #" << e.provenance[i].source;
          if (e.provenance[i].source2) out << ",#" << *e.provenance[i].source2;
        }
        out << "]\n";
      }
    }
  }
  text = out.str();
  return j;
}

inline Json runValuation(const ProblemFile& problem, const RunOptions& opt, std::string& text) {
  checkInput(opt.point.has_value(), "valuation requires --point");
  checkInput(opt.point->size() == problem.dimension(),
             "valuation point must have one coordinate per variable");
  Json results = Json::array();
  std::ostringstream out;
  Json j;
  Json pt = Json::array();
  for (const auto& v : *opt.point) pt.push_back(toString(v));
  j["point"] = std::move(pt);
  for (const Polynomial& f : problem.polynomials) {
    Valuation v = valuationAt(f, *opt.point);
    int s = signAt(f, Tower::fromRationals(*opt.point));
    Json jr;
    jr["poly"] = printPolynomial(f, problem.variables);
    jr["valuation"] = toJson(v);
    jr["sign"] = s;
    results.push_back(std::move(jr));
    out << printPolynomial(f, problem.variables) << ": valuation " << toString(v) << ", sign " << s
        << "\n";
  }
  j["valuations"] = std::move(results);
  text = out.str();
  return j;
}

inline Json runEval(const ProblemFile& problem, const RunOptions& opt, std::string& text) {
  checkInput(opt.point.has_value(), "eval requires --point");
  checkInput(opt.point->size() + 1 == problem.dimension(),
             "eval point must have one coordinate per variable except the last");
  Json results = Json::array();
  std::ostringstream out;
  Json j;
  Json pt = Json::array();
  for (const auto& v : *opt.point) pt.push_back(toString(v));
  j["point"] = std::move(pt);
  for (const Polynomial& f : problem.polynomials) {
    LazardEvalResult ev = lazardEvaluate(f, *opt.point);
    Json jr;
    jr["poly"] = printPolynomial(f, problem.variables);
    jr["vtuple"] = toJson(ev.vTuple);
    jr["residual"] = printPolynomial(ev.residual, problem.variables);
    results.push_back(std::move(jr));
    out << printPolynomial(f, problem.variables) << ": vtuple " << toString(ev.vTuple)
        << ", residual " << printPolynomial(ev.residual, problem.variables) << "\n";
  }
  j["evaluations"] = std::move(results);
  text = out.str();
  return j;
}

inline Json runCompareProjections(const ProblemFile& problem, std::string& text) {
  unsigned n = problem.dimension();
  checkInput(n >= 2, "projection needs at least two variables");
  std::vector<Polynomial> prims;
  for (const Polynomial& f : problem.polynomials) {
    checkInput(f.degree(n - 1) > 0, "inputs must have positive degree in the main variable");
    prims.push_back(contentAndPrimitiveWrt(f, n - 1).second);
  }
  BasisSet basis = squarefreeBasis(prims, n, n - 1);
  ProjectionComparison cmp = compareProjections(basis);
  auto baseNames = levelNames(problem.variables, n - 1);
  Json j;
  Json basisJson = Json::array();
  for (const auto& p : basis.elements) basisJson.push_back(printPolynomial(p, problem.variables));
  j["basis"] = std::move(basisJson);
  auto statsJson = [](const ProjectionStats& s) {
    Json js;
    js["count"] = s.count;
    js["maxTotalDegree"] = s.maxTotalDegree;
    js["sumTotalDegrees"] = s.sumTotalDegrees;
    return js;
  };
  j["brownMccallum"] = toJson(cmp.brownMccallum, baseNames);
  j["lazard"] = toJson(cmp.lazard, baseNames);
  j["mccallum"] = toJson(cmp.mccallum, baseNames);
  j["stats"] = Json{{"brownMccallum", statsJson(cmp.statsBM)},
                    {"lazard", statsJson(cmp.statsL)},
                    {"mccallum", statsJson(cmp.statsM)}};
  j["bmSubsetOfLazard"] = cmp.bmSubsetOfL;
  j["lazardSubsetOfMccallum"] = cmp.lSubsetOfM;
  Json w1 = Json::array(), w2 = Json::array();
  for (const auto& p : cmp.inLNotInBM) w1.push_back(printPolynomial(p, baseNames));
  for (const auto& p : cmp.inMNotInL) w2.push_back(printPolynomial(p, baseNames));
  j["inLazardNotInBM"] = std::move(w1);
  j["inMccallumNotInLazard"] = std::move(w2);

  std::ostringstream out;
  out << "basis size " << basis.elements.size() << "\n";
  out << "P_BM: " << cmp.statsBM.count << " elems, P_L: " << cmp.statsL.count
      << " elems, P_M: " << cmp.statsM.count << " elems\n";
  out << "P_BM subset of P_L: " << (cmp.bmSubsetOfL ? "yes" : "NO")
      << (cmp.inLNotInBM.empty() ? " (equal)" : " (strict)") << "\n";
  out << "P_L subset of P_M: " << (cmp.lSubsetOfM ? "yes" : "NO")
      << (cmp.inMNotInL.empty() ? " (equal)" : " (strict)") << "\n";
  text = out.str();
  return j;
}

}  // namespace detail

/// Dispatches one command against a parsed problem. Throws input_error for
/// bad requests, internal_error for broken invariants.
inline RunReport runCommand(const ProblemFile& problem, const RunOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  RunReport report;
  Json j = detail::reportHeader(problem, opt);
  if (opt.command == Command::Cad || opt.command == Command::Project) j["seed"] = opt.seed;
  std::string text;
  switch (opt.command) {
    case Command::Cad: j.update(detail::runCad(problem, opt, text)); break;
    case Command::Project: j.update(detail::runProject(problem, opt, text)); break;
    case Command::Valuation: j.update(detail::runValuation(problem, opt, text)); break;
    case Command::Eval: j.update(detail::runEval(problem, opt, text)); break;
    case Command::CompareProjections: j.update(detail::runCompareProjections(problem, text)); break;
  }
  report.payload = std::move(j);
  auto end = std::chrono::steady_clock::now();
  report.elapsedMs = std::chrono::duration<double, std::milli>(end - start).count();
  report.text = text;
  return report;
}

/// Comma-separated rationals, e.g. "0,1/2,-3".
inline std::vector<Rational> parsePointList(const std::string& text) {
  std::vector<Rational> point;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = detail::trimmed(comma == std::string::npos ? text.substr(pos)
                                                                  : text.substr(pos, comma - pos));
    point.push_back(parseRational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return point;
}

}  // namespace lazard
