#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lazard/monomial.hpp"
#include "lazard/rational.hpp"

namespace lazard {

/// Sparse multivariate polynomial over the rationals with a fixed variable
/// count. No zero coefficients are ever stored; the zero polynomial has an
/// empty term map. Term iteration is graded-lex ascending, so printing and
/// canonical comparison are stable.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  explicit Polynomial(unsigned varCount = 0) : varCount_(varCount) {}

  static Polynomial constant(unsigned varCount, Rational c) {
    Polynomial p(varCount);
    if (c != 0) p.terms_.emplace(Monomial(varCount), std::move(c));
    return p;
  }

  static Polynomial variable(unsigned varCount, unsigned var) {
    checkInput(var < varCount, "variable index out of range");
    Monomial m(varCount);
    m.exponents[var] = 1;
    Polynomial p(varCount);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  static Polynomial term(unsigned varCount, Monomial m, Rational c) {
    checkInput(m.size() == varCount, "monomial length does not match variable count");
    Polynomial p(varCount);
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  unsigned varCount() const { return varCount_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  bool isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.totalDegree() == 0);
  }

  Rational constantValue() const {
    checkInternal(isConstant(), "constantValue on a nonconstant polynomial");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Accumulates c * m into the polynomial, pruning a cancelled term.
  void addTerm(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    checkInternal(m.size() == varCount_, "monomial length does not match variable count");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Degree in one variable; -1 for the zero polynomial.
  int degree(unsigned var) const {
    checkInput(var < varCount_, "variable index out of range");
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exponents[var]));
    return d;
  }

  int totalDegree() const {
    if (terms_.empty()) return -1;
    // Graded-lex: the map's last key has maximal total degree.
    return static_cast<int>(terms_.rbegin()->first.totalDegree());
  }

  /// Per-variable maximal exponents (all zero for the zero polynomial).
  std::vector<std::uint32_t> degreeBounds() const {
    std::vector<std::uint32_t> b(varCount_, 0);
    for (const auto& [m, c] : terms_)
      for (unsigned i = 0; i < varCount_; ++i) b[i] = std::max(b[i], m.exponents[i]);
    return b;
  }

  bool usesVariable(unsigned var) const {
    for (const auto& [m, c] : terms_)
      if (m.exponents[var] > 0) return true;
    return false;
  }

  /// Greatest graded-lex term. Requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leadingTerm() const {
    checkInternal(!terms_.empty(), "leadingTerm of zero polynomial");
    return *terms_.rbegin();
  }

  Polynomial operator-() const {
    Polynomial r(varCount_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    checkInput(varCount_ == o.varCount_, "variable count mismatch");
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    checkInput(varCount_ == o.varCount_, "variable count mismatch");
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    checkInput(a.varCount_ == b.varCount_, "variable count mismatch");
    Polynomial r(a.varCount_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.addTerm(ma.times(mb), ca * cb);
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& c) const {
    Polynomial r(varCount_);
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(varCount_, 1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) r = r * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return r;
  }

  /// Exact partial derivative with respect to x_{var}.
  Polynomial derivative(unsigned var) const {
    checkInput(var < varCount_, "variable index out of range");
    Polynomial r(varCount_);
    for (const auto& [m, c] : terms_) {
      if (m.exponents[var] == 0) continue;
      Monomial dm = m;
      dm.exponents[var] -= 1;
      r.addTerm(dm, c * Rational(m.exponents[var]));
    }
    return r;
  }

  /// Dense coefficient list with respect to x_{var}: entry k is the
  /// coefficient of x_{var}^k, a polynomial with exponent 0 in x_{var}.
  std::vector<Polynomial> coefficientsWrt(unsigned var) const {
    checkInput(var < varCount_, "variable index out of range");
    int d = degree(var);
    std::vector<Polynomial> cs(static_cast<std::size_t>(d + 1), Polynomial(varCount_));
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      unsigned k = rest.exponents[var];
      rest.exponents[var] = 0;
      cs[k].addTerm(rest, c);
    }
    return cs;
  }

  static Polynomial fromCoefficientsWrt(unsigned varCount, unsigned var,
                                        const std::vector<Polynomial>& cs) {
    Polynomial r(varCount);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      for (const auto& [m, c] : cs[k].terms_) {
        Monomial mm = m;
        mm.exponents[var] += static_cast<std::uint32_t>(k);
        r.addTerm(mm, c);
      }
    }
    return r;
  }

  /// Substitutes a rational value for x_{var}; the variable becomes unused.
  Polynomial substitute(unsigned var, const Rational& value) const {
    checkInput(var < varCount_, "variable index out of range");
    Polynomial r(varCount_);
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      unsigned e = mm.exponents[var];
      mm.exponents[var] = 0;
      r.addTerm(mm, e == 0 ? c : c * rationalPow(value, e));
    }
    return r;
  }

  /// Substitutes a polynomial (same ring) for x_{var}.
  Polynomial substitute(unsigned var, const Polynomial& value) const {
    checkInput(var < varCount_, "variable index out of range");
    checkInput(value.varCount_ == varCount_, "variable count mismatch");
    auto cs = coefficientsWrt(var);
    Polynomial r(varCount_);  // Horner
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) r = r * value + *it;
    return r;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    checkInput(point.size() == varCount_, "point dimension mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (unsigned i = 0; i < varCount_; ++i)
        if (m.exponents[i] > 0) t *= rationalPow(point[i], m.exponents[i]);
      acc += t;
    }
    return acc;
  }

  /// Reinterprets in a ring with one fewer variable. The last variable must
  /// be unused.
  Polynomial dropLastVariable() const {
    checkInternal(varCount_ > 0 && !usesVariable(varCount_ - 1),
                  "dropLastVariable: last variable is in use");
    Polynomial r(varCount_ - 1);
    for (const auto& [m, c] : terms_) {
      Monomial mm(std::vector<std::uint32_t>(m.exponents.begin(), m.exponents.end() - 1));
      r.terms_.emplace(std::move(mm), c);
    }
    return r;
  }

  /// Re-embeds into a ring with `newCount` variables. Shrinking requires the
  /// removed variables to be unused.
  Polynomial withVarCount(unsigned newCount) const {
    if (newCount == varCount_) return *this;
    Polynomial r(newCount);
    for (const auto& [m, c] : terms_) {
      for (unsigned i = newCount; i < varCount_; ++i)
        checkInternal(m.exponents[i] == 0, "withVarCount: dropped variable is in use");
      std::vector<std::uint32_t> e(m.exponents.begin(),
                                   m.exponents.begin() + std::min(newCount, varCount_));
      e.resize(newCount, 0);
      r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return varCount_ == o.varCount_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  unsigned varCount_;
  TermMap terms_;
};

/// Deterministic total order on polynomials (variable count, then terms from
/// the graded-lex top down). Used to keep sets and reports canonical.
inline int comparePolynomials(const Polynomial& a, const Polynomial& b) {
  if (a.varCount() != b.varCount()) return a.varCount() < b.varCount() ? -1 : 1;
  auto ia = a.terms().rbegin(), ea = a.terms().rend();
  auto ib = b.terms().rbegin(), eb = b.terms().rend();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    int mc = gradedLexCompare(ia->first, ib->first);
    if (mc != 0) return mc;
    int cc = cmp(ia->second, ib->second);
    if (cc != 0) return cc < 0 ? -1 : 1;
  }
  if (ia != ea) return 1;
  if (ib != eb) return -1;
  return 0;
}

struct PolynomialLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const {
    return comparePolynomials(a, b) < 0;
  }
};

/// Taylor shift: the polynomial in shifted variables X_i = x_i - alpha_i for
/// the first `shiftCount` variables, i.e. f(X_1 + a_1, ..., X_k + a_k,
/// x_{k+1}, ...). Exact; shifting back at -alpha is the inverse.
inline Polynomial expandAbout(const Polynomial& f, const std::vector<Rational>& alpha,
                              unsigned shiftCount) {
  checkInput(shiftCount <= f.varCount(), "shift count exceeds variable count");
  checkInput(alpha.size() >= shiftCount, "point dimension mismatch");
  Polynomial g = f;
  for (unsigned i = 0; i < shiftCount; ++i) {
    if (alpha[i] == 0 || !g.usesVariable(i)) continue;
    auto cs = g.coefficientsWrt(i);
    std::size_t d = cs.size() - 1;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = d - 1; k + 1 > j; --k) cs[k] += cs[k + 1].scaled(alpha[i]);
    g = Polynomial::fromCoefficientsWrt(f.varCount(), i, cs);
  }
  return g;
}

inline Polynomial expandAbout(const Polynomial& f, const std::vector<Rational>& alpha) {
  return expandAbout(f, alpha, static_cast<unsigned>(alpha.size()));
}

/// Single-divisor division: returns q with f = q*g when g divides f exactly,
/// std::nullopt otherwise.
inline std::optional<Polynomial> tryDivideExact(const Polynomial& f, const Polynomial& g) {
  checkInput(f.varCount() == g.varCount(), "variable count mismatch");
  checkInput(!g.isZero(), "division by the zero polynomial");
  Polynomial q(f.varCount());
  Polynomial r = f;
  const auto& [gm, gc] = g.leadingTerm();
  while (!r.isZero()) {
    const auto& [rm, rc] = r.leadingTerm();
    if (!gm.divides(rm)) return std::nullopt;
    Monomial qm = rm.dividedBy(gm);
    Rational qc = rc / gc;
    q.addTerm(qm, qc);
    r -= g * Polynomial::term(f.varCount(), qm, qc);
  }
  return q;
}

inline Polynomial exactDivide(const Polynomial& f, const Polynomial& g) {
  auto q = tryDivideExact(f, g);
  checkInternal(q.has_value(), "exact division failed");
  return *q;
}

// ---------------------------------------------------------------------------
// Canonical text format: `^` for powers, `*` between factors (optional on
// input), terms joined with ` + ` / ` - `, graded-lex leading term first.
// ---------------------------------------------------------------------------

inline std::vector<std::string> defaultVariableNames(unsigned varCount) {
  std::vector<std::string> names;
  names.reserve(varCount);
  for (unsigned i = 0; i < varCount; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

inline std::string printPolynomial(const Polynomial& f, const std::vector<std::string>& names) {
  checkInput(names.size() >= f.varCount(), "not enough variable names");
  if (f.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    Rational a = abs(c);
    bool wroteCoeff = false;
    if (a != 1 || m.totalDegree() == 0) {
      out << toString(a);
      wroteCoeff = true;
    }
    bool firstVar = !wroteCoeff;
    for (unsigned i = 0; i < f.varCount(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (!firstVar) out << "*";
      firstVar = false;
      out << names[i];
      if (m.exponents[i] > 1) out << "^" << m.exponents[i];
    }
  }
  return out.str();
}

inline std::string printPolynomial(const Polynomial& f) {
  return printPolynomial(f, defaultVariableNames(f.varCount()));
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  return os << printPolynomial(f);
}

namespace detail {

struct PolyParser {
  const std::string& text;
  const std::vector<std::string>& names;
  unsigned varCount;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw input_error("column " + std::to_string(pos + 1) + ": " + msg);
  }

  void skipSpace() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skipSpace();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }

  Integer parseNatural() {
    skipSpace();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Integer(text.substr(start, pos - start));
  }

  std::string parseName() {
    skipSpace();
    std::size_t start = pos;
    if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected a variable name");
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  unsigned variableIndex(const std::string& name) {
    for (unsigned i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    fail("undeclared variable '" + name + "'");
  }

  // factor := rational | name ('^' natural)?
  Polynomial parseFactor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parseNatural();
      Rational q(num);
      if (eat('/')) {
        Integer den = parseNatural();
        if (den == 0) fail("zero denominator");
        q = Rational(num, den);
        q.canonicalize();
      }
      return Polynomial::constant(varCount, q);
    }
    std::string name = parseName();
    unsigned idx = variableIndex(name);
    unsigned e = 1;
    if (eat('^')) {
      Integer n = parseNatural();
      if (!n.fits_uint_p()) fail("exponent too large");
      e = static_cast<unsigned>(n.get_ui());
    }
    Monomial m(varCount);
    m.exponents[idx] = e;
    return Polynomial::term(varCount, m, Rational(1));
  }

  bool startsFactor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  // term := factor (('*')? factor)*
  Polynomial parseTerm() {
    Polynomial t = parseFactor();
    while (true) {
      if (eat('*')) {
        t = t * parseFactor();
      } else if (startsFactor()) {
        t = t * parseFactor();
      } else {
        break;
      }
    }
    return t;
  }

  Polynomial parseSum() {
    Polynomial acc(varCount);
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    while (true) {
      Polynomial t = parseTerm();
      acc += negative ? -t : t;
      skipSpace();
      if (eat('+'))
        negative = false;
      else if (eat('-'))
        negative = true;
      else
        break;
    }
    skipSpace();
    if (pos != text.size()) fail("unexpected character '" + std::string(1, text[pos]) + "'");
    return acc;
  }
};

}  // namespace detail

/// Parses the canonical text format against a declared variable list.
/// Round-trips exactly with printPolynomial.
inline Polynomial parsePolynomial(const std::string& text, const std::vector<std::string>& names) {
  detail::PolyParser parser{text, names, static_cast<unsigned>(names.size())};
  return parser.parseSum();
}

inline Polynomial parsePolynomial(const std::string& text, unsigned varCount) {
  return parsePolynomial(text, defaultVariableNames(varCount));
}

}  // namespace lazard
