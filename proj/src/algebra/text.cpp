#include "kvn/algebra/text.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "kvn/errors.hpp"

namespace kvn::algebra {

namespace {

const char* kind_prefix(PhaseKind k) {
  switch (k) {
    case PhaseKind::kPosition: return "q";
    case PhaseKind::kMomentum: return "p";
    case PhaseKind::kLambdaQ: return "lq";
    case PhaseKind::kLambdaP: return "lp";
  }
  return "?";
}

void append_power(std::string& out, const std::string& name, int e) {
  if (e == 0) return;
  out += "*";
  out += name;
  if (e > 1) out += "^" + std::to_string(e);
}

std::string render_term(const Rational& c, bool imaginary, int hbar_power, const std::string& factors) {
  std::string out = "(" + c.get_str() + ")";
  if (imaginary) out += "*i";
  append_power(out, "hbar", hbar_power);
  out += factors;
  return out;
}

std::optional<PhaseIndex> lookup_symbol(const std::string& name, int ndof) {
  for (PhaseKind kind : {PhaseKind::kPosition, PhaseKind::kMomentum, PhaseKind::kLambdaQ, PhaseKind::kLambdaP})
    for (int j = 0; j < ndof; ++j)
      if (name == symbol_name({kind, j}, ndof)) return PhaseIndex{kind, j};
  if (ndof == 3) {
    static const char* axes[] = {"x", "y", "z"};
    for (int j = 0; j < 3; ++j) {
      const std::string a = axes[j];
      if (name == a) return PhaseIndex::q(j);
      if (name == "p" + a) return PhaseIndex::p(j);
      if (name == "l" + a) return PhaseIndex::lq(j);
      if (name == "lp" + a) return PhaseIndex::lp(j);
    }
  }
  return std::nullopt;
}

// Value policies for the shared recursive-descent parser.
struct OperatorRing {
  using Value = OperatorPolynomial;
  int ndof;

  Value constant(const ComplexRational& c) const { return OperatorPolynomial::constant(ndof, HbarCoefficient(c)); }
  Value hbar() const { return OperatorPolynomial::constant(ndof, HbarCoefficient::hbar()); }
  Value imaginary_unit() const { return constant(ComplexRational::i()); }
  std::optional<Value> symbol(const std::string& name) const {
    auto idx = lookup_symbol(name, ndof);
    if (!idx) return std::nullopt;
    return OperatorPolynomial::symbol(ndof, *idx);
  }
  Value mul(const Value& a, const Value& b) const { return multiply(a, b); }
  std::optional<Rational> as_rational(const Value& v) const {
    if (v.is_zero()) return Rational(0);
    if (v.terms().size() != 1) return std::nullopt;
    const auto& [m, c] = *v.terms().begin();
    if (!m.is_identity() || c.terms().size() != 1 || c.terms().front().first != 0) return std::nullopt;
    if (sgn(c.terms().front().second.im) != 0) return std::nullopt;
    return c.terms().front().second.re;
  }
  Value scale_by(const Value& v, const Rational& r) const { return scale(v, HbarCoefficient(ComplexRational(r))); }
};

struct ClassicalRing {
  using Value = ClassicalPolynomial;
  int ndof;

  Value constant(const ComplexRational& c) const {
    if (sgn(c.im) != 0) throw UnsupportedInputError("classical polynomials have real coefficients");
    return ClassicalPolynomial::constant(ndof, c.re);
  }
  Value hbar() const { throw UnsupportedInputError("hbar is not a classical symbol"); }
  Value imaginary_unit() const { throw UnsupportedInputError("classical polynomials have real coefficients"); }
  std::optional<Value> symbol(const std::string& name) const {
    auto idx = lookup_symbol(name, ndof);
    if (!idx) return std::nullopt;
    if (is_lambda(idx->kind))
      throw UnsupportedInputError("symbol '" + name + "' does not commute; classical polynomials use q and p only");
    return ClassicalPolynomial::variable(ndof, *idx);
  }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  std::optional<Rational> as_rational(const Value& v) const {
    if (v.is_zero()) return Rational(0);
    if (v.terms().size() != 1) return std::nullopt;
    const auto& [m, c] = *v.terms().begin();
    if (m.degree() != 0) return std::nullopt;
    return c;
  }
  Value scale_by(const Value& v, const Rational& r) const { return v * r; }
};

template <class Ring>
class Parser {
 public:
  using Value = typename Ring::Value;

  Parser(std::string_view text, Ring ring) : text_(text), ring_(ring) {}

  Value parse() {
    Value v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    int line = 1;
    int column = 1;
    for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expression() {
    Value acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    while (true) {
      if (accept('*')) {
        acc = ring_.mul(acc, unary());
      } else if (accept('/')) {
        const size_t at = pos_;
        Value d = unary();
        auto r = ring_.as_rational(d);
        if (!r) {
          pos_ = at;
          throw UnsupportedInputError("division by a non-constant expression is not polynomial");
        }
        if (sgn(*r) == 0) {
          pos_ = at;
          fail("division by zero");
        }
        acc = ring_.scale_by(acc, 1 / *r);
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (accept('-')) return ring_.scale_by(unary(), Rational(-1));
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (!accept('^')) return base;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') throw UnsupportedInputError("negative exponents are not polynomial");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a non-negative integer exponent");
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') throw UnsupportedInputError("fractional exponents are not polynomial");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    Value out = ring_.constant(ComplexRational(1));
    for (int k = 0; k < e; ++k) out = ring_.mul(out, base);
    return out;
  }

  Value atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expression();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return ring_.imaginary_unit();
      if (name == "hbar") return ring_.hbar();
      if (auto v = ring_.symbol(name)) return *v;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '(')
        throw UnsupportedInputError("function '" + name + "' is not supported; only polynomials are");
      pos_ = start;
      throw UnsupportedInputError("unknown symbol '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  // Decimal literals are converted exactly: 0.25 -> 1/4.
  Value number() {
    const size_t start = pos_;
    std::string digits;
    int decimals = 0;
    bool seen_point = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (seen_point) ++decimals;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) fail("exponent notation is not supported");
    Rational value(mpz_class(digits), 1);
    mpz_class den = 1;
    for (int k = 0; k < decimals; ++k) den *= 10;
    value /= Rational(den);
    value.canonicalize();
    return ring_.constant(ComplexRational(value));
  }

  std::string_view text_;
  Ring ring_;
  size_t pos_ = 0;
};

}  // namespace

std::string symbol_name(PhaseIndex idx, int ndof) {
  std::string name = kind_prefix(idx.kind);
  if (ndof > 1) name += std::to_string(idx.dof + 1);
  return name;
}

std::string render(const OperatorPolynomial& a) {
  if (a.is_zero()) return "0";
  const int n = a.ndof();
  std::vector<std::string> terms;
  for (const auto& [m, c] : a.terms()) {
    std::string factors;
    for (PhaseKind kind : {PhaseKind::kPosition, PhaseKind::kMomentum, PhaseKind::kLambdaQ, PhaseKind::kLambdaP})
      for (int j = 0; j < n; ++j) append_power(factors, symbol_name({kind, j}, n), m.exponent({kind, j}));
    for (const auto& [k, coef] : c.terms()) {
      if (sgn(coef.re) != 0) terms.push_back(render_term(coef.re, false, k, factors));
      if (sgn(coef.im) != 0) terms.push_back(render_term(coef.im, true, k, factors));
    }
  }
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i];
  }
  return out;
}

std::string render(const ClassicalPolynomial& f) {
  if (f.is_zero()) return "0";
  const int n = f.ndof();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string factors;
    for (PhaseKind kind : {PhaseKind::kPosition, PhaseKind::kMomentum})
      for (int j = 0; j < n; ++j) append_power(factors, symbol_name({kind, j}, n), m.exponent({kind, j}));
    if (!first) out += " + ";
    out += render_term(c, false, 0, factors);
    first = false;
  }
  return out;
}

OperatorPolynomial parse_operator(std::string_view text, int ndof) {
  return Parser<OperatorRing>(text, OperatorRing{ndof}).parse();
}

ClassicalPolynomial parse_classical(std::string_view text, int ndof) {
  return Parser<ClassicalRing>(text, ClassicalRing{ndof}).parse();
}

}  // namespace kvn::algebra
