#include "recur/parse.hpp"

#include <cctype>

#include "recur/errors.hpp"

namespace recur {

namespace {

struct ExprParser {
  const std::string& s;
  const std::string& var;
  std::size_t pos = 0;

  ExprParser(const std::string& text, const std::string& v) : s(text), var(v) {}

  [[noreturn]] void bad(const std::string& expected) {
    fail(ErrorCode::SyntaxError,
         "position " + std::to_string(pos) + ": expected " + expected);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) bad(std::string("'") + c + "'");
  }

  bool at_ident_start() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) bad("integer");
    return mpz_class(s.substr(start, pos - start));
  }

  Rat unsigned_rational() {
    mpz_class num = integer();
    if (eat('/')) {
      mpz_class den = integer();
      if (den == 0) bad("nonzero denominator");
      return Rat::from_mpz(num, den);
    }
    return Rat(num);
  }

  /// rational with optional sign; used inside exponent parentheses
  Rat signed_rational() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Rat r = unsigned_rational();
    return neg ? -r : r;
  }

  /// sum of monomials in the integration variable
  Poly poly() {
    Poly acc;
    bool first = true;
    for (;;) {
      skip_ws();
      bool neg = false;
      if (eat('-')) neg = true;
      else if (eat('+')) neg = false;
      else if (!first) break;
      first = false;
      Poly m = mono();
      acc += neg ? -m : m;
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
    }
    return acc;
  }

  Poly mono() {
    Rat coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = unsigned_rational();
      have_coeff = true;
      if (!eat('*')) return Poly(coeff);  // constant term
    }
    if (!at_ident_start()) {
      if (have_coeff) bad("'" + var + "' after '*'");
      bad("term");
    }
    std::size_t save = pos;
    std::string name = ident();
    if (name != var) {
      pos = save;
      bad("'" + var + "' (unknown symbol '" + name + "')");
    }
    unsigned long k = 1;
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      mpz_class e = integer();
      if (e < 0 || e > 64) {
        pos = start;
        bad("small nonnegative power of " + var);
      }
      k = mpz_get_ui(e.get_mpz_t());
    }
    std::vector<Rat> cs(k + 1, Rat(0));
    cs[k] = coeff;
    return Poly(std::move(cs));
  }

  Rat exponent() {
    skip_ws();
    if (eat('(')) {
      if (at_ident_start()) {
        std::string name = ident();
        fail(ErrorCode::SymbolicExponent,
             "exponent '" + name + "' must be a rational literal");
      }
      Rat e = signed_rational();
      expect(')');
      return e;
    }
    if (at_ident_start()) {
      std::string name = ident();
      fail(ErrorCode::SymbolicExponent,
           "exponent '" + name + "' must be a rational literal");
    }
    if (peek() == '-') bad("parenthesized negative exponent, e.g. ^(-2)");
    return Rat(integer());
  }

  Integrand product() {
    Integrand out;
    if (eat('-')) out.cofactor = -out.cofactor;
    for (;;) {
      item(out);
      skip_ws();
      if (!eat('*')) break;
    }
    skip_ws();
    if (pos != s.size()) bad("'*' or end of input");
    return out;
  }

  void item(Integrand& out) {
    skip_ws();
    if (at_ident_start()) {
      std::size_t save = pos;
      std::string name = ident();
      if (name == "exp" || name == "cos" || name == "sin") {
        expect('(');
        Poly arg = poly();
        expect(')');
        if (arg.degree() != 1) {
          pos = save;
          fail(ErrorCode::UnsupportedForm,
               name + " argument must have degree 1");
        }
        if (out.transc) {
          pos = save;
          fail(ErrorCode::UnsupportedForm, "multiple transcendental factors");
        }
        TranscKind kind = name == "exp" ? TranscKind::Exp
                          : name == "cos" ? TranscKind::Cos
                                          : TranscKind::Sin;
        out.transc = TranscFactor{kind, arg};
        return;
      }
      if (name == var) {
        // bare monomial, e.g. x or x^3
        Poly base = Poly::x();
        if (peek() == '^') {
          ++pos;
          Rat e = exponent();
          out.factors.push_back(PowerFactor{base, e});
        } else {
          out.cofactor *= base;
        }
        return;
      }
      pos = save;
      bad("factor (unknown symbol '" + name + "')");
    }
    if (peek() == '(') {
      ++pos;
      Poly base = poly();
      expect(')');
      if (peek() == '^') {
        ++pos;
        Rat e = exponent();
        if (base.is_constant()) {
          auto scale = base.coeff(0).pow_rat(e);
          if (!scale)
            fail(ErrorCode::UnsupportedForm,
                 "constant base with irrational power");
          out.cofactor *= *scale;
        } else {
          out.factors.push_back(PowerFactor{base, e});
        }
      } else {
        out.cofactor *= base;
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      out.cofactor *= unsigned_rational();
      return;
    }
    bad("factor");
  }
};

}  // namespace

Integrand parse_expr(const std::string& text, const std::string& var) {
  ExprParser p(text, var);
  Integrand raw = p.product();
  return normalize(raw);
}

Poly parse_poly(const std::string& text, const std::string& var) {
  ExprParser p(text, var);
  Poly out = p.poly();
  p.skip_ws();
  if (p.pos != text.size()) p.bad("end of polynomial");
  return out;
}

}  // namespace recur
