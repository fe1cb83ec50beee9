#include "recur/expr.hpp"

#include <cctype>

#include "recur/errors.hpp"

namespace recur {

namespace {

struct TemplateParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit TemplateParser(const std::string& text) : s(text) {}

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
  [[noreturn]] void bad(const std::string& why) {
    fail(ErrorCode::Internal, "template parse error at offset " + std::to_string(pos) +
                                  " in \"" + s + "\": " + why);
  }

  static ExprPtr mk(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos != s.size()) bad("trailing input");
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = peek() == '-' || peek() == '+' ? signed_term() : term();
    for (;;) {
      if (eat('+')) {
        lhs = mk({Expr::Kind::Add, {}, {}, lhs, term(), 0});
      } else if (eat('-')) {
        lhs = mk({Expr::Kind::Sub, {}, {}, lhs, term(), 0});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr signed_term() {
    if (eat('-')) return mk({Expr::Kind::Neg, {}, {}, signed_term(), nullptr, 0});
    eat('+');
    return term();
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      if (eat('*')) {
        lhs = mk({Expr::Kind::Mul, {}, {}, lhs, factor(), 0});
      } else if (eat('/')) {
        lhs = mk({Expr::Kind::Div, {}, {}, lhs, factor(), 0});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) bad("expected integer exponent");
      unsigned long p = std::stoul(s.substr(start, pos - start));
      return mk({Expr::Kind::Pow, {}, {}, base, nullptr, static_cast<unsigned>(p)});
    }
    return base;
  }

  ExprPtr atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      ExprPtr e = expr();
      if (!eat(')')) bad("expected )");
      return e;
    }
    if (c == '-') {
      ++pos;
      return mk({Expr::Kind::Neg, {}, {}, atom(), nullptr, 0});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      Expr e{Expr::Kind::Num, Rat(0), {}, nullptr, nullptr, 0};
      e.num = Rat(mpq_class(mpz_class(s.substr(start, pos - start))));
      return mk(std::move(e));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      Expr e{Expr::Kind::Sym, Rat(0), s.substr(start, pos - start), nullptr, nullptr, 0};
      return mk(std::move(e));
    }
    bad("unexpected character");
  }
};

}  // namespace

ExprPtr parse_template(const std::string& text) { return TemplateParser(text).parse(); }

Poly eval(const ExprPtr& e, const Env& env) {
  switch (e->kind) {
    case Expr::Kind::Num:
      return Poly(e->num);
    case Expr::Kind::Sym: {
      auto it = env.vals.find(e->sym);
      if (it == env.vals.end())
        fail(ErrorCode::Internal, "unbound template symbol '" + e->sym + "'");
      return it->second;
    }
    case Expr::Kind::Add:
      return eval(e->lhs, env) + eval(e->rhs, env);
    case Expr::Kind::Sub:
      return eval(e->lhs, env) - eval(e->rhs, env);
    case Expr::Kind::Mul:
      return eval(e->lhs, env) * eval(e->rhs, env);
    case Expr::Kind::Div: {
      Poly d = eval(e->rhs, env);
      if (!d.is_constant() || d.is_zero())
        fail(ErrorCode::Internal, "template division by non-constant or zero");
      return eval(e->lhs, env) * (Rat(1) / d.coeff(0));
    }
    case Expr::Kind::Pow:
      return eval(e->lhs, env).pow(e->power);
    case Expr::Kind::Neg:
      return -eval(e->lhs, env);
  }
  fail(ErrorCode::Internal, "corrupt expression node");
}

Rat eval_scalar(const ExprPtr& e, const Env& env) {
  Poly p = eval(e, env);
  if (!p.is_constant())
    fail(ErrorCode::Internal, "expected constant template value");
  return p.coeff(0);
}

std::string to_string(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Num:
      return e->num.str();
    case Expr::Kind::Sym:
      return e->sym;
    case Expr::Kind::Add:
      return "(" + to_string(e->lhs) + " + " + to_string(e->rhs) + ")";
    case Expr::Kind::Sub:
      return "(" + to_string(e->lhs) + " - " + to_string(e->rhs) + ")";
    case Expr::Kind::Mul:
      return to_string(e->lhs) + "*" + to_string(e->rhs);
    case Expr::Kind::Div:
      return to_string(e->lhs) + "/" + to_string(e->rhs);
    case Expr::Kind::Pow:
      return to_string(e->lhs) + "^" + std::to_string(e->power);
    case Expr::Kind::Neg:
      return "-" + to_string(e->lhs);
  }
  return "?";
}

}  // namespace recur
