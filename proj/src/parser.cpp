#include "monosym/parser.hpp"

#include <cctype>

#include "monosym/tn.hpp"

namespace monosym::lang {

namespace {

class Parser {
 public:
  Parser(const std::string& src, int n) : src_(src), n_(n) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  const std::string& src_;
  int n_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  int uint_lit() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw ParseError("expected an integer", pos_);
    long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      if (v > 1000000) throw ParseError("integer literal too large", pos_);
      ++pos_;
    }
    return static_cast<int>(v);
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (eat('+')) {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Sum;
        node->lhs = e;
        node->rhs = term();
        e = node;
      } else if (eat('-')) {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Diff;
        node->lhs = e;
        node->rhs = term();
        e = node;
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (eat('*')) {
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Prod;
      node->lhs = e;
      node->rhs = factor();
      e = node;
    }
    return e;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (eat('^')) {
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Pow;
      node->lhs = base;
      node->exponent = uint_lit();
      return node;
    }
    return base;
  }

  Partition partition_arg() {
    if (!eat('[')) throw ParseError("expected '['", pos_);
    std::vector<int> parts;
    if (peek() != ']') {
      parts.push_back(uint_lit());
      while (eat(',')) parts.push_back(uint_lit());
    }
    if (!eat(']')) throw ParseError("expected ']'", pos_);
    try {
      return Partition(parts);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), pos_);
    }
  }

  ExprPtr atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];

    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (c == '-') {
      ++pos_;
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Neg;
      node->lhs = atom();
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const int num = uint_lit();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Number;
      if (eat('/')) {
        const int den = uint_lit();
        if (den == 0) throw ParseError("zero denominator", at);
        node->value = Rational(num, den);
      } else {
        node->value = Rational(num);
      }
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
        name += src_[pos_++];
      if (name == "x") {
        const int k = uint_lit();
        if (k < 1 || k > n_) throw ParseError("variable index out of range: x" + std::to_string(k), at);
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Var;
        node->var_index = k - 1;
        return node;
      }
      if (name == "p" || name == "e" || name == "h") {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Builtin;
        node->builtin = name;
        node->index = uint_lit();
        return node;
      }
      if (name == "m" || name == "s") {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Builtin;
        node->builtin = name;
        node->lam = partition_arg();
        if (node->lam.length() > n_)
          throw ParseError("partition longer than the variable count", at);
        return node;
      }
      if (name == "delta") {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Builtin;
        node->builtin = name;
        return node;
      }
      throw ParseError("unknown builtin '" + name + "'", at);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }
};

int checked_degree(const Poly& p, int cap, const char* what) {
  const int d = p.total_degree().value_or(0);
  if (d > cap) throw std::invalid_argument(std::string(what) + ": degree cap exceeded");
  return d;
}

}  // namespace

ExprPtr parse(const std::string& src, int n) {
  if (n < 1) throw std::invalid_argument("variable count must be positive");
  return Parser(src, n).run();
}

Poly lower(const ExprPtr& e, int n, int degree_cap) {
  if (!e) throw std::invalid_argument("null expression");
  switch (e->kind) {
    case Expr::Kind::Number:
      return Poly::constant(n, e->value);
    case Expr::Kind::Var:
      return Poly::variable(n, e->var_index);
    case Expr::Kind::Builtin:
      if (e->index > degree_cap) throw std::invalid_argument("builtin index exceeds degree cap");
      if (e->builtin == "p") return symfunc::power_sum(n, e->index);
      if (e->builtin == "e") return symfunc::elementary(n, e->index);
      if (e->builtin == "h") return symfunc::complete_h(n, e->index);
      if (e->builtin == "m") return symfunc::monomial_sym(n, e->lam);
      if (e->builtin == "s") return symfunc::schur(n, e->lam);
      if (e->builtin == "delta") return delta(n);
      throw std::invalid_argument("unknown builtin " + e->builtin);
    case Expr::Kind::Sum:
      return lower(e->lhs, n, degree_cap) + lower(e->rhs, n, degree_cap);
    case Expr::Kind::Diff:
      return lower(e->lhs, n, degree_cap) - lower(e->rhs, n, degree_cap);
    case Expr::Kind::Prod: {
      Poly l = lower(e->lhs, n, degree_cap);
      Poly r = lower(e->rhs, n, degree_cap);
      if (checked_degree(l, degree_cap, "product") + checked_degree(r, degree_cap, "product") >
          degree_cap)
        throw std::invalid_argument("product: degree cap exceeded");
      return l * r;
    }
    case Expr::Kind::Pow: {
      Poly base = lower(e->lhs, n, degree_cap);
      if (static_cast<long>(checked_degree(base, degree_cap, "power")) * e->exponent > degree_cap)
        throw std::invalid_argument("power: degree cap exceeded");
      return base.pow(e->exponent);
    }
    case Expr::Kind::Neg:
      return -lower(e->lhs, n, degree_cap);
  }
  throw std::logic_error("unreachable expression kind");
}

std::string render(const Poly& p) { return p.to_string(); }

}  // namespace monosym::lang
