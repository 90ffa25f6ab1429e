#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "monosym/poly.hpp"
#include "monosym/symfunc.hpp"

namespace monosym::lang {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

/// Surface syntax tree for the CLI expression language.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | x<k> | p<k> | e<k> | h<k> | m[l1,...] | s[l1,...]
///           | delta | '(' expr ')' | '-' atom
struct Expr {
  enum class Kind { Number, Var, Builtin, Sum, Diff, Prod, Pow, Neg };

  Kind kind;
  Rational value;            // Number
  int var_index = 0;         // Var, 0-based
  std::string builtin;       // "p", "e", "h", "m", "s", "delta"
  int index = 0;             // k of p/e/h
  Partition lam;             // of m/s
  std::shared_ptr<const Expr> lhs, rhs;
  int exponent = 0;          // Pow
};

using ExprPtr = std::shared_ptr<const Expr>;

// Whitespace-insensitive; '*' is required between factors. Variable
// indices above n are rejected here.
ExprPtr parse(const std::string& src, int n);

// Lowers to an exact polynomial in n variables. The degree cap guards
// against runaway exponents.
Poly lower(const ExprPtr& e, int n, int degree_cap = 64);

// Canonical rendering of a polynomial in the surface syntax (same form
// Poly::to_string produces); parse(render(p)) == p.
std::string render(const Poly& p);

}  // namespace monosym::lang
