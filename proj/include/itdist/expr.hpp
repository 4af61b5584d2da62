#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "itdist/term.hpp"
#include "itdist/zoo.hpp"

namespace itdist {

/// Surface syntax for ring-like expressions.
struct Expr {
  enum class Kind { Var, IntLit, Add, Mul, Neg, One, Zero };

  Kind kind = Kind::Zero;
  std::string name;        // Var
  std::int64_t value = 0;  // IntLit
  std::vector<Expr> args;  // Add/Mul: 2, Neg: 1

  static Expr var(std::string name);
  static Expr lit(std::int64_t value);
  static Expr add(Expr l, Expr r);
  static Expr mul(Expr l, Expr r);
  static Expr neg(Expr e);
  static Expr one();
  static Expr zero();

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Prefix form, e.g. `Mul(Add(a,b),Add(c,d))`.
std::string to_string(const Expr& e);

/// Distinct variable names, sorted.
std::vector<std::string> variables(const Expr& e);

/// Generator occurrences plus constants, literals counting 1.
std::size_t expr_size(const Expr& e);

/// Parses the grammar
///   expr := term (("+"|"-") term)* ; term := factor ("*" factor)* ;
///   factor := ["-"] atom ; atom := IDENT | INT | "(" expr ")"
/// with "0"/"1" read as Zero/One and a - b read as Add(a, Neg(b)).
/// Throws SyntaxError; with a carrier, unknown identifiers throw
/// UnknownGenerator.
Expr parse_expr(std::string_view src);
Expr parse_expr(std::string_view src, const Carrier& carrier);

/// Evaluates the expression inside the theory's composite monad. Throws
/// UnsupportedNode when the theory lacks the operation, UnknownGenerator for
/// variables outside the carrier.
Term normalize_expr(zoo::Theory theory, const Expr& e, const Carrier& carrier);

/// Human-readable form of a normal form of the theory, e.g.
/// `a*c + a*d + b*c + b*d`, `2*a - b`, `1`, `0`.
std::string render(zoo::Theory theory, const Term& t, const Carrier& carrier);

}  // namespace itdist
