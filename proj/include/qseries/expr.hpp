#ifndef QSERIES_EXPR_HPP
#define QSERIES_EXPR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qseries/qproducts.hpp"
#include "qseries/series.hpp"

namespace qseries {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Named functions of one argument. The argument is always sign*q^power.
enum class Fn {
  G,     // Rogers-Ramanujan G, product side
  H,     // Rogers-Ramanujan H, product side
  Gsum,  // G from its sum side
  Hsum,  // H from its sum side
  R,     // H/G
  Rinv,  // G/H
  phi,   // sum over all n of q^{n^2}
  psi,   // sum over n >= 0 of q^{n(n+1)/2}
  k,     // q R(q) R(q^2)^2
  E,     // (q;q)_inf
};

std::string_view name_of(Fn fn);
std::optional<Fn> fn_from_name(std::string_view name);

namespace ast {

struct Int {
  Integer value;
  bool operator==(const Int&) const = default;
};
struct Var {
  bool operator==(const Var&) const = default;
};
struct Neg {
  ExprPtr operand;
};
struct Binary {
  char op;  // one of + - * /
  ExprPtr lhs, rhs;
};
struct Power {
  ExprPtr base;
  std::int64_t exponent;
};
/// q -> q^power applied to an arbitrary expression.
struct Subst {
  ExprPtr operand;
  std::int64_t power;
};
/// fn(sign * q^power).
struct Call {
  Fn fn;
  int sign = +1;
  std::int64_t power = 1;
  bool operator==(const Call&) const = default;
};
/// The matrix product notation: (numerator; denominator; q^base).
struct Product {
  std::vector<std::pair<int, std::int64_t>> numerator, denominator;
  std::int64_t base;
  bool operator==(const Product&) const = default;
};

}  // namespace ast

struct Expr {
  std::variant<ast::Int, ast::Var, ast::Neg, ast::Binary, ast::Power, ast::Subst, ast::Call, ast::Product> node;
};

bool operator==(const Expr& a, const Expr& b);

namespace ast {
bool operator==(const Neg& a, const Neg& b);
bool operator==(const Binary& a, const Binary& b);
bool operator==(const Power& a, const Power& b);
bool operator==(const Subst& a, const Subst& b);
}  // namespace ast

// Construction helpers.
ExprPtr make_int(Integer v);
ExprPtr make_var();
ExprPtr make_neg(ExprPtr e);
ExprPtr make_binary(char op, ExprPtr a, ExprPtr b);
ExprPtr make_power(ExprPtr base, std::int64_t e);
ExprPtr make_subst(ExprPtr e, std::int64_t m);
ExprPtr make_call(Fn fn, int sign = +1, std::int64_t power = 1);
ExprPtr make_product(ast::Product p);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset;
};

/// Named sub-expressions that `$name` refers to. References are expanded at
/// parse time, so the resulting tree never mentions them.
using MacroTable = std::map<std::string, ExprPtr, std::less<>>;

/// Grammar (whitespace-insensitive):
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | factor
///   factor := atom ('^' ['-'] int)?
///   atom   := int | 'q' | fname ['(' arg ')'] | 'subst' '(' expr ',' int ')'
///           | 'JP' '(' items ';' items ';' 'q' ['^' int] ')' | '$' name | '(' expr ')'
///   items  := [item (',' item)*],  item := ['-'] 'q' ['^' int]
///
/// fname is one of G H Gsum Hsum R Rinv phi psi k E; a bare name means
/// fname(q). The argument must reduce to +-q^m with m >= 1.
ExprPtr parse(std::string_view text, const MacroTable* macros = nullptr);

/// Canonical text; parse(print(e)) == e.
std::string print(const Expr& e);

class EvalError : public SeriesError {
 public:
  EvalError(const std::string& subtree, const std::string& message);
  std::string subtree;
};

/// Expands expressions to truncated series. Named-function expansions are
/// memoized per (function, order), so one evaluator should not be shared
/// between threads.
class Evaluator {
 public:
  /// The result is trusted at most below `order`; divisions by series of
  /// positive valuation can lower that.
  Series eval(const Expr& e, Exponent order);

 private:
  const Series& base_function(Fn fn, Exponent order);
  std::map<std::pair<Fn, Exponent>, Series> cache_;
};

/// Convenience: parse and evaluate with a fresh evaluator.
Series evaluate(std::string_view text, Exponent order, const MacroTable* macros = nullptr);

}  // namespace qseries

#endif  // QSERIES_EXPR_HPP
