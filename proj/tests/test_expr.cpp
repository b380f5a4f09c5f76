#include <gtest/gtest.h>

#include <random>

#include "qseries/expr.hpp"
#include "qseries/qproducts.hpp"
#include "random_series.hpp"

using namespace qseries;
using qseries::testing::SeriesGen;

namespace {

std::size_t error_offset(std::string_view text, const MacroTable* macros = nullptr) {
  try {
    parse(text, macros);
  } catch (const ParseError& e) {
    return e.offset;
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

// Random trees over every node kind, with leaves that keep evaluation exact.
ExprPtr random_expr(SeriesGen& gen, int depth) {
  const auto pick = gen.uniform(0, depth <= 0 ? 3 : 9);
  switch (pick) {
    case 0: return make_int(Integer(gen.uniform(0, 9)));
    case 1: return make_var();
    case 2: {
      static constexpr Fn fns[] = {Fn::G, Fn::H, Fn::Gsum, Fn::Hsum, Fn::R, Fn::Rinv, Fn::phi, Fn::psi, Fn::k, Fn::E};
      return make_call(fns[gen.uniform(0, 9)], gen.uniform(0, 1) ? 1 : -1, gen.uniform(1, 4));
    }
    case 3: {
      ast::Product p;
      p.base = gen.uniform(1, 10);
      for (int i = 0, n = static_cast<int>(gen.uniform(0, 3)); i < n; ++i) {
        p.numerator.emplace_back(gen.uniform(0, 1) ? 1 : -1, gen.uniform(1, 12));
      }
      for (int i = 0, n = static_cast<int>(gen.uniform(0, 3)); i < n; ++i) {
        p.denominator.emplace_back(gen.uniform(0, 1) ? 1 : -1, gen.uniform(1, 12));
      }
      return make_product(std::move(p));
    }
    case 4: return make_neg(random_expr(gen, depth - 1));
    case 5: return make_power(random_expr(gen, depth - 1), gen.uniform(-2, 3));
    case 6: return make_subst(random_expr(gen, depth - 1), gen.uniform(1, 3));
    default: {
      static constexpr char ops[] = {'+', '-', '*', '/'};
      return make_binary(ops[gen.uniform(0, 3)], random_expr(gen, depth - 1), random_expr(gen, depth - 1));
    }
  }
}

}  // namespace

TEST(ExprParse, FunctionsAndSubstitution) {
  const ExprPtr e = parse("G(q)^2 * H(subst(q,2))");
  const ExprPtr expected = make_binary('*', make_power(make_call(Fn::G), 2), make_call(Fn::H, +1, 2));
  EXPECT_EQ(*e, *expected);
  EXPECT_EQ(*parse("G(q^2)"), *make_call(Fn::G, +1, 2));
  EXPECT_EQ(*parse("phi(-q^5)"), *make_call(Fn::phi, -1, 5));
  EXPECT_EQ(*parse("k"), *make_call(Fn::k));
  EXPECT_EQ(*parse(" R ( q ) "), *make_call(Fn::R));
}

TEST(ExprParse, MatrixProduct) {
  const ExprPtr e = parse(
      "JP(q^5,q^5,q^25,q^25,q^25,q^25,q^45,q^45; q^10,q^10,q^10,q^20,q^30,q^40,q^40,q^40; q^50)");
  const auto& p = std::get<ast::Product>(e->node);
  EXPECT_EQ(p.base, 50);
  EXPECT_EQ(p.numerator.size(), 8u);
  EXPECT_EQ(p.denominator.size(), 8u);
  EXPECT_EQ(p.numerator[2], (std::pair<int, std::int64_t>{+1, 25}));
  EXPECT_EQ(std::get<ast::Product>(parse("JP(-q;;q)")->node).numerator[0], (std::pair<int, std::int64_t>{-1, 1}));
}

TEST(ExprParse, Precedence) {
  EXPECT_EQ(*parse("1 + 2*q^3"),
            *make_binary('+', make_int(1), make_binary('*', make_int(2), make_power(make_var(), 3))));
  EXPECT_EQ(*parse("-q^2"), *make_neg(make_power(make_var(), 2)));
  EXPECT_EQ(*parse("1 - 2 - 3"), *make_binary('-', make_binary('-', make_int(1), make_int(2)), make_int(3)));
  EXPECT_EQ(*parse("q^-2"), *make_power(make_var(), -2));
}

TEST(ExprParse, ErrorsCarryOffsets) {
  EXPECT_EQ(error_offset("G(q"), 3u);
  EXPECT_EQ(error_offset("1 + "), 4u);
  EXPECT_EQ(error_offset("Foo(q)"), 0u);
  EXPECT_EQ(error_offset("G(q^0)"), 2u);
  EXPECT_EQ(error_offset("G(2*q)"), 2u);
  EXPECT_EQ(error_offset("q q"), 2u);
  EXPECT_EQ(error_offset("$nothing"), 0u);
  EXPECT_THROW(parse("subst(q, 0)"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
}

TEST(ExprParse, Macros) {
  MacroTable macros;
  macros["A"] = parse("G(q)*H(q)");
  EXPECT_EQ(*parse("$A^2", &macros), *make_power(make_binary('*', make_call(Fn::G), make_call(Fn::H)), 2));
  EXPECT_EQ(error_offset("1 + $B", &macros), 4u);
}

TEST(ExprPrint, CanonicalForms) {
  EXPECT_EQ(print(*parse("G(subst(q,2))")), "G(q^2)");
  EXPECT_EQ(print(*parse("(1+q)*(1-q)")), "(1+q)*(1-q)");
  EXPECT_EQ(print(*parse("1-(2-3)")), "1-(2-3)");
  EXPECT_EQ(print(*parse("JP(q,-q^4;q^2;q^5)")), "JP(q,-q^4;q^2;q^5)");
  EXPECT_EQ(print(*parse("subst(G*H, 3)")), "subst(G(q)*H(q),3)");
}

TEST(ExprProperty, PrintParseRoundTrip) {
  SeriesGen gen(2718);
  for (int trial = 0; trial < 500; ++trial) {
    const ExprPtr e = random_expr(gen, 4);
    const std::string text = print(*e);
    ExprPtr back;
    ASSERT_NO_THROW(back = parse(text)) << text;
    EXPECT_EQ(*back, *e) << text;
    EXPECT_EQ(print(*back), text);
  }
}

TEST(ExprEval, Examples) {
  EXPECT_EQ(evaluate("1", 10), Series::constant(1, 10));
  EXPECT_EQ(evaluate("H(q)/G(q)", 10), R(10));
  EXPECT_EQ(first_mismatch(evaluate("q*R(q)*R(subst(q,2))^2", 10), ramanujan_k(10)), std::nullopt);
  EXPECT_EQ(evaluate("JP(q;;q)", 40), euler(1, 40));
  EXPECT_EQ(evaluate("E(q^3)", 40), euler(3, 40));
  EXPECT_EQ(evaluate("phi(-q)", 30), phi(-1, 30));
  EXPECT_EQ(evaluate("(1 - q)^-1", 5).coefficient(4), 1);
}

TEST(ExprEval, LaurentResults) {
  const Series s = evaluate("psi(q)^2/(q*psi(q^5)^2)", 50);
  EXPECT_EQ(s.valuation(), -1);
  EXPECT_EQ(s.coefficient(-1), 1);
  const Series t = evaluate("(1 + k - k^2)/k", 50);
  EXPECT_EQ(first_mismatch(s, t), std::nullopt);
}

TEST(ExprEval, NonIntegralDivisionNamesSubtree) {
  try {
    evaluate("1/(2 + q)", 10);
    FAIL() << "expected EvalError";
  } catch (const EvalError& e) {
    EXPECT_EQ(e.subtree, "1/(2+q)");
  }
}

TEST(ExprProperty, EvaluationIsCompositional) {
  SeriesGen gen(161803);
  constexpr Exponent N = 40;
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const ExprPtr a = random_expr(gen, 2);
    const ExprPtr b = random_expr(gen, 2);
    Series va, vb;
    try {
      va = evaluate(print(*a), N);
      vb = evaluate(print(*b), N);
    } catch (const SeriesError&) {
      continue;  // e.g. a division by a non-unit
    }
    ++checked;
    EXPECT_EQ(first_mismatch(evaluate(print(*make_binary('*', a, b)), N), va * vb), std::nullopt);
    EXPECT_EQ(first_mismatch(evaluate(print(*make_binary('+', a, b)), N), va + vb), std::nullopt);
    EXPECT_EQ(first_mismatch(evaluate(print(*make_neg(a)), N), -va), std::nullopt);
    const Series sub = evaluate(print(*make_subst(a, 2)), N);
    if (va.valuation() >= 0) {
      EXPECT_EQ(first_mismatch(sub, substitute_power(va, 2)), std::nullopt);
    }
  }
  EXPECT_GT(checked, 100);
}
