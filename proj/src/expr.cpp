#include "qseries/expr.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace qseries {

namespace {

constexpr std::array<std::pair<Fn, std::string_view>, 10> kFunctionNames{{
    {Fn::G, "G"},
    {Fn::H, "H"},
    {Fn::Gsum, "Gsum"},
    {Fn::Hsum, "Hsum"},
    {Fn::R, "R"},
    {Fn::Rinv, "Rinv"},
    {Fn::phi, "phi"},
    {Fn::psi, "psi"},
    {Fn::k, "k"},
    {Fn::E, "E"},
}};

}  // namespace

std::string_view name_of(Fn fn) {
  for (const auto& [f, n] : kFunctionNames) {
    if (f == fn) return n;
  }
  return "?";
}

std::optional<Fn> fn_from_name(std::string_view name) {
  for (const auto& [f, n] : kFunctionNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

namespace ast {

bool operator==(const Neg& a, const Neg& b) { return *a.operand == *b.operand; }
bool operator==(const Binary& a, const Binary& b) { return a.op == b.op && *a.lhs == *b.lhs && *a.rhs == *b.rhs; }
bool operator==(const Power& a, const Power& b) { return a.exponent == b.exponent && *a.base == *b.base; }
bool operator==(const Subst& a, const Subst& b) { return a.power == b.power && *a.operand == *b.operand; }

}  // namespace ast

bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }

ExprPtr make_int(Integer v) { return std::make_shared<const Expr>(Expr{ast::Int{std::move(v)}}); }
ExprPtr make_var() { return std::make_shared<const Expr>(Expr{ast::Var{}}); }
ExprPtr make_neg(ExprPtr e) { return std::make_shared<const Expr>(Expr{ast::Neg{std::move(e)}}); }
ExprPtr make_binary(char op, ExprPtr a, ExprPtr b) {
  return std::make_shared<const Expr>(Expr{ast::Binary{op, std::move(a), std::move(b)}});
}
ExprPtr make_power(ExprPtr base, std::int64_t e) {
  return std::make_shared<const Expr>(Expr{ast::Power{std::move(base), e}});
}
ExprPtr make_subst(ExprPtr e, std::int64_t m) {
  return std::make_shared<const Expr>(Expr{ast::Subst{std::move(e), m}});
}
ExprPtr make_call(Fn fn, int sign, std::int64_t power) {
  return std::make_shared<const Expr>(Expr{ast::Call{fn, sign, power}});
}
ExprPtr make_product(ast::Product p) { return std::make_shared<const Expr>(Expr{std::move(p)}); }

ParseError::ParseError(std::size_t off, const std::string& message)
    : std::runtime_error("at offset " + std::to_string(off) + ": " + message), offset(off) {}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const MacroTable* macros) : text_(text), macros_(macros) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    if (!at_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t small_int() {
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 15) fail_at(start, "integer too large here");
    return std::stoll(d);
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      if (accept('+')) lhs = make_binary('+', lhs, term());
      else if (accept('-')) lhs = make_binary('-', lhs, term());
      else return lhs;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (true) {
      if (accept('*')) lhs = make_binary('*', lhs, unary());
      else if (accept('/')) lhs = make_binary('/', lhs, unary());
      else return lhs;
    }
  }

  ExprPtr unary() {
    if (accept('-')) return make_neg(unary());
    return factor();
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (accept('^')) {
      const bool negative = accept('-');
      const std::int64_t e = small_int();
      return make_power(base, negative ? -e : e);
    }
    return base;
  }

  // q or q^m inside argument lists; returns the exponent.
  std::int64_t q_power() {
    const std::size_t at = pos_;
    if (identifier() != "q") fail_at(at, "expected 'q'");
    if (!accept('^')) return 1;
    return small_int();
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return make_int(Integer(digits()));
    if (accept('(')) {
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (accept('$')) {
      const std::string name = identifier();
      if (name.empty()) fail("expected a macro name after '$'");
      if (macros_ == nullptr) fail_at(start, "no macros are defined");
      const auto it = macros_->find(name);
      if (it == macros_->end()) fail_at(start, "unknown macro '$" + name + "'");
      return it->second;
    }
    const std::string name = identifier();
    if (name.empty()) fail("expected an expression");
    if (name == "q") return make_var();
    if (name == "subst") return subst(start);
    if (name == "JP") return product();
    const auto fn = fn_from_name(name);
    if (!fn) fail_at(start, "unknown name '" + name + "'");
    if (!accept('(')) return make_call(*fn);
    const std::size_t arg_at = pos_;
    ExprPtr arg = expr();
    expect(')');
    const auto mono = monomial(*arg);
    if (!mono) fail_at(arg_at, "argument of " + name + " must be of the form q^m or -q^m");
    return make_call(*fn, mono->first, mono->second);
  }

  ExprPtr subst(std::size_t start) {
    expect('(');
    ExprPtr inner = expr();
    expect(',');
    const std::int64_t m = small_int();
    expect(')');
    if (m < 1) fail_at(start, "subst power must be at least 1");
    return make_subst(inner, m);
  }

  ExprPtr product() {
    expect('(');
    ast::Product p;
    p.numerator = items();
    expect(';');
    p.denominator = items();
    expect(';');
    const std::size_t at = pos_;
    p.base = q_power();
    expect(')');
    if (p.base < 1) fail_at(at, "product base must be q^m with m >= 1");
    return make_product(std::move(p));
  }

  std::vector<std::pair<int, std::int64_t>> items() {
    std::vector<std::pair<int, std::int64_t>> out;
    if (peek(';')) return out;
    do {
      skip_ws();
      const std::size_t at = pos_;
      const int sign = accept('-') ? -1 : +1;
      const std::int64_t j = q_power();
      if (j < 1) fail_at(at, "product entries need q^j with j >= 1");
      out.emplace_back(sign, j);
    } while (accept(','));
    return out;
  }

  // Reduces an argument expression to sign * q^power.
  static std::optional<std::pair<int, std::int64_t>> monomial(const Expr& e) {
    if (std::holds_alternative<ast::Var>(e.node)) return std::pair{+1, std::int64_t{1}};
    if (const auto* n = std::get_if<ast::Neg>(&e.node)) {
      auto inner = monomial(*n->operand);
      if (inner) inner->first = -inner->first;
      return inner;
    }
    if (const auto* p = std::get_if<ast::Power>(&e.node)) {
      auto inner = monomial(*p->base);
      if (!inner || p->exponent < 1) return std::nullopt;
      if (p->exponent % 2 == 0) inner->first = +1;
      inner->second *= p->exponent;
      return inner;
    }
    if (const auto* s = std::get_if<ast::Subst>(&e.node)) {
      auto inner = monomial(*s->operand);
      if (inner) inner->second *= s->power;
      return inner;
    }
    return std::nullopt;
  }

  std::string_view text_;
  const MacroTable* macros_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text, const MacroTable* macros) { return Parser(text, macros).parse_all(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

// Binding strength: sums 1, products 2, unary minus 3, powers 4, atoms 5.
void print_to(std::ostringstream& out, const Expr& e, int context);

std::string q_text(int sign, std::int64_t power) {
  std::string s = sign < 0 ? "-q" : "q";
  if (power != 1) s += "^" + std::to_string(power);
  return s;
}

struct PrintVisitor {
  std::ostringstream& out;
  int context;

  void wrap(int self, auto&& body) {
    if (context > self) out << "(";
    body();
    if (context > self) out << ")";
  }

  void operator()(const ast::Int& n) {
    if (sgn(n.value) < 0) wrap(3, [&] { out << n.value; });
    else out << n.value;
  }
  void operator()(const ast::Var&) { out << "q"; }
  void operator()(const ast::Neg& n) {
    wrap(3, [&] {
      out << "-";
      print_to(out, *n.operand, 3);
    });
  }
  void operator()(const ast::Binary& b) {
    const int self = (b.op == '+' || b.op == '-') ? 1 : 2;
    wrap(self, [&] {
      print_to(out, *b.lhs, self);
      out << b.op;
      print_to(out, *b.rhs, self + 1);
    });
  }
  void operator()(const ast::Power& p) {
    wrap(4, [&] {
      print_to(out, *p.base, 5);
      out << "^" << p.exponent;
    });
  }
  void operator()(const ast::Subst& s) {
    out << "subst(";
    print_to(out, *s.operand, 0);
    out << "," << s.power << ")";
  }
  void operator()(const ast::Call& c) { out << name_of(c.fn) << "(" << q_text(c.sign, c.power) << ")"; }
  void operator()(const ast::Product& p) {
    auto list = [&](const auto& items) {
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out << ",";
        out << q_text(items[i].first, items[i].second);
      }
    };
    out << "JP(";
    list(p.numerator);
    out << ";";
    list(p.denominator);
    out << ";" << q_text(+1, p.base) << ")";
  }
};

void print_to(std::ostringstream& out, const Expr& e, int context) { std::visit(PrintVisitor{out, context}, e.node); }

}  // namespace

std::string print(const Expr& e) {
  std::ostringstream out;
  print_to(out, e, 0);
  return out.str();
}

// ---------------------------------------------------------------------------
// Evaluation

EvalError::EvalError(const std::string& sub, const std::string& message)
    : SeriesError(message + " in '" + sub + "'"), subtree(sub) {}

namespace {

Exponent ceil_div(Exponent a, Exponent b) { return std::max<Exponent>((a + b - 1) / b, 1); }

}  // namespace

const Series& Evaluator::base_function(Fn fn, Exponent order) {
  const auto key = std::pair{fn, order};
  if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
  Series s;
  switch (fn) {
    case Fn::G: s = G_product(order); break;
    case Fn::H: s = H_product(order); break;
    case Fn::Gsum: s = G_sum(order); break;
    case Fn::Hsum: s = H_sum(order); break;
    case Fn::R: s = R(order); break;
    case Fn::Rinv: s = R_inv(order); break;
    case Fn::phi: s = phi(+1, order); break;
    case Fn::psi: s = psi(order); break;
    case Fn::k: s = ramanujan_k(order); break;
    case Fn::E: s = euler(1, order); break;
  }
  return cache_.emplace(key, std::move(s)).first->second;
}

Series Evaluator::eval(const Expr& e, Exponent order) {
  if (order < 1) throw SeriesError("evaluation order must be positive");
  return std::visit(
      [&](const auto& node) -> Series {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ast::Int>) {
          return Series::constant(node.value, order);
        } else if constexpr (std::is_same_v<T, ast::Var>) {
          return Series::monomial(1, 1, order);
        } else if constexpr (std::is_same_v<T, ast::Neg>) {
          return -eval(*node.operand, order);
        } else if constexpr (std::is_same_v<T, ast::Binary>) {
          Series a = eval(*node.lhs, order);
          Series b = eval(*node.rhs, order);
          switch (node.op) {
            case '+': return a + b;
            case '-': return a - b;
            case '*': return a * b;
            default:
              try {
                return divide(a, b);
              } catch (const NonUnitLeadingCoefficient& err) {
                throw EvalError(print(e), err.what());
              }
          }
        } else if constexpr (std::is_same_v<T, ast::Power>) {
          Series base = eval(*node.base, order);
          if (node.exponent >= 0) return pow(base, node.exponent);
          try {
            return divide(Series::constant(1, order), pow(base, -node.exponent));
          } catch (const NonUnitLeadingCoefficient& err) {
            throw EvalError(print(e), err.what());
          }
        } else if constexpr (std::is_same_v<T, ast::Subst>) {
          const Series inner = eval(*node.operand, ceil_div(order, node.power));
          return substitute_power(inner, node.power).truncated(order);
        } else if constexpr (std::is_same_v<T, ast::Call>) {
          Series s = base_function(node.fn, ceil_div(order, node.power));
          if (node.sign < 0) s = negate_variable(s);
          return substitute_power(s, node.power).truncated(order);
        } else {
          return product_expand(QProduct::from_lists(node.numerator, node.denominator, node.base), order);
        }
      },
      e.node);
}

Series evaluate(std::string_view text, Exponent order, const MacroTable* macros) {
  Evaluator ev;
  return ev.eval(*parse(text, macros), order);
}

}  // namespace qseries
