#include "itdist/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>

#include "itdist/errors.hpp"

namespace itdist {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& found)
    : Error("syntax error at position " + std::to_string(position) + ": expected " +
            join(expected, " or ") + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

Expr Expr::var(std::string name) {
  Expr e;
  e.kind = Kind::Var;
  e.name = std::move(name);
  return e;
}

Expr Expr::lit(std::int64_t value) {
  Expr e;
  e.kind = Kind::IntLit;
  e.value = value;
  return e;
}

Expr Expr::add(Expr l, Expr r) {
  Expr e;
  e.kind = Kind::Add;
  e.args = {std::move(l), std::move(r)};
  return e;
}

Expr Expr::mul(Expr l, Expr r) {
  Expr e;
  e.kind = Kind::Mul;
  e.args = {std::move(l), std::move(r)};
  return e;
}

Expr Expr::neg(Expr inner) {
  Expr e;
  e.kind = Kind::Neg;
  e.args = {std::move(inner)};
  return e;
}

Expr Expr::one() {
  Expr e;
  e.kind = Kind::One;
  return e;
}

Expr Expr::zero() { return Expr{}; }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Var: return e.name;
    case Expr::Kind::IntLit: return std::to_string(e.value);
    case Expr::Kind::One: return "One";
    case Expr::Kind::Zero: return "Zero";
    case Expr::Kind::Neg: return "Neg(" + to_string(e.args[0]) + ")";
    case Expr::Kind::Add:
      return "Add(" + to_string(e.args[0]) + "," + to_string(e.args[1]) + ")";
    case Expr::Kind::Mul:
      return "Mul(" + to_string(e.args[0]) + "," + to_string(e.args[1]) + ")";
  }
  return "?";
}

namespace {

void collect_variables(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Var) out.insert(e.name);
  for (const Expr& a : e.args) collect_variables(a, out);
}

}  // namespace

std::vector<std::string> variables(const Expr& e) {
  std::set<std::string> names;
  collect_variables(e, names);
  return {names.begin(), names.end()};
}

std::size_t expr_size(const Expr& e) {
  if (e.args.empty()) return 1;
  std::size_t n = 0;
  for (const Expr& a : e.args) n += expr_size(a);
  return n;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    Tok kind;
    if (is_ident_start(c)) {
      while (i < src.size() && is_ident(src[i])) ++i;
      kind = Tok::Ident;
    } else if (is_digit(c)) {
      while (i < src.size() && is_digit(src[i])) ++i;
      kind = Tok::Int;
    } else {
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default:
          throw SyntaxError(i, {"identifier", "integer", "operator", "parenthesis"},
                            "'" + std::string(1, c) + "'");
      }
      ++i;
    }
    out.push_back(Token{kind, start, src.substr(start, i - start)});
  }
  out.push_back(Token{Tok::End, src.size(), {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != Tok::End) {
      throw SyntaxError(peek().pos, {"'+'", "'-'", "'*'", "end of input"}, describe(peek()));
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[next_]; }
  const Token& take() { return tokens_[next_++]; }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      Expr rhs = term();
      lhs = Expr::add(std::move(lhs), minus ? Expr::neg(std::move(rhs)) : std::move(rhs));
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek().kind == Tok::Star) {
      take();
      lhs = Expr::mul(std::move(lhs), factor());
    }
    return lhs;
  }

  Expr factor() {
    if (peek().kind == Tok::Minus) {
      take();
      return Expr::neg(atom(false));
    }
    return atom(true);
  }

  Expr atom(bool minus_allowed) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: take(); return Expr::var(std::string(t.text));
      case Tok::Int: {
        take();
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{}) {
          throw SyntaxError(t.pos, {"integer literal within 64 bits"}, describe(t));
        }
        if (value == 0) return Expr::zero();
        if (value == 1) return Expr::one();
        return Expr::lit(value);
      }
      case Tok::LParen: {
        take();
        Expr inner = expr();
        if (peek().kind != Tok::RParen) {
          throw SyntaxError(peek().pos, {"')'", "'+'", "'-'", "'*'"}, describe(peek()));
        }
        take();
        return inner;
      }
      default: {
        std::vector<std::string> expected{"identifier", "integer", "'('"};
        if (minus_allowed) expected.push_back("'-'");
        throw SyntaxError(t.pos, std::move(expected), describe(t));
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t next_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).parse_all(); }

Expr parse_expr(std::string_view src, const Carrier& carrier) {
  Expr e = parse_expr(src);
  for (const std::string& name : variables(e)) carrier.term(name);
  return e;
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

// Home layer of each operation within the theory's composite, -1 if absent.
struct Layout {
  int add = -1;
  int mul = -1;
  int neg = -1;
  int one = -1;
  int zero = -1;
};

Layout layout(zoo::Theory theory) {
  using zoo::Theory;
  switch (theory) {
    case Theory::Monoid:
    case Theory::CMonoid: return {.add = -1, .mul = 1, .neg = -1, .one = 0, .zero = -1};
    case Theory::Ring2: return {.add = 0, .mul = 1, .neg = 0, .one = 1, .zero = 0};
    case Theory::Ring3: return {.add = 0, .mul = 2, .neg = 0, .one = 1, .zero = 0};
    case Theory::Rig: return {.add = 1, .mul = 3, .neg = -1, .one = 2, .zero = 0};
  }
  return {};
}

class Normalizer {
 public:
  Normalizer(zoo::Theory theory, const Carrier& carrier)
      : theory_(theory),
        layout_(layout(theory)),
        monad_(zoo::theory_monad(theory)),
        carrier_(carrier) {
    for (Layer l : monad_.layers) layers_.push_back(base_monad(l));
  }

  Term run(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Var: return monad_.unit(carrier_.term(e.name));
      case Expr::Kind::One: return constant(layout_.one, "1");
      case Expr::Kind::Zero: return constant(layout_.zero, "0");
      case Expr::Kind::IntLit: return literal(e.value);
      case Expr::Kind::Neg: return operation(layout_.neg, "negation", {run(e.args[0])}, -1);
      case Expr::Kind::Add:
        return operation(layout_.add, "addition", {run(e.args[0]), run(e.args[1])}, 1);
      case Expr::Kind::Mul:
        return operation(layout_.mul, "multiplication", {run(e.args[0]), run(e.args[1])}, 1);
    }
    throw UnsupportedNode("unknown expression node");
  }

 private:
  void require(int layer, const char* what) const {
    if (layer < 0) {
      throw UnsupportedNode(std::string(what) + " is not available in theory " +
                            zoo::theory_name(theory_));
    }
  }

  Term wrap_outer(Term t, int h) const {
    for (int k = h - 1; k >= 0; --k) t = layers_[static_cast<std::size_t>(k)].unit(t);
    return t;
  }

  Term constant(int h, const char* what) const {
    require(h, what);
    Layer l = monad_.layers[static_cast<std::size_t>(h)];
    Term c = is_adjoined(l) ? Term::point(l) : Term::node(l, {});
    return wrap_outer(std::move(c), h);
  }

  // Builds op(children) as an element of M(M(X)) and flattens it.
  Term operation(int h, const char* what, std::vector<Term> children, std::int64_t coeff) const {
    require(h, what);
    std::vector<Entry> entries;
    for (Term& c : children) {
      for (std::size_t k = layers_.size(); k-- > static_cast<std::size_t>(h) + 1;) {
        c = layers_[k].unit(c);
      }
      entries.push_back(Entry{std::move(c), coeff});
    }
    Term node = Term::node(monad_.layers[static_cast<std::size_t>(h)], std::move(entries));
    return monad_.mult(wrap_outer(std::move(node), h));
  }

  Term literal(std::int64_t n) const {
    if (n == 0) return constant(layout_.zero, "0");
    Term power = constant(layout_.one, "1");
    std::optional<Term> acc;
    for (std::uint64_t k = static_cast<std::uint64_t>(n); k != 0; k >>= 1) {
      if (k & 1) acc = acc ? operation(layout_.add, "addition", {*acc, power}, 1) : power;
      if (k > 1) power = operation(layout_.add, "addition", {power, power}, 1);
    }
    return *acc;
  }

  zoo::Theory theory_;
  Layout layout_;
  const MonadSpec& monad_;
  const Carrier& carrier_;
  std::vector<MonadSpec> layers_;
};

enum class Role { Sum, Product, One, Zero };

std::vector<Role> roles(zoo::Theory theory) {
  using zoo::Theory;
  switch (theory) {
    case Theory::Monoid:
    case Theory::CMonoid: return {Role::One, Role::Product};
    case Theory::Ring2: return {Role::Sum, Role::Product};
    case Theory::Ring3: return {Role::Sum, Role::One, Role::Product};
    case Theory::Rig: return {Role::Zero, Role::Sum, Role::One, Role::Product};
  }
  return {};
}

std::string render_at(const Term& t, const std::vector<Role>& roles, std::size_t depth,
                      const Carrier& carrier) {
  if (t.is_gen()) return carrier.name(t.gen_index());
  if (depth >= roles.size()) throw ShapeMismatch("term deeper than its theory: " + to_string(t));
  switch (roles[depth]) {
    case Role::One:
      return t.is_point() ? "1" : render_at(t.injected(), roles, depth + 1, carrier);
    case Role::Zero:
      return t.is_point() ? "0" : render_at(t.injected(), roles, depth + 1, carrier);
    case Role::Product: {
      std::vector<std::string> parts;
      for (const Entry& e : t.entries()) {
        std::string f = render_at(e.term, roles, depth + 1, carrier);
        if (f.find(' ') != std::string::npos) f = "(" + f + ")";
        for (std::int64_t k = 0; k < e.coeff; ++k) parts.push_back(f);
      }
      return parts.empty() ? "1" : join(parts, "*");
    }
    case Role::Sum: {
      if (t.entries().empty()) return "0";
      std::string out;
      bool first = true;
      for (const Entry& e : t.entries()) {
        std::string mono = render_at(e.term, roles, depth + 1, carrier);
        std::int64_t c = e.coeff;
        std::string mag = std::to_string(c < 0 ? -c : c);
        std::string piece = (c == 1 || c == -1) ? mono : (mono == "1" ? mag : mag + "*" + mono);
        if (first) {
          out += (c < 0 ? "-" : "") + piece;
        } else {
          out += (c < 0 ? " - " : " + ") + piece;
        }
        first = false;
      }
      return out;
    }
  }
  return "?";
}

}  // namespace

Term normalize_expr(zoo::Theory theory, const Expr& e, const Carrier& carrier) {
  return Normalizer(theory, carrier).run(e);
}

std::string render(zoo::Theory theory, const Term& t, const Carrier& carrier) {
  return render_at(t, roles(theory), 0, carrier);
}

}  // namespace itdist
