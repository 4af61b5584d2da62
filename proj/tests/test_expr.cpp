#include <random>

#include "catch_amalgamated.hpp"
#include "itdist/errors.hpp"
#include "itdist/expr.hpp"
#include "itdist/zoo.hpp"
#include "oracles.hpp"

using namespace itdist;
using zoo::Theory;

namespace {

std::string norm(Theory t, std::string_view src) {
  Expr e = parse_expr(src);
  Carrier x(variables(e));
  return render(t, normalize_expr(t, e, x), x);
}

std::vector<oracle::Mat> assign(std::mt19937& rng, std::size_t k, bool natural) {
  std::vector<oracle::Mat> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(oracle::random_mat(rng, natural));
  return out;
}

oracle::Assignment env_of(const Carrier& x, const std::vector<oracle::Mat>& gens) {
  oracle::Assignment env;
  for (std::size_t i = 0; i < x.size(); ++i) env[x.name(static_cast<std::uint32_t>(i))] = gens[i];
  return env;
}

}  // namespace

TEST_CASE("parser builds the expected trees", "[parse]") {
  CHECK(to_string(parse_expr("(a+b)*(c+d)")) == "Mul(Add(a,b),Add(c,d))");
  CHECK(parse_expr("a - a") == Expr::add(Expr::var("a"), Expr::neg(Expr::var("a"))));
  CHECK(parse_expr("2*(x+y)") ==
        Expr::mul(Expr::lit(2), Expr::add(Expr::var("x"), Expr::var("y"))));
  CHECK(parse_expr("0") == Expr::zero());
  CHECK(parse_expr("1") == Expr::one());
  CHECK(parse_expr("a+b*c") ==
        Expr::add(Expr::var("a"), Expr::mul(Expr::var("b"), Expr::var("c"))));
  CHECK(parse_expr("-a*b") == Expr::mul(Expr::neg(Expr::var("a")), Expr::var("b")));
  CHECK(parse_expr("a-b-c") ==
        Expr::add(Expr::add(Expr::var("a"), Expr::neg(Expr::var("b"))),
                  Expr::neg(Expr::var("c"))));
  CHECK(parse_expr("  x_1 *\tY2 ") == Expr::mul(Expr::var("x_1"), Expr::var("Y2")));
}

TEST_CASE("parser reports positions", "[parse]") {
  try {
    parse_expr("a + * b");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_expr("(a+b"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("a b"), SyntaxError);
  CHECK_THROWS_AS(parse_expr(""), SyntaxError);
  CHECK_THROWS_AS(parse_expr("a $ b"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("99999999999999999999999"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("a*q", Carrier::generated(2)), UnknownGenerator);
}

TEST_CASE("expression helpers", "[parse]") {
  Expr e = parse_expr("b*(a+b) - 3");
  CHECK(variables(e) == std::vector<std::string>{"a", "b"});
  CHECK(expr_size(e) == 4);
}

TEST_CASE("normal forms of the worked examples", "[normalize]") {
  CHECK(norm(Theory::Ring3, "(a+b)*(c+d)") == "a*c + a*d + b*c + b*d");
  CHECK(norm(Theory::Ring3, "a - a") == "0");
  CHECK(norm(Theory::Rig, "a*0 + b") == "b");
  CHECK(norm(Theory::Rig, "a + 0") == "a");
  CHECK(norm(Theory::Ring2, "(a+b)*(c+d)") == "a*c + a*d + b*c + b*d");
  CHECK(norm(Theory::Ring2, "b*a - a*b") == "0");
  CHECK(norm(Theory::Ring3, "b*a - a*b") != "0");
  CHECK(norm(Theory::Ring3, "2*(a+1) - 3") == "2*a - 1");
  CHECK(norm(Theory::Monoid, "a*1*b") == "a*b");
  CHECK(norm(Theory::CMonoid, "b*a*b") == norm(Theory::CMonoid, "b*b*a"));
  CHECK(norm(Theory::Monoid, "b*a") != norm(Theory::Monoid, "a*b"));

  Expr e = parse_expr("a - a");
  Term t = normalize_expr(Theory::Ring3, e, Carrier(variables(e)));
  CHECK(t.entries().empty());
}

TEST_CASE("unsupported operations are rejected", "[normalize]") {
  Carrier x = Carrier::generated(2);
  CHECK_THROWS_AS(normalize_expr(Theory::Rig, parse_expr("-a"), x), UnsupportedNode);
  CHECK_THROWS_AS(normalize_expr(Theory::Monoid, parse_expr("a+b"), x), UnsupportedNode);
  CHECK_THROWS_AS(normalize_expr(Theory::CMonoid, parse_expr("0"), x), UnsupportedNode);
  CHECK_THROWS_AS(normalize_expr(Theory::Ring3, parse_expr("a*z"), x), UnknownGenerator);
}

TEST_CASE("ring3 normal forms evaluate like their expressions", "[normalize][oracle]") {
  Carrier x({"a", "b", "c"});
  oracle::ExprGen gen(x.names(), 11);
  std::mt19937 rng(12);
  for (int n = 0; n < 100; ++n) {
    Expr e = gen(6);
    Term t = normalize_expr(Theory::Ring3, e, x);
    for (int k = 0; k < 5; ++k) {
      auto gens = assign(rng, 3, false);
      INFO(to_string(e));
      CHECK(oracle::eval(e, env_of(x, gens)) == oracle::eval_ring3(t, gens));
    }
  }
}

TEST_CASE("rig normal forms evaluate like their expressions", "[normalize][oracle]") {
  Carrier x({"a", "b", "c"});
  oracle::ExprGen gen(x.names(), 21, false);
  std::mt19937 rng(22);
  for (int n = 0; n < 100; ++n) {
    Expr e = gen(6);
    Term t = normalize_expr(Theory::Rig, e, x);
    for (int k = 0; k < 5; ++k) {
      auto gens = assign(rng, 3, true);
      INFO(to_string(e));
      CHECK(oracle::eval(e, env_of(x, gens)) == oracle::eval_rig(t, gens));
    }
  }
}

TEST_CASE("rig identities hold as normal-form equalities", "[normalize]") {
  auto same = [](std::string_view l, std::string_view r) {
    Carrier x({"a", "b", "c"});
    return normalize_expr(Theory::Rig, parse_expr(l), x) ==
           normalize_expr(Theory::Rig, parse_expr(r), x);
  };
  CHECK(same("a+0", "a"));
  CHECK(same("0*a", "0"));
  CHECK(same("a*(b+c)", "a*b+a*c"));
  CHECK(same("(a+b)*c", "a*c+b*c"));
  CHECK(same("a+b", "b+a"));
  CHECK(same("1*a*1", "a"));
  CHECK_FALSE(same("a*b", "b*a"));
  CHECK_FALSE(same("a+a", "a"));
}

TEST_CASE("ring2 is the abelianization of ring3", "[normalize][oracle]") {
  Carrier x({"a", "b", "c"});
  oracle::ExprGen gen(x.names(), 31);
  for (int n = 0; n < 100; ++n) {
    Expr e = gen(6);
    INFO(to_string(e));
    CHECK(oracle::abelianize(normalize_expr(Theory::Ring3, e, x)) ==
          normalize_expr(Theory::Ring2, e, x));
  }
}

TEST_CASE("rendering", "[render]") {
  CHECK(norm(Theory::Ring3, "1") == "1");
  CHECK(norm(Theory::Ring3, "0") == "0");
  CHECK(norm(Theory::Ring3, "-a") == "-a");
  CHECK(norm(Theory::Ring3, "a*a - 2*b") == "a*a - 2*b");
  CHECK(norm(Theory::Rig, "0") == "0");
  CHECK(norm(Theory::Rig, "a+a") == "2*a");
  CHECK(norm(Theory::Monoid, "1") == "1");
}
