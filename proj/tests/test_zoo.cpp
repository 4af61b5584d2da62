#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "itdist/errors.hpp"
#include "itdist/series.hpp"
#include "itdist/zoo.hpp"
#include "oracles.hpp"

using namespace itdist;

namespace {

Term g(std::uint32_t i) { return Term::gen(i); }

Term node(Layer layer, std::vector<Term> xs) {
  std::vector<Entry> es;
  for (Term& x : xs) es.push_back(Entry{std::move(x), 1});
  return Term::node(layer, std::move(es));
}

Term sum(std::vector<std::pair<Term, std::int64_t>> xs) {
  std::vector<Entry> es;
  for (auto& [t, k] : xs) es.push_back(Entry{t, k});
  return Term::node(Layer::IntComb, std::move(es));
}

Term pt(Term t) { return Term::inject(Layer::Pointed, std::move(t)); }
Term zr(Term t) { return Term::inject(Layer::AdjoinZero, std::move(t)); }
const Term one = Term::point(Layer::Pointed);
const Term zero = Term::point(Layer::AdjoinZero);

}  // namespace

TEST_CASE("mult_over_add expands products of sums", "[law]") {
  Term a = g(0), b = g(1), c = g(2), d = g(3);
  Term in = node(Layer::NonemptySeq, {sum({{a, 1}, {b, 1}}), sum({{c, 1}, {d, 1}})});
  Term out = zoo::mult_over_add(Layer::NonemptySeq, Layer::IntComb, in);
  auto w = [](Term x, Term y) { return node(Layer::NonemptySeq, {x, y}); };
  CHECK(out == sum({{w(a, c), 1}, {w(a, d), 1}, {w(b, c), 1}, {w(b, d), 1}}));

  // singleton sums pass through
  Term ab = node(Layer::NonemptySeq, {sum({{a, 1}}), sum({{b, 1}})});
  CHECK(zoo::mult_over_add(Layer::NonemptySeq, Layer::IntComb, ab) == sum({{w(a, b), 1}}));

  // coefficients multiply: (2a)(-3b) = -6ab
  Term scaled = node(Layer::NonemptySeq, {sum({{a, 2}}), sum({{b, -3}})});
  CHECK(zoo::mult_over_add(Layer::NonemptySeq, Layer::IntComb, scaled) == sum({{w(a, b), -6}}));

  // commutative products: (a+b)(c+d) = ac + bc + ad + bd as monomials
  Term cin = node(Layer::Multiset, {sum({{a, 1}, {b, 1}}), sum({{c, 1}, {d, 1}})});
  auto m = [](Term x, Term y) { return node(Layer::Multiset, {x, y}); };
  CHECK(zoo::mult_over_add(Layer::Multiset, Layer::IntComb, cin) ==
        sum({{m(a, c), 1}, {m(b, c), 1}, {m(a, d), 1}, {m(b, d), 1}}));
  CHECK_THROWS_AS(zoo::mult_over_add(Layer::NonemptySeq, Layer::IntComb, a), ShapeMismatch);
}

TEST_CASE("noncommutative expansion agrees with matrix evaluation", "[law][oracle]") {
  std::mt19937 rng(7);
  Carrier x = Carrier::generated(2);
  auto inputs = enumerate_nested(
      std::vector<MonadSpec>{zoo::nonunital_semigroup(), zoo::free_abelian_group()}, x, 4);
  REQUIRE(inputs.size() > 50);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<oracle::Mat> gens{oracle::random_mat(rng), oracle::random_mat(rng)};
    for (const Term& in : inputs) {
      oracle::Mat lhs = oracle::Mat::scalar(1);
      for (const Entry& factor : in.entries()) {
        oracle::Mat s{};
        for (const Entry& e : factor.term.entries()) {
          s = s + oracle::Mat::scalar(e.coeff) * gens[e.term.gen_index()];
        }
        lhs = lhs * s;
      }
      Term out = zoo::mult_over_add(Layer::NonemptySeq, Layer::IntComb, in);
      oracle::Mat rhs{};
      for (const Entry& e : out.entries()) {
        rhs = rhs + oracle::Mat::scalar(e.coeff) * oracle::eval_word(pt(e.term), gens);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("unit_absorb deletes unit factors", "[law]") {
  Term a = g(0), b = g(1);
  CHECK(zoo::unit_absorb(Layer::NonemptySeq, node(Layer::NonemptySeq, {pt(a), one, pt(b)})) ==
        pt(node(Layer::NonemptySeq, {a, b})));
  CHECK(zoo::unit_absorb(Layer::NonemptySeq, node(Layer::NonemptySeq, {one, one})) == one);
  CHECK(zoo::unit_absorb(Layer::NonemptySeq, node(Layer::NonemptySeq, {pt(a)})) ==
        pt(node(Layer::NonemptySeq, {a})));
}

TEST_CASE("zero_absorb annihilates", "[law]") {
  Term a = g(0), b = g(1);
  CHECK(zoo::zero_absorb(Layer::NonemptySeq, node(Layer::NonemptySeq, {zr(a), zero, zr(b)})) ==
        zero);
  CHECK(zoo::zero_absorb(Layer::NonemptySeq, node(Layer::NonemptySeq, {zr(a), zr(b)})) ==
        zr(node(Layer::NonemptySeq, {a, b})));
  CHECK(zoo::zero_absorb(Layer::NonemptySeq, node(Layer::NonemptySeq, {zero})) == zero);
}

TEST_CASE("point_embed is the inclusion", "[law]") {
  Term a = g(0), b = g(1);
  CHECK(zoo::point_embed(Layer::IntComb, one) == sum({{one, 1}}));
  CHECK(zoo::point_embed(Layer::IntComb, pt(sum({{a, 1}, {b, 1}}))) ==
        sum({{pt(a), 1}, {pt(b), 1}}));
  CHECK(zoo::point_embed(Layer::IntComb, pt(sum({{a, 1}}))) == sum({{pt(a), 1}}));
}

TEST_CASE("add_zero deletes zero summands", "[law]") {
  Term a = g(0), b = g(1);
  CHECK(zoo::add_zero(Layer::NonemptyMultiset, node(Layer::NonemptyMultiset, {zr(a), zero})) ==
        zr(node(Layer::NonemptyMultiset, {a})));
  CHECK(zoo::add_zero(Layer::NonemptyMultiset, node(Layer::NonemptyMultiset, {zero, zero})) ==
        zero);
  CHECK(zoo::add_zero(Layer::NonemptyMultiset, node(Layer::NonemptyMultiset, {zr(a), zr(b)})) ==
        zr(node(Layer::NonemptyMultiset, {a, b})));
}

TEST_CASE("point_zero swaps the constants", "[law]") {
  Term a = g(0);
  CHECK(zoo::point_zero(pt(zr(a))) == zr(pt(a)));
  CHECK(zoo::point_zero(pt(zero)) == zero);
  CHECK(zoo::point_zero(one) == zr(one));
}

TEST_CASE("every registered law satisfies the axioms", "[distlaw]") {
  Carrier x = Carrier::generated(2);
  auto laws = zoo::registered_laws();
  REQUIRE(laws.size() == 9);
  for (const DistLaw& law : laws) {
    INFO(law.name);
    CHECK(check_distlaw(law, x, 3).passed());
    CHECK(check_distlaw(law, x, 1).passed());
  }
  for (const DistLaw& law : zoo::example_laws()) {
    INFO(law.name);
    CHECK(check_distlaw(law, x, 3).passed());
  }
}

TEST_CASE("law ids resolve", "[distlaw]") {
  CHECK(zoo::law_by_id("rig.CD").has_value());
  CHECK(zoo::law_by_id("ring2.mult_over_add").has_value());
  CHECK_FALSE(zoo::law_by_id("ring9.XY").has_value());
  CHECK(zoo::monad_by_id("Adjoin-0").has_value());
  CHECK(zoo::parse_theory("rig") == zoo::Theory::Rig);
  CHECK_FALSE(zoo::parse_theory("field").has_value());
}

TEST_CASE("identity posed as a law fails with a pentagon witness", "[distlaw][negative]") {
  CheckReport r = check_distlaw(zoo::identity_pseudo_law(), Carrier::generated(2), 3);
  REQUIRE_FALSE(r.passed());
  auto ws = r.all_witnesses();
  REQUIRE_FALSE(ws.empty());
  CHECK(ws.front().diagram.ends_with("pentagon"));
}

TEST_CASE("collapsing addition to zero breaks a unit triangle", "[distlaw][negative]") {
  CheckReport r = check_distlaw(zoo::collapse_to_zero_law(), Carrier::generated(2), 3);
  REQUIRE_FALSE(r.passed());
  bool triangle = false;
  for (const Witness& w : r.all_witnesses()) triangle |= w.diagram.ends_with("triangle");
  CHECK(triangle);
}

TEST_CASE("composite Pointed after NonunitalSemigroup is the free monoid", "[composite]") {
  // phi: * -> [], Pt(NESeq[w]) -> Seq[w]; checked against FreeMonoid's own
  // flatten, which does not involve the law.
  const MonadSpec& ts = zoo::theory_monad(zoo::Theory::Monoid);
  MonadSpec fm = zoo::free_monoid();
  auto phi = [](const Term& t) {
    if (t.is_point()) return Term::node(Layer::Seq, {});
    auto es = t.injected().entries();
    return Term::node(Layer::Seq, std::vector<Entry>(es.begin(), es.end()));
  };
  Carrier x = Carrier::generated(2);
  auto composite = enumerate(ts, x, 3);
  auto words = enumerate(fm, x, 3);
  std::set<Term> image;
  for (const Term& t : composite) image.insert(phi(t));
  CHECK(image == std::set<Term>(words.begin(), words.end()));
  CHECK(composite.size() == words.size());

  auto doubled = enumerate_nested(
      std::vector<MonadSpec>{zoo::pointed(), zoo::nonunital_semigroup(), zoo::pointed(),
                             zoo::nonunital_semigroup()},
      x, 3);
  for (const Term& u : doubled) {
    Term lhs = phi(ts.mult(u));
    Term rhs = fm.mult(fm.map(phi(u), phi));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("theory series have the documented shapes", "[series]") {
  CHECK(zoo::theory_series(zoo::Theory::Monoid).size() == 2);
  CHECK(zoo::theory_series(zoo::Theory::Ring2).size() == 2);
  CHECK(zoo::theory_series(zoo::Theory::Ring3).size() == 3);
  DistributiveSeries rig = zoo::theory_series(zoo::Theory::Rig);
  REQUIRE(rig.size() == 4);
  CHECK(rig.monad(1).id == "Adjoin-0");
  CHECK(rig.monad(2).id == "NonunitalCommSemigroup");
  CHECK(rig.monad(3).id == "Pointed-1");
  CHECK(rig.monad(4).id == "NonunitalSemigroup");
  for (std::size_t i = 2; i <= 4; ++i)
    for (std::size_t j = 1; j < i; ++j) CHECK(rig.has_law(i, j));
}
