#include "itdist/algebra.hpp"

#include "itdist/errors.hpp"
#include "outcome.hpp"

namespace itdist {

using detail::agree;
using detail::attempt;

namespace {

auto shower(const Algebra& alg) {
  const Carrier* names = alg.names.size() ? &alg.names : nullptr;
  return [names](const Term& t) { return to_string(t, names); };
}

}  // namespace

CheckReport check_algebra(const Algebra& alg, std::uint64_t bound) {
  const MonadSpec& s = alg.monad;
  auto show = shower(alg);
  CheckReport report(alg.name + ".algebra");
  for (const Term& a : alg.elements) {
    auto got = attempt([&] { return alg.action(s.unit(a)); });
    report.expect(got.value && *got.value == a, [&] {
      return Witness{"action-unit", show(a), got.render(show), show(a)};
    });
  }
  auto sa = s.enumerate_over(alg.elements, bound, kDefaultCeiling);
  auto ssa = s.enumerate_over(sa, bound, kDefaultCeiling);
  TermFn theta = alg.action;
  for (const Term& u : ssa) {
    auto lhs = attempt([&] { return alg.action(s.mult(u)); });
    auto rhs = attempt([&] { return alg.action(s.map(u, theta)); });
    report.expect(agree(lhs, rhs), [&] {
      return Witness{"action-mult", show(u), lhs.render(show), rhs.render(show)};
    });
  }
  return report;
}

LiftedAlgebra lift_to_algebras(const DistLaw& law, const Algebra& alg, std::uint64_t bound) {
  CheckReport pre = check_algebra(alg, bound);
  if (!pre.passed()) {
    Witness w = pre.all_witnesses().front();
    throw NotAnAlgebra(alg.name + " is not an algebra: " + w.diagram + " fails at " + w.input);
  }
  const MonadSpec& s = law.outer;
  const MonadSpec& t = law.inner;
  TermFn lambda = law.transform;
  TermFn theta = alg.action;

  Algebra lifted;
  lifted.name = t.id + "(" + alg.name + ")";
  lifted.monad = s;
  lifted.elements = t.enumerate_over(alg.elements, bound, kDefaultCeiling);
  lifted.action = [t, lambda, theta](const Term& u) { return t.map(lambda(u), theta); };
  lifted.names = alg.names;
  TermFn theta1 = lifted.action;
  auto show = shower(alg);

  CheckReport report(lifted.name + ".lift");
  report.add(check_algebra(lifted, bound));

  CheckReport unit_morphism(lifted.name + ".unit-morphism");
  for (const Term& u : s.enumerate_over(alg.elements, bound, kDefaultCeiling)) {
    auto lhs = attempt([&] { return theta1(s.map(u, t.unit)); });
    auto rhs = attempt([&] { return t.unit(theta(u)); });
    unit_morphism.expect(agree(lhs, rhs), [&] {
      return Witness{"unit-morphism", show(u), lhs.render(show), rhs.render(show)};
    });
  }
  report.add(std::move(unit_morphism));

  CheckReport mult_morphism(lifted.name + ".mult-morphism");
  auto tta = t.enumerate_over(lifted.elements, bound, kDefaultCeiling);
  for (const Term& u : s.enumerate_over(tta, bound, kDefaultCeiling)) {
    auto lhs = attempt([&] { return t.mult(t.map(lambda(u), theta1)); });
    auto rhs = attempt([&] { return theta1(s.map(u, t.mult)); });
    mult_morphism.expect(agree(lhs, rhs), [&] {
      return Witness{"mult-morphism", show(u), lhs.render(show), rhs.render(show)};
    });
  }
  report.add(std::move(mult_morphism));

  return LiftedAlgebra{std::move(lifted), std::move(report)};
}

SplitAlgebra split_algebra(const DistLaw& law, const Algebra& composite) {
  const MonadSpec& s = law.outer;
  const MonadSpec& t = law.inner;
  TermFn theta = composite.action;

  Algebra s_part{composite.name + ".S", s, composite.elements,
                 [t, theta](const Term& v) { return theta(t.unit(v)); }, composite.names};
  Algebra t_part{composite.name + ".T", t, composite.elements,
                 [s, t, theta](const Term& v) { return theta(t.map(v, s.unit)); },
                 composite.names};
  return SplitAlgebra{std::move(s_part), std::move(t_part)};
}

Algebra recombine(const DistLaw& law, const SplitAlgebra& parts) {
  const MonadSpec& t = law.inner;
  TermFn theta_s = parts.s_part.action;
  TermFn theta_t = parts.t_part.action;
  std::string name = parts.s_part.name;
  if (name.size() > 2 && name.ends_with(".S")) name.resize(name.size() - 2);
  return Algebra{name, compose_pair(law.outer, t, law), parts.s_part.elements,
                 [t, theta_s, theta_t](const Term& v) { return theta_t(t.map(v, theta_s)); },
                 parts.s_part.names};
}

CheckReport check_split(const DistLaw& law, const SplitAlgebra& parts, std::uint64_t bound) {
  const MonadSpec& s = law.outer;
  const MonadSpec& t = law.inner;
  TermFn theta_s = parts.s_part.action;
  TermFn theta_t = parts.t_part.action;
  auto show = shower(parts.s_part);

  CheckReport report(parts.s_part.name + ".split");
  report.add(check_algebra(parts.s_part, bound));
  report.add(check_algebra(parts.t_part, bound));
  CheckReport compat(parts.t_part.name + ".lifted-morphism");
  auto ta = t.enumerate_over(parts.s_part.elements, bound, kDefaultCeiling);
  for (const Term& u : s.enumerate_over(ta, bound, kDefaultCeiling)) {
    auto lhs = attempt([&] { return theta_t(t.map(law.transform(u), theta_s)); });
    auto rhs = attempt([&] { return theta_s(s.map(u, theta_t)); });
    compat.expect(agree(lhs, rhs), [&] {
      return Witness{"lifted-morphism", show(u), lhs.render(show), rhs.render(show)};
    });
  }
  report.add(std::move(compat));
  return report;
}

}  // namespace itdist
