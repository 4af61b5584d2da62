#include "itdist/zoo.hpp"

#include <array>

#include "itdist/errors.hpp"

namespace itdist::zoo {

MonadSpec free_monoid() { return base_monad(Layer::Seq, "FreeMonoid"); }
MonadSpec nonunital_semigroup() { return base_monad(Layer::NonemptySeq, "NonunitalSemigroup"); }
MonadSpec free_comm_monoid() { return base_monad(Layer::Multiset, "FreeCommMonoid"); }
MonadSpec nonunital_comm_semigroup() {
  return base_monad(Layer::NonemptyMultiset, "NonunitalCommSemigroup");
}
MonadSpec free_abelian_group() { return base_monad(Layer::IntComb, "FreeAbelianGroup"); }
MonadSpec pointed() { return base_monad(Layer::Pointed, "Pointed-1"); }
MonadSpec adjoin_zero() { return base_monad(Layer::AdjoinZero, "Adjoin-0"); }

std::vector<MonadSpec> all_monads() {
  return {free_monoid(),        nonunital_semigroup(), free_comm_monoid(),
          nonunital_comm_semigroup(), free_abelian_group(), pointed(),
          adjoin_zero()};
}

std::optional<MonadSpec> monad_by_id(std::string_view id) {
  for (MonadSpec& m : all_monads()) {
    if (m.id == id) return std::move(m);
  }
  return std::nullopt;
}

MonadSpec broken_free_monoid() {
  MonadSpec m = free_monoid();
  m.id = "BrokenFreeMonoid";
  TermFn flatten = m.mult;
  m.mult = [flatten](const Term& tt) {
    Term flat = flatten(tt);
    auto entries = flat.entries();
    if (entries.size() < 2) return flat;
    return Term::node(Layer::Seq, std::vector<Entry>(entries.begin(), entries.end() - 1));
  };
  return m;
}

namespace {

void require(const Term& t, Layer layer, const char* law) {
  if (t.is_gen() || t.layer() != layer) {
    throw ShapeMismatch(std::string(law) + ": expected a " + std::string(layer_name(layer)) +
                        " term, got " + to_string(t));
  }
}

// Factors of a product node with multiplicities spelled out.
std::vector<Term> factors(const Term& product) {
  std::vector<Term> out;
  for (const Entry& e : product.entries()) {
    for (std::int64_t k = 0; k < e.coeff; ++k) out.push_back(e.term);
  }
  return out;
}

std::vector<Entry> as_entries(const std::vector<Term>& terms) {
  std::vector<Entry> out;
  out.reserve(terms.size());
  for (const Term& t : terms) out.push_back(Entry{t, 1});
  return out;
}

}  // namespace

Term mult_over_add(Layer product, Layer sum, const Term& t) {
  require(t, product, "mult_over_add");
  struct Partial {
    std::vector<Term> word;
    std::int64_t coeff;
  };
  std::vector<Partial> partial{{{}, 1}};
  for (const Term& factor : factors(t)) {
    require(factor, sum, "mult_over_add");
    std::vector<Partial> next;
    next.reserve(partial.size() * factor.entries().size());
    for (const Partial& p : partial) {
      for (const Entry& summand : factor.entries()) {
        Partial q = p;
        q.word.push_back(summand.term);
        q.coeff *= summand.coeff;
        next.push_back(std::move(q));
      }
    }
    partial = std::move(next);
  }
  std::vector<Entry> terms;
  terms.reserve(partial.size());
  for (const Partial& p : partial) {
    terms.push_back(Entry{Term::node(product, as_entries(p.word)), p.coeff});
  }
  return Term::node(sum, std::move(terms));
}

Term unit_absorb(Layer product, const Term& t) {
  require(t, product, "unit_absorb");
  std::vector<Entry> kept;
  for (const Entry& e : t.entries()) {
    require(e.term, Layer::Pointed, "unit_absorb");
    if (!e.term.is_point()) kept.push_back(Entry{e.term.injected(), e.coeff});
  }
  if (kept.empty()) return Term::point(Layer::Pointed);
  return Term::inject(Layer::Pointed, Term::node(product, std::move(kept)));
}

Term zero_absorb(Layer product, const Term& t) {
  require(t, product, "zero_absorb");
  std::vector<Entry> inner;
  for (const Entry& e : t.entries()) {
    require(e.term, Layer::AdjoinZero, "zero_absorb");
    if (e.term.is_point()) return Term::point(Layer::AdjoinZero);
    inner.push_back(Entry{e.term.injected(), e.coeff});
  }
  return Term::inject(Layer::AdjoinZero, Term::node(product, std::move(inner)));
}

Term point_embed(Layer sum, const Term& t) {
  require(t, Layer::Pointed, "point_embed");
  if (t.is_point()) return Term::node(sum, {Entry{t, 1}});
  const Term& s = t.injected();
  require(s, sum, "point_embed");
  std::vector<Entry> out;
  for (const Entry& e : s.entries()) {
    out.push_back(Entry{Term::inject(Layer::Pointed, e.term), e.coeff});
  }
  return Term::node(sum, std::move(out));
}

Term add_zero(Layer sum, const Term& t) {
  require(t, sum, "add_zero");
  std::vector<Entry> kept;
  for (const Entry& e : t.entries()) {
    require(e.term, Layer::AdjoinZero, "add_zero");
    if (!e.term.is_point()) kept.push_back(Entry{e.term.injected(), e.coeff});
  }
  if (kept.empty()) return Term::point(Layer::AdjoinZero);
  return Term::inject(Layer::AdjoinZero, Term::node(sum, std::move(kept)));
}

Term point_zero(const Term& t) {
  require(t, Layer::Pointed, "point_zero");
  if (t.is_point()) return Term::inject(Layer::AdjoinZero, t);
  const Term& inner = t.injected();
  require(inner, Layer::AdjoinZero, "point_zero");
  if (inner.is_point()) return inner;
  return Term::inject(Layer::AdjoinZero, Term::inject(Layer::Pointed, inner.injected()));
}

namespace {

Layer single_layer(const MonadSpec& m) {
  if (m.layers.size() != 1) throw ShapeMismatch("law needs a single-layer monad, got " + m.id);
  return m.layers.front();
}

}  // namespace

DistLaw law_mult_over_add(std::string name, MonadSpec product, MonadSpec sum) {
  Layer p = single_layer(product);
  Layer s = single_layer(sum);
  return DistLaw{std::move(name), std::move(product), std::move(sum),
                 [p, s](const Term& t) { return mult_over_add(p, s, t); }};
}

DistLaw law_unit_absorb(std::string name, MonadSpec product) {
  Layer p = single_layer(product);
  return DistLaw{std::move(name), std::move(product), pointed(),
                 [p](const Term& t) { return unit_absorb(p, t); }};
}

DistLaw law_zero_absorb(std::string name, MonadSpec product) {
  Layer p = single_layer(product);
  return DistLaw{std::move(name), std::move(product), adjoin_zero(),
                 [p](const Term& t) { return zero_absorb(p, t); }};
}

DistLaw law_point_embed(std::string name, MonadSpec sum) {
  Layer s = single_layer(sum);
  return DistLaw{std::move(name), pointed(), std::move(sum),
                 [s](const Term& t) { return point_embed(s, t); }};
}

DistLaw law_add_zero(std::string name, MonadSpec sum) {
  Layer s = single_layer(sum);
  return DistLaw{std::move(name), std::move(sum), adjoin_zero(),
                 [s](const Term& t) { return add_zero(s, t); }};
}

DistLaw law_point_zero(std::string name) {
  return DistLaw{std::move(name), pointed(), adjoin_zero(), point_zero};
}

namespace {

std::vector<DistLaw> ring3_laws() {
  return {law_unit_absorb("ring3.AB", nonunital_semigroup()),
          law_mult_over_add("ring3.AC", nonunital_semigroup(), free_abelian_group()),
          law_point_embed("ring3.BC", free_abelian_group())};
}

std::vector<DistLaw> rig_laws() {
  return {law_unit_absorb("rig.AB", nonunital_semigroup()),
          law_mult_over_add("rig.AC", nonunital_semigroup(), nonunital_comm_semigroup()),
          law_zero_absorb("rig.AD", nonunital_semigroup()),
          law_point_embed("rig.BC", nonunital_comm_semigroup()),
          law_point_zero("rig.BD"),
          law_add_zero("rig.CD", nonunital_comm_semigroup())};
}

DistributiveSeries rig_series(DistLaw cd) {
  auto laws = rig_laws();
  laws[5] = std::move(cd);
  return DistributiveSeries::from_reversed(
      "rig", {nonunital_semigroup(), pointed(), nonunital_comm_semigroup(), adjoin_zero()},
      {{1, 2, laws[0]}, {1, 3, laws[1]}, {1, 4, laws[2]},
       {2, 3, laws[3]}, {2, 4, laws[4]}, {3, 4, laws[5]}});
}

}  // namespace

std::vector<DistLaw> registered_laws() {
  auto out = ring3_laws();
  auto rig = rig_laws();
  out.insert(out.end(), rig.begin(), rig.end());
  return out;
}

std::vector<DistLaw> example_laws() {
  return {law_unit_absorb("monoid.unit_absorb", nonunital_semigroup()),
          law_unit_absorb("cmonoid.unit_absorb", nonunital_comm_semigroup()),
          law_mult_over_add("ring2.mult_over_add", free_comm_monoid(), free_abelian_group())};
}

std::optional<DistLaw> law_by_id(std::string_view id) {
  for (auto* list : {&registered_laws, &example_laws}) {
    for (DistLaw& law : (*list)()) {
      if (law.name == id) return std::move(law);
    }
  }
  return std::nullopt;
}

DistLaw identity_pseudo_law() {
  return DistLaw{"identity.FreeMonoid.FreeAbelianGroup", free_monoid(), free_abelian_group(),
                 [](const Term& t) { return t; }};
}

DistLaw collapse_to_zero_law() {
  return DistLaw{"rig.CD.collapse", nonunital_comm_semigroup(), adjoin_zero(),
                 [](const Term&) { return Term::point(Layer::AdjoinZero); }};
}

std::optional<Theory> parse_theory(std::string_view name) {
  for (Theory t : all_theories()) {
    if (theory_name(t) == name) return t;
  }
  return std::nullopt;
}

std::string theory_name(Theory theory) {
  switch (theory) {
    case Theory::Monoid: return "monoid";
    case Theory::CMonoid: return "cmonoid";
    case Theory::Ring2: return "ring2";
    case Theory::Ring3: return "ring3";
    case Theory::Rig: return "rig";
  }
  return "?";
}

std::vector<Theory> all_theories() {
  return {Theory::Monoid, Theory::CMonoid, Theory::Ring2, Theory::Ring3, Theory::Rig};
}

DistributiveSeries theory_series(Theory theory) {
  switch (theory) {
    case Theory::Monoid: {
      DistributiveSeries s("monoid", {pointed(), nonunital_semigroup()});
      s.set_law(2, 1, example_laws()[0]);
      return s;
    }
    case Theory::CMonoid: {
      DistributiveSeries s("cmonoid", {pointed(), nonunital_comm_semigroup()});
      s.set_law(2, 1, example_laws()[1]);
      return s;
    }
    case Theory::Ring2: {
      DistributiveSeries s("ring2", {free_abelian_group(), free_comm_monoid()});
      s.set_law(2, 1, example_laws()[2]);
      return s;
    }
    case Theory::Ring3: {
      auto laws = ring3_laws();
      return DistributiveSeries::from_reversed(
          "ring3", {nonunital_semigroup(), pointed(), free_abelian_group()},
          {{1, 2, laws[0]}, {1, 3, laws[1]}, {2, 3, laws[2]}});
    }
    case Theory::Rig: return rig_series(rig_laws()[5]);
  }
  throw std::invalid_argument("unknown theory");
}

DistributiveSeries broken_rig_series() { return rig_series(collapse_to_zero_law()); }

const MonadSpec& theory_monad(Theory theory) {
  static const std::array<MonadSpec, 5> composites = [] {
    std::array<MonadSpec, 5> out;
    for (Theory t : all_theories()) {
      DistributiveSeries s = theory_series(t);
      out[static_cast<std::size_t>(t)] = compose_series(s, Route::left_comb(s.size()));
    }
    return out;
  }();
  return composites[static_cast<std::size_t>(theory)];
}

}  // namespace itdist::zoo
