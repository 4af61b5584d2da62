#include "itdist/monad.hpp"

#include <algorithm>
#include <stdexcept>

#include "itdist/errors.hpp"
#include "outcome.hpp"

namespace itdist {

namespace {

void require_layer(const Term& t, Layer layer, const char* what) {
  if (t.is_gen() || t.layer() != layer) {
    throw ShapeMismatch(std::string(what) + ": expected a " + std::string(layer_name(layer)) +
                        " term, got " + to_string(t));
  }
}

Term base_mult(Layer layer, const Term& tt) {
  require_layer(tt, layer, "mult");
  if (is_adjoined(layer)) {
    if (tt.is_point()) return tt;
    const Term& inner = tt.injected();
    require_layer(inner, layer, "mult");
    return inner;
  }
  std::vector<Entry> flat;
  for (const Entry& outer : tt.entries()) {
    require_layer(outer.term, layer, "mult");
    for (const Entry& inner : outer.term.entries()) {
      flat.push_back(Entry{inner.term, inner.coeff * outer.coeff});
    }
  }
  return Term::node(layer, std::move(flat));
}

Term base_unit(Layer layer, const Term& y) {
  if (is_adjoined(layer)) return Term::inject(layer, y);
  return Term::node(layer, {Entry{y, 1}});
}

Term base_map(Layer layer, const Term& t, const TermFn& f) {
  require_layer(t, layer, "map");
  if (is_adjoined(layer)) {
    if (t.is_point()) return t;
    return Term::inject(layer, f(t.injected()));
  }
  std::vector<Entry> mapped;
  mapped.reserve(t.entries().size());
  for (const Entry& e : t.entries()) mapped.push_back(Entry{f(e.term), e.coeff});
  return Term::node(layer, std::move(mapped));
}

struct Enumerator {
  Layer layer;
  std::span<const Term> elements;
  std::vector<std::uint64_t> weights;
  std::size_t ceiling;
  std::vector<Term> out;
  std::vector<Entry> current;

  void emit() {
    if (out.size() >= ceiling) {
      throw BoundTooLarge("enumeration of " + std::string(layer_name(layer)) +
                          " terms exceeds the ceiling of " + std::to_string(ceiling));
    }
    out.push_back(Term::node(layer, current));
  }

  void sequences(std::uint64_t remaining, bool allow_empty) {
    if (allow_empty || !current.empty()) emit();
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (weights[k] > remaining) continue;
      current.push_back(Entry{elements[k], 1});
      sequences(remaining - weights[k], true);
      current.pop_back();
    }
  }

  void multisets(std::size_t start, std::uint64_t remaining, bool allow_empty) {
    if (allow_empty || !current.empty()) emit();
    for (std::size_t k = start; k < elements.size(); ++k) {
      if (weights[k] > remaining) continue;
      bool extend = !current.empty() && current.back().term == elements[k];
      if (extend) {
        ++current.back().coeff;
      } else {
        current.push_back(Entry{elements[k], 1});
      }
      multisets(k, remaining - weights[k], true);
      if (extend) {
        --current.back().coeff;
      } else {
        current.pop_back();
      }
    }
  }

  void combinations(std::size_t start, std::uint64_t remaining) {
    emit();
    for (std::size_t k = start; k < elements.size(); ++k) {
      for (std::uint64_t c = 1; c * weights[k] <= remaining; ++c) {
        for (int sign : {1, -1}) {
          current.push_back(Entry{elements[k], sign * static_cast<std::int64_t>(c)});
          combinations(k + 1, remaining - c * weights[k]);
          current.pop_back();
        }
      }
    }
  }
};

bool by_size_then_term(const Term& a, const Term& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<Term> enumerate_layer(Layer layer, std::span<const Term> elements, std::uint64_t bound,
                                  std::size_t ceiling) {
  Enumerator e{layer, elements, {}, ceiling, {}, {}};
  e.weights.reserve(elements.size());
  for (const Term& t : elements) e.weights.push_back(t.weight());
  switch (layer) {
    case Layer::Seq: e.sequences(bound, true); break;
    case Layer::NonemptySeq: e.sequences(bound, false); break;
    case Layer::Multiset: e.multisets(0, bound, true); break;
    case Layer::NonemptyMultiset: e.multisets(0, bound, false); break;
    case Layer::IntComb: e.combinations(0, bound); break;
    case Layer::Pointed:
    case Layer::AdjoinZero:
      for (std::size_t k = 0; k < elements.size(); ++k) {
        if (e.weights[k] > bound) continue;
        if (e.out.size() >= ceiling) throw BoundTooLarge("enumeration exceeds the ceiling");
        e.out.push_back(Term::inject(layer, elements[k]));
      }
      if (bound >= 1) e.out.push_back(Term::point(layer));
      break;
  }
  std::sort(e.out.begin(), e.out.end(), by_size_then_term);
  return std::move(e.out);
}

MonadSpec base_monad(Layer layer, std::string id) {
  MonadSpec m;
  m.id = id.empty() ? std::string(layer_name(layer)) : std::move(id);
  m.layers = {layer};
  m.unit = [layer](const Term& y) { return base_unit(layer, y); };
  m.mult = [layer](const Term& tt) { return base_mult(layer, tt); };
  m.map = [layer](const Term& t, const TermFn& f) { return base_map(layer, t, f); };
  m.enumerate_over = [layer](std::span<const Term> ys, std::uint64_t bound, std::size_t ceiling) {
    return enumerate_layer(layer, ys, bound, ceiling);
  };
  return m;
}

MonadSpec identity_monad() {
  MonadSpec m;
  m.id = "Id";
  m.unit = [](const Term& y) { return y; };
  m.mult = [](const Term& t) { return t; };
  m.map = [](const Term& t, const TermFn& f) { return f(t); };
  m.enumerate_over = [](std::span<const Term> ys, std::uint64_t bound, std::size_t ceiling) {
    std::vector<Term> out;
    for (const Term& y : ys) {
      if (y.size() > bound) continue;
      if (out.size() >= ceiling) throw BoundTooLarge("enumeration exceeds the ceiling");
      out.push_back(y);
    }
    std::sort(out.begin(), out.end(), by_size_then_term);
    return out;
  };
  return m;
}

Term unit(const MonadSpec& m, const Carrier& x, std::string_view name) {
  return m.unit(x.term(name));
}

std::vector<Term> enumerate(const MonadSpec& m, const Carrier& x, std::uint64_t bound,
                            std::size_t ceiling) {
  if (bound == 0) throw std::invalid_argument("enumeration bound must be >= 1");
  auto gens = x.terms();
  return m.enumerate_over(gens, bound, ceiling);
}

std::vector<Term> enumerate_nested(std::span<const MonadSpec> monads, const Carrier& x,
                                   std::uint64_t bound, std::size_t ceiling) {
  if (bound == 0) throw std::invalid_argument("enumeration bound must be >= 1");
  std::vector<Term> elems = x.terms();
  for (auto it = monads.rbegin(); it != monads.rend(); ++it) {
    elems = it->enumerate_over(elems, bound, ceiling);
  }
  return elems;
}

Term CarrierMap::operator()(const Term& t) const {
  if (!t.is_gen() || t.gen_index() >= image.size()) {
    throw ShapeMismatch("carrier map applied outside its domain: " + to_string(t));
  }
  return Term::gen(image[t.gen_index()]);
}

std::vector<CarrierMap> carrier_functions(std::size_t max_size) {
  std::vector<CarrierMap> out;
  for (std::size_t m = 1; m <= max_size; ++m) {
    for (std::size_t n = 1; n <= max_size; ++n) {
      std::vector<std::uint32_t> image(m, 0);
      while (true) {
        out.push_back(CarrierMap{Carrier::generated(m), Carrier::generated(n), image});
        std::size_t k = 0;
        while (k < m && ++image[k] == n) image[k++] = 0;
        if (k == m) break;
      }
    }
  }
  return out;
}

CheckReport check_monad_laws(const MonadSpec& m, const Carrier& x, std::uint64_t bound) {
  using detail::agree;
  using detail::attempt;
  CheckReport report(m.id + ".laws");
  auto show = [&](const Term& t) { return to_string(t, &x); };
  auto mx = enumerate(m, x, bound);

  for (const Term& t : mx) {
    Term left_in = m.unit(t);
    auto left = attempt([&] { return m.mult(left_in); });
    report.expect(left.value && *left.value == t, [&] {
      return Witness{"left-unit", show(left_in), left.render(show), show(t)};
    });
    auto right_in = attempt([&] { return m.map(t, m.unit); });
    auto right = attempt([&] {
      if (!right_in.value) throw ShapeMismatch(right_in.error);
      return m.mult(*right_in.value);
    });
    report.expect(right_in.value && right.value && *right.value == t, [&] {
      return Witness{"right-unit", right_in.render(show), right.render(show), show(t)};
    });
  }

  auto mmx = m.enumerate_over(mx, bound, kDefaultCeiling);
  auto mmmx = m.enumerate_over(mmx, bound, kDefaultCeiling);
  for (const Term& t : mmmx) {
    auto outer_first = attempt([&] { return m.mult(m.mult(t)); });
    auto inner_first = attempt([&] { return m.mult(m.map(t, m.mult)); });
    report.expect(agree(outer_first, inner_first), [&] {
      return Witness{"associativity", show(t), outer_first.render(show), inner_first.render(show)};
    });
  }
  return report;
}

CheckReport check_monad_naturality(const MonadSpec& m, std::uint64_t bound, std::size_t max_carrier) {
  using detail::agree;
  using detail::attempt;
  CheckReport report(m.id + ".naturality");
  for (const CarrierMap& f : carrier_functions(max_carrier)) {
    auto show = [&](const Term& t) { return to_string(t, &f.dom); };
    auto show_cod = [&](const Term& t) { return to_string(t, &f.cod); };
    TermFn fn = [&f](const Term& t) { return f(t); };
    for (const Term& g : f.dom.terms()) {
      auto lhs = attempt([&] { return m.map(m.unit(g), fn); });
      auto rhs = attempt([&] { return m.unit(f(g)); });
      report.expect(agree(lhs, rhs), [&] {
        return Witness{"unit-naturality", show(g), lhs.render(show_cod), rhs.render(show_cod)};
      });
    }
    auto mmx = enumerate_nested(std::vector<MonadSpec>{m, m}, f.dom, bound);
    TermFn inner = [&](const Term& s) { return m.map(s, fn); };
    for (const Term& t : mmx) {
      auto lhs = attempt([&] { return m.map(m.mult(t), fn); });
      auto rhs = attempt([&] { return m.mult(m.map(t, inner)); });
      report.expect(agree(lhs, rhs), [&] {
        return Witness{"mult-naturality", show(t), lhs.render(show_cod), rhs.render(show_cod)};
      });
    }
  }
  return report;
}

}  // namespace itdist
