#include "itdist/series.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "itdist/errors.hpp"
#include "outcome.hpp"

namespace itdist {

using detail::agree;
using detail::attempt;

namespace {

std::vector<Term> nested(std::initializer_list<const MonadSpec*> monads, const Carrier& x,
                         std::uint64_t bound) {
  std::vector<MonadSpec> list;
  for (const MonadSpec* m : monads) list.push_back(*m);
  return enumerate_nested(list, x, bound);
}

}  // namespace

CheckReport check_distlaw(const DistLaw& law, const Carrier& x, std::uint64_t bound) {
  const MonadSpec& s = law.outer;
  const MonadSpec& t = law.inner;
  const TermFn& lambda = law.transform;
  auto show = [&](const Term& v) { return to_string(v, &x); };
  CheckReport report(law.name);

  // (1.1) with S's multiplication, on S S T (X)
  CheckReport mult_outer(law.name + ".mult-outer");
  for (const Term& u : nested({&s, &s, &t}, x, bound)) {
    auto lhs = attempt([&] { return lambda(s.mult(u)); });
    auto rhs = attempt([&] { return t.map(lambda(s.map(u, lambda)), s.mult); });
    mult_outer.expect(agree(lhs, rhs), [&] {
      return Witness{"mult-outer-pentagon", show(u), lhs.render(show), rhs.render(show)};
    });
  }

  // (1.2) with T's multiplication, on S T T (X)
  CheckReport mult_inner(law.name + ".mult-inner");
  for (const Term& u : nested({&s, &t, &t}, x, bound)) {
    auto lhs = attempt([&] { return lambda(s.map(u, t.mult)); });
    auto rhs = attempt([&] { return t.mult(t.map(lambda(u), lambda)); });
    mult_inner.expect(agree(lhs, rhs), [&] {
      return Witness{"mult-inner-pentagon", show(u), lhs.render(show), rhs.render(show)};
    });
  }

  CheckReport unit_outer(law.name + ".unit-outer");
  for (const Term& v : enumerate(t, x, bound)) {
    auto lhs = attempt([&] { return lambda(s.unit(v)); });
    auto rhs = attempt([&] { return t.map(v, s.unit); });
    unit_outer.expect(agree(lhs, rhs), [&] {
      return Witness{"unit-outer-triangle", show(v), lhs.render(show), rhs.render(show)};
    });
  }

  CheckReport unit_inner(law.name + ".unit-inner");
  for (const Term& v : enumerate(s, x, bound)) {
    auto lhs = attempt([&] { return lambda(s.map(v, t.unit)); });
    auto rhs = attempt([&] { return t.unit(v); });
    unit_inner.expect(agree(lhs, rhs), [&] {
      return Witness{"unit-inner-triangle", show(v), lhs.render(show), rhs.render(show)};
    });
  }

  CheckReport natural(law.name + ".naturality");
  std::size_t max_carrier = static_cast<std::size_t>(std::min<std::uint64_t>(bound, 3));
  std::map<std::size_t, std::vector<Term>> inputs;
  for (const CarrierMap& f : carrier_functions(max_carrier)) {
    auto& dom_terms = inputs[f.dom.size()];
    if (dom_terms.empty()) dom_terms = nested({&s, &t}, f.dom, bound);
    TermFn fn = [&f](const Term& g) { return f(g); };
    TermFn sf = [&](const Term& v) { return s.map(v, fn); };
    TermFn tf = [&](const Term& v) { return t.map(v, fn); };
    auto show_dom = [&](const Term& v) { return to_string(v, &f.dom); };
    auto show_cod = [&](const Term& v) { return to_string(v, &f.cod); };
    for (const Term& u : dom_terms) {
      auto lhs = attempt([&] { return t.map(lambda(u), sf); });
      auto rhs = attempt([&] { return lambda(s.map(u, tf)); });
      natural.expect(agree(lhs, rhs), [&] {
        return Witness{"naturality", show_dom(u), lhs.render(show_cod), rhs.render(show_cod)};
      });
    }
  }

  report.add(std::move(mult_outer));
  report.add(std::move(mult_inner));
  report.add(std::move(unit_outer));
  report.add(std::move(unit_inner));
  report.add(std::move(natural));
  return report;
}

DistributiveSeries::DistributiveSeries(std::string name, std::vector<MonadSpec> monads)
    : name_(std::move(name)), monads_(std::move(monads)) {}

DistributiveSeries DistributiveSeries::from_reversed(std::string name,
                                                     std::vector<MonadSpec> monads,
                                                     std::vector<ReversedLaw> laws) {
  std::size_t n = monads.size();
  std::reverse(monads.begin(), monads.end());
  DistributiveSeries series(std::move(name), std::move(monads));
  for (auto& r : laws) {
    if (!(1 <= r.i && r.i < r.j && r.j <= n)) {
      throw IndexOrder("reversed-indexing law needs 1 <= i < j <= n, got (" +
                       std::to_string(r.i) + "," + std::to_string(r.j) + ")");
    }
    series.set_law(n + 1 - r.i, n + 1 - r.j, std::move(r.law));
  }
  return series;
}

const MonadSpec& DistributiveSeries::monad(std::size_t i) const {
  if (i == 0 || i > monads_.size()) {
    throw IndexOrder("monad index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(monads_.size()));
  }
  return monads_[i - 1];
}

void DistributiveSeries::set_law(std::size_t i, std::size_t j, DistLaw law) {
  if (!(j >= 1 && i > j && i <= monads_.size())) {
    throw IndexOrder("law index needs n >= i > j >= 1, got (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
  }
  laws_.insert_or_assign({i, j}, std::move(law));
}

bool DistributiveSeries::has_law(std::size_t i, std::size_t j) const {
  return laws_.contains({i, j});
}

const DistLaw& DistributiveSeries::law(std::size_t i, std::size_t j) const {
  auto it = laws_.find({i, j});
  if (it == laws_.end()) {
    throw IndexOrder("series " + name_ + " has no law (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
  }
  return it->second;
}

CheckReport check_yang_baxter(const DistributiveSeries& series, std::size_t i, std::size_t j,
                              std::size_t k, const Carrier& x, std::uint64_t bound) {
  if (!(i > j && j > k && k >= 1 && i <= series.size())) {
    throw IndexOrder("Yang-Baxter triple needs n >= i > j > k >= 1, got (" + std::to_string(i) +
                     "," + std::to_string(j) + "," + std::to_string(k) + ")");
  }
  const MonadSpec& ti = series.monad(i);
  const MonadSpec& tj = series.monad(j);
  const MonadSpec& tk = series.monad(k);
  const TermFn& l_ij = series.law(i, j).transform;
  const TermFn& l_ik = series.law(i, k).transform;
  const TermFn& l_jk = series.law(j, k).transform;
  auto show = [&](const Term& v) { return to_string(v, &x); };

  std::string id = series.name() + ".yb(" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")";
  CheckReport report(id);
  for (const Term& u : nested({&ti, &tj, &tk}, x, bound)) {
    auto first = attempt([&] { return l_jk(tj.map(l_ij(u), l_ik)); });
    auto second = attempt([&] { return tk.map(l_ik(ti.map(u, l_jk)), l_ij); });
    report.expect(agree(first, second), [&] {
      return Witness{"yang-baxter-hexagon", show(u), first.render(show), second.render(show)};
    });
  }
  return report;
}

CheckReport validate_series(const DistributiveSeries& series, const Carrier& x,
                            std::uint64_t bound) {
  CheckReport report(series.name());
  std::size_t n = series.size();
  for (std::size_t i = 1; i <= n; ++i) report.add(check_monad_laws(series.monad(i), x, bound));
  for (std::size_t i = 2; i <= n; ++i) {
    for (std::size_t j = 1; j < i; ++j) report.add(check_distlaw(series.law(i, j), x, bound));
  }
  for (std::size_t i = 3; i <= n; ++i) {
    for (std::size_t j = 2; j < i; ++j) {
      for (std::size_t k = 1; k < j; ++k) {
        report.add(check_yang_baxter(series, i, j, k, x, bound));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Routes

Route Route::leaf(std::size_t k) {
  if (k == 0) throw std::invalid_argument("route leaves are numbered from 1");
  return Route(std::make_shared<const Node>(Node{k, k, nullptr, nullptr}));
}

Route Route::join(Route left, Route right) {
  if (left.last() + 1 != right.first()) {
    throw std::invalid_argument("route leaves must be consecutive: " + left.to_string() + " then " +
                                right.to_string());
  }
  std::size_t first = left.first();
  std::size_t last = right.last();
  return Route(std::make_shared<const Node>(Node{first, last,
                                                 std::make_shared<const Route>(std::move(left)),
                                                 std::make_shared<const Route>(std::move(right))}));
}

namespace {

struct RouteParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("route syntax error at position " + std::to_string(pos) + ": " +
                                what);
  }
  void expect(char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  Route parse() {
    skip();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      Route left = parse();
      expect(',');
      Route right = parse();
      expect(')');
      return Route::join(std::move(left), std::move(right));
    }
    std::size_t start = pos;
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
      ++pos;
    }
    if (pos == start) fail("expected a leaf index or '('");
    return Route::leaf(value);
  }
};

std::vector<Route> all_routes(std::size_t lo, std::size_t hi) {
  if (lo == hi) return {Route::leaf(lo)};
  std::vector<Route> out;
  for (std::size_t m = lo; m < hi; ++m) {
    for (const Route& l : all_routes(lo, m)) {
      for (const Route& r : all_routes(m + 1, hi)) out.push_back(Route::join(l, r));
    }
  }
  return out;
}

Route left_comb(std::size_t lo, std::size_t hi) {
  Route r = Route::leaf(lo);
  for (std::size_t k = lo + 1; k <= hi; ++k) r = Route::join(r, Route::leaf(k));
  return r;
}

}  // namespace

Route Route::parse(std::string_view text) {
  RouteParser p{text};
  Route r = p.parse();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

std::vector<Route> Route::all(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a route needs at least one leaf");
  return all_routes(1, n);
}

Route Route::left_comb(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a route needs at least one leaf");
  return itdist::left_comb(1, n);
}

std::string Route::to_string() const {
  if (is_leaf()) return std::to_string(first());
  return "(" + left().to_string() + "," + right().to_string() + ")";
}

// ---------------------------------------------------------------------------
// Composites

MonadSpec compose_pair(const MonadSpec& s, const MonadSpec& t, const DistLaw& law) {
  MonadSpec m;
  m.id = "(" + t.id + " " + s.id + ")";
  m.layers = t.layers;
  m.layers.insert(m.layers.end(), s.layers.begin(), s.layers.end());
  m.unit = [s, t](const Term& y) { return t.unit(s.unit(y)); };
  TermFn lambda = law.transform;
  m.mult = [s, t, lambda](const Term& tsts) {
    return t.map(t.mult(t.map(tsts, lambda)), s.mult);
  };
  m.map = [s, t](const Term& v, const TermFn& f) {
    return t.map(v, [&](const Term& inner) { return s.map(inner, f); });
  };
  m.enumerate_over = [s, t](std::span<const Term> ys, std::uint64_t bound, std::size_t ceiling) {
    auto inner = s.enumerate_over(ys, bound, ceiling);
    return t.enumerate_over(inner, bound, ceiling);
  };
  return m;
}

namespace {

using SeriesPtr = std::shared_ptr<const DistributiveSeries>;

Term apply_at(const DistributiveSeries& series, const std::vector<std::size_t>& word,
              std::size_t depth, const TermFn& fn, const Term& t, std::size_t from = 0) {
  if (from == depth) return fn(t);
  return series.monad(word[from]).map(
      t, [&](const Term& u) { return apply_at(series, word, depth, fn, u, from + 1); });
}

MonadSpec compose_node(const SeriesPtr& series, const Route& route);

// Law (T_{m+1}..T_hi)(T_lo..T_m) => (T_lo..T_m)(T_{m+1}..T_hi).
DistLaw block_law(const SeriesPtr& series, std::size_t lo, std::size_t m, std::size_t hi,
                  MonadSpec outer, MonadSpec inner) {
  if (lo == m && m + 1 == hi) {
    DistLaw law = series->law(hi, lo);
    law.outer = std::move(outer);
    law.inner = std::move(inner);
    return law;
  }
  DistLaw law;
  law.name = series->name() + ".block[" + std::to_string(lo) + ".." + std::to_string(m) + "|" +
             std::to_string(m + 1) + ".." + std::to_string(hi) + "]";
  law.outer = std::move(outer);
  law.inner = std::move(inner);
  law.transform = [series, lo, m, hi](const Term& input) {
    std::vector<std::size_t> word;
    for (std::size_t a = m + 1; a <= hi; ++a) word.push_back(a);
    for (std::size_t b = lo; b <= m; ++b) word.push_back(b);
    Term t = input;
    for (std::size_t b = lo; b <= m; ++b) {
      std::size_t pos = (hi - m) + (b - lo);
      std::size_t target = b - lo;
      for (; pos > target; --pos) {
        std::size_t a = word[pos - 1];
        t = apply_at(*series, word, pos - 1, series->law(a, b).transform, t);
        std::swap(word[pos - 1], word[pos]);
      }
    }
    return t;
  };
  return law;
}

MonadSpec compose_node(const SeriesPtr& series, const Route& route) {
  if (route.is_leaf()) return series->monad(route.first());
  MonadSpec left = compose_node(series, route.left());
  MonadSpec right = compose_node(series, route.right());
  DistLaw law = block_law(series, route.first(), route.left().last(), route.last(), right, left);
  return compose_pair(right, left, law);
}

}  // namespace

DistLaw derive_block_law(const DistributiveSeries& series, std::size_t split) {
  std::size_t n = series.size();
  if (split < 1 || split >= n) {
    throw SplitOutOfRange("split " + std::to_string(split) + " outside 1.." +
                          std::to_string(n == 0 ? 0 : n - 1));
  }
  auto ptr = std::make_shared<const DistributiveSeries>(series);
  MonadSpec inner = compose_node(ptr, left_comb(1, split));
  MonadSpec outer = compose_node(ptr, left_comb(split + 1, n));
  return block_law(ptr, 1, split, n, std::move(outer), std::move(inner));
}

MonadSpec compose_series(const DistributiveSeries& series, const Route& route) {
  if (route.first() != 1 || route.last() != series.size()) {
    throw std::invalid_argument("route " + route.to_string() + " does not cover 1.." +
                                std::to_string(series.size()));
  }
  return compose_node(std::make_shared<const DistributiveSeries>(series), route);
}

CheckReport check_route_independence(const DistributiveSeries& series, const Carrier& x,
                                     std::uint64_t bound, std::size_t max_n) {
  std::size_t n = series.size();
  if (n > max_n) {
    throw std::invalid_argument("route comparison limited to n <= " + std::to_string(max_n) +
                                ", series has " + std::to_string(n) + " monads");
  }
  return check_route_independence(series, Route::all(n), x, bound);
}

CheckReport check_route_independence(const DistributiveSeries& series,
                                     const std::vector<Route>& routes, const Carrier& x,
                                     std::uint64_t bound) {
  if (routes.empty()) throw std::invalid_argument("no routes to compare");
  CheckReport report(series.name() + ".routes");
  std::vector<MonadSpec> composites;
  for (const Route& r : routes) composites.push_back(compose_series(series, r));
  if (routes.size() < 2) {
    report.add(CheckReport(series.name() + ".route" + routes.front().to_string()));
    return report;
  }

  std::vector<MonadSpec> doubled = series.monads();
  doubled.insert(doubled.end(), series.monads().begin(), series.monads().end());
  auto inputs = enumerate_nested(doubled, x, bound);
  auto gens = x.terms();
  auto show = [&](const Term& v) { return to_string(v, &x); };

  const MonadSpec& ref = composites.front();
  for (std::size_t r = 1; r < routes.size(); ++r) {
    const MonadSpec& other = composites[r];
    CheckReport part(series.name() + ".route" + routes[r].to_string() + "~" +
                     routes.front().to_string());
    for (const Term& g : gens) {
      auto a = attempt([&] { return other.unit(g); });
      auto b = attempt([&] { return ref.unit(g); });
      part.expect(agree(a, b), [&] {
        return Witness{"unit", show(g), a.render(show), b.render(show)};
      });
    }
    for (const Term& u : inputs) {
      auto a = attempt([&] { return other.mult(u); });
      auto b = attempt([&] { return ref.mult(u); });
      part.expect(agree(a, b), [&] {
        return Witness{"mult", show(u), a.render(show), b.render(show)};
      });
    }
    report.add(std::move(part));
  }
  return report;
}

}  // namespace itdist
