// Reverse-direction candidate T_0 T_1 => T_1 T_0 on 2-globular sets:
// columns of a horizontal string may have different heights, so shorter
// columns are padded with identity 2-cells before transposing.

#include "itdist/errors.hpp"
#include "itdist/globular.hpp"
#include "outcome.hpp"

namespace itdist {

using detail::agree;
using detail::attempt;

ReflexiveSet add_identities(const GlobularSet& g) {
  if (g.n != 2) {
    throw DimensionError("identity padding is defined on 2-globular sets, got n=" +
                         std::to_string(g.n));
  }
  ReflexiveSet r{g, {}};
  for (std::uint32_t f = 0; f < g.cells[1].size(); ++f) {
    std::string name = "id_" + g.cells[1][f];
    while (r.g.index_of(2, name)) name += "'";
    r.identity_of.push_back(static_cast<std::uint32_t>(r.g.cells[2].size()));
    r.g.cells[2].push_back(std::move(name));
    r.g.src[1].push_back(f);
    r.g.tgt[1].push_back(f);
  }
  return r;
}

namespace {

// Identity 2-cell on the 1-cell f of the carrier described by layers[depth..].
Cell identity_on(const ReflexiveSet& r, const Cell& f, const std::vector<std::size_t>& layers,
                 std::size_t depth) {
  if (depth == layers.size()) {
    if (!f.is_base() || f.dim() != 1) throw ShapeMismatch("expected a base 1-cell");
    return Cell::base(2, r.identity_of.at(f.index()));
  }
  if (layers[depth] == 1) return Cell::string(2, 1, {}, f);
  if (f.is_base() || f.along() != 0) throw ShapeMismatch("expected a path of 1-cells");
  if (f.empty()) return Cell::string(2, 0, {}, f.anchor());
  std::vector<Cell> parts;
  for (const Cell& e : f.entries()) parts.push_back(identity_on(r, e, layers, depth + 1));
  return Cell::string(2, 0, std::move(parts));
}

}  // namespace

Cell padding_candidate(const ReflexiveSet& r, const Cell& c,
                       const std::vector<std::size_t>& carrier_layers) {
  if (c.dim() <= 1) return c;
  if (c.is_base() || c.along() != 0) throw ShapeMismatch("expected a string along 0");
  if (c.empty()) return ti_unit(c, 1);

  // every column is padded to the tallest one, and to at least one row
  std::size_t height = 1;
  for (const Cell& col : c.entries()) {
    if (col.is_base() || col.along() != 1) throw ShapeMismatch("expected columns along 1");
    height = std::max(height, col.entries().size());
  }
  std::vector<std::vector<Cell>> columns;
  for (const Cell& col : c.entries()) {
    std::vector<Cell> padded;
    std::size_t missing = height - col.entries().size();
    if (missing) {
      Cell top = col.empty() ? col.anchor()
                             : boundary(r.g, col.entries().front(), Side::Src, 1);
      padded.assign(missing, identity_on(r, top, carrier_layers, 0));
    }
    padded.insert(padded.end(), col.entries().begin(), col.entries().end());
    columns.push_back(std::move(padded));
  }
  std::vector<Cell> rows;
  for (std::size_t h = 0; h < height; ++h) {
    std::vector<Cell> row;
    for (const auto& col : columns) row.push_back(col[h]);
    rows.push_back(Cell::string(2, 0, std::move(row)));
  }
  return Cell::string(2, 1, std::move(rows));
}

CheckReport check_padding_candidate(const ReflexiveSet& r, std::size_t bound) {
  const GlobularSet& g = r.g;
  auto show = [&](const Cell& c) { return to_string(g, c); };
  auto lambda_at = [&r](std::vector<std::size_t> layers) -> CellFn {
    return [&r, layers](const Cell& c) { return padding_candidate(r, c, layers); };
  };
  CellFn lambda = lambda_at({});
  CellFn unit0 = [](const Cell& c) { return ti_unit(c, 0); };
  CellFn unit1 = [](const Cell& c) { return ti_unit(c, 1); };
  CellFn mult0 = [&g](const Cell& c) { return ti_mult(g, c, 0); };
  CellFn mult1 = [&g](const Cell& c) { return ti_mult(g, c, 1); };

  auto flat = [](const CellSet& s) {
    std::vector<Cell> out;
    for (const auto& d : s) out.insert(out.end(), d.begin(), d.end());
    return out;
  };
  CellSet y = base_cells(g);
  CellSet t0 = apply_Ti(g, y, 0, bound);
  CellSet t1 = apply_Ti(g, y, 1, bound);

  CheckReport report("padding-candidate");
  CheckReport mult_inner("padding-candidate.mult-inner");
  CellFn lambda_t1 = lambda_at({1});
  for (const Cell& u : flat(apply_Ti(g, apply_Ti(g, t1, 1, bound), 0, bound))) {
    auto lhs = attempt([&] { return lambda(ti_map(u, 0, mult1)); });
    auto rhs = attempt([&] { return ti_mult(g, ti_map(lambda_t1(u), 1, lambda), 1); });
    mult_inner.expect(agree(lhs, rhs), [&] {
      return Witness{"mult-inner-pentagon", show(u), lhs.render(show), rhs.render(show)};
    });
  }
  CheckReport mult_outer("padding-candidate.mult-outer");
  CellFn lambda_t0 = lambda_at({0});
  for (const Cell& u : flat(apply_Ti(g, apply_Ti(g, t1, 0, bound), 0, bound))) {
    auto lhs = attempt([&] { return lambda(ti_mult(g, u, 0)); });
    auto rhs = attempt([&] { return ti_map(lambda_t0(ti_map(u, 0, lambda)), 1, mult0); });
    mult_outer.expect(agree(lhs, rhs), [&] {
      return Witness{"mult-outer-pentagon", show(u), lhs.render(show), rhs.render(show)};
    });
  }
  CheckReport unit_outer("padding-candidate.unit-outer");
  for (const Cell& c : flat(t1)) {
    auto lhs = attempt([&] { return lambda(ti_unit(c, 0)); });
    auto rhs = attempt([&] { return ti_map(c, 1, unit0); });
    unit_outer.expect(agree(lhs, rhs), [&] {
      return Witness{"unit-outer-triangle", show(c), lhs.render(show), rhs.render(show)};
    });
  }
  CheckReport unit_inner("padding-candidate.unit-inner");
  for (const Cell& c : flat(t0)) {
    auto lhs = attempt([&] { return lambda(ti_map(c, 0, unit1)); });
    auto rhs = attempt([&] { return ti_unit(c, 1); });
    unit_inner.expect(agree(lhs, rhs), [&] {
      return Witness{"unit-inner-triangle", show(c), lhs.render(show), rhs.render(show)};
    });
  }
  report.add(std::move(mult_inner));
  report.add(std::move(mult_outer));
  report.add(std::move(unit_outer));
  report.add(std::move(unit_inner));
  return report;
}

}  // namespace itdist
