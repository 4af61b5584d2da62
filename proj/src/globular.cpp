#include "itdist/globular.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "itdist/errors.hpp"
#include "outcome.hpp"

namespace itdist {

using detail::agree;
using detail::attempt;

// ---------------------------------------------------------------------------
// Globular sets

std::size_t GlobularSet::cell_count() const {
  std::size_t total = 0;
  for (const auto& dim : cells) total += dim.size();
  return total;
}

std::optional<std::uint32_t> GlobularSet::index_of(std::size_t dim, std::string_view name) const {
  if (dim >= cells.size()) return std::nullopt;
  const auto& names = cells[dim];
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - names.begin());
}

GlobularSet make_globular(
    std::size_t n, std::vector<std::vector<std::string>> cells,
    const std::vector<std::vector<std::pair<std::string, std::string>>>& src,
    const std::vector<std::vector<std::pair<std::string, std::string>>>& tgt) {
  if (cells.size() != n + 1) {
    throw FormatError("expected " + std::to_string(n + 1) + " cell dimensions, got " +
                      std::to_string(cells.size()));
  }
  if (src.size() != n || tgt.size() != n) {
    throw FormatError("expected " + std::to_string(n) + " src and tgt maps");
  }
  GlobularSet g;
  g.n = n;
  g.cells = std::move(cells);
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<std::string> sorted = g.cells[d];
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw FormatError("duplicate cell name '" + *dup + "' in dimension " + std::to_string(d));
    }
  }
  auto build = [&](const std::vector<std::vector<std::pair<std::string, std::string>>>& maps,
                   const char* which) {
    std::vector<std::vector<std::uint32_t>> out(n);
    for (std::size_t d = 0; d < n; ++d) {
      const auto& upper = g.cells[d + 1];
      out[d].assign(upper.size(), 0);
      std::vector<bool> seen(upper.size(), false);
      for (const auto& [from, to] : maps[d]) {
        auto fi = g.index_of(d + 1, from);
        if (!fi) {
          throw FormatError(std::string(which) + " map of dimension " + std::to_string(d + 1) +
                            " mentions unknown cell '" + from + "'");
        }
        auto ti = g.index_of(d, to);
        if (!ti) {
          throw FormatError(std::string(which) + "('" + from + "') = '" + to +
                            "' is not a cell of dimension " + std::to_string(d));
        }
        if (seen[*fi]) {
          throw FormatError(std::string(which) + " map gives '" + from + "' twice");
        }
        seen[*fi] = true;
        out[d][*fi] = *ti;
      }
      for (std::size_t k = 0; k < upper.size(); ++k) {
        if (!seen[k]) {
          throw FormatError(std::string(which) + " map has no entry for cell '" + upper[k] + "'");
        }
      }
    }
    return out;
  };
  g.src = build(src, "src");
  g.tgt = build(tgt, "tgt");
  return g;
}

GlobularSet terminal_globular(std::size_t n) {
  GlobularSet g;
  g.n = n;
  g.cells.assign(n + 1, {"*"});
  g.src.assign(n, {0});
  g.tgt.assign(n, {0});
  return g;
}

CheckReport validate_globular(const GlobularSet& g) {
  CheckReport report("globular");
  for (std::size_t m = 2; m <= g.n; ++m) {
    const auto& s_hi = g.src[m - 1];
    const auto& t_hi = g.tgt[m - 1];
    const auto& s_lo = g.src[m - 2];
    const auto& t_lo = g.tgt[m - 2];
    const auto& lower = g.cells[m - 2];
    for (std::size_t k = 0; k < g.cells[m].size(); ++k) {
      const std::string& name = g.cells[m][k];
      report.expect(s_lo[s_hi[k]] == s_lo[t_hi[k]], [&] {
        return Witness{"ss=st", name, lower[s_lo[s_hi[k]]], lower[s_lo[t_hi[k]]]};
      });
      report.expect(t_lo[s_hi[k]] == t_lo[t_hi[k]], [&] {
        return Witness{"ts=tt", name, lower[t_lo[s_hi[k]]], lower[t_lo[t_hi[k]]]};
      });
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Cells

struct Cell::Node {
  bool is_base = true;
  std::size_t dim = 0;
  std::uint32_t index = 0;
  std::size_t along = 0;
  std::vector<Cell> entries;
  std::optional<Cell> anchor;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Cell Cell::base(std::size_t dim, std::uint32_t index) {
  auto node = std::make_shared<Node>();
  node->dim = dim;
  node->index = index;
  node->hash = mix(mix(17, dim), index);
  return Cell(std::move(node));
}

Cell Cell::string(std::size_t dim, std::size_t along, std::vector<Cell> entries,
                  std::optional<Cell> anchor) {
  if (along >= dim) {
    throw ShapeMismatch("a string of " + std::to_string(dim) + "-cells cannot compose along " +
                        std::to_string(along));
  }
  for (const Cell& e : entries) {
    if (e.dim() != dim) {
      throw ShapeMismatch("string entry of dimension " + std::to_string(e.dim()) +
                          " in a string of " + std::to_string(dim) + "-cells");
    }
  }
  if (entries.empty() != anchor.has_value()) {
    throw ShapeMismatch(entries.empty() ? "empty string needs an anchor"
                                        : "nonempty string cannot carry an anchor");
  }
  if (anchor && anchor->dim() != along) {
    throw ShapeMismatch("anchor of a string along " + std::to_string(along) + " has dimension " +
                        std::to_string(anchor->dim()));
  }
  auto node = std::make_shared<Node>();
  node->is_base = false;
  node->dim = dim;
  node->along = along;
  std::size_t h = mix(mix(31, dim), along);
  for (const Cell& e : entries) h = mix(h, e.hash());
  if (anchor) h = mix(h, anchor->hash() + 1);
  node->hash = h;
  node->entries = std::move(entries);
  node->anchor = std::move(anchor);
  return Cell(std::move(node));
}

bool Cell::is_base() const { return node_->is_base; }
std::size_t Cell::dim() const { return node_->dim; }
std::uint32_t Cell::index() const { return node_->index; }
std::size_t Cell::along() const { return node_->along; }
const std::vector<Cell>& Cell::entries() const { return node_->entries; }
const Cell& Cell::anchor() const {
  if (!node_->anchor) throw ShapeMismatch("cell has no anchor");
  return *node_->anchor;
}
std::size_t Cell::hash() const { return node_->hash; }

bool operator==(const Cell& a, const Cell& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.is_base != y.is_base) return x.is_base ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
  if (auto c = x.dim <=> y.dim; c != 0) return c;
  if (x.is_base) return x.index <=> y.index;
  if (auto c = x.along <=> y.along; c != 0) return c;
  std::size_t common = std::min(x.entries.size(), y.entries.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (auto c = x.entries[k] <=> y.entries[k]; c != 0) return c;
  }
  if (auto c = x.entries.size() <=> y.entries.size(); c != 0) return c;
  if (x.anchor && y.anchor) return *x.anchor <=> *y.anchor;
  return std::strong_ordering::equal;
}

std::string to_string(const GlobularSet& g, const Cell& c) {
  if (c.is_base()) {
    if (c.dim() < g.cells.size() && c.index() < g.cells[c.dim()].size()) {
      return g.cells[c.dim()][c.index()];
    }
    return "#" + std::to_string(c.dim()) + ":" + std::to_string(c.index());
  }
  std::string out = "[";
  for (std::size_t k = 0; k < c.entries().size(); ++k) {
    if (k) out += ",";
    out += to_string(g, c.entries()[k]);
  }
  out += "]_" + std::to_string(c.along());
  if (c.empty()) out += "@" + to_string(g, c.anchor());
  return out;
}

Cell boundary(const GlobularSet& g, const Cell& c, Side side, std::size_t d) {
  if (d >= c.dim()) {
    throw DimensionError("boundary at dimension " + std::to_string(d) + " of a " +
                         std::to_string(c.dim()) + "-cell");
  }
  if (c.is_base()) {
    if (c.dim() > g.n || c.index() >= g.cells[c.dim()].size()) {
      throw ShapeMismatch("cell #" + std::to_string(c.dim()) + ":" + std::to_string(c.index()) +
                          " is not in the globular set");
    }
    std::uint32_t k = c.index();
    std::size_t m = c.dim();
    k = (side == Side::Src ? g.src : g.tgt)[m - 1][k];
    for (--m; m > d; --m) k = (side == Side::Src ? g.src : g.tgt)[m - 1][k];
    return Cell::base(d, k);
  }
  std::size_t i = c.along();
  if (d > i) {
    std::vector<Cell> parts;
    parts.reserve(c.entries().size());
    for (const Cell& e : c.entries()) parts.push_back(boundary(g, e, side, d));
    if (c.empty()) return Cell::string(d, i, {}, c.anchor());
    return Cell::string(d, i, std::move(parts));
  }
  if (c.empty()) return d == i ? c.anchor() : boundary(g, c.anchor(), side, d);
  const Cell& end = side == Side::Src ? c.entries().front() : c.entries().back();
  return boundary(g, end, side, d);
}

CellSet base_cells(const GlobularSet& g) {
  CellSet out(g.n + 1);
  for (std::size_t d = 0; d <= g.n; ++d) {
    for (std::uint32_t k = 0; k < g.cells[d].size(); ++k) out[d].push_back(Cell::base(d, k));
    std::sort(out[d].begin(), out[d].end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// The monads T_i

namespace {

const Cell& require_string(const Cell& c, std::size_t i, const char* what) {
  if (c.is_base() || c.along() != i) {
    throw ShapeMismatch(std::string(what) + ": expected a string along " + std::to_string(i));
  }
  return c;
}

}  // namespace

Cell ti_unit(const Cell& c, std::size_t i) {
  if (c.dim() <= i) return c;
  return Cell::string(c.dim(), i, {c});
}

Cell ti_mult(const GlobularSet& g, const Cell& c, std::size_t i) {
  if (c.dim() <= i) return c;
  require_string(c, i, "ti_mult");
  if (c.empty()) return Cell::string(c.dim(), i, {}, c.anchor());
  std::vector<Cell> flat;
  for (const Cell& inner : c.entries()) {
    require_string(inner, i, "ti_mult");
    flat.insert(flat.end(), inner.entries().begin(), inner.entries().end());
  }
  for (std::size_t k = 0; k + 1 < flat.size(); ++k) {
    if (boundary(g, flat[k], Side::Tgt, i) != boundary(g, flat[k + 1], Side::Src, i)) {
      throw ComposabilityError("entries " + std::to_string(k) + " and " + std::to_string(k + 1) +
                               " do not meet along dimension " + std::to_string(i));
    }
  }
  if (flat.empty()) return Cell::string(c.dim(), i, {}, c.entries().front().anchor());
  return Cell::string(c.dim(), i, std::move(flat));
}

Cell ti_map(const Cell& c, std::size_t i, const CellFn& f) {
  if (c.dim() <= i) return f(c);
  require_string(c, i, "ti_map");
  if (c.empty()) return Cell::string(c.dim(), i, {}, f(c.anchor()));
  std::vector<Cell> mapped;
  mapped.reserve(c.entries().size());
  for (const Cell& e : c.entries()) mapped.push_back(f(e));
  return Cell::string(c.dim(), i, std::move(mapped));
}

CellSet apply_Ti(const GlobularSet& g, const CellSet& y, std::size_t i, std::size_t bound,
                 std::size_t ceiling) {
  if (i >= y.size()) {
    throw DimensionError("T_" + std::to_string(i) + " on a set of dimension " +
                         std::to_string(y.size() - 1));
  }
  CellSet out(y.size());
  std::size_t produced = 0;
  auto emit = [&](std::size_t m, Cell c) {
    if (++produced > ceiling) {
      throw BoundTooLarge("T_" + std::to_string(i) + " produced more than " +
                          std::to_string(ceiling) + " cells");
    }
    out[m].push_back(std::move(c));
  };
  for (std::size_t m = 0; m <= i; ++m) out[m] = y[m];
  for (std::size_t m = i + 1; m < y.size(); ++m) {
    for (const Cell& x : y[i]) emit(m, Cell::string(m, i, {}, x));
    const auto& cells = y[m];
    std::vector<Cell> tgts;
    std::unordered_map<Cell, std::vector<std::size_t>> by_src;
    tgts.reserve(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      by_src[boundary(g, cells[k], Side::Src, i)].push_back(k);
      tgts.push_back(boundary(g, cells[k], Side::Tgt, i));
    }
    std::vector<Cell> path;
    std::function<void(std::size_t)> extend = [&](std::size_t last) {
      emit(m, Cell::string(m, i, path));
      if (path.size() >= bound) return;
      auto it = by_src.find(tgts[last]);
      if (it == by_src.end()) return;
      for (std::size_t next : it->second) {
        path.push_back(cells[next]);
        extend(next);
        path.pop_back();
      }
    };
    for (std::size_t k = 0; bound > 0 && k < cells.size(); ++k) {
      path.assign(1, cells[k]);
      extend(k);
    }
    std::sort(out[m].begin(), out[m].end());
  }
  return out;
}

CellSet free_ncat(const GlobularSet& g, std::size_t bound) {
  CellSet cells = base_cells(g);
  for (std::size_t i = g.n; i-- > 0;) cells = apply_Ti(g, cells, i, bound);
  return cells;
}

std::vector<std::size_t> cell_counts(const CellSet& cells) {
  std::vector<std::size_t> out;
  for (const auto& dim : cells) out.push_back(dim.size());
  return out;
}

CheckReport validate_cells(const GlobularSet& g, const CellSet& cells, const std::string& id) {
  CheckReport report(id);
  std::vector<std::unordered_set<Cell>> members(cells.size());
  for (std::size_t d = 0; d < cells.size(); ++d) members[d].insert(cells[d].begin(), cells[d].end());
  auto show = [&](const Cell& c) { return to_string(g, c); };
  for (std::size_t m = 1; m < cells.size(); ++m) {
    for (const Cell& c : cells[m]) {
      auto s = attempt([&] { return boundary(g, c, Side::Src, m - 1); });
      auto t = attempt([&] { return boundary(g, c, Side::Tgt, m - 1); });
      report.expect(s.value && t.value && members[m - 1].contains(*s.value) &&
                        members[m - 1].contains(*t.value),
                    [&] {
                      return Witness{"boundary-membership", show(c), s.render(show),
                                     t.render(show)};
                    });
      if (m < 2 || !s.value || !t.value) continue;
      for (Side side : {Side::Src, Side::Tgt}) {
        auto via_s = attempt([&] { return boundary(g, *s.value, side, m - 2); });
        auto via_t = attempt([&] { return boundary(g, *t.value, side, m - 2); });
        report.expect(agree(via_s, via_t), [&] {
          return Witness{side == Side::Src ? "ss=st" : "ts=tt", show(c), via_s.render(show),
                         via_t.render(show)};
        });
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Interchange

Cell transpose_grid(const Cell& c, std::size_t outer, std::size_t inner) {
  require_string(c, outer, "transpose_grid");
  if (c.empty()) throw ShapeMismatch("transpose_grid needs a nonempty grid");
  std::size_t width = 0;
  for (std::size_t r = 0; r < c.entries().size(); ++r) {
    const Cell& row = require_string(c.entries()[r], inner, "transpose_grid");
    if (r == 0) {
      width = row.entries().size();
    } else if (row.entries().size() != width) {
      throw RaggedGrid("row " + std::to_string(r) + " has length " +
                       std::to_string(row.entries().size()) + ", row 0 has " +
                       std::to_string(width));
    }
  }
  if (width == 0) throw ShapeMismatch("transpose_grid needs nonempty rows");
  std::vector<Cell> columns;
  columns.reserve(width);
  for (std::size_t k = 0; k < width; ++k) {
    std::vector<Cell> column;
    column.reserve(c.entries().size());
    for (const Cell& row : c.entries()) column.push_back(row.entries()[k]);
    columns.push_back(Cell::string(c.dim(), outer, std::move(column)));
  }
  return Cell::string(c.dim(), inner, std::move(columns));
}

Cell interchange_law(const Cell& c, std::size_t i, std::size_t j) {
  if (i <= j) {
    throw IndexOrder("interchange needs i > j, got i=" + std::to_string(i) +
                     " j=" + std::to_string(j));
  }
  std::size_t m = c.dim();
  if (m <= i) return c;
  require_string(c, i, "interchange_law");
  if (c.empty()) {
    // identity on an i-cell that is itself a string along j
    const Cell& a = require_string(c.anchor(), j, "interchange_law anchor");
    if (a.empty()) return Cell::string(m, j, {}, a.anchor());
    std::vector<Cell> columns;
    for (const Cell& f : a.entries()) columns.push_back(Cell::string(m, i, {}, f));
    return Cell::string(m, j, std::move(columns));
  }
  const auto& rows = c.entries();
  std::size_t width = require_string(rows.front(), j, "interchange_law").entries().size();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    std::size_t len = require_string(rows[r], j, "interchange_law").entries().size();
    if (len != width) {
      throw RaggedGrid("row " + std::to_string(r) + " has length " + std::to_string(len) +
                       ", row 0 has " + std::to_string(width));
    }
  }
  if (width == 0) return Cell::string(m, j, {}, rows.front().anchor());
  return transpose_grid(c, i, j);
}

// ---------------------------------------------------------------------------
// Checks

namespace {

std::vector<Cell> flatten(const CellSet& cells) {
  std::vector<Cell> out;
  for (const auto& dim : cells) out.insert(out.end(), dim.begin(), dim.end());
  return out;
}

std::string dims_id(std::size_t i, std::size_t j) {
  return std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

CheckReport check_ti_monad(const GlobularSet& g, std::size_t i, std::size_t bound) {
  auto show = [&](const Cell& c) { return to_string(g, c); };
  CheckReport report("T" + std::to_string(i) + ".laws");
  CellSet y = base_cells(g);
  CellSet t1 = apply_Ti(g, y, i, bound);
  CellFn unit = [i](const Cell& c) { return ti_unit(c, i); };
  CellFn mult = [&g, i](const Cell& c) { return ti_mult(g, c, i); };
  for (const Cell& c : flatten(t1)) {
    auto left = attempt([&] { return ti_mult(g, ti_unit(c, i), i); });
    report.expect(left.value && *left.value == c, [&] {
      return Witness{"left-unit", show(c), left.render(show), show(c)};
    });
    auto right = attempt([&] { return ti_mult(g, ti_map(c, i, unit), i); });
    report.expect(right.value && *right.value == c, [&] {
      return Witness{"right-unit", show(c), right.render(show), show(c)};
    });
  }
  CellSet t3 = apply_Ti(g, apply_Ti(g, t1, i, bound), i, bound);
  for (const Cell& c : flatten(t3)) {
    auto a = attempt([&] { return ti_mult(g, ti_mult(g, c, i), i); });
    auto b = attempt([&] { return ti_mult(g, ti_map(c, i, mult), i); });
    report.expect(agree(a, b), [&] {
      return Witness{"associativity", show(c), a.render(show), b.render(show)};
    });
  }
  return report;
}

CheckReport check_interchange(const GlobularSet& g, std::size_t i, std::size_t j,
                              std::size_t bound) {
  if (i <= j || i >= g.n) {
    throw IndexOrder("interchange check needs n > i > j, got i=" + std::to_string(i) +
                     " j=" + std::to_string(j));
  }
  auto show = [&](const Cell& c) { return to_string(g, c); };
  std::string id = "interchange(" + dims_id(i, j) + ")";
  CellFn lambda = [i, j](const Cell& c) { return interchange_law(c, i, j); };
  CellFn unit_i = [i](const Cell& c) { return ti_unit(c, i); };
  CellFn unit_j = [j](const Cell& c) { return ti_unit(c, j); };
  CellFn mult_i = [&g, i](const Cell& c) { return ti_mult(g, c, i); };
  CellFn mult_j = [&g, j](const Cell& c) { return ti_mult(g, c, j); };

  CellSet y = base_cells(g);
  CellSet tj = apply_Ti(g, y, j, bound);
  CellSet ti = apply_Ti(g, y, i, bound);
  CellSet titj = apply_Ti(g, tj, i, bound);

  CheckReport report(id);
  CheckReport mult_outer(id + ".mult-outer");
  for (const Cell& u : flatten(apply_Ti(g, titj, i, bound))) {
    auto lhs = attempt([&] { return lambda(ti_mult(g, u, i)); });
    auto rhs = attempt([&] { return ti_map(lambda(ti_map(u, i, lambda)), j, mult_i); });
    mult_outer.expect(agree(lhs, rhs), [&] {
      return Witness{"mult-outer-pentagon", show(u), lhs.render(show), rhs.render(show)};
    });
  }
  CheckReport mult_inner(id + ".mult-inner");
  for (const Cell& u : flatten(apply_Ti(g, apply_Ti(g, tj, j, bound), i, bound))) {
    auto lhs = attempt([&] { return lambda(ti_map(u, i, mult_j)); });
    auto rhs = attempt([&] { return ti_mult(g, ti_map(lambda(u), j, lambda), j); });
    mult_inner.expect(agree(lhs, rhs), [&] {
      return Witness{"mult-inner-pentagon", show(u), lhs.render(show), rhs.render(show)};
    });
  }
  CheckReport unit_outer(id + ".unit-outer");
  for (const Cell& c : flatten(tj)) {
    auto lhs = attempt([&] { return lambda(ti_unit(c, i)); });
    auto rhs = attempt([&] { return ti_map(c, j, unit_i); });
    unit_outer.expect(agree(lhs, rhs), [&] {
      return Witness{"unit-outer-triangle", show(c), lhs.render(show), rhs.render(show)};
    });
  }
  CheckReport unit_inner(id + ".unit-inner");
  for (const Cell& c : flatten(ti)) {
    auto lhs = attempt([&] { return lambda(ti_map(c, i, unit_j)); });
    auto rhs = attempt([&] { return ti_unit(c, j); });
    unit_inner.expect(agree(lhs, rhs), [&] {
      return Witness{"unit-inner-triangle", show(c), lhs.render(show), rhs.render(show)};
    });
  }
  CheckReport natural(id + ".naturality");
  GlobularSet one = terminal_globular(g.n);
  CellFn to_one = [](const Cell& c) { return Cell::base(c.dim(), 0); };
  auto show_one = [&](const Cell& c) { return to_string(one, c); };
  for (const Cell& u : flatten(titj)) {
    auto lhs = attempt([&] {
      return ti_map(lambda(u), j, [&](const Cell& x) { return ti_map(x, i, to_one); });
    });
    auto rhs = attempt([&] {
      return lambda(ti_map(u, i, [&](const Cell& x) { return ti_map(x, j, to_one); }));
    });
    natural.expect(agree(lhs, rhs), [&] {
      return Witness{"naturality", show(u), lhs.render(show_one), rhs.render(show_one)};
    });
  }
  report.add(std::move(mult_outer));
  report.add(std::move(mult_inner));
  report.add(std::move(unit_outer));
  report.add(std::move(unit_inner));
  report.add(std::move(natural));
  return report;
}

CheckReport check_interchange_yang_baxter(const GlobularSet& g, std::size_t i, std::size_t j,
                                          std::size_t k, std::size_t bound) {
  if (!(i > j && j > k && i < g.n)) {
    throw IndexOrder("hexagon needs n > i > j > k");
  }
  auto show = [&](const Cell& c) { return to_string(g, c); };
  CellFn l_ij = [i, j](const Cell& c) { return interchange_law(c, i, j); };
  CellFn l_ik = [i, k](const Cell& c) { return interchange_law(c, i, k); };
  CellFn l_jk = [j, k](const Cell& c) { return interchange_law(c, j, k); };
  CellSet input = apply_Ti(
      g, apply_Ti(g, apply_Ti(g, base_cells(g), k, bound), j, bound), i, bound);
  CheckReport report("interchange.yb(" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + ")");
  for (const Cell& u : flatten(input)) {
    auto first = attempt([&] { return l_jk(ti_map(l_ij(u), j, l_ik)); });
    auto second = attempt([&] { return ti_map(l_ik(ti_map(u, i, l_jk)), k, l_ij); });
    report.expect(agree(first, second), [&] {
      return Witness{"yang-baxter-hexagon", show(u), first.render(show), second.render(show)};
    });
  }
  return report;
}

}  // namespace itdist
