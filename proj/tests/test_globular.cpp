#include <set>

#include "catch_amalgamated.hpp"
#include "itdist/errors.hpp"
#include "itdist/globular.hpp"

using namespace itdist;

namespace {

std::string fixture(const std::string& name) {
  return std::string(ITDIST_FIXTURES) + "/" + name + ".gset";
}

GlobularSet load(const std::string& name) { return load_globular(fixture(name)); }

struct Named {
  const GlobularSet& g;
  Cell operator()(std::size_t dim, const char* name) const {
    return Cell::base(dim, g.index_of(dim, name).value());
  }
};

std::set<std::string> names(const GlobularSet& g, const std::vector<Cell>& cells) {
  std::set<std::string> out;
  for (const Cell& c : cells) out.insert(to_string(g, c));
  return out;
}

using Counts = std::vector<std::size_t>;

}  // namespace

TEST_CASE("fixtures load and are globular", "[io]") {
  for (const char* name : {"point1", "arrow", "edge_loop", "point2", "two_cell", "parallel",
                           "loop", "padding", "three_cell"}) {
    INFO(name);
    GlobularSet g = load(name);
    CHECK(validate_globular(g).passed());
  }
  GlobularSet three = load("three_cell");
  CHECK(three.n == 3);
  CHECK(three.cell_count() == 7);
}

TEST_CASE("globularity violations name the cell", "[io][negative]") {
  try {
    load("broken");
    FAIL("expected a globularity error");
  } catch (const GlobularityError& e) {
    CHECK(std::string(e.what()).find("'alpha'") != std::string::npos);
  }
  GlobularSet g = load_globular(fixture("broken"), false);
  CheckReport r = validate_globular(g);
  REQUIRE_FALSE(r.passed());
  CHECK(r.witnesses().front().input == "alpha");
  CHECK(r.witnesses().front().diagram == "ss=st");
}

TEST_CASE("malformed files are format errors", "[io][negative]") {
  CHECK_THROWS_AS(parse_globular("{"), FormatError);
  CHECK_THROWS_AS(parse_globular("[]"), FormatError);
  CHECK_THROWS_AS(parse_globular(R"({"n": 1, "cells": [["x"]], "src": [{}], "tgt": [{}]})"),
                  FormatError);
  CHECK_THROWS_AS(
      parse_globular(R"({"n": 1, "cells": [["x","x"],[]], "src": [{}], "tgt": [{}]})"),
      FormatError);
  CHECK_THROWS_AS(parse_globular(
                      R"({"n": 1, "cells": [["x"],["f"]], "src": [{"f":"q"}], "tgt": [{"f":"x"}]})"),
                  FormatError);
  CHECK_THROWS_AS(
      parse_globular(R"({"n": 1, "cells": [["x"],["f"]], "src": [{}], "tgt": [{"f":"x"}]})"),
      FormatError);
  CHECK_THROWS_AS(parse_globular(R"({"n": -1, "cells": [], "src": [], "tgt": []})"), FormatError);
  CHECK_THROWS_AS(load_globular("/nonexistent/file.gset"), FormatError);
}

TEST_CASE("a graph is globular vacuously", "[io]") {
  GlobularSet g = load("edge_loop");
  CheckReport r = validate_globular(g);
  CHECK(r.passed());
  CHECK(r.checked() == 0);
}

TEST_CASE("boundaries", "[boundary]") {
  GlobularSet g = load("padding");
  Named c{g};
  Cell fg = Cell::string(1, 0, {c(1, "f0"), c(1, "g0")});
  CHECK(boundary(g, fg, Side::Src, 0) == c(0, "x"));
  CHECK(boundary(g, fg, Side::Tgt, 0) == c(0, "z"));
  Cell ex = Cell::string(1, 0, {}, c(0, "x"));
  CHECK(boundary(g, ex, Side::Src, 0) == c(0, "x"));
  CHECK(boundary(g, ex, Side::Tgt, 0) == c(0, "x"));

  Cell ag = Cell::string(2, 0, {c(2, "alpha"), c(2, "gamma")});
  CHECK(boundary(g, ag, Side::Tgt, 1) == Cell::string(1, 0, {c(1, "f1"), c(1, "g1")}));
  CHECK(boundary(g, ag, Side::Src, 0) == c(0, "x"));
  Cell ab = Cell::string(2, 1, {c(2, "alpha"), c(2, "beta")});
  CHECK(boundary(g, ab, Side::Src, 1) == c(1, "f0"));
  CHECK(boundary(g, ab, Side::Tgt, 1) == c(1, "f2"));
  CHECK_THROWS_AS(boundary(g, ab, Side::Src, 2), DimensionError);
  CHECK_THROWS_AS(boundary(g, c(0, "x"), Side::Src, 0), DimensionError);
}

TEST_CASE("cells reject malformed strings", "[cell]") {
  GlobularSet g = load("two_cell");
  Named c{g};
  CHECK_THROWS_AS(Cell::string(1, 0, {}), ShapeMismatch);
  CHECK_THROWS_AS(Cell::string(1, 0, {c(1, "f")}, c(0, "x")), ShapeMismatch);
  CHECK_THROWS_AS(Cell::string(2, 0, {c(1, "f")}), ShapeMismatch);
  CHECK_THROWS_AS(Cell::string(1, 1, {c(1, "f")}), ShapeMismatch);
  CHECK(to_string(g, Cell::string(1, 0, {}, c(0, "y"))) == "[]_0@y");
}

TEST_CASE("free 0-composition on a graph", "[Ti]") {
  GlobularSet g = load("edge_loop");
  CellSet cells = apply_Ti(g, base_cells(g), 0, 2);
  CHECK(cells[0].size() == 2);
  CHECK(names(g, cells[1]) ==
        std::set<std::string>{"[]_0@0", "[]_0@1", "[f]_0", "[g]_0", "[f,g]_0", "[g,g]_0"});

  CellSet singles = apply_Ti(g, base_cells(g), 0, 1);
  CHECK(names(g, singles[1]) == std::set<std::string>{"[]_0@0", "[]_0@1", "[f]_0", "[g]_0"});
  CHECK_THROWS_AS(apply_Ti(g, base_cells(g), 0, 40, 20), BoundTooLarge);
}

TEST_CASE("free 1-composition keeps lower dimensions", "[Ti]") {
  GlobularSet g = load("parallel");
  CellSet base = base_cells(g);
  CellSet cells = apply_Ti(g, base, 1, 2);
  CHECK(cells[0] == base[0]);
  CHECK(cells[1] == base[1]);
  // columns: two empties, alpha, beta; no 2-cell ends where another starts
  CHECK(names(g, cells[2]) ==
        std::set<std::string>{"[]_1@f", "[]_1@g", "[alpha]_1", "[beta]_1"});
  CHECK(validate_cells(g, cells, "T1").passed());
}

TEST_CASE("flatten", "[Ti]") {
  GlobularSet g = load("edge_loop");
  Named c{g};
  Cell f = c(1, "f"), gg = c(1, "g");
  auto s = [](std::vector<Cell> es) { return Cell::string(1, 0, std::move(es)); };
  CHECK(ti_mult(g, s({s({f}), s({gg})}), 0) == s({f, gg}));
  Cell eps = Cell::string(1, 0, {}, c(0, "0"));
  // the outer empty string is anchored at the object itself
  CHECK(ti_mult(g, Cell::string(1, 0, {}, c(0, "0")), 0) == eps);
  CHECK(ti_mult(g, s({s({f, gg}), s({gg})}), 0) == s({f, gg, gg}));
  CHECK(ti_mult(g, s({eps, s({f})}), 0) == s({f}));
  CHECK_THROWS_AS(ti_mult(g, s({s({gg}), s({f})}), 0), ComposabilityError);
  CHECK_THROWS_AS(ti_mult(g, s({f}), 0), ShapeMismatch);
  CHECK(ti_unit(f, 0) == s({f}));
  CHECK(ti_unit(c(0, "0"), 0) == c(0, "0"));
}

TEST_CASE("T_i monad laws", "[Ti]") {
  for (const char* name : {"edge_loop", "two_cell", "loop", "three_cell"}) {
    GlobularSet g = load(name);
    for (std::size_t i = 0; i < g.n; ++i) {
      INFO(name << " T" << i);
      CHECK(check_ti_monad(g, i, 2).passed());
    }
  }
}

TEST_CASE("free n-categories on small sets", "[ncat]") {
  CHECK(cell_counts(free_ncat(load("point1"), 3)) == Counts{1, 1});
  CHECK(cell_counts(free_ncat(load("point2"), 3)) == Counts{1, 1, 1});
  CHECK(cell_counts(free_ncat(load("three_cell"), 1))[0] == 2);
  CellSet arrow = free_ncat(load("arrow"), 3);
  CHECK(names(load("arrow"), arrow[1]) == std::set<std::string>{"[]_0@0", "[]_0@1", "[f]_0"});
  CHECK(cell_counts(free_ncat(load("edge_loop"), 2)) == Counts{2, 6});
  // hand count: columns []_1@f, []_1@g, [alpha]_1, then 0-strings of them
  // plus one empty per object; nothing is 0-composable.
  CHECK(cell_counts(free_ncat(load("two_cell"), 2)) == Counts{2, 4, 5});
  for (const char* name : {"two_cell", "parallel", "loop", "padding", "three_cell"}) {
    GlobularSet g = load(name);
    INFO(name);
    CHECK(validate_cells(g, free_ncat(g, 2), name).passed());
  }
}

TEST_CASE("oracle agrees with free_ncat", "[oracle]") {
  for (const char* name :
       {"point1", "arrow", "edge_loop", "point2", "two_cell", "parallel", "loop", "three_cell"}) {
    GlobularSet g = load(name);
    INFO(name);
    CHECK(brute_force_oracle(g, 2) == cell_counts(free_ncat(g, 2)));
  }
  CHECK(brute_force_oracle(load("point2"), 3) == Counts{1, 1, 1});
  CHECK(brute_force_oracle(load("edge_loop"), 2) == Counts{2, 6});
  CHECK(brute_force_oracle(load("arrow"), 3) == Counts{2, 3});
}

TEST_CASE("interchange transposes grids", "[interchange]") {
  GlobularSet g = load("padding");
  Named c{g};
  Cell a = c(2, "alpha"), b = c(2, "beta"), gm = c(2, "gamma"), d = c(2, "delta");
  auto row = [](std::vector<Cell> es) { return Cell::string(2, 0, std::move(es)); };
  auto col = [](std::vector<Cell> es) { return Cell::string(2, 1, std::move(es)); };

  Cell grid = col({row({a, gm}), row({b, d})});
  Cell swapped = interchange_law(grid, 1, 0);
  CHECK(swapped == row({col({a, b}), col({gm, d})}));
  CHECK(transpose_grid(swapped, 0, 1) == grid);
  CHECK(interchange_law(col({row({a})}), 1, 0) == row({col({a})}));
  CHECK_THROWS_AS(interchange_law(col({row({a, gm}), row({b, d, d})}), 1, 0), RaggedGrid);
  CHECK_THROWS_AS(interchange_law(grid, 0, 1), IndexOrder);
  // cells at or below the composition dimension pass through
  CHECK(interchange_law(c(0, "x"), 1, 0) == c(0, "x"));

  // h = 0: one empty column per component of the anchor
  Cell anchor = Cell::string(1, 0, {c(1, "f0"), c(1, "g0")});
  Cell no_rows = Cell::string(2, 1, {}, anchor);
  CHECK(to_string(g, interchange_law(no_rows, 1, 0)) == "[[]_1@f0,[]_1@g0]_0");
  // l = 0: rows of identities on x compose to an identity on x
  Cell empty_row = Cell::string(2, 0, {}, c(0, "x"));
  CHECK(interchange_law(col({empty_row, empty_row}), 1, 0) ==
        Cell::string(2, 0, {}, c(0, "x")));
}

TEST_CASE("interchange is a distributive law", "[interchange]") {
  for (const char* name : {"two_cell", "parallel", "loop", "padding"}) {
    GlobularSet g = load(name);
    INFO(name);
    CheckReport r = check_interchange(g, 1, 0, 2);
    CHECK(r.passed());
    CHECK(r.checked() > 0);
  }
  GlobularSet three = load("three_cell");
  for (auto [i, j] : {std::pair{1, 0}, {2, 0}, {2, 1}}) {
    INFO(i << "," << j);
    CHECK(check_interchange(three, i, j, 2).passed());
  }
  CHECK(check_interchange_yang_baxter(three, 2, 1, 0, 2).passed());
}

TEST_CASE("no reverse law by padding", "[padding][negative]") {
  GlobularSet g = load("padding");
  ReflexiveSet r = add_identities(g);
  Named c{r.g};
  Cell a = c(2, "alpha"), b = c(2, "beta"), gm = c(2, "gamma"), d = c(2, "delta");
  auto row = [](std::vector<Cell> es) { return Cell::string(2, 0, std::move(es)); };
  auto col = [](std::vector<Cell> es) { return Cell::string(2, 1, std::move(es)); };

  Cell padded = padding_candidate(r, row({col({a, b}), col({gm})}), {});
  CHECK(to_string(r.g, padded) == "[[alpha,id_g0]_0,[beta,gamma]_0]_1");

  // Ragged two-column witness in T_0 T_1 T_1: the two legs of the
  // multiplication pentagon disagree.
  Cell u = row({col({col({a}), col({b})}), col({col({gm, d})})});
  Cell flat = ti_map(u, 0, [&](const Cell& x) { return ti_mult(r.g, x, 1); });
  Cell leg_a = padding_candidate(r, flat, {});
  Cell outer = padding_candidate(r, u, {1});
  Cell inner = ti_map(outer, 1, [&](const Cell& x) { return padding_candidate(r, x, {}); });
  Cell leg_b = ti_mult(r.g, inner, 1);
  CHECK(to_string(r.g, leg_a) == "[[alpha,gamma]_0,[beta,delta]_0]_1");
  CHECK(to_string(r.g, leg_b) == "[[alpha,id_g0]_0,[id_f1,gamma]_0,[beta,delta]_0]_1");
  CHECK(leg_a != leg_b);

  CheckReport report = check_padding_candidate(r, 2);
  REQUIRE_FALSE(report.passed());
  auto ws = report.all_witnesses();
  REQUIRE_FALSE(ws.empty());
  CHECK(ws.front().left != ws.front().right);
}
