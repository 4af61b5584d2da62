#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "itdist/errors.hpp"
#include "itdist/expr.hpp"
#include "itdist/globular.hpp"
#include "itdist/monad.hpp"
#include "itdist/series.hpp"
#include "itdist/zoo.hpp"

namespace {

using namespace itdist;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Raised for bad option values that CLI11 cannot see (unknown ids, files).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CarrierOptions {
  std::size_t generators = 0;
  std::vector<std::string> names;

  void attach(CLI::App* cmd, std::size_t default_generators) {
    generators = default_generators;
    auto* g = cmd->add_option("--generators", generators, "Carrier of k generators a, b, c, ...")
                  ->capture_default_str()
                  ->check(CLI::Range(1, 26));
    cmd->add_option("--names", names, "Explicit generator names (comma separated)")
        ->delimiter(',')
        ->excludes(g);
  }

  Carrier carrier() const {
    if (names.empty()) return Carrier::generated(generators);
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw UsageError("--names holds a repeated name");
    }
    return Carrier(names);
  }
};

zoo::Theory theory_of(const std::string& name) {
  if (auto t = zoo::parse_theory(name)) return *t;
  std::string known;
  for (zoo::Theory t : zoo::all_theories()) known += (known.empty() ? "" : ", ") + zoo::theory_name(t);
  throw UsageError("unknown theory '" + name + "' (known: " + known + ")");
}

MonadSpec monad_of(const std::string& id) {
  if (auto m = zoo::monad_by_id(id)) return *m;
  MonadSpec broken = zoo::broken_free_monoid();
  if (id == broken.id) return broken;
  throw UsageError("unknown monad '" + id + "'");
}

DistLaw law_of(const std::string& id) {
  if (auto law = zoo::law_by_id(id)) return *law;
  for (DistLaw control : {zoo::identity_pseudo_law(), zoo::collapse_to_zero_law()}) {
    if (control.name == id) return control;
  }
  throw UsageError("unknown law '" + id + "'");
}

int emit(const CheckReport& report) {
  for (const std::string& line : report.lines()) std::cout << line << '\n';
  return report.passed() ? kPass : kFail;
}

std::string join_counts(const std::vector<std::size_t>& counts) {
  std::ostringstream out;
  for (std::size_t d = 0; d < counts.size(); ++d) out << (d ? " " : "") << counts[d];
  return out.str();
}

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

GlobularSet load(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  return load_globular(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Executable distributive laws: law suites, series, normal forms, free n-categories"};
  app.require_subcommand(1);

  // laws
  auto* laws = app.add_subcommand("laws", "Monad laws of zoo monads");
  std::vector<std::string> monad_ids;
  std::uint64_t laws_bound = 3;
  CarrierOptions laws_carrier;
  laws->add_option("--monad", monad_ids, "Monad id (repeatable); default: all seven");
  laws->add_option("--bound", laws_bound, "Term size bound")->capture_default_str();
  laws_carrier.attach(laws, 2);

  // distlaw
  auto* distlaw = app.add_subcommand("distlaw", "Distributive-law diagrams and naturality");
  std::vector<std::string> law_ids;
  std::uint64_t dist_bound = 3;
  CarrierOptions dist_carrier;
  distlaw->add_option("--law", law_ids, "Law id (repeatable); default: every registered law");
  distlaw->add_option("--bound", dist_bound, "Term size bound")->capture_default_str();
  dist_carrier.attach(distlaw, 2);

  // yang-baxter
  auto* yb = app.add_subcommand("yang-baxter", "Yang-Baxter hexagons of a theory's series");
  std::string yb_theory;
  std::vector<std::size_t> triple;
  std::uint64_t yb_bound = 3;
  CarrierOptions yb_carrier;
  yb->add_option("--theory", yb_theory, "Theory name")->required();
  yb->add_option("--triple", triple, "Indices i,j,k with i > j > k; default: all")
      ->delimiter(',')
      ->expected(3);
  yb->add_option("--bound", yb_bound, "Term size bound")->capture_default_str();
  yb_carrier.attach(yb, 1);

  // series
  auto* series = app.add_subcommand("series", "Validate every monad, law and triple of a theory");
  std::string series_theory;
  std::uint64_t series_bound = 3;
  CarrierOptions series_carrier;
  series->add_option("--theory", series_theory, "Theory name")->required();
  series->add_option("--bound", series_bound, "Term size bound")->capture_default_str();
  series_carrier.attach(series, 1);

  // routes
  auto* routes = app.add_subcommand("routes", "Compare composite monads along bracketings");
  std::string routes_theory;
  std::vector<std::string> route_specs;
  std::uint64_t routes_bound = 3;
  CarrierOptions routes_carrier;
  routes->add_option("--theory", routes_theory, "Theory name")->required();
  routes->add_option("--route", route_specs,
                     "Bracketing such as ((1,2),3) (repeatable); default: all");
  routes->add_option("--bound", routes_bound, "Term size bound")->capture_default_str();
  routes_carrier.attach(routes, 1);

  // normalize
  auto* normalize = app.add_subcommand("normalize", "Normal form of an expression");
  std::string norm_theory;
  std::string source;
  std::vector<std::string> norm_names;
  bool show_term = false;
  normalize->add_option("--theory", norm_theory, "Theory name")->required();
  normalize->add_option("expression", source, "Expression, e.g. (a+b)*(c+d)")->required();
  normalize->add_option("--names", norm_names,
                        "Generator names (comma separated); default: the expression's "
                        "identifiers, sorted")
      ->delimiter(',');
  normalize->add_flag("--term", show_term, "Also print the normal-form term");

  // ncat
  auto* ncat = app.add_subcommand("ncat", "Free strict n-category on a globular set");
  std::string ncat_input;
  std::size_t ncat_bound = 2;
  bool compare_oracle = false;
  bool check_laws = false;
  ncat->add_option("--input", ncat_input, "Globular set file (JSON)")->required();
  ncat->add_option("--bound", ncat_bound, "String length bound")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  ncat->add_flag("--compare-oracle", compare_oracle, "Compare counts with the brute-force oracle");
  ncat->add_flag("--check-laws", check_laws,
                 "Also check every T_i monad, interchange law and hexagon");

  // oracle-compare
  auto* oracle = app.add_subcommand("oracle-compare", "free_ncat against the oracle on files");
  std::vector<std::string> oracle_inputs;
  std::size_t oracle_bound = 2;
  oracle->add_option("inputs", oracle_inputs, "Globular set files")->required();
  oracle->add_option("--bound", oracle_bound, "String length bound")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*laws) {
      if (monad_ids.empty()) {
        for (const MonadSpec& m : zoo::all_monads()) monad_ids.push_back(m.id);
      }
      Carrier x = laws_carrier.carrier();
      CheckReport all("laws");
      for (const std::string& id : monad_ids) all.add(check_monad_laws(monad_of(id), x, laws_bound));
      return emit(all);
    }

    if (*distlaw) {
      std::vector<DistLaw> selected;
      if (law_ids.empty()) {
        selected = zoo::registered_laws();
        for (DistLaw& law : zoo::example_laws()) selected.push_back(std::move(law));
      }
      for (const std::string& id : law_ids) selected.push_back(law_of(id));
      Carrier x = dist_carrier.carrier();
      CheckReport all("distlaw");
      for (const DistLaw& law : selected) all.add(check_distlaw(law, x, dist_bound));
      return emit(all);
    }

    if (*yb) {
      DistributiveSeries s = zoo::theory_series(theory_of(yb_theory));
      Carrier x = yb_carrier.carrier();
      CheckReport all("yang-baxter");
      if (!triple.empty()) {
        all.add(check_yang_baxter(s, triple[0], triple[1], triple[2], x, yb_bound));
      } else {
        for (std::size_t i = 3; i <= s.size(); ++i)
          for (std::size_t j = 2; j < i; ++j)
            for (std::size_t k = 1; k < j; ++k) all.add(check_yang_baxter(s, i, j, k, x, yb_bound));
        if (all.parts().empty()) {
          std::cout << "no triples: " << s.name() << " has " << s.size() << " monads\n";
        }
      }
      return emit(all);
    }

    if (*series) {
      DistributiveSeries s = zoo::theory_series(theory_of(series_theory));
      CheckReport report = validate_series(s, series_carrier.carrier(), series_bound);
      int status = emit(report);
      std::size_t n = s.size();
      std::cout << (report.passed() ? "PASS" : "FAIL") << ": " << n << " monads, " << choose(n, 2)
                << " laws, " << choose(n, 3) << " YB triples\n";
      return status;
    }

    if (*routes) {
      DistributiveSeries s = zoo::theory_series(theory_of(routes_theory));
      std::vector<Route> selected;
      for (const std::string& spec : route_specs) {
        try {
          selected.push_back(Route::parse(spec));
        } catch (const std::invalid_argument& e) {
          throw UsageError("bad route '" + spec + "': " + e.what());
        }
        if (selected.back().first() != 1 || selected.back().last() != s.size()) {
          throw UsageError("route " + spec + " must cover 1.." + std::to_string(s.size()));
        }
      }
      if (selected.empty()) selected = Route::all(s.size());
      return emit(check_route_independence(s, selected, routes_carrier.carrier(), routes_bound));
    }

    if (*normalize) {
      zoo::Theory theory = theory_of(norm_theory);
      try {
        Expr e = parse_expr(source);
        Carrier x(norm_names.empty() ? variables(e) : norm_names);
        if (!norm_names.empty()) e = parse_expr(source, x);
        Term t = normalize_expr(theory, e, x);
        std::cout << render(theory, t, x) << '\n';
        if (show_term) std::cout << to_string(t, &x) << '\n';
        return kPass;
      } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
      } catch (const UnsupportedNode& e) {
        std::cerr << "error: " << e.what() << '\n';
      } catch (const UnknownGenerator& e) {
        std::cerr << "error: " << e.what() << '\n';
      }
      return kFail;
    }

    if (*ncat) {
      GlobularSet g = load(ncat_input);
      CellSet cells = free_ncat(g, ncat_bound);
      std::vector<std::size_t> counts = cell_counts(cells);
      for (std::size_t d = 0; d < counts.size(); ++d) {
        std::cout << "dim " << d << ": " << counts[d] << '\n';
      }
      bool ok = true;
      CheckReport checks("ncat");
      checks.add(validate_cells(g, cells, "free_ncat.globular"));
      if (check_laws) {
        for (std::size_t i = 0; i < g.n; ++i) checks.add(check_ti_monad(g, i, ncat_bound));
        for (std::size_t i = 1; i < g.n; ++i)
          for (std::size_t j = 0; j < i; ++j) checks.add(check_interchange(g, i, j, ncat_bound));
        for (std::size_t i = 2; i < g.n; ++i)
          for (std::size_t j = 1; j < i; ++j)
            for (std::size_t k = 0; k < j; ++k)
              checks.add(check_interchange_yang_baxter(g, i, j, k, ncat_bound));
      }
      if (emit(checks) != kPass) ok = false;
      if (compare_oracle) {
        std::vector<std::size_t> expected = brute_force_oracle(g, ncat_bound);
        std::cout << "oracle: " << join_counts(expected) << '\n';
        bool match = expected == counts;
        std::cout << (match ? "ORACLE MATCH" : "ORACLE MISMATCH") << '\n';
        ok = ok && match;
      }
      return ok ? kPass : kFail;
    }

    if (*oracle) {
      bool all_match = true;
      for (const std::string& path : oracle_inputs) {
        GlobularSet g = load(path);
        std::vector<std::size_t> counts = cell_counts(free_ncat(g, oracle_bound));
        std::vector<std::size_t> expected = brute_force_oracle(g, oracle_bound);
        bool match = counts == expected;
        all_match = all_match && match;
        std::cout << (match ? "MATCH " : "MISMATCH ")
                  << std::filesystem::path(path).filename().string() << " free_ncat=["
                  << join_counts(counts) << "] oracle=[" << join_counts(expected) << "]\n";
      }
      return all_match ? kPass : kFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const GlobularityError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IndexOrder& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundTooLarge& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
