#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "itdist/check_report.hpp"
#include "itdist/monad.hpp"

namespace itdist {

/// lambda : S T => T S. `transform` takes an element of S(T(Y)) (S the outer
/// layer) to T(S(Y)), for every Y.
struct DistLaw {
  std::string name;
  MonadSpec outer;  // S
  MonadSpec inner;  // T
  TermFn transform;
};

/// The four distributive-law diagrams on S(T(X)) based inputs, plus
/// naturality against all functions between carriers of size <= min(bound, 3).
CheckReport check_distlaw(const DistLaw& law, const Carrier& x, std::uint64_t bound);

/// Monads T_1 .. T_n (T_1 outermost in the composite) with a law
/// T_i T_j => T_j T_i for every i > j. Indices are 1-based.
class DistributiveSeries {
 public:
  DistributiveSeries() = default;
  DistributiveSeries(std::string name, std::vector<MonadSpec> monads);

  /// Builds a series from the opposite indexing: monads U_1..U_n with the
  /// composite written U_n ... U_1 and laws U_i U_j => U_j U_i for i < j.
  /// U_k becomes T_{n+1-k}.
  struct ReversedLaw {
    std::size_t i;
    std::size_t j;
    DistLaw law;
  };
  static DistributiveSeries from_reversed(std::string name, std::vector<MonadSpec> monads,
                                          std::vector<ReversedLaw> laws);

  const std::string& name() const { return name_; }
  std::size_t size() const { return monads_.size(); }
  const MonadSpec& monad(std::size_t i) const;
  const std::vector<MonadSpec>& monads() const { return monads_; }

  /// Throws IndexOrder unless n >= i > j >= 1.
  void set_law(std::size_t i, std::size_t j, DistLaw law);
  bool has_law(std::size_t i, std::size_t j) const;
  const DistLaw& law(std::size_t i, std::size_t j) const;

 private:
  std::string name_;
  std::vector<MonadSpec> monads_;
  std::map<std::pair<std::size_t, std::size_t>, DistLaw> laws_;
};

/// Both hexagon legs on T_i T_j T_k (X). Throws IndexOrder unless i > j > k.
CheckReport check_yang_baxter(const DistributiveSeries& series, std::size_t i, std::size_t j,
                              std::size_t k, const Carrier& x, std::uint64_t bound);

/// Monad laws for each T_i, every pairwise law, every Yang-Baxter triple.
CheckReport validate_series(const DistributiveSeries& series, const Carrier& x,
                            std::uint64_t bound);

/// A full binary bracketing of the leaves lo..hi.
class Route {
 public:
  static Route leaf(std::size_t k);
  static Route join(Route left, Route right);
  /// Parses "((1,2),3)", "1", ... ; throws std::invalid_argument.
  static Route parse(std::string_view text);
  /// Every bracketing of 1..n, in a fixed order.
  static std::vector<Route> all(std::size_t n);
  /// ((1,2),3)... style left comb.
  static Route left_comb(std::size_t n);

  bool is_leaf() const { return !node_->left; }
  std::size_t first() const { return node_->first; }
  std::size_t last() const { return node_->last; }
  const Route& left() const { return *node_->left; }
  const Route& right() const { return *node_->right; }
  std::string to_string() const;

 private:
  struct Node {
    std::size_t first = 0;
    std::size_t last = 0;
    std::shared_ptr<const Route> left;
    std::shared_ptr<const Route> right;
  };
  explicit Route(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Composite monad T S with unit eta^T eta^S and multiplication
/// mu^T mu^S . T lambda S, for law : S T => T S.
MonadSpec compose_pair(const MonadSpec& s, const MonadSpec& t, const DistLaw& law);

/// The law (T_{i+1}..T_n)(T_1..T_i) => (T_1..T_i)(T_{i+1}..T_n) obtained by
/// moving each of T_1..T_i leftwards one adjacent swap at a time. Block
/// monads are composed along left combs. Throws SplitOutOfRange unless
/// 1 <= i < n.
DistLaw derive_block_law(const DistributiveSeries& series, std::size_t split);

/// Composite monad on T_1 ... T_n built along the given bracketing.
MonadSpec compose_series(const DistributiveSeries& series, const Route& route);

/// Compares the multiplication (and unit) of every route's composite on all
/// enumerated (T_1..T_n)^2 (X) terms. Throws std::invalid_argument when n
/// exceeds max_n.
CheckReport check_route_independence(const DistributiveSeries& series, const Carrier& x,
                                     std::uint64_t bound, std::size_t max_n = 4);
/// Same comparison restricted to the given routes, each against the first.
CheckReport check_route_independence(const DistributiveSeries& series,
                                     const std::vector<Route>& routes, const Carrier& x,
                                     std::uint64_t bound);

}  // namespace itdist
