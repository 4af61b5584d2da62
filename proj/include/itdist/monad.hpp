#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "itdist/check_report.hpp"
#include "itdist/term.hpp"

namespace itdist {

using TermFn = std::function<Term(const Term&)>;

/// Hard cap on the number of terms a single enumeration may produce.
inline constexpr std::size_t kDefaultCeiling = 1'000'000;

/// An executable monad on the term universe.
///
/// All operations are generic in the element set Y: they only look at the
/// layers they own and treat everything underneath as opaque, which is what
/// lets the same functions serve at X, M(X), M(M(X)) and inside composites.
struct MonadSpec {
  std::string id;
  /// Term layers from outermost to innermost; a single entry for base monads,
  /// empty for the identity monad.
  std::vector<Layer> layers;

  /// eta_Y : Y -> M(Y)
  TermFn unit;
  /// mu_Y : M(M(Y)) -> M(Y)
  TermFn mult;
  /// M(f) : M(Y) -> M(Y')
  std::function<Term(const Term&, const TermFn&)> map;
  /// Every element of M(Y) of size <= bound, Y given by its (distinct)
  /// elements. Sorted by (size, term order).
  std::function<std::vector<Term>(std::span<const Term>, std::uint64_t bound, std::size_t ceiling)>
      enumerate_over;
};

/// The free monad for one layer shape: list, nonempty list, multiset,
/// nonempty multiset, integer combination, or a single adjoined point.
MonadSpec base_monad(Layer layer, std::string id = {});
MonadSpec identity_monad();

/// eta applied to a named generator of X; throws UnknownGenerator.
Term unit(const MonadSpec& m, const Carrier& x, std::string_view name);

/// Normal forms of M(X) with size <= bound. Throws BoundTooLarge past the
/// ceiling and std::invalid_argument when bound == 0.
std::vector<Term> enumerate(const MonadSpec& m, const Carrier& x, std::uint64_t bound,
                            std::size_t ceiling = kDefaultCeiling);

/// Elements of M_1 M_2 ... M_k (X) (outermost first) with size <= bound.
std::vector<Term> enumerate_nested(std::span<const MonadSpec> monads, const Carrier& x,
                                   std::uint64_t bound, std::size_t ceiling = kDefaultCeiling);

/// Enumeration of a single layer shape over weighted elements; exposed for
/// composite functors and tests.
std::vector<Term> enumerate_layer(Layer layer, std::span<const Term> elements,
                                  std::uint64_t bound, std::size_t ceiling);

/// A function between generator carriers, f : dom -> cod.
struct CarrierMap {
  Carrier dom;
  Carrier cod;
  std::vector<std::uint32_t> image;

  Term operator()(const Term& t) const;
};

/// Every function between carriers with 1..max_size generators.
std::vector<CarrierMap> carrier_functions(std::size_t max_size);

/// Unit laws on M(X) and associativity on M(M(M(X))) within the bound.
/// Witness inputs for the unit laws are the M(M(X)) terms handed to mult.
CheckReport check_monad_laws(const MonadSpec& m, const Carrier& x, std::uint64_t bound);

/// M(f) eta = eta f and M(f) mu = mu M(M(f)) for all functions between carriers
/// of size <= max_carrier, on terms of size <= bound.
CheckReport check_monad_naturality(const MonadSpec& m, std::uint64_t bound,
                                   std::size_t max_carrier = 3);

}  // namespace itdist
