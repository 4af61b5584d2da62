#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itdist/monad.hpp"
#include "itdist/series.hpp"

namespace itdist::zoo {

MonadSpec free_monoid();               // Seq
MonadSpec nonunital_semigroup();       // NonemptySeq
MonadSpec free_comm_monoid();          // Multiset
MonadSpec nonunital_comm_semigroup();  // NonemptyMultiset
MonadSpec free_abelian_group();        // IntComb
MonadSpec pointed();                   // Y + {1}
MonadSpec adjoin_zero();               // Y + {0}

/// The seven monads above, in that order.
std::vector<MonadSpec> all_monads();
std::optional<MonadSpec> monad_by_id(std::string_view id);

/// Negative control: list monad whose flatten drops the last element of any
/// result with at least two elements.
MonadSpec broken_free_monoid();

// Law transforms. Each is generic in the element set below the two layers
// it rewrites and throws ShapeMismatch on terms of the wrong shape.

/// Product of sums -> sum of products, row-major, coefficients multiplied.
Term mult_over_add(Layer product, Layer sum, const Term& t);
/// Product over Y + {1} -> (product over Y) + {1}, deleting unit factors.
Term unit_absorb(Layer product, const Term& t);
/// Product over Y + {0} -> (product over Y) + {0}; any 0 factor gives 0.
Term zero_absorb(Layer product, const Term& t);
/// (sum over Y) + {1} -> sum over Y + {1}.
Term point_embed(Layer sum, const Term& t);
/// Sum over Y + {0} -> (sum over Y) + {0}, deleting 0 summands.
Term add_zero(Layer sum, const Term& t);
/// (Y + {0}) + {1} -> (Y + {1}) + {0}.
Term point_zero(const Term& t);

DistLaw law_mult_over_add(std::string name, MonadSpec product, MonadSpec sum);
DistLaw law_unit_absorb(std::string name, MonadSpec product);
DistLaw law_zero_absorb(std::string name, MonadSpec product);
DistLaw law_point_embed(std::string name, MonadSpec sum);
DistLaw law_add_zero(std::string name, MonadSpec sum);
DistLaw law_point_zero(std::string name);

/// The three ring and six rig laws, ids ring3.AB ... rig.CD.
std::vector<DistLaw> registered_laws();
/// Two-monad examples: monoid.unit_absorb, cmonoid.unit_absorb,
/// ring2.mult_over_add.
std::vector<DistLaw> example_laws();
std::optional<DistLaw> law_by_id(std::string_view id);

/// Negative controls: the identity posed as FreeMonoid . FreeAbelianGroup
/// law, and a rig addition/zero law sending everything to 0.
DistLaw identity_pseudo_law();
DistLaw collapse_to_zero_law();

enum class Theory { Monoid, CMonoid, Ring2, Ring3, Rig };

std::optional<Theory> parse_theory(std::string_view name);
std::string theory_name(Theory theory);
std::vector<Theory> all_theories();

/// The series behind each theory, outermost monad first:
///   monoid  Pointed, NonunitalSemigroup
///   cmonoid Pointed, NonunitalCommSemigroup
///   ring2   FreeAbelianGroup, FreeCommMonoid
///   ring3   C = FreeAbelianGroup, B = Pointed, A = NonunitalSemigroup
///   rig     D = Adjoin-0, C = NonunitalCommSemigroup, B = Pointed,
///           A = NonunitalSemigroup
DistributiveSeries theory_series(Theory theory);
/// Same as theory_series(Rig) with the C/D law replaced by collapse_to_zero.
DistributiveSeries broken_rig_series();

/// Composite monad of the theory along the left-comb route.
const MonadSpec& theory_monad(Theory theory);

}  // namespace itdist::zoo
