#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itdist/check_report.hpp"
#include "itdist/monad.hpp"
#include "itdist/series.hpp"

namespace itdist {

/// An Eilenberg-Moore algebra given by its action. `elements` lists the
/// carrier A (as terms, usually generators); the action is total on S(A)
/// terms and is checked only on bounded enumerations.
struct Algebra {
  std::string name;
  MonadSpec monad;
  std::vector<Term> elements;
  TermFn action;
  /// Names for generator terms in witnesses; may be empty.
  Carrier names;
};

/// theta . eta = id on A and theta . mu = theta . S(theta) on S(S(A)).
CheckReport check_algebra(const Algebra& alg, std::uint64_t bound);

struct LiftedAlgebra {
  /// S-algebra on T(A) (bounded enumeration) with action T(theta) . lambda_A.
  Algebra algebra;
  /// S-algebra laws of the lifted action, and eta^T_A, mu^T_A being
  /// S-algebra morphisms.
  CheckReport report;
};

/// Lifts T to S-algebras along law : S T => T S. Throws NotAnAlgebra when
/// `alg` fails check_algebra at `bound`.
LiftedAlgebra lift_to_algebras(const DistLaw& law, const Algebra& alg, std::uint64_t bound);

/// An algebra of the composite T S seen as an S-algebra plus a T-action.
struct SplitAlgebra {
  Algebra s_part;  // theta . eta^T_{SA}
  Algebra t_part;  // theta . T(eta^S_A)
};

SplitAlgebra split_algebra(const DistLaw& law, const Algebra& composite);
/// theta = theta_T . T(theta_S) as an algebra of compose_pair(S, T, law).
Algebra recombine(const DistLaw& law, const SplitAlgebra& parts);

/// Both parts are algebras and theta_T is an S-algebra morphism from the
/// lifted structure on T(A) to A.
CheckReport check_split(const DistLaw& law, const SplitAlgebra& parts, std::uint64_t bound);

}  // namespace itdist
