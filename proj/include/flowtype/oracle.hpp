#pragma once

#include <optional>
#include <vector>

#include "flowtype/finite_flow.hpp"
#include "flowtype/weaktype.hpp"

namespace flowtype {

// A surjective equivariant map: assignment[y] is the image of point y.
struct FactorMap {
  std::vector<int> assignment;
};

// Exhaustive backtracking search for a factor map from `source` onto
// `target`, with generator-constraint propagation. The returned map is
// re-validated for surjectivity and equivariance before being handed out.
std::optional<FactorMap> factor_exists(const FiniteFlow& source, const FiniteFlow& target);

// Exact weak type of a finite flow by brute force: full structures of every
// family of at most nmax distinct nonempty subsets, closed downward under
// relation removal, stored as canonical forms. No window truncation.
WeakType brute_type(const FiniteFlow& x, const SymSet& f, int nmax, const std::string& flow_id,
                    bool force = false);

// tp(X) contained in tp(Y) at full resolution (nmax = 2^|X|-1), decided on
// the maximal structures: every full family structure of X must admit a
// bijective monomorphism into some full family structure of Y.
bool full_type_contained(const FiniteFlow& x, const FiniteFlow& y, const SymSet& f);

struct TheoremInstance {
  bool factor = false;
  bool type_contained = false;
  bool agree = false;
};

struct TheoremReport {
  std::vector<TheoremInstance> instances;
  int total = 0;
  int agreeing = 0;
};

// For each pair (X, Y): does a factor map Y -> X exist, and is tp(X) inside
// tp(Y)? For finite flows each ultracopower of Y is Y itself, so the two
// answers must coincide; any disagreement is an implementation defect.
TheoremReport verify_containment_theorem(
    const std::vector<std::pair<FiniteFlow, FiniteFlow>>& pairs, const SymSet& f);

} // namespace flowtype
