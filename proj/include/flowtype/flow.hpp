#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "flowtype/finite_flow.hpp"
#include "flowtype/group.hpp"
#include "flowtype/subshift.hpp"

namespace flowtype {

// A concrete G-flow: a Z-subshift (the acting group is Z) or a finite flow.
using Flow = std::variant<ZSubshift, FiniteFlow>;

// A clopen subset of a flow: window predicate for subshifts, point mask for
// finite flows.
using FlowSet = std::variant<ClopenSet, std::uint64_t>;

const Group& flow_group(const Flow& flow);  // lattice d=1 for subshifts

bool set_nonempty(const Flow& flow, const FlowSet& s);
bool sets_equal(const Flow& flow, const FlowSet& a, const FlowSet& b);

// g dot a, for g in the acting group.
FlowSet set_translate(const Flow& flow, const Element& g, const FlowSet& a);

// Does cl(g A) meet cl(B)? Clopen sets are closed, so this is plain
// intersection emptiness.
bool e_rel_holds(const Flow& flow, const Element& g, const FlowSet& a, const FlowSet& b);

bool family_covers(const Flow& flow, const std::vector<FlowSet>& family);

// (cl A x cl B) disjoint from R_U: for clopen rectangles this is
// "g A misses B for every g in U".
bool r_u_disjoint(const Flow& flow, const FlowSet& a, const FlowSet& b, const SymSet& u);

bool flow_transitive(const Flow& flow);

} // namespace flowtype
