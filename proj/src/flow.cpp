#include "flowtype/flow.hpp"

#include "flowtype/errors.hpp"

namespace flowtype {

namespace {

const ZSubshift* as_sft(const Flow& flow) { return std::get_if<ZSubshift>(&flow); }
const FiniteFlow* as_finite(const Flow& flow) { return std::get_if<FiniteFlow>(&flow); }

long long shift_of(const Element& g) {
  if (g.coords().size() != 1) throw ParseError("subshift group elements must be integers");
  return g.coords()[0];
}

const ClopenSet& as_clopen(const FlowSet& s) {
  const auto* c = std::get_if<ClopenSet>(&s);
  if (!c) throw ParseError("expected a clopen window set for a subshift");
  return *c;
}

std::uint64_t as_mask(const FlowSet& s) {
  const auto* m = std::get_if<std::uint64_t>(&s);
  if (!m) throw ParseError("expected a point subset for a finite flow");
  return *m;
}

} // namespace

const Group& flow_group(const Flow& flow) {
  static const Group z = Group::lattice(1);
  if (const auto* f = as_finite(flow)) return f->group();
  return z;
}

bool set_nonempty(const Flow& flow, const FlowSet& s) {
  if (const auto* x = as_sft(flow)) return !is_empty(*x, as_clopen(s)).empty;
  return as_mask(s) != 0;
}

bool sets_equal(const Flow& flow, const FlowSet& a, const FlowSet& b) {
  if (const auto* x = as_sft(flow)) {
    const auto& ca = as_clopen(a);
    const auto& cb = as_clopen(b);
    return is_empty(*x, clopen_minus(x->alphabet(), ca, cb)).empty &&
           is_empty(*x, clopen_minus(x->alphabet(), cb, ca)).empty;
  }
  return as_mask(a) == as_mask(b);
}

FlowSet set_translate(const Flow& flow, const Element& g, const FlowSet& a) {
  if (as_sft(flow)) return translate(as_clopen(a), shift_of(g));
  return as_finite(flow)->act_mask(g, as_mask(a));
}

bool e_rel_holds(const Flow& flow, const Element& g, const FlowSet& a, const FlowSet& b) {
  if (const auto* x = as_sft(flow)) {
    const ClopenSet moved = translate(as_clopen(a), shift_of(g));
    return is_empty(*x, clopen_intersect(x->alphabet(), moved, as_clopen(b))).empty;
  }
  return (as_finite(flow)->act_mask(g, as_mask(a)) & as_mask(b)) == 0;
}

bool family_covers(const Flow& flow, const std::vector<FlowSet>& family) {
  if (const auto* x = as_sft(flow)) {
    std::vector<ClopenSet> sets;
    sets.reserve(family.size());
    for (const auto& s : family) sets.push_back(as_clopen(s));
    return is_cover(*x, sets).empty;
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(family.size());
  for (const auto& s : family) masks.push_back(as_mask(s));
  return flow_is_cover(*as_finite(flow), masks).covered;
}

bool r_u_disjoint(const Flow& flow, const FlowSet& a, const FlowSet& b, const SymSet& u) {
  for (const auto& g : u.elements())
    if (!e_rel_holds(flow, g, a, b)) return false;
  return true;
}

bool flow_transitive(const Flow& flow) {
  if (const auto* x = as_sft(flow)) return is_transitive(*x);
  return as_finite(flow)->transitive();
}

} // namespace flowtype
