#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flowtype/group.hpp"
#include "flowtype/rational.hpp"

namespace flowtype {

// Finite weighted generating data for a seminorm. Costs are symmetrized on
// construction (min of cost(g), cost(g^-1)); the identity always costs 0;
// default_cost applies to every group element not listed.
class WeightedPairSet {
 public:
  WeightedPairSet(const Group& group, const std::vector<std::pair<Element, Rat>>& pairs,
                  Rat default_cost);

  const std::map<Element, Rat>& costs() const { return costs_; }
  const Rat& default_cost() const { return default_cost_; }

 private:
  std::map<Element, Rat> costs_;
  Rat default_cost_;
};

// Nested levels U_0 >= U_1 >= ... >= U_L with nonincreasing costs c_0 >= ... >= c_L
// in [0,1]; costs default to c_n = 2^-n.
struct NestedChain {
  std::vector<SymSet> levels;
  std::vector<Rat> costs;

  NestedChain(const Group& group, std::vector<SymSet> levels, std::vector<Rat> costs);
  static std::vector<Rat> dyadic_costs(std::size_t count);

  // Each u in some level, at the cheapest cost among levels containing it.
  WeightedPairSet induced_pairs(const Group& group) const;
};

enum class SeminormKind { Generated, Chain, Table };

// An evaluable seminorm: bounded, symmetric, subadditive, zero at the identity.
// Generated and chain kinds evaluate as a weighted shortest path over the
// listed generators, capped at the default cost; a factorization that uses a
// default-cost factor already costs at least the cap, so the cap is exact.
// The shortest-path region with distance below the cap is finite (all listed
// costs positive off the identity on infinite groups; enforced on load) and is
// computed once on construction, so evaluation is a lookup.
class Seminorm {
 public:
  static Seminorm generated(const Group& group, WeightedPairSet pairs);
  static Seminorm chain(const Group& group, NestedChain chain);
  static Seminorm table(const Group& group, std::vector<Rat> values);

  SeminormKind kind() const { return kind_; }
  const Group& group() const { return group_; }
  const NestedChain& chain_data() const;
  const std::vector<Rat>& table_values() const;
  const WeightedPairSet& pair_data() const;

  Rat eval(const Element& g) const;

  // sup sigma: exact max for finite groups; the shortest-path cap otherwise.
  Rat norm_bound() const;

 private:
  Seminorm(const Group& group, SeminormKind kind) : group_(group), kind_(kind) {}
  void build_distances(const WeightedPairSet& pairs);

  Group group_;
  SeminormKind kind_;
  std::optional<NestedChain> chain_;
  std::optional<WeightedPairSet> pairs_;  // Generated kind
  std::vector<Rat> table_;                // Table kind, indexed by element
  std::map<Element, Rat> distances_;      // region with value < cap
  Rat cap_ = 0;
};

// Phi(sigma, sigma', F, eps): the seminorm generated by sigma's graph on
// `support` together with the discounted pairs (g, sigma'(g)+eps) on F,
// with default cost ||sigma||.
Seminorm phi_seminorm(const Group& group, const Seminorm& sigma, const Seminorm& sigma_prime,
                      const SymSet& f_set, const Rat& eps, const std::vector<Element>& support);

struct BkViolation {
  int level = 0;
  Element witness;
  Rat value;
  Rat lower;
  Rat upper;
};

struct BkReport {
  bool precondition_ok = true;
  int precondition_level = -1;          // n with U_{n+1}^3 not inside U_n
  std::optional<Element> precondition_witness;
  std::vector<BkViolation> violations;  // empty when all bounds hold
  long long tested = 0;
};

// Checks 2^{-n-1} <= sigma(h) <= 2^{-n} for every h in U_n \ U_{n+1}, n < L,
// after verifying U_{n+1}^3 is contained in U_n. Requires dyadic costs.
BkReport bk_verify(const Group& group, const NestedChain& chain);

struct FubiniWitness {
  SymSet f_set;
  Rat eps;
  bool verified = false;
  std::optional<Element> failure;  // element violating the bound, if any
};

// Witness for Phi(sigma2, sigma0, F, eps) <= sigma0 + delta on a finite group:
// V = {g : max(sigma0, sigma2)(g) <= delta/5}, eps = delta/5, and F greedily
// grown until B_{sigma0}(1) is covered by VFV; then verified pointwise.
FubiniWitness fubini_witness(const Group& group, const Seminorm& sigma0, const Seminorm& sigma2,
                             const Rat& delta);

// {g in domain : sigma(g) < c}, strict.
std::vector<Element> seminorm_ball(const Seminorm& sigma, const Rat& c,
                                   const std::vector<Element>& domain);

} // namespace flowtype
