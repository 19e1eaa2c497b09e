#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "flowtype/group.hpp"
#include "flowtype/rational.hpp"
#include "flowtype/seminorm.hpp"

namespace flowtype {

// A finite set with an action of a supported group, given by permutations for
// a set of generators (or all elements). Point subsets are bitmasks.
class FiniteFlow {
 public:
  FiniteFlow(Group group, int size, std::map<Element, std::vector<int>> action);

  const Group& group() const { return group_; }
  int size() const { return size_; }
  const std::map<Element, std::vector<int>>& given_action() const { return given_; }
  const std::vector<Element>& generators() const { return generators_; }

  std::vector<int> act(const Element& g) const;         // the permutation of g
  std::uint64_t act_mask(const Element& g, std::uint64_t mask) const;
  std::uint64_t full_mask() const { return size_ == 64 ? ~0ull : (1ull << size_) - 1; }

  bool transitive() const;  // single orbit under the acting group
  bool identical(const FiniteFlow& other) const;

 private:
  std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> invert(const std::vector<int>& p) const;

  Group group_;
  int size_;
  std::map<Element, std::vector<int>> given_;
  std::vector<Element> generators_;              // acting generators, sorted
  std::map<Element, std::vector<int>> derived_;  // full table for finite groups
};

// min{sigma(g) : g x = y} within an orbit, 1 across orbits. Finite groups only,
// with ||sigma|| <= 1.
Rat partial_sigma(const FiniteFlow& flow, const Seminorm& sigma, int x, int y);

bool flow_r_u_disjoint(const FiniteFlow& flow, std::uint64_t a, std::uint64_t b, const SymSet& u);

struct MaskCoverResult {
  bool covered = true;
  std::optional<int> uncovered_point;
};

MaskCoverResult flow_is_cover(const FiniteFlow& flow, const std::vector<std::uint64_t>& family);

} // namespace flowtype
