#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "flowtype/group.hpp"

namespace flowtype {

// E-relation: ordered pair (k, l) of vertices tagged by an index into F.
struct ERel {
  int g = 0;  // index into the F list
  int k = 0;
  int l = 0;

  auto operator<=>(const ERel&) const = default;
};

// Finite L_F-structure: binary disjointness relations E_g for g in F and
// covering relations C on vertex subsets (subset masks; tuple order and
// repeats do not affect coverage, so subsets lose nothing).
struct LStructure {
  int n = 0;
  std::vector<Element> f_elems;  // sorted language index set
  std::set<ERel> e_rels;
  std::set<std::uint32_t> c_rels;  // nonempty masks over 0..n-1

  void validate() const;  // index ranges; throws ParseError
  std::string key() const;        // canonical-comparison string for this labeling
  LStructure relabel(const std::vector<int>& perm) const;
  std::size_t relation_count() const { return e_rels.size() + c_rels.size(); }

  bool operator==(const LStructure& other) const {
    return n == other.n && f_elems == other.f_elems && e_rels == other.e_rels &&
           c_rels == other.c_rels;
  }
};

// Lexicographically minimal relabeling over all vertex permutations.
// Idempotent and constant on isomorphism classes. Factorial in n; guarded.
LStructure canonicalize(const LStructure& m, bool force = false);

// Is there a vertex bijection carrying every relation of `m` into `target`?
// (Extra relations in `target` are allowed: a bijective monomorphism.)
bool embeds_into(const LStructure& m, const LStructure& target);

} // namespace flowtype
