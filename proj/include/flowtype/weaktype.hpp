#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowtype/flow.hpp"
#include "flowtype/structure.hpp"

namespace flowtype {

// The full L_F-structure of an ordered family: E_g(k,l) iff g A_k misses A_l,
// C(S) iff the members indexed by S cover the flow. Members must be nonempty
// and pairwise semantically distinct.
LStructure full_structure(const Flow& flow, const std::vector<FlowSet>& family, const SymSet& f);

// Realization search at bounded resolution. For subshifts, candidates are
// window predicates on [-w, w] over the words occurring in X; for finite
// flows, all nonempty point subsets (w ignored). Returns the first witness in
// the fixed search order, re-validated through full_structure; nullopt means
// no realization at this window, which certifies non-realization only for
// finite flows.
std::optional<std::vector<FlowSet>> realizes(const Flow& flow, const LStructure& m, int w);

struct WeakType {
  std::vector<Element> f_elems;
  int n = 0;
  std::optional<int> w;  // window radius; absent for finite flows
  std::string flow_id;
  // Canonical forms, keyed by (vertex count, canonical key); downward closed.
  std::map<std::pair<int, std::string>, LStructure> structures;

  bool same_resolution(const WeakType& other) const {
    return f_elems == other.f_elems && n == other.n && w == other.w;
  }
};

// All canonical structures on at most n vertices realized at window w,
// enumerated by growing realized structures one relation at a time (the
// realized set is downward closed, so this reaches everything).
WeakType enumerate_type(const Flow& flow, const SymSet& f, int n, int w,
                        const std::string& flow_id, bool force = false);

WeakType type_meet(const std::vector<WeakType>& types);

enum class ContainVerdict { Contained, NotContainedCertified, NotContainedAtResolution };

struct ContainmentResult {
  ContainVerdict verdict = ContainVerdict::Contained;
  int n = 0;
  std::optional<int> wx, wy;
  bool exact = false;  // finite pair checked through its whole open-set lattice
  std::optional<LStructure> witness;  // structure of X not realized in Y
};

// Is every structure realized by X (at the given resolution) realized in Y?
// Finite pairs are scanned family-side, which reaches n = 2^|X|-1 without
// materializing the type; a failure against a finite Y is a certificate.
ContainmentResult check_containment(const Flow& x, const Flow& y, const SymSet& f, int n, int wx,
                                    int wy, bool force = false);

} // namespace flowtype
