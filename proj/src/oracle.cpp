#include "flowtype/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "flowtype/errors.hpp"

namespace flowtype {

namespace {

bool propagate(const FiniteFlow& source, const FiniteFlow& target, std::vector<int>& f, int seed) {
  std::vector<int> queue{seed};
  while (!queue.empty()) {
    const int y = queue.back();
    queue.pop_back();
    for (const auto& g : source.generators()) {
      const int gy = source.act(g)[y];
      const int gx = target.act(g)[f[y]];
      if (f[gy] == -1) {
        f[gy] = gx;
        queue.push_back(gy);
      } else if (f[gy] != gx) {
        return false;
      }
    }
  }
  return true;
}

bool surjectivity_possible(const std::vector<int>& f, int target_size) {
  std::vector<bool> hit(target_size, false);
  int unassigned = 0;
  for (int v : f)
    if (v == -1)
      ++unassigned;
    else
      hit[v] = true;
  int missing = 0;
  for (bool b : hit) missing += b ? 0 : 1;
  return unassigned >= missing;
}

bool factor_search(const FiniteFlow& source, const FiniteFlow& target, std::vector<int>& f) {
  if (!surjectivity_possible(f, target.size())) return false;
  int y = -1;
  for (int i = 0; i < source.size(); ++i)
    if (f[i] == -1) {
      y = i;
      break;
    }
  if (y == -1) {
    for (int x = 0; x < target.size(); ++x)
      if (std::find(f.begin(), f.end(), x) == f.end()) return false;
    return true;
  }
  for (int x = 0; x < target.size(); ++x) {
    std::vector<int> trial = f;
    trial[y] = x;
    if (propagate(source, target, trial, y) && factor_search(source, target, trial)) {
      f = std::move(trial);
      return true;
    }
  }
  return false;
}

} // namespace

std::optional<FactorMap> factor_exists(const FiniteFlow& source, const FiniteFlow& target) {
  if (!source.group().same_group(target.group()))
    throw PrecondError("factor search requires flows of the same group");
  if (source.size() > 8 || target.size() > 8)
    throw PrecondError("factor search is guarded at 8 points");
  std::vector<int> f(source.size(), -1);
  if (!factor_search(source, target, f)) return std::nullopt;
  // Re-validate: surjective and equivariant on every generator.
  std::vector<bool> hit(target.size(), false);
  for (int v : f) hit[v] = true;
  for (bool b : hit)
    if (!b) throw PrecondError("internal error: factor map is not surjective");
  for (const auto& g : source.generators())
    for (int y = 0; y < source.size(); ++y)
      if (f[source.act(g)[y]] != target.act(g)[f[y]])
        throw PrecondError("internal error: factor map is not equivariant");
  return FactorMap{std::move(f)};
}

namespace {

void families_of_size(int n_subsets, int size,
                      const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  std::vector<std::uint64_t> family;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t next) {
    if (static_cast<int>(family.size()) == size) {
      visit(family);
      return;
    }
    for (std::uint64_t m = next; m <= static_cast<std::uint64_t>(n_subsets); ++m) {
      family.push_back(m);
      rec(m + 1);
      family.pop_back();
    }
  };
  rec(1);
}

// Downward closure under single relation removal, deduplicated by canonical
// form. Sound to prune on canonical keys: isomorphic structures have equal
// closures up to isomorphism.
void close_down(const LStructure& s, std::set<std::pair<int, std::string>>& seen,
                std::map<std::pair<int, std::string>, LStructure>& out) {
  const LStructure canon = canonicalize(s, true);
  auto key = std::make_pair(canon.n, canon.key());
  if (!seen.insert(key).second) return;
  out.emplace(key, canon);
  for (const auto& r : canon.e_rels) {
    LStructure sub = canon;
    sub.e_rels.erase(r);
    close_down(sub, seen, out);
  }
  for (std::uint32_t c : canon.c_rels) {
    LStructure sub = canon;
    sub.c_rels.erase(c);
    close_down(sub, seen, out);
  }
}

} // namespace

WeakType brute_type(const FiniteFlow& x, const SymSet& f, int nmax, const std::string& flow_id,
                    bool force) {
  if (x.size() > 6) throw PrecondError("brute_type is guarded at 6 points");
  const int n_subsets = static_cast<int>(x.full_mask());
  if (nmax < 1 || nmax > n_subsets)
    throw PrecondError("brute_type needs 1 <= nmax <= 2^|X|-1");
  if (nmax > (force ? 8 : 6))
    throw PrecondError("brute_type nmax exceeds the canonicalization guard");

  WeakType type;
  type.f_elems = f.elements();
  type.n = nmax;
  type.flow_id = flow_id;
  const Flow flow = x;
  std::set<std::pair<int, std::string>> seen;
  for (int size = 1; size <= nmax; ++size) {
    families_of_size(n_subsets, size, [&](const std::vector<std::uint64_t>& family) {
      std::vector<FlowSet> sets;
      for (std::uint64_t m : family) sets.push_back(FlowSet(m));
      const LStructure s = full_structure(flow, sets, f);
      if (s.relation_count() > 24)
        throw PrecondError("brute_type closure would be too large to materialize");
      close_down(s, seen, type.structures);
    });
  }
  return type;
}

bool full_type_contained(const FiniteFlow& x, const FiniteFlow& y, const SymSet& f) {
  if (x.size() > 3 || y.size() > 3)
    throw PrecondError("full type containment is guarded at 3 points");
  auto fulls = [&](const FiniteFlow& flow) {
    std::map<int, std::vector<LStructure>> by_n;
    const Flow as_flow = flow;
    const int n_subsets = static_cast<int>(flow.full_mask());
    for (int size = 1; size <= n_subsets; ++size)
      families_of_size(n_subsets, size, [&](const std::vector<std::uint64_t>& family) {
        std::vector<FlowSet> sets;
        for (std::uint64_t m : family) sets.push_back(FlowSet(m));
        by_n[size].push_back(full_structure(as_flow, sets, f));
      });
    return by_n;
  };
  const auto x_fulls = fulls(x);
  const auto y_fulls = fulls(y);
  for (const auto& [n, xs] : x_fulls) {
    const auto it = y_fulls.find(n);
    for (const auto& sx : xs) {
      bool found = false;
      if (it != y_fulls.end())
        for (const auto& sy : it->second)
          if (embeds_into(sx, sy)) {
            found = true;
            break;
          }
      if (!found) return false;
    }
  }
  return true;
}

TheoremReport verify_containment_theorem(
    const std::vector<std::pair<FiniteFlow, FiniteFlow>>& pairs, const SymSet& f) {
  TheoremReport report;
  for (const auto& [x, y] : pairs) {
    if (!x.group().is_finite()) throw PrecondError("theorem check requires a finite group");
    if (static_cast<int>(f.size()) != x.group().order())
      throw PrecondError("theorem check requires F to be the whole group");
    TheoremInstance inst;
    inst.factor = factor_exists(y, x).has_value();
    inst.type_contained = full_type_contained(x, y, f);
    inst.agree = inst.factor == inst.type_contained;
    report.instances.push_back(inst);
    ++report.total;
    report.agreeing += inst.agree ? 1 : 0;
  }
  return report;
}

} // namespace flowtype
