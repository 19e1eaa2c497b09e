#include "flowtype/finite_flow.hpp"

#include <algorithm>
#include <set>

#include "flowtype/errors.hpp"

namespace flowtype {

namespace {

void check_perm(int size, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != size) throw ParseError("permutation has wrong length");
  std::vector<bool> hit(size, false);
  for (int v : p) {
    if (v < 0 || v >= size || hit[v]) throw ParseError("action entry is not a permutation");
    hit[v] = true;
  }
}

} // namespace

FiniteFlow::FiniteFlow(Group group, int size, std::map<Element, std::vector<int>> action)
    : group_(std::move(group)), size_(size), given_(std::move(action)) {
  if (size_ < 1 || size_ > 64) throw ParseError("finite flow size must be in 1..64");
  for (const auto& [g, p] : given_) {
    group_.require_valid(g);
    check_perm(size_, p);
  }

  std::vector<int> id(size_);
  for (int i = 0; i < size_; ++i) id[i] = i;

  switch (group_.kind()) {
    case GroupKind::Finite: {
      // Derive the permutation of every element from the given generators,
      // then check the result is a homomorphism.
      derived_[group_.identity()] = id;
      std::map<Element, std::vector<int>> gens = given_;
      for (const auto& [g, p] : given_) gens.emplace(group_.inv(g), invert(p));
      std::vector<Element> frontier{group_.identity()};
      while (!frontier.empty()) {
        std::vector<Element> next;
        for (const auto& g : frontier)
          for (const auto& [s, p] : gens) {
            const Element h = group_.mul(g, s);
            // phi(g s) applies phi(s) first, then phi(g).
            std::vector<int> hp = compose(derived_.at(g), p);
            auto it = derived_.find(h);
            if (it == derived_.end()) {
              derived_[h] = std::move(hp);
              next.push_back(h);
            } else if (it->second != hp) {
              throw ParseError("action is inconsistent: derived permutations disagree");
            }
          }
        frontier = std::move(next);
      }
      if (static_cast<int>(derived_.size()) != group_.order())
        throw ParseError("action generators do not generate the group");
      for (const auto& [a, pa] : derived_)
        for (const auto& [b, pb] : derived_)
          if (derived_.at(group_.mul(a, b)) != compose(pa, pb))
            throw ParseError("action is not a homomorphism");
      for (const auto& g : group_.elements()) generators_.push_back(g);
      break;
    }
    case GroupKind::Free: {
      for (int i = 1; i <= group_.rank(); ++i) {
        const Element gen = Element::word({i});
        if (!given_.count(gen))
          throw ParseError("free group action needs a permutation for every generator");
        generators_.push_back(gen);
        generators_.push_back(group_.inv(gen));
      }
      if (static_cast<int>(given_.size()) != group_.rank())
        throw ParseError("free group action must be keyed by exactly the generators");
      break;
    }
    default: {
      for (int i = 0; i < group_.dimension(); ++i) {
        std::vector<long long> v(group_.dimension(), 0);
        v[i] = 1;
        const Element gen = Element::vec(v);
        if (!given_.count(gen))
          throw ParseError("lattice action needs a permutation for every unit vector");
        generators_.push_back(gen);
        generators_.push_back(group_.inv(gen));
      }
      if (static_cast<int>(given_.size()) != group_.dimension())
        throw ParseError("lattice action must be keyed by exactly the unit vectors");
      for (const auto& [a, pa] : given_)
        for (const auto& [b, pb] : given_)
          if (compose(pa, pb) != compose(pb, pa))
            throw ParseError("lattice action generators must commute");
      break;
    }
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

std::vector<int> FiniteFlow::compose(const std::vector<int>& a, const std::vector<int>& b) const {
  std::vector<int> out(size_);
  for (int i = 0; i < size_; ++i) out[i] = a[b[i]];
  return out;
}

std::vector<int> FiniteFlow::invert(const std::vector<int>& p) const {
  std::vector<int> out(size_);
  for (int i = 0; i < size_; ++i) out[p[i]] = i;
  return out;
}

std::vector<int> FiniteFlow::act(const Element& g) const {
  group_.require_valid(g);
  switch (group_.kind()) {
    case GroupKind::Finite:
      return derived_.at(g);
    case GroupKind::Free: {
      std::vector<int> out(size_);
      for (int i = 0; i < size_; ++i) out[i] = i;
      // Rightmost letter acts first.
      for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) {
        const int letter = *it;
        const auto& base = given_.at(Element::word({std::abs(letter)}));
        out = compose(letter > 0 ? base : invert(base), out);
      }
      return out;
    }
    default: {
      std::vector<int> out(size_);
      for (int i = 0; i < size_; ++i) out[i] = i;
      for (int d = 0; d < group_.dimension(); ++d) {
        std::vector<long long> unit(group_.dimension(), 0);
        unit[d] = 1;
        const auto& base = given_.at(Element::vec(unit));
        const std::vector<int> step = g.coords()[d] > 0 ? base : invert(base);
        for (long long k = 0, reps = std::abs(g.coords()[d]); k < reps; ++k) out = compose(step, out);
      }
      return out;
    }
  }
}

std::uint64_t FiniteFlow::act_mask(const Element& g, std::uint64_t mask) const {
  const std::vector<int> p = act(g);
  std::uint64_t out = 0;
  for (int i = 0; i < size_; ++i)
    if (mask & (1ull << i)) out |= 1ull << p[i];
  return out;
}

bool FiniteFlow::transitive() const {
  std::vector<bool> seen(size_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& g : generators_) {
      const int y = act(g)[x];
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool FiniteFlow::identical(const FiniteFlow& other) const {
  if (!group_.same_group(other.group_) || size_ != other.size_) return false;
  if (generators_ != other.generators_) return false;
  for (const auto& g : generators_)
    if (act(g) != other.act(g)) return false;
  return true;
}

Rat partial_sigma(const FiniteFlow& flow, const Seminorm& sigma, int x, int y) {
  if (!flow.group().is_finite()) throw PrecondError("partial_sigma requires a finite acting group");
  if (!sigma.group().same_group(flow.group()))
    throw PrecondError("seminorm and flow have different groups");
  if (sigma.norm_bound() > 1) throw PrecondError("partial_sigma requires ||sigma|| <= 1");
  if (x < 0 || x >= flow.size() || y < 0 || y >= flow.size())
    throw ParseError("point index out of range");
  std::optional<Rat> best;
  for (const auto& g : flow.group().elements())
    if (flow.act(g)[x] == y) {
      const Rat v = sigma.eval(g);
      if (!best || v < *best) best = v;
    }
  if (!best) return Rat(1);
  return std::min(*best, Rat(1));
}

bool flow_r_u_disjoint(const FiniteFlow& flow, std::uint64_t a, std::uint64_t b, const SymSet& u) {
  for (const auto& g : u.elements())
    if (flow.act_mask(g, a) & b) return false;
  return true;
}

MaskCoverResult flow_is_cover(const FiniteFlow& flow, const std::vector<std::uint64_t>& family) {
  std::uint64_t uni = 0;
  for (std::uint64_t m : family) uni |= m;
  MaskCoverResult out;
  const std::uint64_t missing = flow.full_mask() & ~uni;
  if (missing) {
    out.covered = false;
    for (int i = 0; i < flow.size(); ++i)
      if (missing & (1ull << i)) {
        out.uncovered_point = i;
        break;
      }
  }
  return out;
}

} // namespace flowtype
