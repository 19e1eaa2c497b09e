#include "flowtype/seminorm.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "flowtype/errors.hpp"

namespace flowtype {

WeightedPairSet::WeightedPairSet(const Group& group,
                                 const std::vector<std::pair<Element, Rat>>& pairs,
                                 Rat default_cost)
    : default_cost_(std::move(default_cost)) {
  if (default_cost_ <= 0) throw ParseError("default cost must be positive");
  for (const auto& [g, c] : pairs) {
    group.require_valid(g);
    if (c < 0) throw ParseError("pair cost must be nonnegative");
    if (c > default_cost_) throw ParseError("pair cost exceeds default cost");
    const Element gi = group.inv(g);
    auto it = costs_.find(g);
    if (it == costs_.end() || c < it->second) costs_[g] = c;
    it = costs_.find(gi);
    if (it == costs_.end() || c < it->second) costs_[gi] = c;
  }
  costs_[group.identity()] = 0;
  if (!group.is_finite()) {
    for (const auto& [g, c] : costs_)
      if (c == 0 && !(g == group.identity()))
        throw ParseError("zero-cost generator off the identity is not evaluable on an infinite group");
  }
}

NestedChain::NestedChain(const Group& group, std::vector<SymSet> lv, std::vector<Rat> cs)
    : levels(std::move(lv)), costs(std::move(cs)) {
  if (levels.empty()) throw ParseError("chain needs at least one level");
  if (costs.empty()) costs = dyadic_costs(levels.size());
  if (costs.size() != levels.size()) throw ParseError("chain has mismatched level/cost counts");
  if (costs.front() > 1) throw ParseError("chain costs must start at most 1");
  for (std::size_t n = 0; n < costs.size(); ++n) {
    if (costs[n] < 0) throw ParseError("chain costs must be nonnegative");
    if (n + 1 < costs.size() && costs[n + 1] > costs[n])
      throw ParseError("chain costs must be nonincreasing");
  }
  for (std::size_t n = 0; n + 1 < levels.size(); ++n)
    for (const auto& u : levels[n + 1].elements())
      if (!levels[n].contains(u)) throw ParseError("chain levels are not nested");
  if (!group.is_finite()) {
    for (std::size_t n = 0; n < levels.size(); ++n)
      if (costs[n] == 0 && levels[n].size() > 1)
        throw ParseError("zero-cost chain level off the identity is not evaluable on an infinite group");
  }
}

std::vector<Rat> NestedChain::dyadic_costs(std::size_t count) {
  std::vector<Rat> cs;
  Rat c = 1;
  for (std::size_t n = 0; n < count; ++n, c /= 2) cs.push_back(c);
  return cs;
}

WeightedPairSet NestedChain::induced_pairs(const Group& group) const {
  std::vector<std::pair<Element, Rat>> pairs;
  // Levels nest and costs are nonincreasing, so the deepest level containing
  // an element gives its cheapest cost; listing every (u, c_n) and letting the
  // pair-set constructor take minima is equivalent.
  for (std::size_t n = 0; n < levels.size(); ++n)
    for (const auto& u : levels[n].elements()) pairs.emplace_back(u, costs[n]);
  return WeightedPairSet(group, pairs, Rat(1));
}

Seminorm Seminorm::generated(const Group& group, WeightedPairSet pairs) {
  Seminorm s(group, SeminormKind::Generated);
  s.cap_ = pairs.default_cost();
  s.build_distances(pairs);
  s.pairs_ = std::move(pairs);
  return s;
}

Seminorm Seminorm::chain(const Group& group, NestedChain chain) {
  Seminorm s(group, SeminormKind::Chain);
  const WeightedPairSet pairs = chain.induced_pairs(group);
  s.cap_ = pairs.default_cost();
  s.chain_ = std::move(chain);
  s.build_distances(pairs);
  return s;
}

Seminorm Seminorm::table(const Group& group, std::vector<Rat> values) {
  if (!group.is_finite()) throw ParseError("table seminorm requires a finite group");
  const int k = group.order();
  if (static_cast<int>(values.size()) != k) throw ParseError("table seminorm has wrong length");
  if (values[0] != 0) throw ParseError("table seminorm must vanish at the identity");
  for (int i = 0; i < k; ++i) {
    if (values[i] < 0) throw ParseError("table seminorm must be nonnegative");
    const int j = group.inv(Element::finite(i)).index();
    if (values[i] != values[j]) throw ParseError("table seminorm is not symmetric");
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int ab = group.mul(Element::finite(a), Element::finite(b)).index();
      if (values[ab] > values[a] + values[b])
        throw ParseError("table seminorm is not subadditive");
    }
  Seminorm s(group, SeminormKind::Table);
  s.table_ = std::move(values);
  s.cap_ = *std::max_element(s.table_.begin(), s.table_.end());
  return s;
}

const NestedChain& Seminorm::chain_data() const {
  if (!chain_) throw PrecondError("seminorm is not a chain");
  return *chain_;
}

const std::vector<Rat>& Seminorm::table_values() const {
  if (kind_ != SeminormKind::Table) throw PrecondError("seminorm is not a table");
  return table_;
}

const WeightedPairSet& Seminorm::pair_data() const {
  if (!pairs_) throw PrecondError("seminorm is not generated from a pair set");
  return *pairs_;
}

// Single-source Dijkstra from the identity over the listed generators,
// relaxing only edges that stay strictly below the cap. Everything outside
// the computed region evaluates to the cap.
void Seminorm::build_distances(const WeightedPairSet& pairs) {
  using Entry = std::pair<Rat, Element>;
  auto cmp = [](const Entry& a, const Entry& b) { return b.first < a.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
  std::map<Element, Rat> dist;
  const Element e = group_.identity();
  dist[e] = 0;
  queue.push({Rat(0), e});
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    auto it = dist.find(x);
    if (it == dist.end() || it->second < d) continue;
    for (const auto& [g, c] : pairs.costs()) {
      const Rat nd = d + c;
      if (nd >= pairs.default_cost()) continue;
      Element y = group_.mul(x, g);
      auto dit = dist.find(y);
      if (dit == dist.end() || nd < dit->second) {
        dist[y] = nd;
        queue.push({nd, std::move(y)});
      }
    }
  }
  distances_ = std::move(dist);
}

Rat Seminorm::eval(const Element& g) const {
  group_.require_valid(g);
  if (kind_ == SeminormKind::Table) return table_[g.index()];
  auto it = distances_.find(g);
  return it == distances_.end() ? cap_ : it->second;
}

Rat Seminorm::norm_bound() const {
  if (kind_ == SeminormKind::Table) return cap_;
  if (group_.is_finite()) {
    Rat best = 0;
    for (const auto& g : group_.elements()) best = std::max(best, eval(g));
    return best;
  }
  return cap_;
}

Seminorm phi_seminorm(const Group& group, const Seminorm& sigma, const Seminorm& sigma_prime,
                      const SymSet& f_set, const Rat& eps, const std::vector<Element>& support) {
  if (eps <= 0) throw PrecondError("phi requires positive eps");
  std::set<Element> dom(support.begin(), support.end());
  if (group.is_finite() && dom.empty())
    for (const auto& g : group.elements()) dom.insert(g);
  for (const auto& g : f_set.elements())
    if (!dom.count(g)) throw PrecondError("F is not contained in the evaluation support");
  const Rat cap = sigma.norm_bound();
  if (cap == 0) {
    // sigma vanishes, so Phi does too; only possible on finite groups.
    return Seminorm::table(group, std::vector<Rat>(group.order(), Rat(0)));
  }
  std::vector<std::pair<Element, Rat>> pairs;
  for (const auto& g : dom) pairs.emplace_back(g, std::min(sigma.eval(g), cap));
  for (const auto& g : f_set.elements())
    pairs.emplace_back(g, std::min(sigma_prime.eval(g) + eps, cap));
  return Seminorm::generated(group, WeightedPairSet(group, pairs, cap));
}

BkReport bk_verify(const Group& group, const NestedChain& chain) {
  if (chain.costs != NestedChain::dyadic_costs(chain.levels.size()))
    throw PrecondError("bk_verify requires the dyadic costs c_n = 2^-n");
  BkReport report;
  // Precondition U_{n+1}^3 inside U_n, reported before any bound is judged.
  for (std::size_t n = 0; n + 1 < chain.levels.size(); ++n) {
    const auto& inner = chain.levels[n + 1].elements();
    std::set<Element> two;
    for (const auto& a : inner)
      for (const auto& b : inner) two.insert(group.mul(a, b));
    for (const auto& ab : two) {
      for (const auto& c : inner) {
        const Element abc = group.mul(ab, c);
        if (!chain.levels[n].contains(abc)) {
          report.precondition_ok = false;
          report.precondition_level = static_cast<int>(n);
          report.precondition_witness = abc;
          return report;
        }
      }
    }
  }
  const Seminorm sigma = Seminorm::chain(group, chain);
  Rat upper = 1;
  for (std::size_t n = 0; n + 1 < chain.levels.size(); ++n, upper /= 2) {
    const Rat lower = upper / 2;
    for (const auto& h : chain.levels[n].elements()) {
      if (chain.levels[n + 1].contains(h)) continue;
      ++report.tested;
      const Rat value = sigma.eval(h);
      if (value < lower || value > upper)
        report.violations.push_back({static_cast<int>(n), h, value, lower, upper});
    }
  }
  return report;
}

FubiniWitness fubini_witness(const Group& group, const Seminorm& sigma0, const Seminorm& sigma2,
                             const Rat& delta) {
  if (!group.is_finite()) throw PrecondError("fubini_witness requires a finite group");
  if (delta <= 0) throw PrecondError("fubini_witness requires positive delta");
  if (sigma0.norm_bound() > 1 || sigma2.norm_bound() > 1)
    throw PrecondError("fubini_witness requires seminorms bounded by 1");

  const Rat eps = delta / 5;
  const auto all = group.elements();
  SymSet f_set(group, {});
  if (delta < sigma2.norm_bound()) {
    std::vector<Element> v_elems;
    for (const auto& g : all)
      if (std::max(sigma0.eval(g), sigma2.eval(g)) <= eps) v_elems.push_back(g);
    const SymSet v_set(group, v_elems);

    std::vector<Element> b_set;
    for (const auto& g : all)
      if (sigma0.eval(g) < 1) b_set.push_back(g);

    auto covered = [&](const SymSet& f, const Element& h) {
      for (const auto& v0 : v_set.elements())
        for (const auto& f0 : f.elements()) {
          // h = v0 f0 v1 for some v1 iff (v0 f0)^-1 h lies in V.
          const Element v1 = group.mul(group.inv(group.mul(v0, f0)), h);
          if (v_set.contains(v1)) return true;
        }
      return false;
    };
    std::vector<Element> f_elems;
    for (const auto& h : b_set) {
      if (!covered(f_set, h)) {
        f_elems.push_back(h);
        f_set = SymSet(group, f_elems);
      }
    }
  }

  FubiniWitness out;
  out.eps = eps;
  out.f_set = f_set;
  out.verified = true;
  const Seminorm phi = phi_seminorm(group, sigma2, sigma0, f_set, eps, all);
  for (const auto& h : all) {
    if (phi.eval(h) > sigma0.eval(h) + delta) {
      out.verified = false;
      out.failure = h;
      break;
    }
  }
  return out;
}

std::vector<Element> seminorm_ball(const Seminorm& sigma, const Rat& c,
                                   const std::vector<Element>& domain) {
  std::vector<Element> out;
  for (const auto& g : domain)
    if (sigma.eval(g) < c) out.push_back(g);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace flowtype
