#include "flowtype/weaktype.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "flowtype/errors.hpp"

namespace flowtype {

namespace {

// Bitmask universe for the realization search: words occurring in X on the
// window [-w, w] for subshifts, points for finite flows. Candidate sets are
// masks over this universe; semantic equality of candidates is mask equality.
struct RealizeContext {
  const Flow* flow = nullptr;
  bool sft = false;
  int w = 0;
  std::vector<std::string> words;  // subshift atoms, sorted
  int n_atoms = 0;
  std::uint64_t full = 0;
  std::vector<Element> f_elems;
  // conflict[g][a] = atoms b with (a in A, b in B) witnessing g A meets B.
  std::vector<std::vector<std::uint64_t>> conflict;
  std::vector<std::vector<std::uint64_t>> rev_conflict;

  FlowSet to_set(std::uint64_t mask) const {
    if (sft) {
      ClopenSet c{-w, w, {}};
      for (int i = 0; i < n_atoms; ++i)
        if (mask & (1ull << i)) c.allowed.insert(words[i]);
      return c;
    }
    return mask;
  }
};

// Do the cylinders "u on [-w+s, w+s]" and "v on [-w, w]" meet inside X?
bool cylinders_meet(const ZSubshift& x, const std::string& u, long long s, const std::string& v,
                    int w) {
  const long long lo = std::min(-static_cast<long long>(w) + s, -static_cast<long long>(w));
  const long long hi = std::max(static_cast<long long>(w) + s, static_cast<long long>(w));
  std::string pattern(static_cast<std::size_t>(hi - lo + 1), '?');
  const auto place = [&](const std::string& word, long long at) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      char& slot = pattern[static_cast<std::size_t>(at - lo) + i];
      if (slot != '?' && slot != word[i]) return false;
      slot = word[i];
    }
    return true;
  };
  if (!place(u, -static_cast<long long>(w) + s)) return false;
  if (!place(v, -static_cast<long long>(w))) return false;
  return x.occurs_pattern(pattern);
}

RealizeContext make_context(const Flow& flow, const std::vector<Element>& f_elems, int w) {
  RealizeContext ctx;
  ctx.flow = &flow;
  ctx.f_elems = f_elems;
  const Group& group = flow_group(flow);
  for (const auto& g : f_elems) group.require_valid(g);

  if (const auto* x = std::get_if<ZSubshift>(&flow)) {
    ctx.sft = true;
    if (w < 0) throw PrecondError("window radius must be nonnegative");
    ctx.w = w;
    ctx.words = x->extendable_words(2 * w + 1);
    ctx.n_atoms = static_cast<int>(ctx.words.size());
    if (ctx.n_atoms > 64)
      throw PrecondError("window has more than 64 occurring words; reduce w");
    for (const auto& g : f_elems) {
      const long long s = g.coords().at(0);
      std::vector<std::uint64_t> row(ctx.n_atoms, 0);
      for (int a = 0; a < ctx.n_atoms; ++a)
        for (int b = 0; b < ctx.n_atoms; ++b)
          if (cylinders_meet(*x, ctx.words[a], s, ctx.words[b], w)) row[a] |= 1ull << b;
      ctx.conflict.push_back(std::move(row));
    }
  } else {
    const auto& fin = std::get<FiniteFlow>(flow);
    ctx.n_atoms = fin.size();
    for (const auto& g : f_elems) {
      const std::vector<int> perm = fin.act(g);
      std::vector<std::uint64_t> row(ctx.n_atoms, 0);
      for (int a = 0; a < ctx.n_atoms; ++a) row[a] = 1ull << perm[a];
      ctx.conflict.push_back(std::move(row));
    }
  }
  ctx.full = ctx.n_atoms == 64 ? ~0ull : (1ull << ctx.n_atoms) - 1;
  ctx.rev_conflict.assign(ctx.conflict.size(), std::vector<std::uint64_t>(ctx.n_atoms, 0));
  for (std::size_t g = 0; g < ctx.conflict.size(); ++g)
    for (int a = 0; a < ctx.n_atoms; ++a)
      for (int b = 0; b < ctx.n_atoms; ++b)
        if (ctx.conflict[g][a] & (1ull << b)) ctx.rev_conflict[g][b] |= 1ull << a;
  return ctx;
}

// Atom-major constraint search. One variable per atom, its value the vector
// of vertices containing it (a bit per vertex, at most 64 values for n <= 6).
// Self-conflicting pairs and coverage clauses become unary domain filters;
// conflicting atom pairs become binary constraints handled by forward
// checking. Atoms are assigned in word order, vectors tried ascending, so the
// first witness is deterministic.
class RealizeSearch {
 public:
  RealizeSearch(const RealizeContext& ctx, const LStructure& m) : ctx_(ctx), m_(m) {
    const int n_vectors = 1 << m_.n;
    all_vectors_ = n_vectors == 64 ? ~0ull : (1ull << n_vectors) - 1;

    // vec_blocked[k][l]: vectors containing both vertex k and vertex l.
    std::vector<std::uint64_t> with_bit(m_.n, 0);
    for (int v = 0; v < n_vectors; ++v)
      for (int k = 0; k < m_.n; ++k)
        if (v & (1 << k)) with_bit[k] |= 1ull << v;

    domains_.assign(ctx.n_atoms, all_vectors_);
    for (const auto& r : m_.e_rels) {
      for (int a = 0; a < ctx_.n_atoms; ++a) {
        // (a, a) conflicts forbid vectors holding both endpoints at once.
        if (ctx_.conflict[r.g][a] & (1ull << a))
          domains_[a] &= ~(with_bit[r.k] & with_bit[r.l]);
        // cross-atom conflicts become binary constraints
        std::uint64_t others = ctx_.conflict[r.g][a] & ~(1ull << a);
        for (int b = 0; b < ctx_.n_atoms; ++b)
          if (others & (1ull << b))
            binary_.push_back({a, b, with_bit[r.k], with_bit[r.l]});
      }
    }
    for (std::uint32_t c : m_.c_rels) {
      // Coverage: every atom lies in some vertex of the covering subset.
      std::uint64_t allowed = 0;
      for (int v = 0; v < n_vectors; ++v)
        if (v & c) allowed |= 1ull << v;
      for (auto& d : domains_) d &= allowed;
    }
    by_atom_.assign(ctx.n_atoms, {});
    for (std::size_t i = 0; i < binary_.size(); ++i) {
      by_atom_[binary_[i].a].push_back(static_cast<int>(i));
      by_atom_[binary_[i].b].push_back(static_cast<int>(i));
    }
  }

  std::optional<std::vector<std::uint64_t>> run() {
    if (ctx_.n_atoms == 0) return std::nullopt;
    assigned_.assign(ctx_.n_atoms, 0);
    if (!search(0)) return std::nullopt;
    std::vector<std::uint64_t> masks(m_.n, 0);
    for (int a = 0; a < ctx_.n_atoms; ++a)
      for (int k = 0; k < m_.n; ++k)
        if (assigned_[a] & (1 << k)) masks[k] |= 1ull << a;
    return masks;
  }

 private:
  struct Binary {
    int a;
    int b;
    std::uint64_t a_bit_vectors;  // vectors of a putting it in vertex k
    std::uint64_t b_bit_vectors;  // vectors of b putting it in vertex l
  };

  // Can the vertices still all end up nonempty and pairwise distinct?
  bool still_viable(int next_atom) const {
    std::uint64_t reachable = 0;  // union of vectors still possible anywhere
    for (int a = 0; a < next_atom; ++a) reachable |= 1ull << assigned_[a];
    for (int a = next_atom; a < ctx_.n_atoms; ++a) reachable |= domains_[a];
    const int n_vectors = 1 << m_.n;
    std::uint32_t vertex_possible = 0;
    for (int v = 0; v < n_vectors; ++v)
      if (reachable & (1ull << v)) vertex_possible |= static_cast<std::uint32_t>(v);
    if (vertex_possible != (1u << m_.n) - 1) return false;  // some vertex stays empty
    for (int k = 0; k < m_.n; ++k)
      for (int l = k + 1; l < m_.n; ++l) {
        bool separable = false;
        for (int v = 0; v < n_vectors && !separable; ++v)
          if ((reachable & (1ull << v)) && ((v >> k) & 1) != ((v >> l) & 1)) separable = true;
        if (!separable) return false;  // the two vertices cannot be distinguished
      }
    return true;
  }

  bool search(int atom) {
    if (!still_viable(atom)) return false;
    if (atom == ctx_.n_atoms) {
      std::vector<std::uint64_t> masks(m_.n, 0);
      for (int a = 0; a < ctx_.n_atoms; ++a)
        for (int k = 0; k < m_.n; ++k)
          if (assigned_[a] & (1 << k)) masks[k] |= 1ull << a;
      for (int k = 0; k < m_.n; ++k) {
        if (masks[k] == 0) return false;
        for (int l = k + 1; l < m_.n; ++l)
          if (masks[k] == masks[l]) return false;
      }
      return true;
    }
    const std::uint64_t domain = domains_[atom];
    const int n_vectors = 1 << m_.n;
    for (int v = 0; v < n_vectors; ++v) {
      if (!(domain & (1ull << v))) continue;
      assigned_[atom] = v;
      // forward-check binary constraints against undecided atoms
      std::vector<std::pair<int, std::uint64_t>> saved;
      bool wiped = false;
      for (int ci : by_atom_[atom]) {
        const Binary& c = binary_[ci];
        const auto restrict_other = [&](int other, std::uint64_t remove) {
          if (other <= atom || !(domains_[other] & remove)) return;
          saved.emplace_back(other, domains_[other]);
          domains_[other] &= ~remove;
          if (domains_[other] == 0) wiped = true;
        };
        if (c.a == atom && (c.a_bit_vectors & (1ull << v)))
          restrict_other(c.b, c.b_bit_vectors);
        if (c.b == atom && (c.b_bit_vectors & (1ull << v)))
          restrict_other(c.a, c.a_bit_vectors);
        // decided-versus-decided consistency
        if (c.a == atom && c.b < atom && (c.a_bit_vectors & (1ull << v)) &&
            (c.b_bit_vectors & (1ull << assigned_[c.b])))
          wiped = true;
        if (c.b == atom && c.a < atom && (c.b_bit_vectors & (1ull << v)) &&
            (c.a_bit_vectors & (1ull << assigned_[c.a])))
          wiped = true;
        if (wiped) break;
      }
      if (!wiped && search(atom + 1)) return true;
      for (auto it = saved.rbegin(); it != saved.rend(); ++it) domains_[it->first] = it->second;
    }
    assigned_[atom] = 0;
    return false;
  }

  const RealizeContext& ctx_;
  const LStructure& m_;
  std::uint64_t all_vectors_ = 0;
  std::vector<std::uint64_t> domains_;  // per atom: feasible vertex vectors
  std::vector<Binary> binary_;
  std::vector<std::vector<int>> by_atom_;
  std::vector<int> assigned_;
};

std::optional<std::vector<std::uint64_t>> realize_masks(const RealizeContext& ctx,
                                                        const LStructure& m) {
  if (m.n > 6) throw PrecondError("realization search is guarded at 6 vertices");
  return RealizeSearch(ctx, m).run();
}

// The witness must survive the independent semantic path: recompute the full
// structure of the family and confirm every relation of m, identity-labeled.
void revalidate_witness(const Flow& flow, const LStructure& m, const std::vector<FlowSet>& family,
                        const SymSet& f) {
  const LStructure full = full_structure(flow, family, f);
  for (const auto& r : m.e_rels)
    if (!full.e_rels.count(r))
      throw PrecondError("internal error: witness fails semantic E revalidation");
  for (std::uint32_t c : m.c_rels)
    if (!full.c_rels.count(c))
      throw PrecondError("internal error: witness fails semantic C revalidation");
}

} // namespace

LStructure full_structure(const Flow& flow, const std::vector<FlowSet>& family, const SymSet& f) {
  if (family.empty()) throw PrecondError("full_structure needs a nonempty family");
  if (family.size() > 16) throw PrecondError("full_structure family is too large");
  for (const auto& s : family)
    if (!set_nonempty(flow, s)) throw PrecondError("family member is empty in the flow");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (sets_equal(flow, family[i], family[j]))
        throw PrecondError("family members must be pairwise distinct in the flow");

  LStructure out;
  out.n = static_cast<int>(family.size());
  out.f_elems = f.elements();
  for (int g = 0; g < static_cast<int>(out.f_elems.size()); ++g)
    for (int k = 0; k < out.n; ++k)
      for (int l = 0; l < out.n; ++l)
        if (e_rel_holds(flow, out.f_elems[g], family[k], family[l]))
          out.e_rels.insert({g, k, l});
  for (std::uint32_t mask = 1; mask < (1u << out.n); ++mask) {
    std::vector<FlowSet> sub;
    for (int i = 0; i < out.n; ++i)
      if (mask & (1u << i)) sub.push_back(family[i]);
    if (family_covers(flow, sub)) out.c_rels.insert(mask);
  }
  return out;
}

std::optional<std::vector<FlowSet>> realizes(const Flow& flow, const LStructure& m, int w) {
  m.validate();
  const RealizeContext ctx = make_context(flow, m.f_elems, w);
  const auto masks = realize_masks(ctx, m);
  if (!masks) return std::nullopt;
  std::vector<FlowSet> family;
  family.reserve(masks->size());
  for (std::uint64_t mask : *masks) family.push_back(ctx.to_set(mask));
  revalidate_witness(flow, m, family, SymSet(flow_group(flow), m.f_elems));
  return family;
}

WeakType enumerate_type(const Flow& flow, const SymSet& f, int n, int w,
                        const std::string& flow_id, bool force) {
  const bool sft = std::holds_alternative<ZSubshift>(flow);
  if (n < 1) throw ParseError("type resolution needs n >= 1");
  if (sft && n > 3 && !force)
    throw PrecondError("n > 3 on a subshift exceeds the search guard (use force)");
  if (n > (force ? 8 : 6))
    throw PrecondError("n exceeds the canonicalization guard (use force up to 8)");

  WeakType type;
  type.f_elems = f.elements();
  type.n = n;
  if (sft) type.w = w;
  type.flow_id = flow_id;

  const RealizeContext ctx = make_context(flow, type.f_elems, w);
  std::set<std::pair<int, std::string>> seen;  // realized or failed candidates
  const int f_count = static_cast<int>(type.f_elems.size());

  std::function<void(const LStructure&)> grow = [&](const LStructure& m) {
    std::vector<LStructure> candidates;
    for (int g = 0; g < f_count; ++g)
      for (int k = 0; k < m.n; ++k)
        for (int l = 0; l < m.n; ++l)
          if (!m.e_rels.count({g, k, l})) {
            LStructure next = m;
            next.e_rels.insert({g, k, l});
            candidates.push_back(std::move(next));
          }
    for (std::uint32_t c = 1; c < (1u << m.n); ++c)
      if (!m.c_rels.count(c)) {
        LStructure next = m;
        next.c_rels.insert(c);
        candidates.push_back(std::move(next));
      }
    for (const auto& cand : candidates) {
      LStructure canon = canonicalize(cand, force);
      auto key = std::make_pair(canon.n, canon.key());
      if (!seen.insert(key).second) continue;
      const auto masks = realize_masks(ctx, canon);
      if (!masks) continue;
      std::vector<FlowSet> family;
      for (std::uint64_t mask : *masks) family.push_back(ctx.to_set(mask));
      revalidate_witness(flow, canon, family, f);
      type.structures.emplace(key, canon);
      grow(canon);
    }
  };

  for (int size = 1; size <= n; ++size) {
    LStructure empty_s;
    empty_s.n = size;
    empty_s.f_elems = type.f_elems;
    auto key = std::make_pair(size, empty_s.key());
    if (!seen.insert(key).second) continue;
    if (!realize_masks(ctx, empty_s)) continue;
    type.structures.emplace(key, empty_s);
    grow(empty_s);
  }
  return type;
}

WeakType type_meet(const std::vector<WeakType>& types) {
  if (types.empty()) throw PrecondError("type_meet needs at least one type");
  for (const auto& t : types)
    if (!t.same_resolution(types.front()))
      throw PrecondError("type_meet requires identical F and resolution");
  WeakType out = types.front();
  std::string ids = types.front().flow_id;
  for (std::size_t i = 1; i < types.size(); ++i) {
    std::map<std::pair<int, std::string>, LStructure> kept;
    for (const auto& [key, s] : out.structures)
      if (types[i].structures.count(key)) kept.emplace(key, s);
    out.structures = std::move(kept);
    ids += ";" + types[i].flow_id;
  }
  out.flow_id = "meet(" + ids + ")";
  return out;
}

namespace {

// Families of subset masks in size-ascending order, combinations of each size
// in lexicographic order. Size-ascending matters: a non-containment
// certificate usually lives at a small family size.
void for_each_family(int n_subsets, int max_size,
                     const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
  std::vector<std::uint64_t> family;
  for (int size = 1; size <= max_size; ++size) {
    std::function<bool(std::uint64_t)> rec = [&](std::uint64_t next_mask) {
      if (static_cast<int>(family.size()) == size) return visit(family);
      for (std::uint64_t m = next_mask; m <= static_cast<std::uint64_t>(n_subsets); ++m) {
        family.push_back(m);
        const bool keep = rec(m + 1);
        family.pop_back();
        if (!keep) return false;
      }
      return true;
    };
    if (!rec(1)) return;
  }
}

} // namespace

ContainmentResult check_containment(const Flow& x, const Flow& y, const SymSet& f, int n, int wx,
                                    int wy, bool force) {
  if (!flow_group(x).same_group(flow_group(y)))
    throw PrecondError("containment requires flows of the same group");
  const bool x_sft = std::holds_alternative<ZSubshift>(x);
  const bool y_sft = std::holds_alternative<ZSubshift>(y);
  if (n < 1) throw ParseError("containment needs n >= 1");
  if ((x_sft || y_sft) && n > 3 && !force)
    throw PrecondError("n > 3 with a subshift exceeds the search guard (use force)");

  ContainmentResult res;
  res.n = n;
  if (x_sft) res.wx = wx;
  if (y_sft) res.wy = wy;

  if (!x_sft && !y_sft) {
    const auto& fx = std::get<FiniteFlow>(x);
    const auto& fy = std::get<FiniteFlow>(y);
    if (fx.identical(fy)) {
      // Every family realizes its own structure; containment is immediate.
      res.verdict = ContainVerdict::Contained;
      res.exact = true;
      return res;
    }
    if (fx.size() > 6) throw PrecondError("family-side containment scan needs |X| <= 6");
    const int n_subsets = static_cast<int>(fx.full_mask());
    const int cap = std::min(n, n_subsets);
    res.exact = cap == n_subsets;
    if (cap > (force ? 8 : 6))
      throw PrecondError("containment family size exceeds the canonicalization guard");
    const RealizeContext ctx = make_context(y, f.elements(), wy);
    bool ok = true;
    for_each_family(n_subsets, cap, [&](const std::vector<std::uint64_t>& family) {
      std::vector<FlowSet> sets;
      for (std::uint64_t m : family) sets.push_back(FlowSet(m));
      const LStructure s = full_structure(x, sets, f);
      if (!realize_masks(ctx, s)) {
        res.verdict = ContainVerdict::NotContainedCertified;
        res.witness = canonicalize(s, true);
        ok = false;
        return false;
      }
      return true;
    });
    if (ok) res.verdict = ContainVerdict::Contained;
    return res;
  }

  const WeakType tx = enumerate_type(x, f, n, wx, "lhs", force);
  // Testing the maximal structures per vertex count suffices: realized sets
  // are downward closed.
  std::vector<const LStructure*> maximal;
  for (const auto& [key, m] : tx.structures) {
    bool dominated = false;
    for (const auto& [key2, m2] : tx.structures) {
      if (key2 == key || m2.n != m.n) continue;
      if (m2.relation_count() > m.relation_count() && embeds_into(m, m2)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(&m);
  }
  for (const LStructure* m : maximal) {
    if (!realizes(y, *m, wy)) {
      res.verdict = y_sft ? ContainVerdict::NotContainedAtResolution
                          : ContainVerdict::NotContainedCertified;
      res.witness = *m;
      return res;
    }
  }
  res.verdict = ContainVerdict::Contained;
  return res;
}

} // namespace flowtype
