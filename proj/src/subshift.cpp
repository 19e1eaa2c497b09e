#include "flowtype/subshift.hpp"

#include <algorithm>
#include <functional>

#include "flowtype/errors.hpp"

namespace flowtype {

namespace {

constexpr long long kMaxWindowWords = 1 << 21;

void check_word_chars(int alphabet, const std::string& w) {
  for (char c : w)
    if (c < '0' || c >= '0' + alphabet)
      throw ParseError("word '" + w + "' has a symbol outside the alphabet");
}

long long ipow(long long base, long long exp) {
  long long r = 1;
  while (exp-- > 0) {
    r *= base;
    if (r > kMaxWindowWords) return kMaxWindowWords + 1;
  }
  return r;
}

} // namespace

ClopenSet translate(const ClopenSet& c, long long n) {
  return ClopenSet{c.lo + n, c.hi + n, c.allowed};
}

ClopenSet align_to_window(int alphabet, const ClopenSet& a, long long lo, long long hi) {
  if (lo > a.lo || hi < a.hi) throw PrecondError("alignment window must contain the set window");
  if (ipow(alphabet, hi - lo + 1) > kMaxWindowWords)
    throw PrecondError("aligned window is too large");
  const long long left = a.lo - lo;
  const long long right = hi - a.hi;
  std::set<std::string> padded = a.allowed;
  for (long long i = 0; i < left; ++i) {
    std::set<std::string> next;
    for (const auto& w : padded)
      for (int s = 0; s < alphabet; ++s) next.insert(std::string(1, static_cast<char>('0' + s)) + w);
    padded = std::move(next);
  }
  for (long long i = 0; i < right; ++i) {
    std::set<std::string> next;
    for (const auto& w : padded)
      for (int s = 0; s < alphabet; ++s) next.insert(w + static_cast<char>('0' + s));
    padded = std::move(next);
  }
  return ClopenSet{lo, hi, std::move(padded)};
}

namespace {

std::pair<ClopenSet, ClopenSet> aligned(int alphabet, const ClopenSet& a, const ClopenSet& b) {
  const long long lo = std::min(a.lo, b.lo);
  const long long hi = std::max(a.hi, b.hi);
  return {align_to_window(alphabet, a, lo, hi), align_to_window(alphabet, b, lo, hi)};
}

std::set<std::string> all_words(int alphabet, long long length) {
  if (ipow(alphabet, length) > kMaxWindowWords) throw PrecondError("window is too large");
  std::set<std::string> out;
  std::string w(static_cast<std::size_t>(length), '0');
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.size()) {
      out.insert(w);
      return;
    }
    for (int s = 0; s < alphabet; ++s) {
      w[i] = static_cast<char>('0' + s);
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

} // namespace

ClopenSet clopen_union(int alphabet, const ClopenSet& a, const ClopenSet& b) {
  auto [x, y] = aligned(alphabet, a, b);
  x.allowed.insert(y.allowed.begin(), y.allowed.end());
  return x;
}

ClopenSet clopen_intersect(int alphabet, const ClopenSet& a, const ClopenSet& b) {
  auto [x, y] = aligned(alphabet, a, b);
  std::set<std::string> out;
  std::set_intersection(x.allowed.begin(), x.allowed.end(), y.allowed.begin(), y.allowed.end(),
                        std::inserter(out, out.begin()));
  return ClopenSet{x.lo, x.hi, std::move(out)};
}

ClopenSet clopen_minus(int alphabet, const ClopenSet& a, const ClopenSet& b) {
  auto [x, y] = aligned(alphabet, a, b);
  std::set<std::string> out;
  std::set_difference(x.allowed.begin(), x.allowed.end(), y.allowed.begin(), y.allowed.end(),
                      std::inserter(out, out.begin()));
  return ClopenSet{x.lo, x.hi, std::move(out)};
}

ClopenSet clopen_complement(int alphabet, const ClopenSet& a) {
  std::set<std::string> out = all_words(alphabet, a.length());
  for (const auto& w : a.allowed) out.erase(w);
  return ClopenSet{a.lo, a.hi, std::move(out)};
}

char PointWitness::at(long long i) const {
  const long long clen = static_cast<long long>(center.size());
  if (i >= center_start && i < center_start + clen)
    return center[static_cast<std::size_t>(i - center_start)];
  if (i >= center_start + clen) {
    const long long d = i - center_start - clen;
    return right_cycle[static_cast<std::size_t>(d % static_cast<long long>(right_cycle.size()))];
  }
  const long long d = center_start - i;  // >= 1
  const long long len = static_cast<long long>(left_cycle.size());
  return left_cycle[static_cast<std::size_t>(len - 1 - ((d - 1) % len))];
}

ZSubshift::ZSubshift(int alphabet, std::vector<std::string> forbidden)
    : alphabet_(alphabet), forbidden_(std::move(forbidden)) {
  if (alphabet_ < 1 || alphabet_ > 10) throw ParseError("alphabet size must be in 1..10");
  std::size_t longest = 0;
  for (const auto& f : forbidden_) {
    if (f.empty()) throw ParseError("forbidden words must be nonempty");
    check_word_chars(alphabet_, f);
    longest = std::max(longest, f.size());
  }
  std::sort(forbidden_.begin(), forbidden_.end());
  forbidden_.erase(std::unique(forbidden_.begin(), forbidden_.end()), forbidden_.end());
  m_ = std::max<int>(2, static_cast<int>(longest));

  std::vector<std::string> verts;
  for (const auto& w : all_words(alphabet_, m_ - 1))
    if (word_legal(w)) verts.push_back(w);

  // Edge u -> v iff the windows overlap and the merged m-block is legal.
  auto edge_ok = [&](const std::string& u, const std::string& v) {
    if (u.substr(1) != v.substr(0, v.size() - 1)) return false;
    return word_legal(u + v.back());
  };

  std::vector<bool> alive(verts.size(), true);
  std::vector<std::vector<int>> succ(verts.size()), pred(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (edge_ok(verts[i], verts[j])) {
        succ[i].push_back(static_cast<int>(j));
        pred[j].push_back(static_cast<int>(i));
      }

  // Trim to the essential subgraph: drop sources and sinks until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (!alive[i]) continue;
      int out_deg = 0, in_deg = 0;
      for (int j : succ[i]) out_deg += alive[j] ? 1 : 0;
      for (int j : pred[i]) in_deg += alive[j] ? 1 : 0;
      if (out_deg == 0 || in_deg == 0) {
        alive[i] = false;
        changed = true;
      }
    }
  }

  for (std::size_t i = 0; i < verts.size(); ++i)
    if (alive[i]) {
      vertex_ids_[verts[i]] = static_cast<int>(vertices_.size());
      vertices_.push_back(verts[i]);
    }
  succ_.resize(vertices_.size());
  pred_.resize(vertices_.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!alive[i]) continue;
    const int a = vertex_ids_.at(verts[i]);
    for (int j : succ[i])
      if (alive[j]) {
        const int b = vertex_ids_.at(verts[j]);
        succ_[a].push_back(b);
        pred_[b].push_back(a);
      }
  }
  for (auto& v : succ_) std::sort(v.begin(), v.end());
  for (auto& v : pred_) std::sort(v.begin(), v.end());
}

bool ZSubshift::word_legal(const std::string& w) const {
  for (const auto& f : forbidden_)
    if (w.find(f) != std::string::npos) return false;
  return true;
}

int ZSubshift::vertex_index(const std::string& v) const {
  auto it = vertex_ids_.find(v);
  return it == vertex_ids_.end() ? -1 : it->second;
}

bool ZSubshift::occurs(const std::string& w) const {
  for (char c : w)
    if (c < '0' || c >= '0' + alphabet_) return false;
  if (empty_shift()) return false;
  const std::size_t block = static_cast<std::size_t>(m_ - 1);
  if (w.size() < block) {
    for (const auto& v : vertices_)
      if (v.find(w) != std::string::npos) return true;
    return false;
  }
  int prev = vertex_index(w.substr(0, block));
  if (prev < 0) return false;
  for (std::size_t i = 1; i + block <= w.size(); ++i) {
    const int cur = vertex_index(w.substr(i, block));
    if (cur < 0) return false;
    if (!std::binary_search(succ_[prev].begin(), succ_[prev].end(), cur)) return false;
    prev = cur;
  }
  return true;
}

bool ZSubshift::occurs_pattern(const std::string& pattern) const {
  if (empty_shift()) return false;
  for (char c : pattern)
    if (c != '?' && (c < '0' || c >= '0' + alphabet_)) return false;
  const std::size_t block = static_cast<std::size_t>(m_ - 1);
  std::string p = pattern;
  while (p.size() < block) p += '?';
  auto matches = [&](const std::string& v, std::size_t off) {
    for (std::size_t i = 0; i < block; ++i)
      if (p[off + i] != '?' && p[off + i] != v[i]) return false;
    return true;
  };
  std::vector<char> viable(vertices_.size(), 0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) viable[i] = matches(vertices_[i], 0) ? 1 : 0;
  for (std::size_t off = 1; off + block <= p.size(); ++off) {
    std::vector<char> next(vertices_.size(), 0);
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (!viable[v]) continue;
      for (int u : succ_[v])
        if (!next[u] && matches(vertices_[u], off)) next[u] = 1;
    }
    viable = std::move(next);
  }
  return std::any_of(viable.begin(), viable.end(), [](char c) { return c != 0; });
}

std::vector<std::string> ZSubshift::extendable_words(int length) const {
  std::vector<std::string> out;
  for (const auto& w : all_words(alphabet_, length))
    if (occurs(w)) out.push_back(w);
  return out;
}

PointWitness ZSubshift::witness_for(const std::string& w, long long at) const {
  if (!occurs(w)) throw PrecondError("witness requested for a word that does not occur");
  const std::size_t block = static_cast<std::size_t>(m_ - 1);
  std::string center = w;
  long long start = at;
  if (center.size() < block) {
    for (const auto& v : vertices_) {
      const auto pos = v.find(center);
      if (pos != std::string::npos) {
        center = v;
        start = at - static_cast<long long>(pos);
        break;
      }
    }
  }

  // Walk backwards taking the least predecessor until a vertex repeats; the
  // repeated segment becomes the left cycle, the rest is absorbed into the
  // center. Then the same forwards.
  const int first = vertex_index(center.substr(0, block));
  std::vector<int> back_path{first};
  std::string prepended;  // letters in prepend order (nearest to center first)
  while (true) {
    const int cur = back_path.back();
    const int nxt = pred_[cur].front();
    prepended += vertices_[nxt][0];
    const bool repeat = std::find(back_path.begin(), back_path.end(), nxt) != back_path.end();
    back_path.push_back(nxt);
    if (repeat) break;
  }
  const int cycle_entry = back_path.back();
  std::size_t t = 0;
  while (back_path[t] != cycle_entry) ++t;
  // prepended[0..t-1] is the stem; prepended[t..] spells the cycle outward.
  std::string stem = prepended.substr(0, t);
  std::string left_cycle = prepended.substr(t);
  std::reverse(left_cycle.begin(), left_cycle.end());
  std::string stem_rev(stem.rbegin(), stem.rend());
  center = stem_rev + center;
  start -= static_cast<long long>(stem.size());

  const int last = vertex_index(center.substr(center.size() - block));
  std::vector<int> fwd_path{last};
  std::string appended;
  while (true) {
    const int cur = fwd_path.back();
    const int nxt = succ_[cur].front();
    appended += vertices_[nxt].back();
    const bool repeat = std::find(fwd_path.begin(), fwd_path.end(), nxt) != fwd_path.end();
    fwd_path.push_back(nxt);
    if (repeat) break;
  }
  const int fwd_entry = fwd_path.back();
  std::size_t s = 0;
  while (fwd_path[s] != fwd_entry) ++s;
  center += appended.substr(0, s);
  const std::string right_cycle = appended.substr(s);

  PointWitness out{left_cycle, center, right_cycle, start};
  if (!witness_valid(*this, out)) throw PrecondError("internal error: invalid witness constructed");
  return out;
}

EmptinessResult is_empty(const ZSubshift& x, const ClopenSet& c) {
  for (const auto& w : c.allowed) {
    if (static_cast<long long>(w.size()) != c.length())
      throw ParseError("allowed word length does not match the window");
    if (x.occurs(w)) {
      EmptinessResult r;
      r.empty = false;
      r.witness = x.witness_for(w, c.lo);
      return r;
    }
  }
  return EmptinessResult{};
}

EmptinessResult is_cover(const ZSubshift& x, const std::vector<ClopenSet>& family) {
  long long lo = 0, hi = 0;
  if (!family.empty()) {
    lo = family.front().lo;
    hi = family.front().hi;
    for (const auto& c : family) {
      lo = std::min(lo, c.lo);
      hi = std::max(hi, c.hi);
    }
  }
  ClopenSet uni{lo, hi, {}};
  for (const auto& c : family) uni = clopen_union(x.alphabet(), uni, c);
  // Cover iff the complement misses every point of X.
  EmptinessResult gap = is_empty(x, clopen_complement(x.alphabet(), uni));
  EmptinessResult out;
  out.empty = gap.empty;   // empty == covered
  out.witness = gap.witness;
  return out;
}

bool is_transitive(const ZSubshift& x) {
  if (x.empty_shift()) throw PrecondError("transitivity is undefined for the empty subshift");
  const auto& succ = x.edges();
  const std::size_t n = x.vertices().size();
  auto sweep = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n; ++u) {
        const bool edge = forward
                              ? std::binary_search(succ[v].begin(), succ[v].end(), static_cast<int>(u))
                              : std::binary_search(succ[u].begin(), succ[u].end(), v);
        if (edge && !seen[u]) {
          seen[u] = true;
          stack.push_back(static_cast<int>(u));
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return sweep(true) && sweep(false);
}

bool witness_valid(const ZSubshift& x, const PointWitness& w) {
  if (w.left_cycle.empty() || w.center.empty() || w.right_cycle.empty()) return false;
  const long long span =
      3 * static_cast<long long>(w.left_cycle.size() + w.center.size() + w.right_cycle.size());
  const long long lo = w.center_start - span;
  const long long hi = w.center_start + static_cast<long long>(w.center.size()) + span;
  std::string window;
  for (long long i = lo; i <= hi; ++i) window += w.at(i);
  return x.word_legal(window);
}

bool witness_in(const PointWitness& w, const ClopenSet& c) {
  std::string seg;
  for (long long i = c.lo; i <= c.hi; ++i) seg += w.at(i);
  return c.allowed.count(seg) > 0;
}

} // namespace flowtype
