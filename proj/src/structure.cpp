#include "flowtype/structure.hpp"

#include <algorithm>

#include "flowtype/errors.hpp"

namespace flowtype {

void LStructure::validate() const {
  if (n < 1) throw ParseError("structure needs at least one vertex");
  for (const auto& r : e_rels) {
    if (r.g < 0 || r.g >= static_cast<int>(f_elems.size()))
      throw ParseError("E relation refers to a symbol outside F");
    if (r.k < 0 || r.k >= n || r.l < 0 || r.l >= n)
      throw ParseError("E relation vertex out of range");
  }
  for (std::uint32_t mask : c_rels) {
    if (mask == 0) throw ParseError("C relation must be a nonempty subset");
    if (mask >> n) throw ParseError("C relation vertex out of range");
  }
}

std::string LStructure::key() const {
  std::string s = std::to_string(n);
  s += '|';
  for (const auto& r : e_rels) {
    s += std::to_string(r.g);
    s += ',';
    s += std::to_string(r.k);
    s += ',';
    s += std::to_string(r.l);
    s += ';';
  }
  s += '|';
  for (std::uint32_t mask : c_rels) {
    s += std::to_string(mask);
    s += ';';
  }
  return s;
}

LStructure LStructure::relabel(const std::vector<int>& perm) const {
  LStructure out;
  out.n = n;
  out.f_elems = f_elems;
  for (const auto& r : e_rels) out.e_rels.insert({r.g, perm[r.k], perm[r.l]});
  for (std::uint32_t mask : c_rels) {
    std::uint32_t moved = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) moved |= 1u << perm[i];
    out.c_rels.insert(moved);
  }
  return out;
}

LStructure canonicalize(const LStructure& m, bool force) {
  const int limit = force ? 8 : 6;
  if (m.n > limit)
    throw PrecondError("canonicalize: vertex count " + std::to_string(m.n) + " exceeds the guard");
  std::vector<int> perm(m.n);
  for (int i = 0; i < m.n; ++i) perm[i] = i;
  LStructure best = m;
  std::string best_key = m.key();
  while (std::next_permutation(perm.begin(), perm.end())) {
    LStructure cand = m.relabel(perm);
    std::string cand_key = cand.key();
    if (cand_key < best_key) {
      best = std::move(cand);
      best_key = std::move(cand_key);
    }
  }
  return best;
}

namespace {

bool embeds_with(const LStructure& m, const LStructure& target, std::vector<int>& perm) {
  for (const auto& r : m.e_rels)
    if (!target.e_rels.count({r.g, perm[r.k], perm[r.l]})) return false;
  for (std::uint32_t mask : m.c_rels) {
    std::uint32_t moved = 0;
    for (int i = 0; i < m.n; ++i)
      if (mask & (1u << i)) moved |= 1u << perm[i];
    if (!target.c_rels.count(moved)) return false;
  }
  return true;
}

} // namespace

bool embeds_into(const LStructure& m, const LStructure& target) {
  if (m.n != target.n || m.f_elems != target.f_elems) return false;
  if (m.e_rels.size() > target.e_rels.size() || m.c_rels.size() > target.c_rels.size())
    return false;
  std::vector<int> perm(m.n);
  for (int i = 0; i < m.n; ++i) perm[i] = i;
  do {
    if (embeds_with(m, target, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

} // namespace flowtype
