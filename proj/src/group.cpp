#include "flowtype/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "flowtype/errors.hpp"

namespace flowtype {

bool Element::operator<(const Element& other) const {
  if (rep_.index() != other.rep_.index()) return rep_.index() < other.rep_.index();
  switch (rep_.index()) {
    case 0:
      return std::get<int>(rep_) < std::get<int>(other.rep_);
    case 1: {
      const auto& a = std::get<std::vector<int>>(rep_);
      const auto& b = std::get<std::vector<int>>(other.rep_);
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    }
    default:
      return std::get<std::vector<long long>>(rep_) < std::get<std::vector<long long>>(other.rep_);
  }
}

Group Group::finite(std::vector<std::vector<int>> table) {
  const int k = static_cast<int>(table.size());
  if (k == 0) throw ParseError("finite group table is empty");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != k) throw ParseError("finite group table is not square");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (table[i][j] < 0 || table[i][j] >= k) throw ParseError("finite group table entry out of range");
  // Identity pinned to index 0.
  for (int i = 0; i < k; ++i)
    if (table[0][i] != i || table[i][0] != i)
      throw ParseError("finite group table: index 0 is not an identity");
  // Every row and column a permutation.
  for (int i = 0; i < k; ++i) {
    std::vector<bool> row_hit(k, false), col_hit(k, false);
    for (int j = 0; j < k; ++j) {
      if (row_hit[table[i][j]]) throw ParseError("finite group table: row is not a permutation");
      row_hit[table[i][j]] = true;
      if (col_hit[table[j][i]]) throw ParseError("finite group table: column is not a permutation");
      col_hit[table[j][i]] = true;
    }
  }
  // Associativity, checked exhaustively on load.
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ParseError("finite group table is not associative");

  Group g;
  g.kind_ = GroupKind::Finite;
  g.table_ = std::move(table);
  g.inverse_.assign(k, -1);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (g.table_[a][b] == 0) g.inverse_[a] = b;
  return g;
}

Group Group::free_group(int rank) {
  if (rank < 1 || rank > 26) throw ParseError("free group rank must be in 1..26");
  Group g;
  g.kind_ = GroupKind::Free;
  g.rank_ = rank;
  return g;
}

Group Group::lattice(int dimension) {
  if (dimension < 1) throw ParseError("lattice dimension must be positive");
  Group g;
  g.kind_ = GroupKind::Lattice;
  g.dim_ = dimension;
  return g;
}

int Group::order() const {
  if (kind_ != GroupKind::Finite) throw PrecondError("group is not finite");
  return static_cast<int>(table_.size());
}

Element Group::identity() const {
  switch (kind_) {
    case GroupKind::Finite:
      return Element::finite(0);
    case GroupKind::Free:
      return Element::word({});
    default:
      return Element::vec(std::vector<long long>(dim_, 0));
  }
}

namespace {

// Concatenate then cancel adjacent x x^-1 pairs across the seam.
std::vector<int> reduce_concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  for (int letter : b) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

} // namespace

Element Group::mul(const Element& a, const Element& b) const {
  require_valid(a);
  require_valid(b);
  switch (kind_) {
    case GroupKind::Finite:
      return Element::finite(table_[a.index()][b.index()]);
    case GroupKind::Free:
      return Element::word(reduce_concat(a.letters(), b.letters()));
    default: {
      std::vector<long long> out(dim_);
      for (int i = 0; i < dim_; ++i) out[i] = a.coords()[i] + b.coords()[i];
      return Element::vec(std::move(out));
    }
  }
}

Element Group::inv(const Element& a) const {
  require_valid(a);
  switch (kind_) {
    case GroupKind::Finite:
      return Element::finite(inverse_[a.index()]);
    case GroupKind::Free: {
      std::vector<int> out(a.letters().rbegin(), a.letters().rend());
      for (int& letter : out) letter = -letter;
      return Element::word(std::move(out));
    }
    default: {
      std::vector<long long> out(dim_);
      for (int i = 0; i < dim_; ++i) out[i] = -a.coords()[i];
      return Element::vec(std::move(out));
    }
  }
}

bool Group::valid(const Element& a) const {
  try {
    switch (kind_) {
      case GroupKind::Finite: {
        const int i = a.index();
        return i >= 0 && i < static_cast<int>(table_.size());
      }
      case GroupKind::Free: {
        const auto& w = a.letters();
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i] == 0 || std::abs(w[i]) > rank_) return false;
          if (i + 1 < w.size() && w[i + 1] == -w[i]) return false;  // not freely reduced
        }
        return true;
      }
      default:
        return static_cast<int>(a.coords().size()) == dim_;
    }
  } catch (const std::bad_variant_access&) {
    return false;
  }
}

void Group::require_valid(const Element& a) const {
  if (!valid(a)) throw ParseError("element is not valid for this group");
}

std::vector<Element> Group::elements() const {
  const int k = order();
  std::vector<Element> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) out.push_back(Element::finite(i));
  return out;
}

std::string Group::element_to_string(const Element& a) const {
  require_valid(a);
  switch (kind_) {
    case GroupKind::Finite:
      return std::to_string(a.index());
    case GroupKind::Free: {
      if (a.letters().empty()) return "e";
      std::string s;
      for (int letter : a.letters())
        s += letter > 0 ? static_cast<char>('a' + letter - 1) : static_cast<char>('A' - letter - 1);
      return s;
    }
    default: {
      std::string s;
      for (int i = 0; i < dim_; ++i) {
        if (i) s += ',';
        s += std::to_string(a.coords()[i]);
      }
      return s;
    }
  }
}

Element Group::element_from_string(const std::string& text) const {
  switch (kind_) {
    case GroupKind::Finite: {
      try {
        std::size_t used = 0;
        const int i = std::stoi(text, &used);
        if (used != text.size()) throw ParseError("bad finite group element '" + text + "'");
        Element e = Element::finite(i);
        require_valid(e);
        return e;
      } catch (const std::exception&) {
        throw ParseError("bad finite group element '" + text + "'");
      }
    }
    case GroupKind::Free: {
      if (text == "e" || text == "") return identity();
      std::vector<int> letters;
      for (char c : text) {
        int letter = 0;
        if (c >= 'a' && c <= 'z') letter = c - 'a' + 1;
        else if (c >= 'A' && c <= 'Z') letter = -(c - 'A' + 1);
        else throw ParseError("bad free group word '" + text + "'");
        if (std::abs(letter) > rank_) throw ParseError("generator out of rank in '" + text + "'");
        if (!letters.empty() && letters.back() == -letter)
          letters.pop_back();
        else
          letters.push_back(letter);
      }
      return Element::word(std::move(letters));
    }
    default: {
      std::vector<long long> coords;
      std::size_t pos = 0;
      while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
          std::size_t used = 0;
          coords.push_back(std::stoll(tok, &used));
          if (used != tok.size()) throw ParseError("");
        } catch (const std::exception&) {
          throw ParseError("bad lattice element '" + text + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      Element e = Element::vec(std::move(coords));
      if (!valid(e)) throw ParseError("lattice element '" + text + "' has wrong dimension");
      return e;
    }
  }
}

bool Group::same_group(const Group& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case GroupKind::Finite:
      return table_ == other.table_;
    case GroupKind::Free:
      return rank_ == other.rank_;
    default:
      return dim_ == other.dim_;
  }
}

SymSet::SymSet(const Group& group, std::vector<Element> elements) {
  std::set<Element> acc;
  acc.insert(group.identity());
  for (const auto& e : elements) {
    group.require_valid(e);
    acc.insert(e);
    acc.insert(group.inv(e));
  }
  elems_.assign(acc.begin(), acc.end());
}

bool SymSet::contains(const Element& a) const {
  return std::binary_search(elems_.begin(), elems_.end(), a);
}

std::vector<Element> ball(const Group& group, const SymSet& gens, int radius) {
  if (radius < 0) throw PrecondError("ball radius must be nonnegative");
  std::set<Element> seen;
  seen.insert(group.identity());
  std::vector<Element> frontier(seen.begin(), seen.end());
  for (int step = 0; step < radius; ++step) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& g : gens.elements()) {
        Element y = group.mul(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

} // namespace flowtype
