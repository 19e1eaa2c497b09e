#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace flowtype {

enum class GroupKind { Finite, Free, Lattice };

// One element of whichever group kind owns it.
//   Finite:  index into the multiplication table.
//   Free:    freely reduced word of signed 1-based generator ids (+1 = a, -1 = a^-1, ...).
//   Lattice: integer vector of length d.
class Element {
 public:
  Element() : rep_(0) {}
  static Element finite(int index) { return Element(index); }
  static Element word(std::vector<int> letters) { return Element(std::move(letters)); }
  static Element vec(std::vector<long long> coords) { return Element(std::move(coords)); }

  int index() const { return std::get<int>(rep_); }
  const std::vector<int>& letters() const { return std::get<std::vector<int>>(rep_); }
  const std::vector<long long>& coords() const { return std::get<std::vector<long long>>(rep_); }

  bool operator==(const Element& other) const { return rep_ == other.rep_; }
  bool operator!=(const Element& other) const { return rep_ != other.rep_; }
  bool operator<(const Element& other) const;

 private:
  explicit Element(int index) : rep_(index) {}
  explicit Element(std::vector<int> letters) : rep_(std::move(letters)) {}
  explicit Element(std::vector<long long> coords) : rep_(std::move(coords)) {}

  std::variant<int, std::vector<int>, std::vector<long long>> rep_;
};

// Discrete groups with decidable word problem and exact canonical forms:
// finite groups by multiplication table (identity pinned to index 0), free
// groups of finite rank, and integer lattices Z^d.
class Group {
 public:
  static Group finite(std::vector<std::vector<int>> table);
  static Group free_group(int rank);
  static Group lattice(int dimension);

  GroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == GroupKind::Finite; }
  int order() const;      // finite only
  int rank() const { return rank_; }
  int dimension() const { return dim_; }

  Element identity() const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;

  bool valid(const Element& a) const;
  void require_valid(const Element& a) const;  // throws ParseError

  // All elements, in index order. Finite groups only.
  std::vector<Element> elements() const;

  // Compact text form: finite "3"; free "abA" with "e" for the identity;
  // lattice "-2" (d = 1) or "1,-2" (d >= 2).
  std::string element_to_string(const Element& a) const;
  Element element_from_string(const std::string& text) const;

  bool same_group(const Group& other) const;

 private:
  Group() = default;

  GroupKind kind_ = GroupKind::Lattice;
  std::vector<std::vector<int>> table_;  // finite
  std::vector<int> inverse_;             // finite, precomputed
  int rank_ = 0;                         // free
  int dim_ = 0;                          // lattice
};

// Finite symmetric subset containing the identity. Inputs are normalized:
// the identity is inserted and inverses are closed over on construction.
class SymSet {
 public:
  SymSet() = default;
  SymSet(const Group& group, std::vector<Element> elements);

  const std::vector<Element>& elements() const { return elems_; }
  bool contains(const Element& a) const;
  std::size_t size() const { return elems_.size(); }

 private:
  std::vector<Element> elems_;  // sorted, deduplicated
};

// All products of at most `radius` factors from `gens` (the identity included),
// as a sorted deduplicated vector.
std::vector<Element> ball(const Group& group, const SymSet& gens, int radius);

} // namespace flowtype
