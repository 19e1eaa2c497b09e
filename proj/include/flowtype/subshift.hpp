#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace flowtype {

// Window predicate on a subshift: {x : x[lo..hi] in allowed}. Words are
// digit strings over the alphabet 0..alphabet-1; their length is hi-lo+1.
struct ClopenSet {
  long long lo = 0;
  long long hi = 0;
  std::set<std::string> allowed;

  long long length() const { return hi - lo + 1; }
};

ClopenSet translate(const ClopenSet& c, long long n);

// Window-aligned boolean algebra. Both operands are freely extended to the
// union window first; complement is taken within all words of that length.
ClopenSet clopen_union(int alphabet, const ClopenSet& a, const ClopenSet& b);
ClopenSet clopen_intersect(int alphabet, const ClopenSet& a, const ClopenSet& b);
ClopenSet clopen_minus(int alphabet, const ClopenSet& a, const ClopenSet& b);
ClopenSet clopen_complement(int alphabet, const ClopenSet& a);
ClopenSet align_to_window(int alphabet, const ClopenSet& a, long long lo, long long hi);

// Certificate of a point: the eventually periodic configuration
// ...LLL C RRR... with center[0] sitting at coordinate center_start.
struct PointWitness {
  std::string left_cycle;
  std::string center;
  std::string right_cycle;
  long long center_start = 0;

  char at(long long i) const;
};

// One-dimensional subshift of finite type over alphabet 0..alphabet-1 given by
// finitely many forbidden words. Construction builds the de Bruijn-style graph
// on legal (m-1)-blocks and trims it to the essential subgraph (vertices on
// bi-infinite paths) by alternately dropping sources and sinks.
class ZSubshift {
 public:
  ZSubshift(int alphabet, std::vector<std::string> forbidden);

  int alphabet() const { return alphabet_; }
  const std::vector<std::string>& forbidden() const { return forbidden_; }
  int block_length() const { return m_; }
  bool empty_shift() const { return vertices_.empty(); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& edges() const { return succ_; }

  bool word_legal(const std::string& w) const;   // no forbidden factor
  bool occurs(const std::string& w) const;       // appears in some point of X

  // occurs() with '?' wildcards, via a viable-vertex sweep over the graph.
  bool occurs_pattern(const std::string& pattern) const;

  // All words of the given length that occur in X, sorted.
  std::vector<std::string> extendable_words(int length) const;

  // An eventually periodic point containing `w` with w[0] at coordinate `at`.
  PointWitness witness_for(const std::string& w, long long at) const;

 private:
  int vertex_index(const std::string& v) const;

  int alphabet_;
  std::vector<std::string> forbidden_;
  int m_;                                  // block length, max(2, longest forbidden)
  std::vector<std::string> vertices_;      // essential (m-1)-blocks, sorted
  std::map<std::string, int> vertex_ids_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
};

struct EmptinessResult {
  bool empty = true;
  std::optional<PointWitness> witness;
};

EmptinessResult is_empty(const ZSubshift& x, const ClopenSet& c);
EmptinessResult is_cover(const ZSubshift& x, const std::vector<ClopenSet>& family);

// Topological transitivity = strong connectivity of the essential graph,
// decided by a forward and a backward reachability sweep.
bool is_transitive(const ZSubshift& x);

bool witness_valid(const ZSubshift& x, const PointWitness& w);
bool witness_in(const PointWitness& w, const ClopenSet& c);

} // namespace flowtype
