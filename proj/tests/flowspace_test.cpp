#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flowtype/errors.hpp"
#include "flowtype/flow.hpp"

using namespace flowtype;

namespace {

ZSubshift golden_mean() { return ZSubshift(2, {"11"}); }
ZSubshift full_shift(int k = 2) { return ZSubshift(k, {}); }

ClopenSet cyl(const std::string& word, long long at) {
  return ClopenSet{at, at + static_cast<long long>(word.size()) - 1, {word}};
}

Group z_mod(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return Group::finite(table);
}

FiniteFlow cycle_flow(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
  return FiniteFlow(Group::lattice(1), n, {{Element::vec({1}), perm}});
}

// All-pairs reachability by min-plus closure, an independent check of the
// double-sweep transitivity decision.
bool strongly_connected_oracle(const ZSubshift& x) {
  const auto& succ = x.edges();
  const std::size_t n = x.vertices().size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    reach[v][v] = true;
    for (int u : succ[v]) reach[v][u] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!reach[i][j]) return false;
  return true;
}

} // namespace

TEST_CASE("golden mean graph") {
  const ZSubshift x = golden_mean();
  CHECK(x.block_length() == 2);
  CHECK(x.vertices() == std::vector<std::string>{"0", "1"});
  CHECK(x.occurs("101"));
  CHECK_FALSE(x.occurs("11"));
  CHECK_FALSE(x.occurs("0110"));
  CHECK(x.word_legal("00"));
}

TEST_CASE("forbidding everything empties the shift") {
  const ZSubshift x(2, {"0", "1"});
  CHECK(x.empty_shift());
  CHECK_FALSE(x.occurs("0"));
  CHECK(is_empty(x, cyl("0", 0)).empty);
}

TEST_CASE("one-sided legal words can still be non-extendable") {
  // "10" kills every continuation of a 1 to the right except none: after
  // forbidding "11" and "10", a 1 has no right extension and gets trimmed.
  const ZSubshift x(2, {"11", "10"});
  CHECK(x.vertices() == std::vector<std::string>{"0"});
  CHECK_FALSE(x.occurs("1"));
  CHECK(x.word_legal("1"));
}

TEST_CASE("translate shifts the window") {
  const ClopenSet c = cyl("1", 0);
  const ClopenSet moved = translate(c, 1);
  CHECK(moved.lo == 1);
  CHECK(moved.hi == 1);
  CHECK(moved.allowed == c.allowed);
  const ClopenSet back = translate(translate(c, 3), -3);
  CHECK(back.lo == c.lo);
  CHECK(back.allowed == c.allowed);
}

TEST_CASE("boolean algebra on window predicates") {
  const int k = 2;
  SUBCASE("complement unions to everything") {
    const ClopenSet c = cyl("1", 0);
    const ClopenSet all = clopen_union(k, c, clopen_complement(k, c));
    CHECK(all.allowed.size() == 2);
  }
  SUBCASE("disjoint cylinders intersect to nothing") {
    CHECK(clopen_intersect(k, cyl("0", 0), cyl("1", 0)).allowed.empty());
  }
  SUBCASE("offset cylinders align on the union window") {
    const ClopenSet both = clopen_intersect(k, cyl("1", 0), cyl("1", 1));
    CHECK(both.lo == 0);
    CHECK(both.hi == 1);
    CHECK(both.allowed == std::set<std::string>{"11"});
  }
  SUBCASE("de morgan holds semantically on a sampled pair") {
    const ZSubshift x = full_shift();
    const ClopenSet a = cyl("01", 0);
    const ClopenSet b = cyl("1", 1);
    const ClopenSet lhs = clopen_union(k, a, b);
    const ClopenSet rhs =
        clopen_complement(k, clopen_intersect(k, clopen_complement(k, a), clopen_complement(k, b)));
    CHECK(is_empty(x, clopen_minus(k, lhs, rhs)).empty);
    CHECK(is_empty(x, clopen_minus(k, rhs, lhs)).empty);
  }
}

TEST_CASE("emptiness with witnesses") {
  const ZSubshift gm = golden_mean();
  SUBCASE("a forbidden cylinder is empty") { CHECK(is_empty(gm, cyl("11", 0)).empty); }
  SUBCASE("full shift cylinder is nonempty with a periodic witness") {
    const ZSubshift x = full_shift();
    const EmptinessResult r = is_empty(x, cyl("0", 0));
    REQUIRE_FALSE(r.empty);
    REQUIRE(r.witness.has_value());
    CHECK(witness_valid(x, *r.witness));
    CHECK(witness_in(*r.witness, cyl("0", 0)));
  }
  SUBCASE("gapped ones embed in the golden mean") {
    const EmptinessResult r = is_empty(gm, clopen_intersect(2, cyl("1", 0), cyl("1", 2)));
    REQUIRE_FALSE(r.empty);
    REQUIRE(r.witness.has_value());
    CHECK(witness_valid(gm, *r.witness));
    CHECK(r.witness->at(0) == '1');
    CHECK(r.witness->at(1) == '0');
    CHECK(r.witness->at(2) == '1');
  }
  SUBCASE("emptiness is shift invariant") {
    for (long long n = -3; n <= 3; ++n) {
      const ClopenSet c = clopen_intersect(2, cyl("1", 0), cyl("1", 2));
      CHECK(is_empty(gm, translate(c, n)).empty == is_empty(gm, c).empty);
    }
  }
}

TEST_CASE("covering families") {
  const ZSubshift full = full_shift();
  const ZSubshift gm = golden_mean();
  SUBCASE("alphabet partition covers") {
    CHECK(is_cover(full, {cyl("0", 0), cyl("1", 0)}).empty);
  }
  SUBCASE("golden mean is covered once the uncovered points force 11") {
    // {x_0 = 0} plus {x_-1 = 0, x_0 = 1}: anything uncovered has x_-1 = x_0 = 1.
    CHECK(is_cover(gm, {cyl("0", 0), cyl("01", -1)}).empty);
  }
  SUBCASE("the same family misses the all-ones point of the full shift") {
    const EmptinessResult r = is_cover(full, {cyl("0", 0), cyl("01", -1)});
    REQUIRE_FALSE(r.empty);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->at(-1) == '1');
    CHECK(r.witness->at(0) == '1');
  }
  SUBCASE("cover iff complement of the union is empty") {
    const ClopenSet a = cyl("0", 0);
    const ClopenSet b = cyl("01", -1);
    const ClopenSet uni = clopen_union(2, a, b);
    CHECK(is_cover(gm, {a, b}).empty == is_empty(gm, clopen_complement(2, uni)).empty);
  }
}

TEST_CASE("U-relation disjointness on subshifts") {
  const ZSubshift gm = golden_mean();
  const Group z = Group::lattice(1);
  const FlowSet a = cyl("1", 0);
  const FlowSet b = cyl("1", 1);
  const Flow flow = gm;
  SUBCASE("diagonal intersection with identity in U") {
    CHECK_FALSE(r_u_disjoint(flow, a, a, SymSet(z, {})));
  }
  SUBCASE("adjacent ones never happen") {
    CHECK(r_u_disjoint(flow, a, b, SymSet(z, {})));
  }
  SUBCASE("shifting by one hits") {
    CHECK_FALSE(r_u_disjoint(flow, a, b, SymSet(z, {Element::vec({1})})));
  }
}

TEST_CASE("U-relation on finite flows agrees with the brute-force closure") {
  const Group z6 = z_mod(6);
  std::vector<int> perm{1, 2, 0, 4, 3, 5};  // 3-cycle plus a swap plus a fixed point
  const FiniteFlow flow(z6, 6, {{Element::finite(1), perm}});
  const Flow as_flow = flow;
  const SymSet u(z6, {Element::finite(1)});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t a = 1 + rng() % 63;
    const std::uint64_t b = 1 + rng() % 63;
    // R_U on a finite flow is just {(x, gx) : g in U}; closure adds nothing.
    bool brute_disjoint = true;
    for (const auto& g : u.elements())
      for (int p = 0; p < 6; ++p)
        if ((a & (1ull << p)) && (b & (1ull << flow.act(g)[p]))) brute_disjoint = false;
    CHECK(r_u_disjoint(as_flow, FlowSet(a), FlowSet(b), u) == brute_disjoint);
  }
}

TEST_CASE("transitivity on named examples") {
  CHECK(is_transitive(full_shift()));
  CHECK(is_transitive(golden_mean()));
  CHECK_FALSE(is_transitive(ZSubshift(2, {"01", "10"})));
  CHECK_THROWS_AS(is_transitive(ZSubshift(2, {"0", "1"})), PrecondError);
}

TEST_CASE("transitivity agrees with the reachability oracle on random SFTs") {
  std::mt19937 rng(11);
  int tested = 0;
  while (tested < 60) {
    const int alphabet = 2 + static_cast<int>(rng() % 2);
    std::vector<std::string> forbidden;
    const int n_words = static_cast<int>(rng() % 4);
    for (int i = 0; i < n_words; ++i) {
      std::string w;
      const int len = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < len; ++j) w += static_cast<char>('0' + rng() % alphabet);
      forbidden.push_back(w);
    }
    const ZSubshift x(alphabet, forbidden);
    if (x.empty_shift()) continue;
    ++tested;
    CHECK(is_transitive(x) == strongly_connected_oracle(x));
  }
}

TEST_CASE("finite flow construction and validation") {
  const Group z6 = z_mod(6);
  SUBCASE("generator must generate") {
    CHECK_THROWS_AS(FiniteFlow(z6, 2, {{Element::finite(2), {0, 1}}}), ParseError);
  }
  SUBCASE("homomorphism check rejects order mismatches") {
    // A 4-cycle cannot carry a Z/6 action through the generator 1.
    CHECK_THROWS_AS(FiniteFlow(z6, 4, {{Element::finite(1), {1, 2, 3, 0}}}), ParseError);
  }
  SUBCASE("valid 3-cycle") {
    const FiniteFlow flow(z6, 3, {{Element::finite(1), {1, 2, 0}}});
    CHECK(flow.transitive());
    CHECK(flow.act(Element::finite(2)) == std::vector<int>{2, 0, 1});
  }
  SUBCASE("lattice generators must commute") {
    CHECK_THROWS_AS(FiniteFlow(Group::lattice(2), 3,
                               {{Element::vec({1, 0}), {1, 2, 0}}, {Element::vec({0, 1}), {1, 0, 2}}}),
                    ParseError);
  }
  SUBCASE("free group actions need no relations") {
    const FiniteFlow flow(Group::free_group(2), 3,
                          {{Element::word({1}), {1, 2, 0}}, {Element::word({2}), {1, 0, 2}}});
    CHECK(flow.act(Element::word({1, 2}))[0] == flow.act(Element::word({1}))[flow.act(Element::word({2}))[0]]);
  }
}

TEST_CASE("partial sigma on the regular Z/4 flow") {
  const Group z4 = z_mod(4);
  const FiniteFlow flow(z4, 4, {{Element::finite(1), {1, 2, 3, 0}}});
  const Seminorm sigma = Seminorm::table(z4, {Rat(0), Rat(2, 5), Rat(7, 10), Rat(2, 5)});
  CHECK(partial_sigma(flow, sigma, 0, 2) == Rat(7, 10));
  CHECK(partial_sigma(flow, sigma, 0, 0) == 0);
  CHECK(partial_sigma(flow, sigma, 3, 0) == Rat(2, 5));
}

TEST_CASE("partial sigma separates orbits") {
  const Group z2 = z_mod(2);
  const FiniteFlow two_fixed(z2, 2, {{Element::finite(1), {0, 1}}});
  const Seminorm sigma = Seminorm::table(z2, {Rat(0), Rat(1, 3)});
  CHECK(partial_sigma(two_fixed, sigma, 0, 1) == 1);
  CHECK(partial_sigma(two_fixed, sigma, 0, 0) == 0);
}

TEST_CASE("partial sigma is a pseudo-metric on small flows") {
  const Group z6 = z_mod(6);
  const FiniteFlow flow(z6, 6, {{Element::finite(1), {1, 2, 0, 4, 3, 5}}});
  const Seminorm sigma = Seminorm::table(
      z6, {Rat(0), Rat(1, 2), Rat(1), Rat(1), Rat(1), Rat(1, 2)});
  for (int x = 0; x < 6; ++x) {
    CHECK(partial_sigma(flow, sigma, x, x) == 0);
    for (int y = 0; y < 6; ++y) {
      CHECK(partial_sigma(flow, sigma, x, y) == partial_sigma(flow, sigma, y, x));
      for (int z = 0; z < 6; ++z)
        CHECK(partial_sigma(flow, sigma, x, z) <=
              partial_sigma(flow, sigma, x, y) + partial_sigma(flow, sigma, y, z));
    }
  }
}

TEST_CASE("partial sigma guards") {
  const FiniteFlow zflow = cycle_flow(3);
  const Group z = Group::lattice(1);
  const Seminorm sigma = Seminorm::generated(
      z, WeightedPairSet(z, {{Element::vec({1}), Rat(1, 2)}}, Rat(1)));
  CHECK_THROWS_AS(partial_sigma(zflow, sigma, 0, 1), PrecondError);
}

TEST_CASE("witness accessor spells out the eventually periodic point") {
  PointWitness w{"01", "110", "0", 2};
  CHECK(w.at(2) == '1');
  CHECK(w.at(4) == '0');
  CHECK(w.at(5) == '0');
  CHECK(w.at(900) == '0');
  CHECK(w.at(1) == '1');  // last letter of the left cycle
  CHECK(w.at(0) == '0');
  CHECK(w.at(-1) == '1');
}
