#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "flowtype/errors.hpp"
#include "flowtype/group.hpp"
#include "flowtype/json_io.hpp"

using namespace flowtype;

namespace {

Group z_mod(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return Group::finite(table);
}

// Independent oracle: products of at most `radius` generators, by plain
// breadth-first enumeration with no deduplication shortcuts.
std::set<Element> brute_ball(const Group& g, const std::vector<Element>& gens, int radius) {
  std::set<Element> out{g.identity()};
  for (int step = 0; step < radius; ++step) {
    std::set<Element> next = out;
    for (const auto& x : out)
      for (const auto& s : gens) next.insert(g.mul(x, s));
    out = std::move(next);
  }
  return out;
}

} // namespace

TEST_CASE("free group multiplication reduces words") {
  const Group f2 = Group::free_group(2);
  const Element ab = f2.element_from_string("ab");
  const Element ba_inv = f2.element_from_string("BA");
  CHECK(f2.mul(ab, ba_inv) == f2.identity());
  CHECK(f2.element_to_string(f2.mul(ab, ba_inv)) == "e");
  CHECK(f2.mul(f2.element_from_string("abB"), f2.identity()) == f2.element_from_string("a"));
}

TEST_CASE("lattice multiplication is vector addition") {
  const Group z2 = Group::lattice(2);
  const Element a = z2.element_from_string("1,2");
  const Element b = z2.element_from_string("3,-1");
  CHECK(z2.element_to_string(z2.mul(a, b)) == "4,1");
}

TEST_CASE("finite group arithmetic on Z/4") {
  const Group z4 = z_mod(4);
  CHECK(z4.mul(Element::finite(3), Element::finite(2)) == Element::finite(1));
  CHECK(z4.inv(Element::finite(3)) == Element::finite(1));
}

TEST_CASE("inverses") {
  const Group f2 = Group::free_group(2);
  CHECK(f2.element_to_string(f2.inv(f2.element_from_string("ab"))) == "BA");
  const Group z2 = Group::lattice(2);
  CHECK(z2.element_to_string(z2.inv(z2.element_from_string("2,-3"))) == "-2,3");
}

TEST_CASE("bad finite tables are rejected") {
  CHECK_THROWS_AS(Group::finite({{0, 1}, {1, 1}}), ParseError);          // row not a permutation
  CHECK_THROWS_AS(Group::finite({{1, 0}, {0, 1}}), ParseError);          // identity not index 0
  const Group z4 = z_mod(4);
  CHECK_THROWS_AS(z4.element_from_string("7"), ParseError);
  CHECK_THROWS_AS(z4.element_from_string("x"), ParseError);
}

TEST_CASE("free words must stay within the rank") {
  const Group f1 = Group::free_group(1);
  CHECK_THROWS_AS(f1.element_from_string("b"), ParseError);
  CHECK(f1.element_from_string("aA") == f1.identity());
}

TEST_CASE("ball sizes on the free group") {
  const Group f2 = Group::free_group(2);
  const SymSet gens(f2, {f2.element_from_string("a"), f2.element_from_string("b")});
  CHECK(ball(f2, gens, 0).size() == 1);
  CHECK(ball(f2, gens, 1).size() == 5);
  CHECK(ball(f2, gens, 2).size() == 17);
  CHECK(ball(f2, gens, 9).size() == 39365);
}

TEST_CASE("ball on Z/6 saturates") {
  const Group z6 = z_mod(6);
  const SymSet gens(z6, {Element::finite(1)});
  CHECK(ball(z6, gens, 3).size() == 6);
}

TEST_CASE("ball agrees with the brute-force product oracle") {
  const Group f2 = Group::free_group(2);
  const SymSet gens(f2, {f2.element_from_string("a"), f2.element_from_string("b")});
  for (int r = 0; r <= 3; ++r) {
    const auto fast = ball(f2, gens, r);
    const auto slow = brute_ball(f2, gens.elements(), r);
    CHECK(std::set<Element>(fast.begin(), fast.end()) == slow);
  }
}

TEST_CASE("ball composition law at small radii") {
  const Group z6 = z_mod(6);
  const SymSet gens(z6, {Element::finite(1)});
  for (int r1 = 0; r1 <= 2; ++r1)
    for (int r2 = 0; r2 <= 2; ++r2) {
      const auto big = ball(z6, gens, r1 + r2);
      std::set<Element> products;
      for (const auto& x : ball(z6, gens, r1))
        for (const auto& y : ball(z6, gens, r2)) products.insert(z6.mul(x, y));
      CHECK(std::set<Element>(big.begin(), big.end()) == products);
    }
}

TEST_CASE("associativity sampled over small balls") {
  const Group f2 = Group::free_group(2);
  const SymSet gens(f2, {f2.element_from_string("a"), f2.element_from_string("b")});
  const auto elems = ball(f2, gens, 2);
  for (const auto& a : elems)
    for (const auto& b : elems) {
      const Element left = f2.mul(f2.mul(a, b), elems[3]);
      const Element right = f2.mul(a, f2.mul(b, elems[3]));
      CHECK(left == right);
      CHECK(f2.mul(a, f2.inv(a)) == f2.identity());
      CHECK(f2.inv(f2.inv(a)) == a);
    }
}

TEST_CASE("symmetric sets normalize to contain identity and inverses") {
  const Group f2 = Group::free_group(2);
  const SymSet s(f2, {f2.element_from_string("ab")});
  CHECK(s.contains(f2.identity()));
  CHECK(s.contains(f2.element_from_string("BA")));
  CHECK(s.size() == 3);
}

TEST_CASE("group JSON round trip") {
  for (const auto& text : {R"({"kind":"free","rank":2})", R"({"kind":"lattice","d":3})",
                           R"({"kind":"finite","table":[[0,1],[1,0]]})"}) {
    const Group g = io::group_from_json(io::parse_text(text));
    const Group again = io::group_from_json(io::group_to_json(g));
    CHECK(g.same_group(again));
  }
}
