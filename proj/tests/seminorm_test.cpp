#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "flowtype/errors.hpp"
#include "flowtype/metric.hpp"
#include "flowtype/seminorm.hpp"

using namespace flowtype;

namespace {

Group z_mod(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return Group::finite(table);
}

Group z_group() { return Group::lattice(1); }

Element z_elem(long long n) { return Element::vec({n}); }

SymSet interval(const Group& z, long long a, long long b) {
  std::vector<Element> elems;
  for (long long i = a; i <= b; ++i) elems.push_back(z_elem(i));
  return SymSet(z, elems);
}

// Independent oracle for [[P]]: breadth-first relaxation over products of at
// most `steps` listed generators, no cap shortcuts; the cap is applied at the
// very end. With all listed costs at least c_min > 0, steps >= default/c_min
// factors suffice for exactness.
Rat brute_generated(const Group& g, const std::map<Element, Rat>& costs, const Rat& def,
                    const Element& target, int steps) {
  std::map<Element, Rat> dist;
  dist[g.identity()] = 0;
  for (int i = 0; i < steps; ++i) {
    std::map<Element, Rat> next = dist;
    for (const auto& [x, d] : dist)
      for (const auto& [s, c] : costs) {
        const Element y = g.mul(x, s);
        const Rat nd = d + c;
        auto it = next.find(y);
        if (it == next.end() || nd < it->second) next[y] = nd;
      }
    dist = std::move(next);
  }
  const auto it = dist.find(target);
  if (it == dist.end()) return def;
  return std::min(def, it->second);
}

std::map<Element, Rat> symmetrized(const Group& g, std::vector<std::pair<Element, Rat>> pairs) {
  std::map<Element, Rat> out;
  for (const auto& [e, c] : pairs) {
    const Element ei = g.inv(e);
    if (!out.count(e) || c < out[e]) out[e] = c;
    if (!out.count(ei) || c < out[ei]) out[ei] = c;
  }
  out[g.identity()] = 0;
  return out;
}

Seminorm unit_step_seminorm(const Group& z) {
  return Seminorm::generated(
      z, WeightedPairSet(z, {{z_elem(1), Rat(3, 10)}}, Rat(1)));
}

} // namespace

TEST_CASE("generated seminorm on Z with unit steps") {
  const Group z = z_group();
  const Seminorm sigma = unit_step_seminorm(z);
  CHECK(sigma.eval(z.identity()) == 0);
  CHECK(sigma.eval(z_elem(2)) == Rat(3, 5));
  CHECK(sigma.eval(z_elem(5)) == 1);
  CHECK(sigma.eval(z_elem(-2)) == Rat(3, 5));

  const auto costs = symmetrized(z, {{z_elem(1), Rat(3, 10)}});
  for (long long n = -10; n <= 10; ++n)
    CHECK(sigma.eval(z_elem(n)) == brute_generated(z, costs, Rat(1), z_elem(n), 10));
}

TEST_CASE("one-step factorization bounds listed pairs") {
  const Group z = z_group();
  const Seminorm sigma = Seminorm::generated(
      z, WeightedPairSet(z, {{z_elem(3), Rat(1, 4)}, {z_elem(5), Rat(2, 3)}}, Rat(1)));
  CHECK(sigma.eval(z_elem(3)) <= Rat(1, 4));
  CHECK(sigma.eval(z_elem(5)) <= Rat(2, 3));
}

TEST_CASE("inputs are symmetrized by taking minima") {
  const Group z = z_group();
  const Seminorm sigma = Seminorm::generated(
      z, WeightedPairSet(z, {{z_elem(1), Rat(1, 2)}, {z_elem(-1), Rat(1, 4)}}, Rat(1)));
  CHECK(sigma.eval(z_elem(1)) == Rat(1, 4));
  CHECK(sigma.eval(z_elem(-1)) == Rat(1, 4));
}

TEST_CASE("zero-cost generators are rejected on infinite groups only") {
  const Group z = z_group();
  CHECK_THROWS_AS(Seminorm::generated(z, WeightedPairSet(z, {{z_elem(1), Rat(0)}}, Rat(1))),
                  ParseError);
  const Group z4 = z_mod(4);
  const Seminorm sigma = Seminorm::generated(
      z4, WeightedPairSet(z4, {{Element::finite(1), Rat(0)}}, Rat(1)));
  CHECK(sigma.eval(Element::finite(3)) == 0);
}

TEST_CASE("chain seminorm on Z") {
  const Group z = z_group();
  const NestedChain chain(z,
                          {interval(z, -9, 9), interval(z, -3, 3), interval(z, -1, 1),
                           SymSet(z, {z_elem(0)})},
                          {});
  const Seminorm sigma = Seminorm::chain(z, chain);
  CHECK(sigma.eval(z.identity()) == 0);
  CHECK(sigma.eval(z_elem(2)) == Rat(1, 2));
  CHECK(sigma.eval(z_elem(5)) == 1);

  // Oracle over the induced generator costs.
  std::vector<std::pair<Element, Rat>> raw;
  Rat c = 1;
  for (const auto& level : chain.levels) {
    for (const auto& u : level.elements()) raw.emplace_back(u, c);
    c /= 2;
  }
  const auto costs = symmetrized(z, raw);
  for (long long n = -12; n <= 12; ++n)
    CHECK(sigma.eval(z_elem(n)) == brute_generated(z, costs, Rat(1), z_elem(n), 8));
}

TEST_CASE("chain validation") {
  const Group z = z_group();
  CHECK_THROWS_AS(NestedChain(z, {interval(z, -1, 1), interval(z, -3, 3)}, {}), ParseError);
  CHECK_THROWS_AS(
      NestedChain(z, {interval(z, -3, 3), interval(z, -1, 1)}, {Rat(1, 2), Rat(1)}),
      ParseError);
}

TEST_CASE("seminorm invariants on finite groups and on Z-balls") {
  const Group z6 = z_mod(6);
  const Seminorm table = Seminorm::table(
      z6, {Rat(0), Rat(1, 2), Rat(1), Rat(1), Rat(1), Rat(1, 2)});
  for (const auto& a : z6.elements()) {
    CHECK(table.eval(a) == table.eval(z6.inv(a)));
    for (const auto& b : z6.elements())
      CHECK(table.eval(z6.mul(a, b)) <= table.eval(a) + table.eval(b));
  }

  const Group z = z_group();
  const Seminorm sigma = unit_step_seminorm(z);
  CHECK(sigma.eval(z.identity()) == 0);
  for (long long a = -4; a <= 4; ++a) {
    CHECK(sigma.eval(z_elem(a)) == sigma.eval(z_elem(-a)));
    for (long long b = -4; b <= 4; ++b)
      CHECK(sigma.eval(z_elem(a + b)) <= sigma.eval(z_elem(a)) + sigma.eval(z_elem(b)));
  }
}

TEST_CASE("invalid tables are rejected") {
  const Group z6 = z_mod(6);
  CHECK_THROWS_AS(Seminorm::table(z6, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}),
                  ParseError);  // nonzero at identity
  CHECK_THROWS_AS(Seminorm::table(z6, {Rat(0), Rat(1, 2), Rat(1), Rat(1), Rat(1), Rat(1)}),
                  ParseError);  // not symmetric
  CHECK_THROWS_AS(
      Seminorm::table(z6, {Rat(0), Rat(1, 10), Rat(1), Rat(1), Rat(1), Rat(1, 10)}),
      ParseError);  // 2 = 1+1 breaks subadditivity
}

TEST_CASE("generation is monotone in pairs and costs") {
  const Group z = z_group();
  const Seminorm base = unit_step_seminorm(z);
  const Seminorm more = Seminorm::generated(
      z, WeightedPairSet(z, {{z_elem(1), Rat(3, 10)}, {z_elem(4), Rat(1, 10)}}, Rat(1)));
  const Seminorm cheaper = Seminorm::generated(
      z, WeightedPairSet(z, {{z_elem(1), Rat(1, 5)}}, Rat(1)));
  for (long long n = -8; n <= 8; ++n) {
    CHECK(more.eval(z_elem(n)) <= base.eval(z_elem(n)));
    CHECK(cheaper.eval(z_elem(n)) <= base.eval(z_elem(n)));
  }
}

TEST_CASE("generating a seminorm's own graph returns it") {
  const Group z6 = z_mod(6);
  const Seminorm table = Seminorm::table(
      z6, {Rat(0), Rat(1, 2), Rat(1), Rat(1), Rat(1), Rat(1, 2)});
  std::vector<std::pair<Element, Rat>> graph;
  for (const auto& g : z6.elements()) graph.emplace_back(g, table.eval(g));
  const Seminorm regen = Seminorm::generated(z6, WeightedPairSet(z6, graph, table.norm_bound()));
  for (const auto& g : z6.elements()) CHECK(regen.eval(g) == table.eval(g));
}

TEST_CASE("phi against the exhaustive shortest-path oracle on Z/6") {
  const Group z6 = z_mod(6);
  const Seminorm sigma = Seminorm::table(
      z6, {Rat(0), Rat(1, 2), Rat(1), Rat(1), Rat(1), Rat(1, 2)});
  const Seminorm zero = Seminorm::table(z6, std::vector<Rat>(6, Rat(0)));
  const SymSet f(z6, {Element::finite(0), Element::finite(3)});
  const Seminorm phi = phi_seminorm(z6, sigma, zero, f, Rat(1, 10), z6.elements());
  CHECK(phi.eval(Element::finite(2)) == Rat(3, 5));

  std::vector<std::pair<Element, Rat>> raw;
  for (const auto& g : z6.elements()) raw.emplace_back(g, sigma.eval(g));
  raw.emplace_back(Element::finite(3), Rat(1, 10));
  raw.emplace_back(Element::finite(0), Rat(1, 10));
  const auto costs = symmetrized(z6, raw);
  for (const auto& g : z6.elements())
    CHECK(phi.eval(g) == brute_generated(z6, costs, Rat(1), g, 12));
}

TEST_CASE("phi with F = {e} reproduces sigma on the support") {
  const Group z6 = z_mod(6);
  const Seminorm sigma = Seminorm::table(
      z6, {Rat(0), Rat(1, 2), Rat(1), Rat(1), Rat(1), Rat(1, 2)});
  const Seminorm phi =
      phi_seminorm(z6, sigma, sigma, SymSet(z6, {}), Rat(1, 100), z6.elements());
  for (const auto& g : z6.elements()) CHECK(phi.eval(g) == sigma.eval(g));
}

TEST_CASE("phi properties: dominated by sigma, discounted on F, monotone") {
  const Group z6 = z_mod(6);
  const Seminorm sigma = Seminorm::table(
      z6, {Rat(0), Rat(1, 2), Rat(1), Rat(1), Rat(1), Rat(1, 2)});
  const Seminorm prime = Seminorm::table(
      z6, {Rat(0), Rat(1, 4), Rat(1, 4), Rat(1, 2), Rat(1, 4), Rat(1, 4)});
  const SymSet small_f(z6, {Element::finite(3)});
  const SymSet big_f(z6, {Element::finite(3), Element::finite(1)});
  const Seminorm phi = phi_seminorm(z6, sigma, prime, small_f, Rat(1, 10), z6.elements());
  const Seminorm phi_bigger_f = phi_seminorm(z6, sigma, prime, big_f, Rat(1, 10), z6.elements());
  const Seminorm phi_smaller_eps =
      phi_seminorm(z6, sigma, prime, small_f, Rat(1, 20), z6.elements());
  for (const auto& g : z6.elements()) {
    CHECK(phi.eval(g) <= sigma.eval(g));
    CHECK(phi_bigger_f.eval(g) <= phi.eval(g));
    CHECK(phi_smaller_eps.eval(g) <= phi.eval(g));
  }
  for (const auto& g : small_f.elements())
    CHECK(phi.eval(g) <= prime.eval(g) + Rat(1, 10));
}

TEST_CASE("birkhoff-kakutani bounds on the Z chain") {
  const Group z = z_group();
  const NestedChain chain(z,
                          {interval(z, -9, 9), interval(z, -3, 3), interval(z, -1, 1),
                           SymSet(z, {z_elem(0)})},
                          {});
  const BkReport report = bk_verify(z, chain);
  CHECK(report.precondition_ok);
  CHECK(report.violations.empty());
  CHECK(report.tested == 18);  // |U_0\U_1| = 12, |U_1\U_2| = 4, |U_2\U_3| = 2

  const Seminorm sigma = Seminorm::chain(z, chain);
  CHECK(sigma.eval(z_elem(5)) == 1);  // h = 5 at n = 0 sits in [1/2, 1]
}

TEST_CASE("birkhoff-kakutani rejects chains without cubed nesting") {
  const Group z = z_group();
  // U_1^3 reaches 9 but U_0 stops at 5.
  const NestedChain bad(z, {interval(z, -5, 5), interval(z, -3, 3), SymSet(z, {z_elem(0)})}, {});
  const BkReport report = bk_verify(z, bad);
  CHECK_FALSE(report.precondition_ok);
  CHECK(report.precondition_level == 0);
  CHECK(report.violations.empty());
}

TEST_CASE("birkhoff-kakutani requires dyadic costs") {
  const Group z = z_group();
  const NestedChain odd(z, {interval(z, -3, 3), SymSet(z, {z_elem(0)})}, {Rat(1), Rat(1, 3)});
  CHECK_THROWS_AS(bk_verify(z, odd), PrecondError);
}

TEST_CASE("birkhoff-kakutani on a small free-group chain") {
  const Group f2 = Group::free_group(2);
  const SymSet gens(f2, {f2.element_from_string("a"), f2.element_from_string("b")});
  const SymSet b3(f2, ball(f2, gens, 3));
  const SymSet b1(f2, ball(f2, gens, 1));
  const SymSet b0(f2, {});
  const BkReport report = bk_verify(f2, NestedChain(f2, {b3, b1, b0}, {}));
  CHECK(report.precondition_ok);
  CHECK(report.violations.empty());
}

TEST_CASE("fubini witness on Z/6 from the worked example") {
  const Group z6 = z_mod(6);
  const Seminorm sigma = Seminorm::table(
      z6, {Rat(0), Rat(1, 2), Rat(1), Rat(1), Rat(1), Rat(1, 2)});
  const FubiniWitness w = fubini_witness(z6, sigma, sigma, Rat(2, 5));
  CHECK(w.verified);
  CHECK(w.eps == Rat(2, 25));
  std::set<int> f_indices;
  for (const auto& e : w.f_set.elements()) f_indices.insert(e.index());
  CHECK(f_indices == std::set<int>{0, 1, 5});
}

TEST_CASE("fubini witness shortcuts when delta dominates sigma2") {
  const Group z6 = z_mod(6);
  const Seminorm sigma0 = Seminorm::table(
      z6, {Rat(0), Rat(1, 2), Rat(1), Rat(1), Rat(1), Rat(1, 2)});
  const Seminorm small = Seminorm::table(
      z6, {Rat(0), Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
  const FubiniWitness w = fubini_witness(z6, sigma0, small, Rat(1, 2));
  CHECK(w.verified);
  CHECK(w.f_set.size() == 1);
  CHECK(w.eps == Rat(1, 10));
}

TEST_CASE("fubini witness with vanishing sigma2") {
  const Group z6 = z_mod(6);
  const Seminorm sigma0 = Seminorm::table(
      z6, {Rat(0), Rat(1, 2), Rat(1), Rat(1), Rat(1), Rat(1, 2)});
  const Seminorm zero = Seminorm::table(z6, std::vector<Rat>(6, Rat(0)));
  const FubiniWitness w = fubini_witness(z6, sigma0, zero, Rat(1, 5));
  CHECK(w.verified);
}

TEST_CASE("seminorm ball uses strict inequality") {
  const Group z = z_group();
  const NestedChain chain(z,
                          {interval(z, -9, 9), interval(z, -3, 3), interval(z, -1, 1),
                           SymSet(z, {z_elem(0)})},
                          {});
  const Seminorm sigma = Seminorm::chain(z, chain);
  std::vector<Element> domain;
  for (long long n = -20; n <= 20; ++n) domain.push_back(z_elem(n));

  SUBCASE("above the norm bound: everything") {
    CHECK(seminorm_ball(sigma, Rat(2), domain).size() == domain.size());
  }
  SUBCASE("at zero: nothing") { CHECK(seminorm_ball(sigma, Rat(0), domain).empty()); }
  SUBCASE("unit ball from the pointwise oracle") {
    std::vector<Element> expected;
    for (const auto& g : domain)
      if (sigma.eval(g) < 1) expected.push_back(g);
    CHECK(seminorm_ball(sigma, Rat(1), domain) == expected);
    // sigma(5) = 1, so 5 is excluded; the ball is exactly [-4, 4].
    std::vector<Element> window;
    for (long long n = -4; n <= 4; ++n) window.push_back(z_elem(n));
    CHECK(seminorm_ball(sigma, Rat(1), domain) == window);
  }
}

TEST_CASE("lipschitz correction on worked examples") {
  SUBCASE("already lipschitz stays within delta/2") {
    const FiniteMetricSpace space({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    const auto out = lipschitz_correct(space, {Rat(0), Rat(1)}, Rat(1, 2));
    CHECK(out[0] - Rat(0) <= Rat(1, 4));
    CHECK(out[1] - Rat(1) <= Rat(1, 4));
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        const Rat gap = out[x] >= out[y] ? out[x] - out[y] : out[y] - out[x];
        CHECK(gap <= space.rho(x, y));
      }
  }
  SUBCASE("two points force the unique solution") {
    const FiniteMetricSpace space({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    const auto out = lipschitz_correct(space, {Rat(0), Rat(8, 5)}, Rat(3, 5));
    CHECK(out[0] == Rat(3, 10));
    CHECK(out[1] == Rat(13, 10));
  }
  SUBCASE("three-point example matches a direct solution") {
    const FiniteMetricSpace space(
        {{Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(0)}});
    const std::vector<Rat> f{Rat(0), Rat(0), Rat(3, 2)};
    const auto out = lipschitz_correct(space, f, Rat(1, 2));
    for (int x = 0; x < 3; ++x) {
      const Rat gap = out[x] >= f[x] ? out[x] - f[x] : f[x] - out[x];
      CHECK(gap <= Rat(1, 4));
      for (int y = 0; y < 3; ++y) {
        const Rat d = out[x] >= out[y] ? out[x] - out[y] : out[y] - out[x];
        CHECK(d <= space.rho(x, y));
      }
    }
  }
  SUBCASE("precondition violations are reported") {
    const FiniteMetricSpace space({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    CHECK_THROWS_AS(lipschitz_correct(space, {Rat(0), Rat(3)}, Rat(1, 2)), PrecondError);
  }
}

TEST_CASE("metric validation") {
  CHECK_THROWS_AS(FiniteMetricSpace({{Rat(0), Rat(2)}, {Rat(1), Rat(0)}}), ParseError);
  CHECK_THROWS_AS(FiniteMetricSpace({{Rat(1)}}), ParseError);
  CHECK_THROWS_AS(FiniteMetricSpace({{Rat(0), Rat(5), Rat(1)},
                                     {Rat(5), Rat(0), Rat(1)},
                                     {Rat(1), Rat(1), Rat(0)}}),
                  ParseError);  // 5 > 1 + 1
}
