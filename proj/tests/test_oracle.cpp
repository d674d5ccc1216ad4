#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "tsc/calculus.hpp"
#include "tsc/oracle.hpp"

using namespace tsc;

namespace {

const Ordinal w = Ordinal::omega();

Point pt(std::vector<Ordinal> coords) { return Point::make(std::move(coords)); }

FragmentSpec below_w_squared(unsigned coeff, std::size_t support) {
  return {enumerate_ordinals(w * Ordinal(coeff) + Ordinal(coeff), coeff), support, {}};
}

bool fits(const FrameOracle& oracle, const Formula& f) {
  if (!oracle.contains(minimal_point(f))) return false;
  const auto& node = f.node().value;
  if (const auto* c = std::get_if<Conj>(&node)) return fits(oracle, c->lhs) && fits(oracle, c->rhs);
  if (const auto* d = std::get_if<Diamond>(&node)) return fits(oracle, d->body);
  return true;
}

}  // namespace

TEST_CASE("enumerating ordinals") {
  CHECK(enumerate_ordinals(Ordinal(), 3) == std::vector<Ordinal>{Ordinal()});
  CHECK(enumerate_ordinals(Ordinal(3), 5) == std::vector<Ordinal>{0, 1, 2, 3});
  // the exponent 2 needs coefficient 2, so w^2 is out of reach with bound 1
  CHECK(enumerate_ordinals(Ordinal::omega_power(2), 1) == std::vector<Ordinal>{0, 1, w, w + Ordinal(1)});
  CHECK(enumerate_ordinals(Ordinal::omega_power(2), 2).back() == Ordinal::omega_power(2));
  CHECK(enumerate_ordinals(w * Ordinal(2) + Ordinal(2), 2).size() == 9);

  auto all = enumerate_ordinals(w * Ordinal(4) + Ordinal(4), 4);
  CHECK(all.size() == 25);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all.back() == w * Ordinal(4) + Ordinal(4));

  auto deep = enumerate_ordinals(Ordinal::omega_power(w), 2);
  for (const auto& a : deep) {
    CHECK(a <= Ordinal::omega_power(w));
    for (const auto& t : a.terms()) CHECK(t.coefficient <= 2);
  }
}

TEST_CASE("enumerating points") {
  FragmentSpec spec{enumerate_ordinals(w * Ordinal(4) + Ordinal(4), 4), 3, {}};
  auto points = enumerate_points(spec);
  CHECK(points.size() == 29);
  CHECK(std::is_sorted(points.begin(), points.end()));
  CHECK(points.front().is_zero());

  auto wider = enumerate_points({enumerate_ordinals(Ordinal::omega_power(2) * Ordinal(2), 2), 2, {}});
  for (const auto& p : wider) {
    CHECK(p.support() <= 2);
    CHECK_NOTHROW(Point::make({p.coords().begin(), p.coords().end()}));
  }
  CHECK(std::find(wider.begin(), wider.end(), pt({Ordinal::omega_power(2), 2})) != wider.end());
}

TEST_CASE("oracle relations on the paper's examples") {
  FrameOracle oracle(below_w_squared(4, 2));
  for (unsigned m = 0; m <= 4; ++m) {
    CHECK(oracle.related(pt({w}), pt({m}), 0, w));
    CHECK_FALSE(oracle.related(pt({w}), pt({m}), 0, w + Ordinal(1)));
    CHECK(oracle.related(pt({w + Ordinal(1)}), pt({m}), 0, w + Ordinal(1)));
  }
  CHECK(oracle.related(pt({w * Ordinal(2), 1}), pt({w, 1}), 0, 1));
  CHECK_FALSE(oracle.related(pt({w * Ordinal(2), 1}), pt({w, 1}), 0, 2));
  CHECK(oracle.related(pt({w}), pt({w}), 0, Ordinal()));
  CHECK_FALSE(oracle.related(pt({w}), pt({3}), 0, Ordinal()));

  // chains from [w] to [4] pass through 4 + 1, ..., 4 + padding + level
  CHECK(oracle.longest_chain(pt({w}), pt({4}), 0, 0) == std::size_t{13});
  CHECK(oracle.longest_chain(pt({w}), pt({4}), 0, 1) == std::size_t{14});
  CHECK(oracle.longest_chain(pt({w}), pt({4}), 0, 2) == std::size_t{15});
  CHECK(oracle.longest_chain(pt({3}), pt({1}), 0, 2) == std::size_t{2});
  CHECK_FALSE(oracle.longest_chain(pt({1}), pt({3}), 0, 0));
}

TEST_CASE("oracle agrees with the closed form on a second fragment") {
  FragmentSpec spec{enumerate_ordinals(Ordinal::omega_power(2) + w * Ordinal(2) + Ordinal(2), 2), 3, {}};
  FrameOracle oracle(spec);
  const std::vector<Ordinal> exps = {1, 2, 3, w, w + Ordinal(1), w * Ordinal(2), w * Ordinal(2) + Ordinal(1)};
  std::size_t related = 0;
  for (std::size_t n = 0; n <= 2; ++n) {
    for (const auto& a : exps) {
      auto rel = oracle.relation(n, a);
      for (const auto& x : oracle.points()) {
        for (const auto& y : oracle.points()) {
          bool expected = r_n_alpha(x, y, n, a);
          related += expected;
          CAPTURE(to_string(x));
          CAPTURE(to_string(y));
          CAPTURE(n);
          CAPTURE(to_string(a));
          CHECK(rel.count({x, y}) == static_cast<std::size_t>(expected));
        }
      }
    }
  }
  CHECK(related > 0);
}

TEST_CASE("oracle rejects what it cannot decide") {
  FrameOracle oracle(below_w_squared(2, 1));
  CHECK_THROWS_AS(oracle.related(pt({w}), pt({1}), 0, w * Ordinal(3)), UnsupportedExponent);
  CHECK_THROWS_AS(oracle.related(pt({w}), pt({1}), 0, Ordinal::omega_power(2)), UnsupportedExponent);
  CHECK_THROWS_AS(oracle.related(pt({w * Ordinal(5)}), pt({1}), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(FrameOracle(FragmentSpec{{1, 2}, 1, {}}), std::invalid_argument);
}

TEST_CASE("oracle forcing agrees with minimal points") {
  FrameOracle oracle({enumerate_ordinals(w * Ordinal(4) + Ordinal(4), 4), 3, {}});
  testing::Gen gen(2718);
  std::size_t tested = 0;
  for (int i = 0; i < 20000 && tested < 300; ++i) {
    Formula f = gen.small_formula(4);
    if (!fits(oracle, f)) continue;
    ++tested;
    CAPTURE(to_string(f));
    auto ext = oracle.extension(f);
    std::vector<Point> cone;
    for (const auto& x : oracle.points())
      if (forces(x, f)) cone.push_back(x);
    CHECK(ext == cone);
  }
  CHECK(tested >= 300);
}

TEST_CASE("witnesses and entailment") {
  FrameOracle oracle(below_w_squared(4, 2));
  Formula body = parse_formula("<1^1>T");
  auto y = oracle.witness(pt({w * Ordinal(2), 1}), 0, 1, body);
  REQUIRE(y);
  CHECK(r_n(pt({w * Ordinal(2), 1}), *y, 0));
  CHECK(forces(*y, body));
  CHECK_FALSE(oracle.witness(pt({w, 1}), 0, 1, body));

  CHECK(oracle.entails(parse_formula("<1^1>T"), parse_formula("<0^w>T")));
  CHECK_FALSE(oracle.entails(parse_formula("<0^w>T"), parse_formula("<1^1>T")));
  CHECK(oracle.forces(pt({w}), parse_formula("<0^w>T")));

  FragmentSpec spec = below_w_squared(2, 2);
  CHECK(oracle_forces(spec, pt({w, 1}), parse_formula("<1^1>T")));
  CHECK(oracle_entails(spec, parse_formula("<0^2>T"), parse_formula("<0^1>T")));
  auto rel = oracle_r_alpha(spec, 0, w);
  CHECK(rel.count({pt({w}), pt({2})}) == 1);
  CHECK(rel.count({pt({w}), pt({w})}) == 0);
}
