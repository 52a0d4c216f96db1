#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evb/error.hpp"
#include "evb/fan.hpp"
#include "support.hpp"

#include <algorithm>

using namespace evb;
using evb::testing::Rng;
using evb::testing::uniform;

namespace {

Fan quadrant_fan() {
  return Fan(2, {{"x", {1, 0}}, {"y", {0, 1}}}, {{{"x", "y"}}});
}

// Random unimodular matrix as a product of elementary integer operations.
std::vector<LatticeVector> random_unimodular(Rng& rng, std::size_t r) {
  std::vector<LatticeVector> m(r, LatticeVector(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  for (int step = 0; step < 6 && r > 1; ++step) {
    auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(r) - 1));
    auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(r) - 1));
    if (a == b) continue;
    int k = uniform(rng, -2, 2);
    for (std::size_t c = 0; c < r; ++c) m[a][c] += k * m[b][c];
  }
  if (uniform(rng, 0, 1) == 1)
    for (auto& x : m[0]) x = -x;
  return m;
}

LatticeVector times(const LatticeVector& v, const std::vector<LatticeVector>& m) {
  LatticeVector out(m.empty() ? 0 : m[0].size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  return out;
}

}  // namespace

TEST_CASE("primitive_generator") {
  CHECK(primitive_generator({1, 0}) == LatticeVector{1, 0});
  CHECK(primitive_generator({2, 4}) == LatticeVector{1, 2});
  CHECK(primitive_generator({-6, 9}) == LatticeVector{-2, 3});
  CHECK_THROWS_AS(primitive_generator({0, 0}), InvalidInput);
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    LatticeVector v{uniform(rng, -20, 20), uniform(rng, -20, 20), uniform(rng, -20, 20)};
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
    auto p = primitive_generator(v);
    CHECK(primitive_generator(p) == p);
  }
}

TEST_CASE("is_smooth_cone") {
  auto fan = quadrant_fan();
  CHECK(is_smooth_cone(fan, fan.maximal_cones()[0]));
  Fan ray_only(2, {{"x", {1, 0}}}, {{{"x"}}});
  CHECK(is_smooth_cone(ray_only, ray_only.maximal_cones()[0]));
  Fan singular(2, {{"a", {1, 0}}, {"b", {1, 2}}}, {{{"a", "b"}}});
  CHECK_FALSE(is_smooth_cone(singular, singular.maximal_cones()[0]));
}

TEST_CASE("is_smooth is invariant under ray permutation and lattice basis change") {
  Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(r)));
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < k; ++i) {
      LatticeVector v(r);
      for (auto& x : v) x = uniform(rng, -3, 3);
      if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) v[0] = 1;
      gens.push_back(v);
    }
    bool smooth = is_smooth(gens, r);
    auto permuted = gens;
    std::reverse(permuted.begin(), permuted.end());
    CHECK(is_smooth(permuted, r) == smooth);
    auto m = random_unimodular(rng, r);
    std::vector<LatticeVector> changed;
    for (const auto& g : gens) changed.push_back(times(g, m));
    CHECK(is_smooth(changed, r) == smooth);
  }
}

TEST_CASE("dual_cone_contains") {
  auto fan = quadrant_fan();
  const auto& cone = fan.maximal_cones()[0];
  CHECK(dual_cone_contains(fan, cone, {0, 0}));
  CHECK(dual_cone_contains(fan, cone, {2, 3}));
  Fan ray_only(2, {{"x", {1, 0}}}, {{{"x"}}});
  CHECK_FALSE(dual_cone_contains(ray_only, ray_only.maximal_cones()[0], {-1, 5}));
}

TEST_CASE("character_lift") {
  auto fan = quadrant_fan();
  CHECK(character_lift(fan, fan.maximal_cones()[0], {4, -7}) == LatticeVector{4, -7});
  Fan x_only(2, {{"x", {1, 0}}}, {{{"x"}}});
  CHECK(character_lift(x_only, x_only.maximal_cones()[0], {3}) == LatticeVector{3, 0});
  Fan y_only(2, {{"y", {0, 1}}}, {{{"y"}}});
  CHECK(character_lift(y_only, y_only.maximal_cones()[0], {0}) == LatticeVector{0, 0});
  Fan singular(2, {{"a", {1, 0}}, {"b", {1, 2}}}, {{{"a", "b"}}});
  CHECK_THROWS_AS(character_lift(singular, singular.maximal_cones()[0], {0, 1}), InvalidInput);
  CHECK_THROWS_AS(character_lift(fan, fan.maximal_cones()[0], {1}), InvalidInput);
}

TEST_CASE("character_lift pairs back to the tuple on random smooth cones") {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(r)));
    auto basis = random_unimodular(rng, r);
    std::vector<LatticeVector> gens(basis.begin(), basis.begin() + static_cast<long>(k));
    REQUIRE(is_smooth(gens, r));
    std::vector<int> tuple(k);
    for (auto& t : tuple) t = uniform(rng, -5, 5);
    auto chi = character_lift(gens, r, tuple);
    for (std::size_t i = 0; i < k; ++i) CHECK(pairing(chi, gens[i]) == tuple[i]);
  }
}

TEST_CASE("fan validation") {
  CHECK_THROWS_AS(Fan(2, {{"a", {2, 0}}}, {{{"a"}}}), InvalidInput);
  CHECK_THROWS_AS(Fan(2, {{"a", {0, 0}}}, {{{"a"}}}), InvalidInput);
  CHECK_THROWS_AS(Fan(2, {{"a", {1, 0, 0}}}, {{{"a"}}}), InvalidInput);
  CHECK_THROWS_AS(Fan(2, {{"a", {1, 0}}, {"a", {0, 1}}}, {{{"a"}}}), InvalidInput);
  CHECK_THROWS_AS(Fan(2, {{"a", {1, 0}}}, {{{"b"}}}), InvalidInput);
  CHECK_THROWS_AS(Fan(2, {{"a", {1, 0}}, {"b", {0, 1}}}, {{{"a"}}}), InvalidInput);  // b unused
  // Contains a line.
  CHECK_THROWS_AS(Fan(2, {{"a", {1, 0}}, {"b", {-1, 0}}}, {{{"a", "b"}}}), InvalidInput);
  // (1,1) is not extremal in cone((1,0),(1,1),(0,1)).
  CHECK_THROWS_AS(Fan(2, {{"a", {1, 0}}, {"b", {1, 1}}, {"c", {0, 1}}}, {{{"a", "b", "c"}}}), InvalidInput);
  // cone((1,0),(1,2)) lies inside cone((1,0),(0,1)).
  CHECK_THROWS_AS(Fan(2, {{"a", {1, 0}}, {"b", {0, 1}}, {"c", {1, 2}}}, {{{"a", "b"}}, {{"a", "c"}}}), InvalidInput);

  Fan p1xp1(2, {{"x+", {1, 0}}, {"x-", {-1, 0}}, {"y+", {0, 1}}, {"y-", {0, -1}}},
            {{{"x+", "y+"}}, {{"x-", "y+"}}, {{"x-", "y-"}}, {{"x+", "y-"}}});
  CHECK(p1xp1.overlap(0, 1).ray_ids == std::vector<std::string>{"y+"});
  CHECK(p1xp1.overlap(0, 2).ray_ids.empty());
  Fan p2(2, {{"0", {1, 0}}, {"1", {0, 1}}, {"2", {-1, -1}}}, {{{"0", "1"}}, {{"1", "2"}}, {{"2", "0"}}});
  CHECK(p2.maximal_cones().size() == 3);
  // A non-simplicial cone: the cone over a square.
  Fan square(3, {{"a", {1, 0, 1}}, {"b", {0, 1, 1}}, {"c", {-1, 0, 1}}, {"d", {0, -1, 1}}}, {{{"a", "b", "c", "d"}}});
  CHECK_FALSE(is_smooth_cone(square, square.maximal_cones()[0]));
}

TEST_CASE("cone_coordinates") {
  auto c = cone_coordinates({{1, 0}, {0, 1}}, {2, 3});
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK_FALSE(cone_coordinates({{1, 0}, {0, 1}}, {-1, 3}));
  CHECK(cone_coordinates({}, {0, 0}));
}
