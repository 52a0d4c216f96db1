#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evb/error.hpp"
#include "evb/rees.hpp"
#include "evb/spherical.hpp"
#include "support.hpp"

using namespace evb;
using evb::testing::Rng;
using evb::testing::uniform;

namespace {

RationalMatrix matrix(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  return RationalMatrix::from_rows(rows, cols);
}

// ξ·e₁ = e₂ acting on columns.
RationalMatrix lower_e1() { return matrix({{0, 0}, {1, 0}}, 2); }
RationalMatrix raise_e2() { return matrix({{0, 1}, {0, 0}}, 2); }

// Direct check that φ intertwines the actions and maps every step into the matching step.
bool is_morphism(const FilteredRep& a, const FilteredRep& b, const RationalMatrix& phi) {
  for (std::size_t k = 0; k < a.lie().lie_dim; ++k)
    if (phi * a.lie().action[k] != b.lie().action[k] * phi) return false;
  for (const auto& [ray, fa] : a.filtrations().per_ray()) {
    const auto& fb = b.filtrations().at(ray);
    for (int i = -6; i <= 6; ++i) {
      auto from = fa.at(i);
      for (std::size_t r = 0; r < from.dim(); ++r)
        if (!fb.at(i).contains(phi * from.basis().row(r))) return false;
    }
  }
  return true;
}

// Random nilpotent or diagonal action, so the preset has interesting (C) outcomes.
RationalMatrix random_action(Rng& rng, std::size_t n) {
  RationalMatrix a(n, n);
  int shape = uniform(rng, 0, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (shape == 0 && i > j) a(i, j) = uniform(rng, -1, 1);
      if (shape == 1 && i == j) a(i, j) = uniform(rng, -2, 2);
      if (shape == 2) a(i, j) = uniform(rng, -1, 1);
    }
  return a;
}

IntegerMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntegerMatrix m = IntegerMatrix::identity(n);
  for (int step = 0; step < 8 && n > 1; ++step) {
    auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    if (a == b) continue;
    int k = uniform(rng, -2, 2);
    for (std::size_t c = 0; c < n; ++c) m(a, c) += k * m(b, c);
  }
  return m;
}

}  // namespace

TEST_CASE("condition (C) examples") {
  auto f = Filtration::from_adapted_basis(RationalMatrix::identity(2), {1, 0});
  CHECK(check_condition_C(pgl2_preset(2, RationalMatrix(2, 2), f)).holds);
  CHECK(check_condition_C(pgl2_preset(2, lower_e1(), f)).holds);

  auto g = Filtration::from_adapted_basis(RationalMatrix::identity(2), {0, 2});
  auto bad = check_condition_C(pgl2_preset(2, raise_e2(), g));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].ray == kPgl2Ray);
  CHECK(bad.violations[0].lie_level == -1);
  CHECK(bad.violations[0].w_level == 2);
  CHECK(bad.violations[0].witness == RationalVector{0, 1});

  auto diag = matrix({{2, 0, 0}, {0, -1, 0}, {0, 0, 5}}, 3);
  CHECK(check_condition_C(pgl2_preset(3, diag, Filtration::from_adapted_basis(RationalMatrix::identity(3), {2, -1, 0}))).holds);
}

TEST_CASE("condition (C) with a zero action holds for any filtrations") {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    auto n = static_cast<std::size_t>(uniform(rng, 0, 3));
    LieFiltrationData lie{2, {RationalMatrix(n, n), RationalMatrix(n, n)}, std::nullopt,
                          {{"a", evb::testing::random_filtration(rng, 2, -2, 2)},
                           {"b", evb::testing::random_filtration(rng, 2, -2, 2)}}};
    MultiFiltration mf(n, {{"a", evb::testing::random_filtration(rng, n, -2, 2)},
                           {"b", evb::testing::random_filtration(rng, n, -2, 2)}});
    CHECK(check_condition_C(FilteredRep(n, lie, mf)).holds);
  }
}

TEST_CASE("preset agrees with the level-lowering test") {
  Rng rng(62);
  int held = 0;
  int failed = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto n = static_cast<std::size_t>(uniform(rng, 1, 4));
    auto action = random_action(rng, n);
    auto f = trial % 2 ? evb::testing::random_flag_filtration(rng, n, -2, 2)
                       : Filtration::from_adapted_basis(RationalMatrix::identity(n), [&] {
                           std::vector<int> levels(n);
                           for (auto& l : levels) l = uniform(rng, -2, 2);
                           return levels;
                         }());
    bool direct = evb::testing::lowers_levels_by_one(action, f, -5, 5);
    auto result = check_condition_C(pgl2_preset(n, action, f));
    CHECK(result.holds == direct);
    (direct ? held : failed)++;
    for (const auto& v : result.violations) {
      auto image = action * std::span<const Rational>(v.witness);
      CHECK(f.at(v.w_level).contains(v.witness));
      CHECK_FALSE(f.at(v.w_level + v.lie_level).contains(image));
    }
  }
  CHECK(held > 20);
  CHECK(failed > 20);
}

TEST_CASE("condition (C) is invariant under a change of basis of W") {
  Rng rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto action = random_action(rng, n);
    auto f = evb::testing::random_flag_filtration(rng, n, -2, 2);
    auto p = evb::testing::random_invertible(rng, n);
    auto conjugated = p * action * inverse(p);
    bool before = check_condition_C(pgl2_preset(n, action, f)).holds;
    bool after = check_condition_C(pgl2_preset(n, conjugated, f.transformed(p.transpose()))).holds;
    CHECK(before == after);
  }
}

TEST_CASE("category_hom examples") {
  auto at0 = pgl2_preset(1, RationalMatrix(1, 1), Filtration::trivial(1, 0));
  auto at1 = pgl2_preset(1, RationalMatrix(1, 1), Filtration::trivial(1, 1));
  CHECK(category_hom(at0, at1).dim == 1);
  CHECK(category_hom(at1, at0).dim == 0);

  auto empty = pgl2_preset(0, RationalMatrix(0, 0), Filtration(0, {}));
  CHECK(category_hom(empty, at0).dim == 0);
  CHECK(category_hom(at0, empty).dim == 0);

  auto f = Filtration::from_adapted_basis(RationalMatrix::identity(2), {1, 0});
  auto rep = pgl2_preset(2, lower_e1(), f);
  auto self = category_hom(rep, rep);
  CHECK(self.dim == 1);  // the action itself lowers levels, so only scalars survive

  LieFiltrationData other{2, {RationalMatrix(1, 1), RationalMatrix(1, 1)}, std::nullopt,
                          {{kPgl2Ray, Filtration::trivial(2, -1)}}};
  CHECK_THROWS_AS(category_hom(at0, FilteredRep(1, other, MultiFiltration(1, {{kPgl2Ray, Filtration::trivial(1)}}))),
                  InvalidInput);
}

TEST_CASE("category_hom with a zero action matches filtered Hom") {
  Rng rng(64);
  for (int trial = 0; trial < 60; ++trial) {
    auto n = static_cast<std::size_t>(uniform(rng, 0, 3));
    auto m = static_cast<std::size_t>(uniform(rng, 0, 3));
    auto f = evb::testing::random_flag_filtration(rng, n, -2, 2);
    auto g = evb::testing::random_flag_filtration(rng, m, -2, 2);
    auto h = category_hom(pgl2_preset(n, RationalMatrix(n, n), f), pgl2_preset(m, RationalMatrix(m, m), g));
    CHECK(h.dim == filtered_hom_dim(f, g));
  }
}

TEST_CASE("category_hom contains the identity and is closed under composition") {
  Rng rng(65);
  for (int trial = 0; trial < 40; ++trial) {
    auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<FilteredRep> reps;
    for (int k = 0; k < 3; ++k) {
      auto action = uniform(rng, 0, 1) ? RationalMatrix(n, n) : random_action(rng, n);
      reps.push_back(pgl2_preset(n, action, evb::testing::random_flag_filtration(rng, n, -2, 2)));
    }
    auto self = category_hom(reps[0], reps[0]);
    CHECK(self.dim >= 1);
    RationalMatrix stacked(0, n * n);
    for (const auto& phi : self.basis) {
      RationalVector flat(phi.rows() * phi.cols());
      for (std::size_t i = 0; i < phi.rows(); ++i)
        for (std::size_t j = 0; j < phi.cols(); ++j) flat[i * phi.cols() + j] = phi(i, j);
      stacked.append_row(flat);
    }
    RationalVector id(n * n);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    CHECK(Subspace::span(stacked).contains(id));

    auto ab = category_hom(reps[0], reps[1]);
    auto bc = category_hom(reps[1], reps[2]);
    for (const auto& phi : ab.basis) CHECK(is_morphism(reps[0], reps[1], phi));
    for (const auto& psi : bc.basis)
      for (const auto& phi : ab.basis) CHECK(is_morphism(reps[0], reps[2], psi * phi));
  }
}

TEST_CASE("neutralizability fixtures") {
  auto gm = is_neutralizable(IntegerMatrix::from_rows({{2}}, 1));
  CHECK_FALSE(gm.neutralizable);
  CHECK(gm.divisors == std::vector<Integer>{2});
  CHECK(is_neutralizable(IntegerMatrix::identity(2)).neutralizable);
  for (std::size_t n = 1; n <= 4; ++n) {
    IntegerMatrix ones(n, 1);
    for (std::size_t i = 0; i < n; ++i) ones(i, 0) = 1;
    CHECK(is_neutralizable(ones).neutralizable);
  }
  CHECK_FALSE(is_neutralizable(IntegerMatrix::from_rows({{2, 0}, {0, 3}}, 2)).neutralizable);
  CHECK(is_neutralizable(IntegerMatrix::from_rows({{2, 3}, {1, 2}}, 2)).neutralizable);
  CHECK_THROWS_AS(is_neutralizable(IntegerMatrix::from_rows({{1, 2}, {2, 4}}, 2)), InvalidInput);
}

TEST_CASE("neutralizability is invariant under unimodular changes") {
  Rng rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    auto rows = static_cast<std::size_t>(uniform(rng, 1, 4));
    auto cols = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(rows)));
    auto g = evb::testing::random_integer_matrix(rng, rows, cols, 3);
    if (rank(to_rational(g)) < cols) {
      CHECK_THROWS_AS(is_neutralizable(g), InvalidInput);
      continue;
    }
    auto base = is_neutralizable(g);
    auto moved = is_neutralizable(random_unimodular(rng, rows) * g * random_unimodular(rng, cols));
    CHECK(base.neutralizable == moved.neutralizable);
    CHECK(base.divisors == moved.divisors);
  }
}

TEST_CASE("representation validation") {
  auto e00 = matrix({{1, 0}, {0, 0}}, 2);
  auto e01 = raise_e2();
  StructureConstants affine(2, std::vector<RationalVector>(2, RationalVector(2)));
  affine[0][1] = {0, 1};
  affine[1][0] = {0, -1};
  MultiFiltration mf(2, {{"r", Filtration::trivial(2)}});
  std::map<std::string, Filtration> levels{{"r", Filtration::trivial(2)}};

  CHECK_NOTHROW(FilteredRep(2, LieFiltrationData{2, {e00, e01}, affine, levels}, mf));
  CHECK_THROWS_AS(FilteredRep(2, LieFiltrationData{2, {e00, lower_e1()}, affine, levels}, mf), InvalidInput);
  CHECK_THROWS(FilteredRep(2, LieFiltrationData{2, {e00}, std::nullopt, levels}, mf));
  CHECK_THROWS(FilteredRep(2, LieFiltrationData{2, {e00, RationalMatrix(3, 3)}, std::nullopt, levels}, mf));
  CHECK_THROWS_AS(FilteredRep(2, LieFiltrationData{2, {e00, e01}, std::nullopt, {{"s", Filtration::trivial(2)}}}, mf),
                  InvalidInput);

  LieFiltrationData disconnected{2, {e00, e01}, std::nullopt, levels};
  disconnected.connected = false;
  CHECK_THROWS_AS(FilteredRep(2, disconnected, mf), InvalidInput);
}
