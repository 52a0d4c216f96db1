#pragma once

// Random instance generators and independent oracles shared by the test binaries.

#include "evb/filtration.hpp"
#include "evb/matrix.hpp"
#include "evb/subspace.hpp"

#include <random>
#include <vector>

namespace evb::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline RationalVector random_vector(Rng& rng, std::size_t n, int range = 3) {
  RationalVector v(n);
  for (auto& x : v) x = uniform(rng, -range, range);
  return v;
}

inline RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int range = 3) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -range, range);
  return m;
}

inline RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    auto m = random_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

inline Subspace random_subspace(Rng& rng, std::size_t n, std::size_t max_generators) {
  std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_generators)));
  return Subspace::span(random_matrix(rng, k, n));
}

inline IntegerMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, int range) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -range, range);
  return m;
}

/// Random filtration of Q^n with jump levels in [lo, hi]: a random flag
/// built from a random invertible basis, each vector given a random level.
inline Filtration random_filtration(Rng& rng, std::size_t n, int lo, int hi) {
  if (n == 0) return Filtration(0, {});
  auto basis = random_invertible(rng, n);
  std::vector<int> levels(n);
  for (auto& l : levels) l = uniform(rng, lo, hi);
  return Filtration::from_adapted_basis(basis, levels);
}

/// Same as random_filtration but with independently drawn nested spans
/// rather than an adapted basis, so the construction path differs.
inline Filtration random_flag_filtration(Rng& rng, std::size_t n, int lo, int hi) {
  if (n == 0) return Filtration(0, {});
  std::vector<FiltrationStep> steps;
  Subspace current = Subspace::full(n);
  for (int level = lo + 1; level <= hi; ++level) {
    if (uniform(rng, 0, 2) == 0) continue;
    // A random subspace of `current`: combinations of its basis rows.
    auto coeffs = random_matrix(rng, static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(current.dim()))),
                                current.dim());
    current = current.dim() == 0 ? current : Subspace::span(coeffs * current.basis());
    steps.push_back({level, current});
  }
  steps.push_back({hi + 1, Subspace::zero(n)});
  return Filtration(n, std::move(steps));
}

/// Stacked-rank dimension of a + b, computed without Subspace::sum.
inline std::size_t sum_dim_oracle(const Subspace& a, const Subspace& b) {
  return rank(stack(a.basis(), b.basis()));
}

/// Brute-force check of F^i over a window wide enough to cover every jump.
inline bool same_filtration_on_window(const Filtration& a, const Filtration& b, int lo, int hi) {
  for (int i = lo; i <= hi; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

/// dρ(F^i) ⊆ F^{i−1} for every i in a window around the jumps: the
/// one-parameter form of the transversality condition, tested directly.
inline bool lowers_levels_by_one(const RationalMatrix& action, const Filtration& f, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) {
    Subspace from = f.at(i);
    Subspace to = f.at(i - 1);
    for (std::size_t r = 0; r < from.dim(); ++r) {
      auto image = action * from.basis().row(r);
      if (!to.contains(image)) return false;
    }
  }
  return true;
}

}  // namespace evb::testing
