#pragma once

#include "evb/filtration.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace evb {

/// Free graded module over k[t], given by the filtration level realized by
/// each generator. Levels, not degrees: a generator at level d stands for
/// v·t^{−d} with v ∈ F^d.
struct GradedFreeModule {
  std::vector<int> generator_levels;  // kept sorted ascending

  std::size_t rank() const { return generator_levels.size(); }
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

GradedFreeModule make_module(std::vector<int> levels);

/// A module together with the basis of V that realizes it; row r of
/// `basis` is the generator at `module.generator_levels[r]`.
struct PresentedModule {
  GradedFreeModule module;
  RationalMatrix basis;
};

/// Rees module ⊕_i F^i·t^{−i}, presented by an adapted basis.
PresentedModule rees(std::size_t v_dim, const Filtration& f);

/// Fiber over t = 1: F^d is spanned by the basis rows of level ≥ d.
/// Throws SingularMatrix when the basis is not invertible.
Filtration fiber_at_one(const GradedFreeModule& m, const RationalMatrix& adapted_basis);

/// Fiber over t = 0 (associated graded): level ↦ dimension.
std::map<int, std::size_t> fiber_at_zero(const GradedFreeModule& m);

/// Dimension of degree-0 graded maps a → b: #{(i, j) : level_b(i) ≥ level_a(j)}.
std::size_t graded_hom_dim(const GradedFreeModule& a, const GradedFreeModule& b);

/// Dimension of {φ : φ(F^i) ⊆ G^i for all i}, by an exact kernel computation.
std::size_t filtered_hom_dim(const Filtration& f, const Filtration& g);

/// Generator levels are all pairwise sums.
GradedFreeModule tensor_module(const GradedFreeModule& a, const GradedFreeModule& b);

}  // namespace evb
