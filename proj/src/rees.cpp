#include "evb/rees.hpp"

#include "evb/error.hpp"

#include <algorithm>
#include <numeric>

namespace evb {

GradedFreeModule make_module(std::vector<int> levels) {
  std::sort(levels.begin(), levels.end());
  return {std::move(levels)};
}

PresentedModule rees(std::size_t v_dim, const Filtration& f) {
  if (f.ambient_dim() != v_dim) throw DimensionMismatch("rees: filtration lives in the wrong space");
  // Walk the steps from the top, extending a basis of F^{next} to F^{current};
  // the new vectors realize the jump just below `next`.
  std::vector<std::pair<int, RationalVector>> generators;
  const auto& steps = f.steps();
  for (std::size_t k = steps.size(); k-- > 0;) {
    const Subspace& lower = steps[k].space;
    const Subspace upper = k == 0 ? Subspace::full(v_dim) : steps[k - 1].space;
    Subspace fresh = complement_in(lower, upper);
    for (std::size_t r = 0; r < fresh.dim(); ++r) generators.emplace_back(steps[k].level - 1, fresh.basis().row_vector(r));
  }
  std::stable_sort(generators.begin(), generators.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  PresentedModule out{{}, RationalMatrix(0, v_dim)};
  for (auto& [level, v] : generators) {
    out.module.generator_levels.push_back(level);
    out.basis.append_row(v);
  }
  return out;
}

Filtration fiber_at_one(const GradedFreeModule& m, const RationalMatrix& adapted_basis) {
  if (adapted_basis.rows() != m.rank()) throw DimensionMismatch("fiber_at_one: one basis row per generator is required");
  return Filtration::from_adapted_basis(adapted_basis, m.generator_levels);
}

std::map<int, std::size_t> fiber_at_zero(const GradedFreeModule& m) {
  std::map<int, std::size_t> histogram;
  for (int level : m.generator_levels) ++histogram[level];
  return histogram;
}

std::size_t graded_hom_dim(const GradedFreeModule& a, const GradedFreeModule& b) {
  std::size_t count = 0;
  for (int target : b.generator_levels)
    for (int source : a.generator_levels)
      if (target >= source) ++count;
  return count;
}

std::size_t filtered_hom_dim(const Filtration& f, const Filtration& g) {
  const std::size_t unknowns = f.ambient_dim() * g.ambient_dim();
  if (unknowns == 0) return 0;
  return solve_linear(filtered_map_constraints(f, g)).dim();
}

GradedFreeModule tensor_module(const GradedFreeModule& a, const GradedFreeModule& b) {
  std::vector<int> levels;
  levels.reserve(a.rank() * b.rank());
  for (int x : a.generator_levels)
    for (int y : b.generator_levels) levels.push_back(x + y);
  return make_module(std::move(levels));
}

}  // namespace evb
