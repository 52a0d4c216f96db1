#include "evb/subspace.hpp"

#include "evb/error.hpp"

#include <string>

namespace evb {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch(std::string(op) + ": ambient dimensions " + std::to_string(a.ambient_dim()) +
                            " and " + std::to_string(b.ambient_dim()) + " differ");
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, RationalMatrix(0, ambient_dim)); }

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(ambient_dim, RationalMatrix::identity(ambient_dim));
}

Subspace Subspace::span(const RationalMatrix& generators) {
  return Subspace(generators.cols(), row_reduce(generators).reduced);
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RationalVector>& generators) {
  return span(RationalMatrix::from_rows(generators, ambient_dim));
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("contains: vector length differs from ambient dimension");
  RationalMatrix m = basis_;
  m.append_row(v);
  return rank(m) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "contains");
  return subspace_sum(*this, other).dim() == dim();
}

Subspace Subspace::annihilator() const {
  if (basis_.rows() == 0) return full(ambient_dim_);
  return solve_linear(basis_);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_sum");
  if (b.is_zero() || a.is_full()) return a;
  if (a.is_zero() || b.is_full()) return b;
  return Subspace::span(stack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_intersect");
  if (a.is_full() || b.is_zero()) return b;
  if (b.is_full() || a.is_zero()) return a;
  // (a ∩ b)^⊥ = a^⊥ + b^⊥
  auto ann = subspace_sum(a.annihilator(), b.annihilator());
  return solve_linear(ann.basis());
}

Subspace solve_linear(const RationalMatrix& constraints) {
  const std::size_t n = constraints.cols();
  auto ech = row_reduce(constraints);
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  RationalMatrix kernel(0, n);
  RationalVector v(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    for (auto& x : v) x = 0;
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    kernel.append_row(v);
  }
  return Subspace::span(kernel);
}

Subspace complement_in(const Subspace& lower, const Subspace& upper) {
  require_same_ambient(lower, upper, "complement_in");
  RationalMatrix current = lower.basis();
  std::size_t current_rank = lower.dim();
  RationalMatrix chosen(0, upper.ambient_dim());
  for (std::size_t r = 0; r < upper.dim() && current_rank < upper.dim(); ++r) {
    RationalMatrix trial = current;
    trial.append_row(upper.basis().row(r));
    auto trial_rank = rank(trial);
    if (trial_rank > current_rank) {
      current = std::move(trial);
      current_rank = trial_rank;
      chosen.append_row(upper.basis().row(r));
    }
  }
  return Subspace::span(chosen);
}

Subspace tensor_subspace(const Subspace& a, const Subspace& b) {
  return Subspace::span(kronecker(a.basis(), b.basis()));
}

}  // namespace evb
