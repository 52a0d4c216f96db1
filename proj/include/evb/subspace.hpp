#pragma once

#include "evb/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace evb {

/// A linear subspace of Q^n, held by its reduced row-echelon basis.
///
/// The basis is canonical: two Subspace values describe the same subspace
/// exactly when they compare equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Row span of `generators`; rows need not be independent.
  static Subspace span(const RationalMatrix& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<RationalVector>& generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim_; }
  const RationalMatrix& basis() const { return basis_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// Vectors annihilating the subspace under the standard pairing.
  Subspace annihilator() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient_dim, RationalMatrix basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

  std::size_t ambient_dim_ = 0;
  RationalMatrix basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Kernel {x : constraints · x = 0}, a subspace of Q^{cols}.
Subspace solve_linear(const RationalMatrix& constraints);

/// Complement of `lower` inside `upper` (lower ⊆ upper): the span of the
/// first rows of upper's echelon basis that each raise the rank over `lower`.
Subspace complement_in(const Subspace& lower, const Subspace& upper);

/// Span of all tensors u⊗w with u ∈ a, w ∈ b, in the Kronecker basis.
Subspace tensor_subspace(const Subspace& a, const Subspace& b);

}  // namespace evb
