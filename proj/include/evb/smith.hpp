#pragma once

#include "evb/matrix.hpp"

#include <vector>

namespace evb {

/// Smith normal form a = U·D·V.
///
/// U and V are unimodular, D is diagonal with non-negative entries
/// d₁ | d₂ | … . The inverses are kept alongside since the lattice
/// code needs both directions: U_inv·a·V_inv = D.
struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  IntegerMatrix U_inv;
  IntegerMatrix V_inv;

  /// Diagonal of D, zeros included.
  std::vector<Integer> diagonal() const;
  /// Nonzero diagonal entries of D.
  std::vector<Integer> elementary_divisors() const;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

}  // namespace evb
