#pragma once

#include "evb/filtration.hpp"
#include "evb/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace evb {

/// Structure constants: [ξ_a, ξ_b] = Σ_c constants[a][b][c] ξ_c.
using StructureConstants = std::vector<std::vector<RationalVector>>;

/// Action of a filtered Lie algebra on W: one matrix per Lie basis element
/// (acting on column vectors) and one filtration of the Lie algebra per ray.
struct LieFiltrationData {
  std::size_t lie_dim = 0;
  std::vector<RationalMatrix> action;
  std::optional<StructureConstants> brackets;
  std::map<std::string, Filtration> lie_levels;
  /// Only connected stabilizers are handled; false is rejected on validation.
  bool connected = true;
};

/// An object (W, ρ, {F_α^•}) of the filtered representation category.
class FilteredRep {
 public:
  /// Throws InvalidInput / DimensionMismatch when the data is inconsistent:
  /// wrong matrix shapes, action not respecting supplied brackets, ray sets
  /// of the Lie and W filtrations differing, or a disconnected stabilizer.
  FilteredRep(std::size_t w_dim, LieFiltrationData lie, MultiFiltration mf);

  std::size_t w_dim() const { return w_dim_; }
  const LieFiltrationData& lie() const { return lie_; }
  const MultiFiltration& filtrations() const { return mf_; }

  /// ρ(u) for u given in the Lie basis.
  RationalMatrix act(std::span<const Rational> lie_element) const;

 private:
  std::size_t w_dim_;
  LieFiltrationData lie_;
  MultiFiltration mf_;
};

struct ConditionCViolation {
  std::string ray;
  int lie_level = 0;
  int w_level = 0;
  RationalVector lie_element;  // basis vector of F_α^{lie_level}(Lie)
  RationalVector witness;      // basis vector of F_α^{w_level}(W) pushed outside F_α^{lie_level + w_level}(W)
};

struct ConditionCResult {
  bool holds = true;
  std::vector<ConditionCViolation> violations;
};

/// F_α^i(Lie) · F_α^j(W) ⊆ F_α^{i+j}(W) for every ray α and all i, j.
/// Only jump levels need checking: both steps are constant between jumps.
ConditionCResult check_condition_C(const FilteredRep& rep);

/// Ray id used by pgl2_preset.
inline constexpr const char* kPgl2Ray = "alpha";

/// Single-ray object with a one-dimensional Lie algebra filtered with its
/// only jump at −1, so condition (C) says the action lowers levels by one.
FilteredRep pgl2_preset(std::size_t w_dim, const RationalMatrix& action, const Filtration& filtration);

struct HomSpace {
  std::size_t dim = 0;
  std::vector<RationalMatrix> basis;  // maps W_a → W_b as w_b × w_a matrices
};

/// Lie-equivariant maps preserving every ray filtration. Throws InvalidInput
/// when the objects do not share ray set, Lie dimension and Lie filtrations.
HomSpace category_hom(const FilteredRep& a, const FilteredRep& b);

struct NeutralizabilityResult {
  bool neutralizable = false;
  std::vector<Integer> divisors;  // nonzero elementary divisors
};

/// Columns of `generators` are generators of a sublattice Λ in coordinates
/// of the ambient character lattice. Λ is a direct summand iff every
/// elementary divisor is 1. Throws InvalidInput for dependent columns.
NeutralizabilityResult is_neutralizable(const IntegerMatrix& generators);

}  // namespace evb
