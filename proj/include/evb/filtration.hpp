#pragma once

#include "evb/subspace.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evb {

/// One stored step of a filtration: F^i = space for level ≤ i < next level.
struct FiltrationStep {
  int level;
  Subspace space;

  friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

/// Finite decreasing filtration F^• of Q^n.
///
/// F^i is a left-closed step function of i: it is the whole space below the
/// first stored level, equals the space of the last stored step whose level
/// is ≤ i, and is zero from the last stored level on (the final stored step
/// of a nonzero space is always the zero subspace). Construction normalizes
/// the step list, so equal filtrations compare equal.
class Filtration {
 public:
  Filtration() = default;

  /// Validates and normalizes. Levels must strictly increase and spaces must
  /// be nested; repeated spaces are dropped, and a zero step is appended one
  /// level above the last listed step when the list does not end in zero.
  Filtration(std::size_t ambient_dim, std::vector<FiltrationStep> steps);

  /// The filtration with a single jump at `level` (F^level = V, F^{level+1} = 0).
  static Filtration trivial(std::size_t ambient_dim, int level = 0);

  /// F^d = span of the rows whose level is ≥ d. Throws SingularMatrix unless
  /// `basis` is square and invertible.
  static Filtration from_adapted_basis(const RationalMatrix& basis, const std::vector<int>& levels);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<FiltrationStep>& steps() const { return steps_; }

  /// F^level.
  Subspace at(int level) const;

  /// Levels d with F^d ≠ F^{d+1}, ascending.
  std::vector<int> jumps() const;
  /// (d, dim F^d − dim F^{d+1}) for every jump d.
  std::vector<std::pair<int, std::size_t>> jump_profile() const;

  /// Same filtration with every level moved by `delta`.
  Filtration shifted(int delta) const;
  /// Image under the invertible map x ↦ x·g (row-vector convention).
  Filtration transformed(const RationalMatrix& g) const;

  friend bool operator==(const Filtration&, const Filtration&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<FiltrationStep> steps_;
};

/// F^i of `f`; free-function spelling of Filtration::at.
inline Subspace filtration_level(const Filtration& f, int i) { return f.at(i); }

/// One filtration per ray, all on the same space.
class MultiFiltration {
 public:
  MultiFiltration() = default;
  MultiFiltration(std::size_t ambient_dim, std::map<std::string, Filtration> per_ray);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::map<std::string, Filtration>& per_ray() const { return per_ray_; }
  /// Throws InvalidInput for an unknown ray.
  const Filtration& at(const std::string& ray) const;
  bool has_ray(const std::string& ray) const { return per_ray_.contains(ray); }

  MultiFiltration transformed(const RationalMatrix& g) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::map<std::string, Filtration> per_ray_;
};

struct GradedPiece {
  std::vector<int> tuple;  // one level per cone ray, in cone order
  Subspace space;
};

/// A direct-sum decomposition V = ⊕ pieces indexed by level tuples.
struct Grading {
  std::size_t ambient_dim = 0;
  std::vector<GradedPiece> pieces;
};

enum class KStatus { accepted, rejected, indeterminate };

/// Dimension count behind a (K) verdict: Σ dim G_p against dim V.
struct DimensionWitness {
  std::size_t graded_total = 0;
  std::size_t ambient_dim = 0;
  /// Nonzero candidate piece dimensions, by grid tuple.
  std::vector<std::pair<std::vector<int>, std::size_t>> piece_dims;
};

struct ConditionKResult {
  KStatus status = KStatus::rejected;
  std::vector<std::string> cone_rays;
  std::optional<Grading> grading;  // set iff accepted
  DimensionWitness witness;
};

/// Decides whether the filtrations of `cone_rays` admit a common grading
/// F_α^p = ⊕_{tuple_α ≥ p} G_tuple, and constructs one if so.
///
/// Works on the grid of jump-level tuples: U_p = ∩_α F_α^{p_α} and
/// G_p = complement of Σ_i U_{p+e_i} inside U_p. The sum of the dim G_p is
/// independent of the complements chosen and equals dim V exactly when a
/// grading exists. An accepted grading is re-checked with verify_grading;
/// a failed re-check yields `indeterminate`.
ConditionKResult check_condition_K(const MultiFiltration& mf, const std::vector<std::string>& cone_rays);

/// True iff the pieces are independent, span V, have distinct tuples of the
/// right length, and reproduce every step of every listed ray's filtration.
bool verify_grading(const MultiFiltration& mf, const std::vector<std::string>& cone_rays, const Grading& g);

/// Filtration on V⊗W (Kronecker basis): level k is Σ_{i+j=k} F^i(V)⊗F^j(W).
Filtration tensor_filtration(const Filtration& a, const Filtration& b);

/// Linear constraints on vec(φ) (row-major, φ of shape target×source)
/// expressing φ(F^i) ⊆ G^i for every i.
RationalMatrix filtered_map_constraints(const Filtration& source, const Filtration& target);

}  // namespace evb
