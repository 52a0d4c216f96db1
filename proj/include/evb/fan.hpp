#pragma once

#include "evb/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace evb {

using LatticeVector = std::vector<std::int64_t>;

struct Ray {
  std::string id;
  LatticeVector generator;  // primitive, nonzero
};

struct Cone {
  std::vector<std::string> ray_ids;

  friend bool operator==(const Cone&, const Cone&) = default;
};

/// Rays and maximal cones in a lattice of rank `rank`.
///
/// The constructor validates: primitive nonzero generators of the right
/// length, unique ray ids, every cone strongly convex with extremal rays,
/// every ray used by some maximal cone, and pairwise intersections of
/// maximal cones equal to the cone on their shared rays.
class Fan {
 public:
  Fan(std::size_t rank, std::vector<Ray> rays, std::vector<Cone> maximal_cones);

  std::size_t rank() const { return rank_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_cones_; }

  /// Throws InvalidInput for an unknown id.
  const Ray& ray(const std::string& id) const;
  /// Ray generators of `cone`, in cone order.
  std::vector<LatticeVector> generators(const Cone& cone) const;

  /// Rays common to the two maximal cones (their intersection, after validation).
  Cone overlap(std::size_t a, std::size_t b) const;

 private:
  std::size_t rank_;
  std::vector<Ray> rays_;
  std::vector<Cone> maximal_cones_;
};

/// v / gcd(v), sign preserved. Throws InvalidInput for the zero vector.
LatticeVector primitive_generator(const LatticeVector& v);

std::int64_t pairing(const LatticeVector& a, const LatticeVector& b);

/// Nonnegative coefficients expressing `v` in the cone spanned by
/// `generators`, if it lies there. Exact; searches linearly independent
/// subsets (Carathéodory), so meant for small generator counts.
std::optional<RationalVector> cone_coordinates(const std::vector<LatticeVector>& generators, const LatticeVector& v);

/// Ray generators extend to a lattice basis.
bool is_smooth_cone(const Fan& fan, const Cone& cone);
bool is_smooth(const std::vector<LatticeVector>& generators, std::size_t rank);

/// ⟨chi, n_α⟩ ≥ 0 for every ray of the cone.
bool dual_cone_contains(const Fan& fan, const Cone& cone, const LatticeVector& chi);
bool dual_cone_contains(const std::vector<LatticeVector>& generators, const LatticeVector& chi);

/// A character χ with ⟨χ, n_α⟩ = tuple_α for each ray of a smooth cone.
/// Coordinates outside the span of the cone (in the Smith-adapted basis)
/// are zero. Throws InvalidInput for a non-smooth cone or a wrong-length tuple.
LatticeVector character_lift(const Fan& fan, const Cone& cone, const std::vector<int>& tuple);
LatticeVector character_lift(const std::vector<LatticeVector>& generators, std::size_t rank,
                             const std::vector<int>& tuple);

IntegerMatrix generator_matrix(const std::vector<LatticeVector>& generators, std::size_t rank);

}  // namespace evb
