#include "evb/fan.hpp"

#include "evb/error.hpp"
#include "evb/smith.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace evb {

namespace {

RationalVector to_rational(const LatticeVector& v) {
  RationalVector q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rational(static_cast<long>(v[i]));
  return q;
}

LatticeVector negated(const LatticeVector& v) {
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

// Solves Σ λ_i g_i = v for linearly independent g_i; nullopt if inconsistent.
std::optional<RationalVector> solve_independent(const std::vector<const LatticeVector*>& gens,
                                                const LatticeVector& v) {
  const std::size_t dim = v.size();
  const std::size_t k = gens.size();
  RationalMatrix aug(dim, k + 1);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug(r, c) = Rational(static_cast<long>((*gens[c])[r]));
    aug(r, k) = Rational(static_cast<long>(v[r]));
  }
  auto ech = row_reduce(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == k) return std::nullopt;
  RationalVector lambda(k);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) lambda[ech.pivots[r]] = ech.reduced(r, k);
  return lambda;
}

bool independent(const std::vector<const LatticeVector*>& gens, std::size_t dim) {
  RationalMatrix m(0, dim);
  for (auto* g : gens) m.append_row(to_rational(*g));
  return rank(m) == gens.size();
}

// Is some element of `positive` a nonnegative combination summing to zero
// together with `free_rays` (either sign) and the rest of `positive`?
bool has_positive_relation(const std::vector<LatticeVector>& positive, const std::vector<LatticeVector>& free_rays) {
  std::vector<LatticeVector> pool = positive;
  for (const auto& f : free_rays) {
    pool.push_back(f);
    pool.push_back(negated(f));
  }
  for (std::size_t i = 0; i < positive.size(); ++i) {
    std::vector<LatticeVector> others;
    for (std::size_t j = 0; j < pool.size(); ++j)
      if (j != i) others.push_back(pool[j]);
    // λ_i > 0 in a relation ⟺ −p_i lies in the cone on the remaining vectors.
    if (cone_coordinates(others, negated(positive[i]))) return true;
  }
  return false;
}

}  // namespace

LatticeVector primitive_generator(const LatticeVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g == 0) throw InvalidInput("primitive_generator: zero vector");
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

std::int64_t pairing(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("pairing: lengths differ");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::optional<RationalVector> cone_coordinates(const std::vector<LatticeVector>& generators, const LatticeVector& v) {
  const std::size_t k = generators.size();
  const std::size_t dim = v.size();
  if (k >= 8 * sizeof(unsigned long) - 1) throw InvalidInput("cone_coordinates: too many generators");
  for (const auto& g : generators)
    if (g.size() != dim) throw DimensionMismatch("cone_coordinates: generator length differs");
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::vector<const LatticeVector*> subset;
    std::vector<std::size_t> which;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ul << i)) {
        subset.push_back(&generators[i]);
        which.push_back(i);
      }
    if (subset.size() > dim || !independent(subset, dim)) continue;
    auto lambda = solve_independent(subset, v);
    if (!lambda) continue;
    if (std::any_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x < 0; })) continue;
    RationalVector full(k);
    for (std::size_t i = 0; i < which.size(); ++i) full[which[i]] = (*lambda)[i];
    return full;
  }
  return std::nullopt;
}

Fan::Fan(std::size_t rank, std::vector<Ray> rays, std::vector<Cone> maximal_cones)
    : rank_(rank), rays_(std::move(rays)), maximal_cones_(std::move(maximal_cones)) {
  std::set<std::string> ids;
  for (const auto& r : rays_) {
    if (!ids.insert(r.id).second) throw InvalidInput("duplicate ray id '" + r.id + "'");
    if (r.generator.size() != rank_)
      throw InvalidInput("ray '" + r.id + "' has " + std::to_string(r.generator.size()) +
                         " coordinates, lattice rank is " + std::to_string(rank_));
    if (std::all_of(r.generator.begin(), r.generator.end(), [](auto x) { return x == 0; }))
      throw InvalidInput("ray '" + r.id + "' has the zero generator");
    if (primitive_generator(r.generator) != r.generator)
      throw InvalidInput("ray '" + r.id + "' generator is not primitive");
  }

  std::set<std::string> used;
  for (std::size_t c = 0; c < maximal_cones_.size(); ++c) {
    const auto& cone = maximal_cones_[c];
    std::set<std::string> in_cone;
    for (const auto& id : cone.ray_ids) {
      ray(id);
      if (!in_cone.insert(id).second) throw InvalidInput("cone " + std::to_string(c) + " lists ray '" + id + "' twice");
      used.insert(id);
    }
    auto gens = generators(cone);
    if (has_positive_relation(gens, {}))
      throw InvalidInput("cone " + std::to_string(c) + " is not strongly convex");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<LatticeVector> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      if (cone_coordinates(others, gens[i]))
        throw InvalidInput("ray '" + cone.ray_ids[i] + "' is not extremal in cone " + std::to_string(c));
    }
  }
  for (const auto& r : rays_)
    if (!used.contains(r.id)) throw InvalidInput("ray '" + r.id + "' belongs to no maximal cone");

  // σ ∩ τ = cone(shared rays): no point of σ ∩ τ may need a non-shared ray.
  for (std::size_t a = 0; a < maximal_cones_.size(); ++a)
    for (std::size_t b = a + 1; b < maximal_cones_.size(); ++b) {
      auto shared = overlap(a, b);
      std::set<std::string> shared_ids(shared.ray_ids.begin(), shared.ray_ids.end());
      std::vector<LatticeVector> positive;
      for (const auto& id : maximal_cones_[a].ray_ids)
        if (!shared_ids.contains(id)) positive.push_back(ray(id).generator);
      for (const auto& id : maximal_cones_[b].ray_ids)
        if (!shared_ids.contains(id)) positive.push_back(negated(ray(id).generator));
      if (has_positive_relation(positive, generators(shared)))
        throw InvalidInput("maximal cones " + std::to_string(a) + " and " + std::to_string(b) +
                           " do not meet in a common face");
    }
}

const Ray& Fan::ray(const std::string& id) const {
  auto it = std::find_if(rays_.begin(), rays_.end(), [&](const Ray& r) { return r.id == id; });
  if (it == rays_.end()) throw InvalidInput("unknown ray identifier '" + id + "'");
  return *it;
}

std::vector<LatticeVector> Fan::generators(const Cone& cone) const {
  std::vector<LatticeVector> out;
  for (const auto& id : cone.ray_ids) out.push_back(ray(id).generator);
  return out;
}

Cone Fan::overlap(std::size_t a, std::size_t b) const {
  const auto& ra = maximal_cones_.at(a).ray_ids;
  const auto& rb = maximal_cones_.at(b).ray_ids;
  Cone shared;
  for (const auto& id : ra)
    if (std::find(rb.begin(), rb.end(), id) != rb.end()) shared.ray_ids.push_back(id);
  return shared;
}

IntegerMatrix generator_matrix(const std::vector<LatticeVector>& generators, std::size_t rank) {
  IntegerMatrix m(generators.size(), rank);
  for (std::size_t r = 0; r < generators.size(); ++r) {
    if (generators[r].size() != rank) throw DimensionMismatch("generator length differs from lattice rank");
    for (std::size_t c = 0; c < rank; ++c) m(r, c) = Integer(static_cast<long>(generators[r][c]));
  }
  return m;
}

bool is_smooth(const std::vector<LatticeVector>& generators, std::size_t rank) {
  if (generators.size() > rank) return false;
  auto snf = smith_normal_form(generator_matrix(generators, rank));
  auto diag = snf.diagonal();
  return std::all_of(diag.begin(), diag.end(), [](const Integer& d) { return d == 1; });
}

bool is_smooth_cone(const Fan& fan, const Cone& cone) { return is_smooth(fan.generators(cone), fan.rank()); }

bool dual_cone_contains(const std::vector<LatticeVector>& generators, const LatticeVector& chi) {
  return std::all_of(generators.begin(), generators.end(), [&](const auto& g) { return pairing(chi, g) >= 0; });
}

bool dual_cone_contains(const Fan& fan, const Cone& cone, const LatticeVector& chi) {
  if (chi.size() != fan.rank()) throw DimensionMismatch("character length differs from lattice rank");
  return dual_cone_contains(fan.generators(cone), chi);
}

LatticeVector character_lift(const std::vector<LatticeVector>& generators, std::size_t rank,
                             const std::vector<int>& tuple) {
  if (tuple.size() != generators.size()) throw InvalidInput("character_lift: one level per cone ray is required");
  if (!is_smooth(generators, rank)) throw InvalidInput("character_lift: cone is not smooth");
  const std::size_t k = generators.size();
  // N = U·D·V with D = [I_k | 0]; solve N·χ = t as χ = V⁻¹·(U⁻¹·t, 0).
  auto snf = smith_normal_form(generator_matrix(generators, rank));
  std::vector<Integer> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = tuple[i];
  auto head = snf.U_inv * std::span<const Integer>(t);
  std::vector<Integer> y(rank);
  for (std::size_t i = 0; i < k; ++i) y[i] = head[i];
  auto chi = snf.V_inv * std::span<const Integer>(y);
  LatticeVector out(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (!chi[i].fits_slong_p()) throw InvalidInput("character_lift: coordinate out of range");
    out[i] = chi[i].get_si();
  }
  for (std::size_t i = 0; i < k; ++i)
    if (pairing(out, generators[i]) != tuple[i]) throw InvalidInput("character_lift: inconsistent system");
  return out;
}

LatticeVector character_lift(const Fan& fan, const Cone& cone, const std::vector<int>& tuple) {
  return character_lift(fan.generators(cone), fan.rank(), tuple);
}

}  // namespace evb
