#include "evb/spherical.hpp"

#include "evb/error.hpp"
#include "evb/smith.hpp"

#include <algorithm>

namespace evb {

namespace {

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix ab = a * b;
  RationalMatrix ba = b * a;
  for (std::size_t i = 0; i < ab.rows(); ++i)
    for (std::size_t j = 0; j < ab.cols(); ++j) ab(i, j) -= ba(i, j);
  return ab;
}

std::vector<std::string> ray_ids(const std::map<std::string, Filtration>& m) {
  std::vector<std::string> out;
  for (const auto& [id, f] : m) out.push_back(id);
  return out;
}

}  // namespace

FilteredRep::FilteredRep(std::size_t w_dim, LieFiltrationData lie, MultiFiltration mf)
    : w_dim_(w_dim), lie_(std::move(lie)), mf_(std::move(mf)) {
  if (!lie_.connected)
    throw InvalidInput("disconnected stabilizers are not supported; the Lie action does not determine the representation");
  if (mf_.ambient_dim() != w_dim_) throw DimensionMismatch("W filtrations have the wrong dimension");
  if (lie_.action.size() != lie_.lie_dim)
    throw DimensionMismatch("expected " + std::to_string(lie_.lie_dim) + " action matrices, got " +
                            std::to_string(lie_.action.size()));
  for (std::size_t a = 0; a < lie_.action.size(); ++a)
    if (lie_.action[a].rows() != w_dim_ || lie_.action[a].cols() != w_dim_)
      throw DimensionMismatch("action matrix " + std::to_string(a) + " is not " + std::to_string(w_dim_) + "×" +
                              std::to_string(w_dim_));
  for (const auto& [ray, f] : lie_.lie_levels)
    if (f.ambient_dim() != lie_.lie_dim)
      throw DimensionMismatch("Lie filtration for ray '" + ray + "' has the wrong dimension");
  if (ray_ids(lie_.lie_levels) != ray_ids(mf_.per_ray()))
    throw InvalidInput("Lie filtrations and W filtrations are indexed by different rays");
  if (lie_.brackets) {
    const auto& c = *lie_.brackets;
    const std::size_t m = lie_.lie_dim;
    if (c.size() != m) throw DimensionMismatch("structure constants have the wrong shape");
    for (std::size_t a = 0; a < m; ++a) {
      if (c[a].size() != m) throw DimensionMismatch("structure constants have the wrong shape");
      for (std::size_t b = 0; b < m; ++b) {
        if (c[a][b].size() != m) throw DimensionMismatch("structure constants have the wrong shape");
        RationalMatrix expected(w_dim_, w_dim_);
        for (std::size_t k = 0; k < m; ++k)
          for (std::size_t i = 0; i < w_dim_; ++i)
            for (std::size_t j = 0; j < w_dim_; ++j) expected(i, j) += c[a][b][k] * lie_.action[k](i, j);
        if (commutator(lie_.action[a], lie_.action[b]) != expected)
          throw InvalidInput("action does not respect the bracket [" + std::to_string(a) + ", " + std::to_string(b) +
                             "]");
      }
    }
  }
}

RationalMatrix FilteredRep::act(std::span<const Rational> lie_element) const {
  if (lie_element.size() != lie_.lie_dim) throw DimensionMismatch("Lie element has the wrong length");
  RationalMatrix out(w_dim_, w_dim_);
  for (std::size_t k = 0; k < lie_.lie_dim; ++k) {
    if (lie_element[k] == 0) continue;
    for (std::size_t i = 0; i < w_dim_; ++i)
      for (std::size_t j = 0; j < w_dim_; ++j) out(i, j) += lie_element[k] * lie_.action[k](i, j);
  }
  return out;
}

ConditionCResult check_condition_C(const FilteredRep& rep) {
  ConditionCResult result;
  if (rep.w_dim() == 0 || rep.lie().lie_dim == 0) return result;
  for (const auto& [ray, lie_f] : rep.lie().lie_levels) {
    const Filtration& w_f = rep.filtrations().at(ray);
    for (int i : lie_f.jumps()) {
      Subspace lie_step = lie_f.at(i);
      for (int j : w_f.jumps()) {
        Subspace source = w_f.at(j);
        Subspace target = w_f.at(i + j);
        for (std::size_t u = 0; u < lie_step.dim(); ++u) {
          auto element = lie_step.basis().row_vector(u);
          RationalMatrix rho = rep.act(element);
          for (std::size_t s = 0; s < source.dim(); ++s) {
            auto image = rho * source.basis().row(s);
            if (!target.contains(image)) {
              result.holds = false;
              result.violations.push_back({ray, i, j, element, source.basis().row_vector(s)});
            }
          }
        }
      }
    }
  }
  return result;
}

FilteredRep pgl2_preset(std::size_t w_dim, const RationalMatrix& action, const Filtration& filtration) {
  LieFiltrationData lie;
  lie.lie_dim = 1;
  lie.action = {action};
  lie.lie_levels.emplace(kPgl2Ray, Filtration::trivial(1, -1));
  std::map<std::string, Filtration> w;
  w.emplace(kPgl2Ray, filtration);
  return FilteredRep(w_dim, std::move(lie), MultiFiltration(w_dim, std::move(w)));
}

HomSpace category_hom(const FilteredRep& a, const FilteredRep& b) {
  const auto& la = a.lie();
  const auto& lb = b.lie();
  if (la.lie_dim != lb.lie_dim) throw InvalidInput("category_hom: Lie algebras have different dimensions");
  if (la.lie_levels != lb.lie_levels) throw InvalidInput("category_hom: Lie filtrations differ");
  if (la.brackets && lb.brackets && *la.brackets != *lb.brackets)
    throw InvalidInput("category_hom: structure constants differ");
  if (ray_ids(a.filtrations().per_ray()) != ray_ids(b.filtrations().per_ray()))
    throw InvalidInput("category_hom: ray sets differ");

  const std::size_t n = a.w_dim();
  const std::size_t m = b.w_dim();
  HomSpace hom;
  if (n == 0 || m == 0) return hom;

  // φ is m×n, unknowns vec(φ) row-major.
  RationalMatrix constraints(0, m * n);
  RationalVector row(m * n);
  for (std::size_t x = 0; x < la.lie_dim; ++x) {
    const auto& A = la.action[x];
    const auto& B = lb.action[x];
    // (φA − Bφ)_{rc} = Σ_k φ_{rk} A_{kc} − Σ_k B_{rk} φ_{kc}
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::fill(row.begin(), row.end(), Rational(0));
        for (std::size_t k = 0; k < n; ++k) row[r * n + k] += A(k, c);
        for (std::size_t k = 0; k < m; ++k) row[k * n + c] -= B(r, k);
        constraints.append_row(row);
      }
  }
  for (const auto& [ray, f] : a.filtrations().per_ray())
    constraints = stack(constraints, filtered_map_constraints(f, b.filtrations().at(ray)));

  auto kernel = solve_linear(constraints);
  hom.dim = kernel.dim();
  for (std::size_t v = 0; v < kernel.dim(); ++v) {
    RationalMatrix phi(m, n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) phi(r, c) = kernel.basis()(v, r * n + c);
    hom.basis.push_back(std::move(phi));
  }
  return hom;
}

NeutralizabilityResult is_neutralizable(const IntegerMatrix& generators) {
  if (rank(to_rational(generators)) != generators.cols())
    throw InvalidInput("lattice generators are linearly dependent");
  auto snf = smith_normal_form(generators);
  NeutralizabilityResult result;
  result.divisors = snf.elementary_divisors();
  result.neutralizable =
      std::all_of(result.divisors.begin(), result.divisors.end(), [](const Integer& d) { return d == 1; });
  return result;
}

}  // namespace evb
