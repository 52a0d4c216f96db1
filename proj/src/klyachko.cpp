#include "evb/klyachko.hpp"

#include "evb/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace evb {

namespace {

constexpr std::size_t kMaxBundleRank = 3;

void require_rays_match(const Fan& fan, const MultiFiltration& mf) {
  std::set<std::string> fan_ids;
  for (const auto& r : fan.rays()) {
    fan_ids.insert(r.id);
    if (!mf.has_ray(r.id)) throw InvalidInput("no filtration given for ray '" + r.id + "'");
  }
  for (const auto& [id, f] : mf.per_ray())
    if (!fan_ids.contains(id)) throw InvalidInput("filtration given for unknown ray '" + id + "'");
}

LatticeVector difference(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

LatticeVector sum(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] + b[i];
  return d;
}

using MonomialSum = std::map<LatticeVector, Rational>;

bool matches(const MonomialSum& sum, const TransitionEntry& expected) {
  if (expected.coefficient == 0) return sum.empty();
  return sum.size() == 1 && sum.begin()->first == expected.character && sum.begin()->second == expected.coefficient;
}

}  // namespace

ChartsResult build_charts(const Fan& fan, const MultiFiltration& mf) {
  if (fan.rank() > kMaxBundleRank)
    throw InvalidInput("bundle construction supports lattice rank ≤ 3, got " + std::to_string(fan.rank()));
  require_rays_match(fan, mf);
  for (std::size_t c = 0; c < fan.maximal_cones().size(); ++c)
    if (!is_smooth_cone(fan, fan.maximal_cones()[c]))
      throw InvalidInput("maximal cone " + std::to_string(c) + " is not smooth");

  ChartsResult result;
  const std::size_t n = mf.ambient_dim();
  for (std::size_t c = 0; c < fan.maximal_cones().size(); ++c) {
    const Cone& cone = fan.maximal_cones()[c];
    auto condition = check_condition_K(mf, cone.ray_ids);
    if (condition.status != KStatus::accepted) {
      result.charts.clear();
      result.failure = ChartFailure{c, cone, std::move(condition)};
      return result;
    }
    ChartData chart;
    chart.cone_index = c;
    chart.cone = cone;
    chart.grading = std::move(*condition.grading);
    chart.adapted_basis = RationalMatrix(0, n);
    for (std::size_t p = 0; p < chart.grading.pieces.size(); ++p) {
      const auto& piece = chart.grading.pieces[p];
      chart.characters.push_back(character_lift(fan, cone, piece.tuple));
      for (std::size_t r = 0; r < piece.space.dim(); ++r) {
        chart.adapted_basis.append_row(piece.space.basis().row(r));
        chart.row_piece.push_back(p);
      }
    }
    result.charts.push_back(std::move(chart));
  }
  return result;
}

std::vector<TransitionData> build_transitions(const std::vector<ChartData>& charts) {
  std::vector<TransitionData> out;
  std::vector<RationalMatrix> inverse_frames;
  for (const auto& chart : charts) inverse_frames.push_back(inverse(chart.adapted_basis.transpose()));
  for (std::size_t s = 0; s < charts.size(); ++s)
    for (std::size_t t = 0; t < charts.size(); ++t) {
      if (s == t) continue;
      const auto& src = charts[s];
      const auto& tgt = charts[t];
      if (src.adapted_basis.cols() != tgt.adapted_basis.cols())
        throw DimensionMismatch("charts live on spaces of different dimension");
      // Column j holds source row j in target coordinates.
      RationalMatrix change = inverse_frames[t] * src.adapted_basis.transpose();
      TransitionData td;
      td.source = src.cone_index;
      td.target = tgt.cone_index;
      td.size = change.rows();
      td.entries.reserve(td.size * td.size);
      for (std::size_t i = 0; i < td.size; ++i)
        for (std::size_t j = 0; j < td.size; ++j)
          td.entries.push_back({change(i, j), difference(src.row_character(j), tgt.row_character(i))});
      out.push_back(std::move(td));
    }
  return out;
}

RegularityReport check_regularity(const Fan& fan, const std::vector<TransitionData>& transitions) {
  RegularityReport report;
  for (const auto& td : transitions) {
    auto overlap = fan.generators(fan.overlap(td.source, td.target));
    for (std::size_t i = 0; i < td.size; ++i)
      for (std::size_t j = 0; j < td.size; ++j) {
        const auto& e = td.at(i, j);
        if (e.coefficient == 0) continue;
        LatticeVector exponent(e.character.size());
        for (std::size_t k = 0; k < exponent.size(); ++k) exponent[k] = -e.character[k];
        if (!dual_cone_contains(overlap, exponent)) {
          report.regular = false;
          report.violations.push_back({td.source, td.target, i, j, e.character});
        }
      }
  }
  return report;
}

bool check_cocycle(const std::vector<TransitionData>& transitions) {
  std::map<std::pair<std::size_t, std::size_t>, const TransitionData*> by_pair;
  for (const auto& td : transitions) by_pair[{td.source, td.target}] = &td;

  for (const auto& first : transitions)
    for (const auto& second : transitions) {
      if (second.source != first.target || second.target == first.target) continue;
      const std::size_t s = first.source;
      const std::size_t u = second.target;
      const TransitionData* direct = nullptr;
      if (u != s) {
        auto it = by_pair.find({s, u});
        if (it == by_pair.end()) continue;
        direct = it->second;
      }
      const std::size_t n = first.size;
      if (second.size != n || (direct && direct->size != n)) return false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          MonomialSum product;
          for (std::size_t k = 0; k < n; ++k) {
            const auto& a = second.at(i, k);
            const auto& b = first.at(k, j);
            if (a.coefficient == 0 || b.coefficient == 0) continue;
            auto& slot = product[sum(a.character, b.character)];
            slot += a.coefficient * b.coefficient;
            if (slot == 0) product.erase(sum(a.character, b.character));
          }
          TransitionEntry expected;
          if (direct) {
            expected = direct->at(i, j);
          } else {
            expected.coefficient = i == j ? 1 : 0;
            expected.character = LatticeVector(first.at(0, 0).character.size(), 0);
          }
          if (!matches(product, expected)) return false;
        }
    }
  return true;
}

GlobalSections global_sections(const Fan& fan, const MultiFiltration& mf) {
  require_rays_match(fan, mf);
  for (std::size_t c = 0; c < fan.maximal_cones().size(); ++c) {
    auto condition = check_condition_K(mf, fan.maximal_cones()[c].ray_ids);
    if (condition.status != KStatus::accepted)
      throw InvalidInput("condition (K) fails on maximal cone " + std::to_string(c));
  }
  GlobalSections out;
  const std::size_t n = mf.ambient_dim();
  if (n == 0) return out;

  const std::size_t r = fan.rank();
  std::vector<LatticeVector> gens;
  std::vector<const Filtration*> filtrations;
  std::vector<Rational> top;
  for (const auto& ray : fan.rays()) {
    gens.push_back(ray.generator);
    filtrations.push_back(&mf.at(ray.id));
    top.emplace_back(filtrations.back()->jumps().back());
  }

  // ±e_k = Σ λ_α n_α with λ ≥ 0 bounds ±χ_k by Σ λ_α·(top jump of α).
  std::vector<std::int64_t> lo(r), hi(r);
  for (std::size_t k = 0; k < r; ++k)
    for (int sign : {1, -1}) {
      LatticeVector e(r, 0);
      e[k] = sign;
      auto lambda = cone_coordinates(gens, e);
      if (!lambda) throw InvalidInput("section space is unbounded: rays do not positively span the lattice");
      Rational bound = 0;
      for (std::size_t a = 0; a < gens.size(); ++a) bound += (*lambda)[a] * top[a];
      Integer floor_bound;
      mpz_fdiv_q(floor_bound.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
      if (sign > 0)
        hi[k] = floor_bound.get_si();
      else
        lo[k] = -floor_bound.get_si();
    }

  LatticeVector chi = lo;
  for (;;) {
    bool empty_box = false;
    for (std::size_t k = 0; k < r; ++k)
      if (lo[k] > hi[k]) empty_box = true;
    if (empty_box) break;
    Subspace s = Subspace::full(n);
    for (std::size_t a = 0; a < gens.size() && !s.is_zero(); ++a) {
      auto level = pairing(chi, gens[a]);
      if (level > top[a]) {
        s = Subspace::zero(n);
        break;
      }
      s = subspace_intersect(s, filtrations[a]->at(static_cast<int>(level)));
    }
    if (!s.is_zero()) {
      out.dim += s.dim();
      out.weights.push_back({chi, s.dim()});
    }
    std::size_t k = 0;
    while (k < r && chi[k] == hi[k]) {
      chi[k] = lo[k];
      ++k;
    }
    if (k == r) break;
    ++chi[k];
  }
  return out;
}

}  // namespace evb
