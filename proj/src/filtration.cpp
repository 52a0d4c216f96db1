#include "evb/filtration.hpp"

#include "evb/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace evb {

namespace {

Subspace transform_subspace(const Subspace& s, const RationalMatrix& g) {
  if (s.is_zero()) return s;
  return Subspace::span(s.basis() * g);
}

}  // namespace

Filtration::Filtration(std::size_t ambient_dim, std::vector<FiltrationStep> steps) : ambient_dim_(ambient_dim) {
  if (ambient_dim == 0) {
    for (const auto& s : steps)
      if (s.space.ambient_dim() != 0) throw DimensionMismatch("filtration step lives in the wrong space");
    return;
  }
  if (steps.empty()) throw InvalidInput("filtration of a nonzero space needs at least one step");
  Subspace previous = Subspace::full(ambient_dim);
  int last_level = std::numeric_limits<int>::min();
  bool first = true;
  for (auto& step : steps) {
    if (step.space.ambient_dim() != ambient_dim)
      throw DimensionMismatch("filtration step at level " + std::to_string(step.level) + " has ambient dimension " +
                              std::to_string(step.space.ambient_dim()) + ", expected " +
                              std::to_string(ambient_dim));
    if (!first && step.level <= last_level) throw InvalidInput("filtration levels must strictly increase");
    if (!previous.contains(step.space))
      throw InvalidInput("filtration is not decreasing at level " + std::to_string(step.level));
    first = false;
    last_level = step.level;
    if (step.space == previous) continue;
    previous = step.space;
    steps_.push_back(std::move(step));
  }
  if (!previous.is_zero()) {
    if (last_level == std::numeric_limits<int>::max()) throw InvalidInput("filtration level out of range");
    steps_.push_back({last_level + 1, Subspace::zero(ambient_dim)});
  }
}

Filtration Filtration::trivial(std::size_t ambient_dim, int level) {
  if (ambient_dim == 0) return Filtration(0, {});
  return Filtration(ambient_dim, {{level + 1, Subspace::zero(ambient_dim)}});
}

Filtration Filtration::from_adapted_basis(const RationalMatrix& basis, const std::vector<int>& levels) {
  const std::size_t n = basis.rows();
  if (basis.cols() != n || rank(basis) != n) throw SingularMatrix("adapted basis is not invertible");
  if (levels.size() != n) throw DimensionMismatch("one level per basis vector is required");
  if (n == 0) return Filtration(0, {});
  std::set<int> distinct(levels.begin(), levels.end());
  std::vector<FiltrationStep> steps;
  for (int d : distinct) {
    RationalMatrix rows(0, n);
    for (std::size_t r = 0; r < n; ++r)
      if (levels[r] >= d + 1) rows.append_row(basis.row(r));
    steps.push_back({d + 1, Subspace::span(rows)});
  }
  return Filtration(n, std::move(steps));
}

Subspace Filtration::at(int level) const {
  const FiltrationStep* current = nullptr;
  for (const auto& s : steps_) {
    if (s.level > level) break;
    current = &s;
  }
  if (current == nullptr) return Subspace::full(ambient_dim_);
  return current->space;
}

std::vector<int> Filtration::jumps() const {
  std::vector<int> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s.level - 1);
  return out;
}

std::vector<std::pair<int, std::size_t>> Filtration::jump_profile() const {
  std::vector<std::pair<int, std::size_t>> out;
  std::size_t previous = ambient_dim_;
  for (const auto& s : steps_) {
    out.emplace_back(s.level - 1, previous - s.space.dim());
    previous = s.space.dim();
  }
  return out;
}

Filtration Filtration::shifted(int delta) const {
  Filtration f = *this;
  for (auto& s : f.steps_) s.level += delta;
  return f;
}

Filtration Filtration::transformed(const RationalMatrix& g) const {
  if (g.rows() != ambient_dim_ || g.cols() != ambient_dim_)
    throw DimensionMismatch("basis change has the wrong shape");
  if (rank(g) != ambient_dim_) throw SingularMatrix("basis change is singular");
  Filtration f = *this;
  for (auto& s : f.steps_) s.space = transform_subspace(s.space, g);
  return f;
}

MultiFiltration::MultiFiltration(std::size_t ambient_dim, std::map<std::string, Filtration> per_ray)
    : ambient_dim_(ambient_dim), per_ray_(std::move(per_ray)) {
  for (const auto& [ray, f] : per_ray_)
    if (f.ambient_dim() != ambient_dim_)
      throw DimensionMismatch("filtration for ray '" + ray + "' has dimension " + std::to_string(f.ambient_dim()) +
                              ", expected " + std::to_string(ambient_dim_));
}

const Filtration& MultiFiltration::at(const std::string& ray) const {
  auto it = per_ray_.find(ray);
  if (it == per_ray_.end()) throw InvalidInput("unknown ray identifier '" + ray + "'");
  return it->second;
}

MultiFiltration MultiFiltration::transformed(const RationalMatrix& g) const {
  std::map<std::string, Filtration> out;
  for (const auto& [ray, f] : per_ray_) out.emplace(ray, f.transformed(g));
  return MultiFiltration(ambient_dim_, std::move(out));
}

ConditionKResult check_condition_K(const MultiFiltration& mf, const std::vector<std::string>& cone_rays) {
  std::vector<const Filtration*> filtrations;
  for (const auto& ray : cone_rays) filtrations.push_back(&mf.at(ray));
  if (std::set<std::string>(cone_rays.begin(), cone_rays.end()).size() != cone_rays.size())
    throw InvalidInput("cone lists a ray twice");

  const std::size_t n = mf.ambient_dim();
  ConditionKResult result;
  result.cone_rays = cone_rays;
  result.witness.ambient_dim = n;
  if (n == 0) {
    result.status = KStatus::accepted;
    result.grading = Grading{0, {}};
    return result;
  }

  const std::size_t k = cone_rays.size();
  std::vector<std::vector<int>> coords(k);
  for (std::size_t i = 0; i < k; ++i) coords[i] = filtrations[i]->jumps();

  std::map<std::vector<int>, Subspace> cache;
  auto U = [&](const std::vector<int>& p) -> const Subspace& {
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    Subspace s = Subspace::full(n);
    for (std::size_t i = 0; i < k && !s.is_zero(); ++i) s = subspace_intersect(s, filtrations[i]->at(p[i]));
    return cache.emplace(p, std::move(s)).first->second;
  };

  // Mixed-radix walk over the grid, from the top corner downwards.
  std::vector<std::size_t> index(k);
  for (std::size_t i = 0; i < k; ++i) index[i] = coords[i].size() - 1;
  std::vector<GradedPiece> pieces;
  for (;;) {
    std::vector<int> p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = coords[i][index[i]];
    Subspace top = U(p);
    if (!top.is_zero()) {
      Subspace above = Subspace::zero(n);
      for (std::size_t i = 0; i < k; ++i) {
        auto q = p;
        ++q[i];
        above = subspace_sum(above, U(q));
      }
      std::size_t g = top.dim() - above.dim();
      if (g > 0) {
        result.witness.graded_total += g;
        result.witness.piece_dims.emplace_back(p, g);
        pieces.push_back({p, complement_in(above, top)});
      }
    }
    std::size_t i = k;
    while (i > 0 && index[i - 1] == 0) {
      index[i - 1] = coords[i - 1].size() - 1;
      --i;
    }
    if (i == 0) break;
    --index[i - 1];
  }

  if (result.witness.graded_total != n) {
    result.status = KStatus::rejected;
    return result;
  }
  Grading grading{n, std::move(pieces)};
  if (!verify_grading(mf, cone_rays, grading)) {
    result.status = KStatus::indeterminate;
    return result;
  }
  result.status = KStatus::accepted;
  result.grading = std::move(grading);
  return result;
}

bool verify_grading(const MultiFiltration& mf, const std::vector<std::string>& cone_rays, const Grading& g) {
  const std::size_t n = mf.ambient_dim();
  if (g.ambient_dim != n) return false;
  for (const auto& ray : cone_rays)
    if (!mf.has_ray(ray)) return false;

  std::set<std::vector<int>> tuples;
  Subspace total = Subspace::zero(n);
  std::size_t dim_sum = 0;
  for (const auto& piece : g.pieces) {
    if (piece.tuple.size() != cone_rays.size() || piece.space.ambient_dim() != n) return false;
    if (!tuples.insert(piece.tuple).second) return false;
    dim_sum += piece.space.dim();
    total = subspace_sum(total, piece.space);
  }
  if (dim_sum != n || total.dim() != n) return false;
  if (n == 0) return true;

  for (std::size_t r = 0; r < cone_rays.size(); ++r) {
    const Filtration& f = mf.at(cone_rays[r]);
    std::set<int> levels;
    for (int j : f.jumps()) levels.insert({j, j + 1});
    for (const auto& piece : g.pieces) levels.insert({piece.tuple[r], piece.tuple[r] + 1});
    levels.insert(*levels.begin() - 1);
    for (int p : levels) {
      Subspace graded = Subspace::zero(n);
      for (const auto& piece : g.pieces)
        if (piece.tuple[r] >= p) graded = subspace_sum(graded, piece.space);
      if (graded != f.at(p)) return false;
    }
  }
  return true;
}

Filtration tensor_filtration(const Filtration& a, const Filtration& b) {
  const std::size_t n = a.ambient_dim() * b.ambient_dim();
  if (n == 0) return Filtration(0, {});
  auto ja = a.jumps();
  auto jb = b.jumps();
  const int lo = ja.front() + jb.front();
  const int hi = ja.back() + jb.back() + 1;
  std::vector<FiltrationStep> steps;
  for (int level = lo; level <= hi; ++level) {
    Subspace s = Subspace::zero(n);
    for (int i : ja) s = subspace_sum(s, tensor_subspace(a.at(i), b.at(level - i)));
    steps.push_back({level, std::move(s)});
  }
  return Filtration(n, std::move(steps));
}

RationalMatrix filtered_map_constraints(const Filtration& source, const Filtration& target) {
  const std::size_t n = source.ambient_dim();
  const std::size_t m = target.ambient_dim();
  RationalMatrix constraints(0, m * n);
  if (n == 0 || m == 0) return constraints;
  RationalVector row(m * n);
  // F^i is constant on (previous jump, jump], so the jump levels carry the tightest constraints.
  for (int i : source.jumps()) {
    Subspace from = source.at(i);
    Subspace ann = target.at(i).annihilator();
    for (std::size_t a = 0; a < ann.dim(); ++a)
      for (std::size_t s = 0; s < from.dim(); ++s) {
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < n; ++c) row[r * n + c] = ann.basis()(a, r) * from.basis()(s, c);
        constraints.append_row(row);
      }
  }
  return constraints;
}

}  // namespace evb
