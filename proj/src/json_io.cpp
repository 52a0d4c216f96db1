#include "evb/json_io.hpp"

#include "evb/error.hpp"

#include <limits>

namespace evb::io {

namespace {

int int_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw FieldError(path, "expected an integer");
  auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() / 4 || v > std::numeric_limits<int>::max() / 4)
    throw FieldError(path, "integer out of range");
  return static_cast<int>(v);
}

std::size_t count_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw FieldError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const json& array_field(const json& j, const std::string& path) {
  if (!j.is_array()) throw FieldError(path, "expected an array");
  return j;
}

const json& object_field(const json& j, const std::string& path) {
  if (!j.is_object()) throw FieldError(path, "expected an object");
  return j;
}

Integer integer_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rational q = rational_from_json(j, path);
    if (q.get_den() != 1) throw FieldError(path, "expected an integer");
    return q.get_num();
  }
  throw FieldError(path, "expected an integer");
}

LatticeVector lattice_vector_from_json(const json& j, const std::string& path) {
  array_field(j, path);
  LatticeVector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_number_integer()) throw FieldError(p, "expected an integer");
    v.push_back(j[i].get<std::int64_t>());
  }
  return v;
}

}  // namespace

const json& field(const json& obj, const std::string& key, const std::string& path) {
  object_field(obj, path);
  auto it = obj.find(key);
  if (it == obj.end()) throw FieldError(path, "missing field \"" + key + "\"");
  return *it;
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) throw FieldError(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidInput& e) {
    throw FieldError(path, e.what());
  }
}

json to_json(const Rational& q) { return to_string(q); }
json to_json(const Integer& z) { return to_string(z); }

json to_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

RationalMatrix matrix_from_json(const json& j, std::size_t cols, const std::string& path) {
  array_field(j, path);
  RationalMatrix m(0, cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto rp = path + "[" + std::to_string(r) + "]";
    array_field(j[r], rp);
    if (j[r].size() != cols)
      throw FieldError(rp, "expected " + std::to_string(cols) + " entries, got " + std::to_string(j[r].size()));
    RationalVector row;
    for (std::size_t c = 0; c < cols; ++c) row.push_back(rational_from_json(j[r][c], rp + "[" + std::to_string(c) + "]"));
    m.append_row(row);
  }
  return m;
}

json to_json(const RationalMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row_vector(r)));
  return a;
}

IntegerMatrix integer_matrix_from_json(const json& j, const std::string& path) {
  array_field(j, path);
  if (j.empty()) throw FieldError(path, "expected a nonempty matrix");
  if (!j[0].is_array()) {
    IntegerMatrix column(j.size(), 1);
    for (std::size_t r = 0; r < j.size(); ++r) column(r, 0) = integer_from_json(j[r], path + "[" + std::to_string(r) + "]");
    return column;
  }
  const std::size_t cols = j[0].size();
  IntegerMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto rp = path + "[" + std::to_string(r) + "]";
    array_field(j[r], rp);
    if (j[r].size() != cols) throw FieldError(rp, "rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(j[r][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

json to_json(const IntegerMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    a.push_back(row);
  }
  return a;
}

Filtration filtration_from_json(const json& j, const std::string& path) {
  const std::size_t dim = count_from_json(field(j, "dim", path), path + ".dim");
  const auto& steps_json = array_field(field(j, "steps", path), path + ".steps");
  std::vector<FiltrationStep> steps;
  for (std::size_t s = 0; s < steps_json.size(); ++s) {
    const auto sp = path + ".steps[" + std::to_string(s) + "]";
    int level = int_from_json(field(steps_json[s], "level", sp), sp + ".level");
    auto basis = matrix_from_json(field(steps_json[s], "basis", sp), dim, sp + ".basis");
    steps.push_back({level, Subspace::span(basis)});
  }
  try {
    return Filtration(dim, std::move(steps));
  } catch (const Error& e) {
    throw FieldError(path, e.what());
  }
}

json to_json(const Filtration& f) {
  json steps = json::array();
  for (const auto& s : f.steps()) steps.push_back({{"level", s.level}, {"basis", to_json(s.space.basis())}});
  return {{"dim", f.ambient_dim()}, {"steps", steps}};
}

MultiFiltration multifiltration_from_json(const json& j, std::size_t dim, const std::string& path) {
  object_field(j, path);
  std::map<std::string, Filtration> per_ray;
  for (const auto& [ray, fj] : j.items()) {
    auto f = filtration_from_json(fj, path + "." + ray);
    if (f.ambient_dim() != dim)
      throw FieldError(path + "." + ray, "dimension " + std::to_string(f.ambient_dim()) + " differs from " +
                                             std::to_string(dim));
    per_ray.emplace(ray, std::move(f));
  }
  return MultiFiltration(dim, std::move(per_ray));
}

json to_json(const MultiFiltration& mf) {
  json o = json::object();
  for (const auto& [ray, f] : mf.per_ray()) o[ray] = to_json(f);
  return o;
}

Fan fan_from_json(const json& j, const std::string& path) {
  const std::size_t rank = count_from_json(field(j, "rank", path), path + ".rank");
  const auto& rays_json = array_field(field(j, "rays", path), path + ".rays");
  std::vector<Ray> rays;
  for (std::size_t r = 0; r < rays_json.size(); ++r) {
    const auto rp = path + ".rays[" + std::to_string(r) + "]";
    const auto& id = field(rays_json[r], "id", rp);
    if (!id.is_string()) throw FieldError(rp + ".id", "expected a string");
    rays.push_back({id.get<std::string>(), lattice_vector_from_json(field(rays_json[r], "gen", rp), rp + ".gen")});
  }
  const auto& cones_json = array_field(field(j, "maximal_cones", path), path + ".maximal_cones");
  std::vector<Cone> cones;
  for (std::size_t c = 0; c < cones_json.size(); ++c) {
    const auto cp = path + ".maximal_cones[" + std::to_string(c) + "]";
    array_field(cones_json[c], cp);
    Cone cone;
    for (const auto& id : cones_json[c]) {
      if (!id.is_string()) throw FieldError(cp, "ray ids must be strings");
      cone.ray_ids.push_back(id.get<std::string>());
    }
    cones.push_back(std::move(cone));
  }
  try {
    return Fan(rank, std::move(rays), std::move(cones));
  } catch (const Error& e) {
    throw FieldError(path, e.what());
  }
}

json to_json(const LatticeVector& v) { return json(v); }

json to_json(const Fan& fan) {
  json rays = json::array();
  for (const auto& r : fan.rays()) rays.push_back({{"id", r.id}, {"gen", r.generator}});
  json cones = json::array();
  for (const auto& c : fan.maximal_cones()) cones.push_back(c.ray_ids);
  return {{"rank", fan.rank()}, {"rays", rays}, {"maximal_cones", cones}};
}

json to_json(const Grading& g) {
  json pieces = json::array();
  for (const auto& p : g.pieces) pieces.push_back({{"tuple", p.tuple}, {"basis", to_json(p.space.basis())}});
  return {{"dim", g.ambient_dim}, {"pieces", pieces}};
}

json to_json(const DimensionWitness& w) {
  json dims = json::array();
  for (const auto& [tuple, d] : w.piece_dims) dims.push_back({{"tuple", tuple}, {"dim", d}});
  return {{"graded_total", w.graded_total}, {"ambient_dim", w.ambient_dim}, {"piece_dims", dims}};
}

json to_json(const ConditionKResult& r) {
  static const char* names[] = {"accepted", "rejected", "indeterminate"};
  json o = {{"status", names[static_cast<int>(r.status)]}, {"cone", r.cone_rays}, {"witness", to_json(r.witness)}};
  if (r.grading) o["grading"] = to_json(*r.grading);
  return o;
}

PresentedModule module_from_json(const json& j, const std::string& path) {
  const auto& levels_json = array_field(field(j, "levels", path), path + ".levels");
  std::vector<int> levels;
  for (std::size_t i = 0; i < levels_json.size(); ++i)
    levels.push_back(int_from_json(levels_json[i], path + ".levels[" + std::to_string(i) + "]"));
  auto basis = matrix_from_json(field(j, "basis", path), levels.size(), path + ".basis");
  if (basis.rows() != levels.size()) throw FieldError(path + ".basis", "expected one row per level");
  // Levels and rows stay aligned; the module keeps the caller's order.
  return {GradedFreeModule{std::move(levels)}, std::move(basis)};
}

json to_json(const PresentedModule& m) {
  return {{"levels", m.module.generator_levels}, {"basis", to_json(m.basis)}};
}

FilteredRep filtered_rep_from_json(const json& j, const std::string& path) {
  const std::size_t w_dim = count_from_json(field(j, "w_dim", path), path + ".w_dim");
  const auto lp = path + ".lie";
  const auto& lie_json = object_field(field(j, "lie", path), lp);
  LieFiltrationData lie;
  lie.lie_dim = count_from_json(field(lie_json, "dim", lp), lp + ".dim");
  const auto& action_json = array_field(field(lie_json, "action", lp), lp + ".action");
  for (std::size_t a = 0; a < action_json.size(); ++a) {
    const auto ap = lp + ".action[" + std::to_string(a) + "]";
    auto m = matrix_from_json(action_json[a], w_dim, ap);
    if (m.rows() != w_dim) throw FieldError(ap, "expected " + std::to_string(w_dim) + " rows");
    lie.action.push_back(std::move(m));
  }
  const auto& levels_json = object_field(field(lie_json, "levels", lp), lp + ".levels");
  for (const auto& [ray, fj] : levels_json.items())
    lie.lie_levels.emplace(ray, filtration_from_json(fj, lp + ".levels." + ray));
  if (auto it = lie_json.find("brackets"); it != lie_json.end()) {
    const auto bp = lp + ".brackets";
    array_field(*it, bp);
    StructureConstants c;
    for (std::size_t a = 0; a < it->size(); ++a) {
      array_field((*it)[a], bp);
      std::vector<RationalVector> row;
      for (std::size_t b = 0; b < (*it)[a].size(); ++b) {
        const auto& entry = array_field((*it)[a][b], bp);
        RationalVector v;
        for (std::size_t k = 0; k < entry.size(); ++k) v.push_back(rational_from_json(entry[k], bp));
        row.push_back(std::move(v));
      }
      c.push_back(std::move(row));
    }
    lie.brackets = std::move(c);
  }
  if (auto it = lie_json.find("connected"); it != lie_json.end()) {
    if (!it->is_boolean()) throw FieldError(lp + ".connected", "expected a boolean");
    lie.connected = it->get<bool>();
  }
  auto mf = multifiltration_from_json(field(j, "filtrations", path), w_dim, path + ".filtrations");
  try {
    return FilteredRep(w_dim, std::move(lie), std::move(mf));
  } catch (const FieldError&) {
    throw;
  } catch (const Error& e) {
    throw FieldError(path, e.what());
  }
}

json to_json(const ChartData& c) {
  json characters = json::array();
  for (const auto& chi : c.characters) characters.push_back(chi);
  return {{"cone_index", c.cone_index},
          {"cone", c.cone.ray_ids},
          {"grading", to_json(c.grading)},
          {"characters", characters},
          {"adapted_basis", to_json(c.adapted_basis)}};
}

json to_json(const TransitionData& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.size; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.size; ++j) {
      const auto& e = t.at(i, j);
      row.push_back({{"coefficient", to_string(e.coefficient)}, {"character", e.character}});
    }
    rows.push_back(row);
  }
  return {{"source", t.source}, {"target", t.target}, {"matrix", rows}};
}

json to_json(const RegularityViolation& v) {
  return {{"source", v.source}, {"target", v.target}, {"row", v.row}, {"col", v.col}, {"character", v.character}};
}

json to_json(const ConditionCViolation& v) {
  return {{"ray", v.ray},
          {"lie_level", v.lie_level},
          {"w_level", v.w_level},
          {"lie_element", to_json(v.lie_element)},
          {"witness", to_json(v.witness)}};
}

}  // namespace evb::io
