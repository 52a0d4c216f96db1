#pragma once

#include "evb/error.hpp"
#include "evb/fan.hpp"
#include "evb/filtration.hpp"
#include "evb/klyachko.hpp"
#include "evb/rees.hpp"
#include "evb/spherical.hpp"

#include <json.hpp>

#include <string>

namespace evb::io {

using nlohmann::json;

/// Invalid JSON payload; the message starts with the offending field path.
class FieldError : public InvalidInput {
 public:
  FieldError(const std::string& path, const std::string& what) : InvalidInput(path + ": " + what) {}
};

const json& field(const json& obj, const std::string& key, const std::string& path);

Rational rational_from_json(const json& j, const std::string& path);
json to_json(const Rational& q);
json to_json(const Integer& z);
json to_json(const RationalVector& v);

/// Rows of rational strings. `cols` is required when there are no rows.
RationalMatrix matrix_from_json(const json& j, std::size_t cols, const std::string& path);
json to_json(const RationalMatrix& m);

/// Integer matrix given as an array of rows; a flat array is one column.
IntegerMatrix integer_matrix_from_json(const json& j, const std::string& path);
json to_json(const IntegerMatrix& m);

Filtration filtration_from_json(const json& j, const std::string& path);
json to_json(const Filtration& f);

/// {ray: filtration}; every filtration must have dimension `dim`.
MultiFiltration multifiltration_from_json(const json& j, std::size_t dim, const std::string& path);
json to_json(const MultiFiltration& mf);

Fan fan_from_json(const json& j, const std::string& path);
json to_json(const Fan& fan);

json to_json(const Grading& g);
json to_json(const DimensionWitness& w);
json to_json(const ConditionKResult& r);

PresentedModule module_from_json(const json& j, const std::string& path);
json to_json(const PresentedModule& m);

FilteredRep filtered_rep_from_json(const json& j, const std::string& path);

json to_json(const ChartData& c);
json to_json(const TransitionData& t);
json to_json(const RegularityViolation& v);
json to_json(const ConditionCViolation& v);

json to_json(const LatticeVector& v);

}  // namespace evb::io
