#include "evb/cli.hpp"

#include "evb/error.hpp"
#include "evb/json_io.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace evb::cli {

namespace {

using io::field;

struct Outcome {
  Verdict verdict;
  json witnesses;
};

Outcome invalid(const std::string& message) { return {Verdict::invalid, {{"error", message}}}; }

std::vector<std::string> string_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw io::FieldError(path, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw io::FieldError(path, "expected an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::size_t dim_field(const json& p) {
  const auto& d = field(p, "dim", "problem");
  if (!d.is_number_integer() || d.get<std::int64_t>() < 0) throw io::FieldError("problem.dim", "expected a non-negative integer");
  return d.get<std::size_t>();
}

Outcome run_condition_k(const json& p) {
  const std::size_t dim = dim_field(p);
  auto mf = io::multifiltration_from_json(field(p, "filtrations", "problem"), dim, "problem.filtrations");
  std::vector<std::string> cone;
  if (auto it = p.find("cone"); it != p.end())
    cone = string_list(*it, "problem.cone");
  else
    for (const auto& [ray, f] : mf.per_ray()) cone.push_back(ray);
  auto result = check_condition_K(mf, cone);
  json w = io::to_json(result);
  switch (result.status) {
    case KStatus::accepted: return {Verdict::pass, w};
    case KStatus::rejected: return {Verdict::fail, w};
    case KStatus::indeterminate: return {Verdict::indeterminate, w};
  }
  return invalid("unreachable");
}

Outcome run_condition_c(const json& p) {
  std::optional<FilteredRep> rep;
  if (auto it = p.find("pgl2"); it != p.end()) {
    const auto& q = *it;
    auto f = io::filtration_from_json(field(q, "filtration", "problem.pgl2"), "problem.pgl2.filtration");
    auto action = io::matrix_from_json(field(q, "action", "problem.pgl2"), f.ambient_dim(), "problem.pgl2.action");
    if (action.rows() != f.ambient_dim()) throw io::FieldError("problem.pgl2.action", "expected a square matrix");
    rep.emplace(pgl2_preset(f.ambient_dim(), action, f));
  } else {
    if (p.contains("rep"))
      rep.emplace(io::filtered_rep_from_json(p.at("rep"), "problem.rep"));
    else
      rep.emplace(io::filtered_rep_from_json(p, "problem"));
  }
  auto result = check_condition_C(*rep);
  json violations = json::array();
  for (const auto& v : result.violations) violations.push_back(io::to_json(v));
  json w = {{"holds", result.holds}, {"rays", rep->filtrations().per_ray().size()}};
  if (!result.holds) w["violations"] = violations;
  return {result.holds ? Verdict::pass : Verdict::fail, w};
}

json histogram_json(const std::map<int, std::size_t>& h) {
  json a = json::array();
  for (const auto& [level, d] : h) a.push_back({{"level", level}, {"dim", d}});
  return a;
}

Outcome run_rees(const json& p) {
  if (auto it = p.find("module"); it != p.end()) {
    auto presented = io::module_from_json(*it, "problem.module");
    auto f = fiber_at_one(presented.module, presented.basis);
    auto back = rees(f.ambient_dim(), f);
    bool consistent = make_module(presented.module.generator_levels) == back.module;
    json w = {{"filtration", io::to_json(f)},
              {"fiber_at_zero", histogram_json(fiber_at_zero(presented.module))},
              {"levels_consistent", consistent}};
    return {consistent ? Verdict::pass : Verdict::fail, w};
  }
  auto f = io::filtration_from_json(field(p, "filtration", "problem"), "problem.filtration");
  auto presented = rees(f.ambient_dim(), f);
  bool round_trip = fiber_at_one(presented.module, presented.basis) == f;
  json w = {{"module", io::to_json(presented)},
            {"fiber_at_zero", histogram_json(fiber_at_zero(presented.module))},
            {"round_trip", round_trip}};
  return {round_trip ? Verdict::pass : Verdict::fail, w};
}

Outcome run_hom(const json& p) {
  if (p.contains("source_rep")) {
    auto a = io::filtered_rep_from_json(field(p, "source_rep", "problem"), "problem.source_rep");
    auto b = io::filtered_rep_from_json(field(p, "target_rep", "problem"), "problem.target_rep");
    auto hom = category_hom(a, b);
    json basis = json::array();
    for (const auto& m : hom.basis) basis.push_back(io::to_json(m));
    json w = {{"dim", hom.dim}, {"basis", basis}};
    if (auto it = p.find("expect_dim"); it != p.end()) {
      w["expect_dim"] = *it;
      if (!it->is_number_integer() || it->get<std::int64_t>() != static_cast<std::int64_t>(hom.dim))
        return {Verdict::fail, w};
    }
    return {Verdict::pass, w};
  }
  auto f = io::filtration_from_json(field(p, "source", "problem"), "problem.source");
  auto g = io::filtration_from_json(field(p, "target", "problem"), "problem.target");
  auto filtered = filtered_hom_dim(f, g);
  auto graded = graded_hom_dim(rees(f.ambient_dim(), f).module, rees(g.ambient_dim(), g).module);
  json w = {{"filtered_hom_dim", filtered}, {"graded_hom_dim", graded}};
  return {filtered == graded ? Verdict::pass : Verdict::fail, w};
}

Outcome run_neutralizable(const json& p) {
  auto gens = io::integer_matrix_from_json(field(p, "generators", "problem"), "problem.generators");
  auto result = is_neutralizable(gens);
  json divisors = json::array();
  for (const auto& d : result.divisors) divisors.push_back(to_string(d));
  return {result.neutralizable ? Verdict::pass : Verdict::fail,
          {{"neutralizable", result.neutralizable}, {"divisors", divisors}}};
}

struct BundleInput {
  Fan fan;
  MultiFiltration mf;
};

BundleInput bundle_input(const json& p) {
  auto fan = io::fan_from_json(field(p, "fan", "problem"), "problem.fan");
  auto mf = io::multifiltration_from_json(field(p, "filtrations", "problem"), dim_field(p), "problem.filtrations");
  return {std::move(fan), std::move(mf)};
}

json sections_json(const GlobalSections& s) {
  json weights = json::array();
  for (const auto& w : s.weights) weights.push_back({{"character", w.character}, {"dim", w.dim}});
  return weights;
}

Outcome run_bundle(const json& p) {
  auto [fan, mf] = bundle_input(p);
  auto charts = build_charts(fan, mf);
  if (!charts.ok()) {
    const auto& f = *charts.failure;
    json w = {{"failed_cone_index", f.cone_index}, {"failed_cone", f.cone.ray_ids}, {"condition_k", io::to_json(f.condition)}};
    return {f.condition.status == KStatus::indeterminate ? Verdict::indeterminate : Verdict::fail, w};
  }
  auto transitions = build_transitions(charts.charts);
  bool cocycle = check_cocycle(transitions);
  auto regularity = check_regularity(fan, transitions);
  json charts_json = json::array();
  for (const auto& c : charts.charts) charts_json.push_back(io::to_json(c));
  json transitions_json = json::array();
  for (const auto& t : transitions) transitions_json.push_back(io::to_json(t));
  json w = {{"charts", charts_json}, {"transitions", transitions_json}, {"cocycle", cocycle},
            {"regular", regularity.regular}};
  try {
    w["h0"] = global_sections(fan, mf).dim;
  } catch (const InvalidInput& e) {
    w["h0"] = nullptr;
    w["h0_note"] = e.what();
  }
  if (!regularity.regular) {
    json v = json::array();
    for (const auto& x : regularity.violations) v.push_back(io::to_json(x));
    w["regularity_violations"] = v;
  }
  return {cocycle && regularity.regular ? Verdict::pass : Verdict::fail, w};
}

Outcome run_sections(const json& p) {
  auto [fan, mf] = bundle_input(p);
  auto s = global_sections(fan, mf);
  json w = {{"h0", s.dim}, {"weights", sections_json(s)}};
  if (auto it = p.find("expect_h0"); it != p.end()) {
    w["expect_h0"] = *it;
    if (!it->is_number_integer() || it->get<std::int64_t>() != static_cast<std::int64_t>(s.dim))
      return {Verdict::fail, w};
  }
  return {Verdict::pass, w};
}

const std::map<std::string, std::function<Outcome(const json&)>>& dispatch() {
  static const std::map<std::string, std::function<Outcome(const json&)>> table = {
      {"condition-k", run_condition_k}, {"condition-c", run_condition_c}, {"rees", run_rees},
      {"hom", run_hom},                 {"neutralizable", run_neutralizable},
      {"bundle", run_bundle},           {"sections", run_sections},
  };
  return table;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::invalid: return "invalid";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "invalid";
}

int exit_code(Verdict v) { return static_cast<int>(v); }

const std::vector<std::string>& problem_kinds() {
  static const std::vector<std::string> kinds = {"condition-k", "condition-c", "rees",    "hom",
                                                 "neutralizable", "bundle",   "sections"};
  return kinds;
}

Report run_problem(const json& problem, std::string name) {
  Report report;
  report.name = std::move(name);
  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    const auto& kind = field(problem, "kind", "problem");
    if (!kind.is_string()) throw io::FieldError("problem.kind", "expected a string");
    report.kind = kind.get<std::string>();
    auto it = dispatch().find(report.kind);
    if (it == dispatch().end()) throw io::FieldError("problem.kind", "unknown kind \"" + report.kind + "\"");
    outcome = it->second(problem);
  } catch (const Error& e) {
    outcome = invalid(e.what());
  } catch (const json::exception& e) {
    outcome = invalid(e.what());
  }
  report.verdict = outcome.verdict;
  report.witnesses = std::move(outcome.witnesses);
  report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Report run_text(std::string_view text, std::string name) {
  json problem;
  try {
    problem = json::parse(text);
  } catch (const json::parse_error& e) {
    Report report;
    report.name = std::move(name);
    auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    report.witnesses = {{"error", "malformed JSON at line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + e.what()}};
    return report;
  }
  return run_problem(problem, std::move(name));
}

Report run_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    Report report;
    report.name = path.filename().string();
    report.witnesses = {{"error", "cannot read " + path.string()}};
    return report;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return run_text(buffer.str(), path.filename().string());
}

SuiteReport run_suite(const std::filesystem::path& dir, bool parallel) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw std::runtime_error("cannot read directory " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) throw std::runtime_error("cannot read directory " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());

  auto start = std::chrono::steady_clock::now();
  SuiteReport suite;
  suite.cases.resize(files.size());
  if (parallel && files.size() > 1) {
    std::atomic<std::size_t> next{0};
    const std::size_t workers = std::min<std::size_t>(files.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < files.size(); i = next++) suite.cases[i] = run_file(files[i]);
      });
  } else {
    for (std::size_t i = 0; i < files.size(); ++i) suite.cases[i] = run_file(files[i]);
  }
  for (const auto& c : suite.cases) suite.aggregate = std::max(suite.aggregate, c.verdict);
  suite.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return suite;
}

}  // namespace evb::cli
