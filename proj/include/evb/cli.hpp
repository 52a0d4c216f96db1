#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace evb::cli {

using nlohmann::json;

/// Ordered by severity; the numeric value is the process exit code.
enum class Verdict { pass = 0, fail = 1, invalid = 2, indeterminate = 3 };

std::string_view verdict_name(Verdict v);
int exit_code(Verdict v);

struct Report {
  std::string name;  // file name or fixture name
  std::string kind;
  Verdict verdict = Verdict::invalid;
  json witnesses = json::object();
  double timing_ms = 0.0;
};

struct SuiteReport {
  std::vector<Report> cases;
  Verdict aggregate = Verdict::pass;
  double timing_ms = 0.0;
};

/// Recognized values of a problem's "kind" field.
const std::vector<std::string>& problem_kinds();

/// Runs an already-parsed problem; never throws for bad payloads.
Report run_problem(const json& problem, std::string name);

/// Parses JSON text (diagnosing syntax errors by line and column) and runs it.
Report run_text(std::string_view text, std::string name);

Report run_file(const std::filesystem::path& path);

/// Every *.json file in `dir`, in name order. Throws std::runtime_error
/// when the directory cannot be read.
SuiteReport run_suite(const std::filesystem::path& dir, bool parallel);

json to_json(const Report& r);
json to_json(const SuiteReport& s);
std::string format_text(const Report& r);
std::string format_text(const SuiteReport& s);

struct Fixture {
  std::string name;
  std::string summary;
  Verdict expected;
  std::string problem;  // JSON text
};

const std::vector<Fixture>& builtin_fixtures();
/// Throws std::out_of_range for an unknown name.
const Fixture& find_fixture(std::string_view name);

}  // namespace evb::cli
