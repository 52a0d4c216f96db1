// Batch checker for filtration / Klyachko / condition (C) problem files.
#include "evb/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

int emit(const evb::cli::Report& report, bool as_json) {
  if (as_json)
    std::cout << evb::cli::to_json(report).dump(2) << '\n';
  else
    std::cout << evb::cli::format_text(report);
  return evb::cli::exit_code(report.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check filtered-representation and Klyachko problem files"};
  bool as_json = false;
  bool parallel = false;
  bool list = false;
  std::string fixture;
  std::string export_dir;
  std::string path;
  app.add_flag("--json", as_json, "Emit the report as JSON on standard output");
  app.add_flag("--parallel", parallel, "Process the files of a suite directory concurrently");
  app.add_option("--fixture", fixture, "Run a named built-in fixture");
  app.add_flag("--list-fixtures", list, "List the built-in fixtures");
  app.add_option("--export-fixtures", export_dir, "Write every built-in fixture as <name>.json into a directory");
  app.add_option("path", path, "Problem file, or a directory of problem files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (list) {
    for (const auto& f : evb::cli::builtin_fixtures())
      std::cout << f.name << "  [" << evb::cli::verdict_name(f.expected) << "]  " << f.summary << '\n';
    return 0;
  }
  if (!export_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(export_dir, ec);
    for (const auto& f : evb::cli::builtin_fixtures()) {
      std::ofstream out(std::filesystem::path(export_dir) / (f.name + ".json"));
      out << f.problem << '\n';
      if (!out) {
        std::cerr << "cannot write fixture " << f.name << " into " << export_dir << '\n';
        return 2;
      }
    }
    return 0;
  }
  if (!fixture.empty()) {
    try {
      const auto& f = evb::cli::find_fixture(fixture);
      return emit(evb::cli::run_text(f.problem, f.name), as_json);
    } catch (const std::out_of_range& e) {
      std::cerr << e.what() << '\n';
      return 2;
    }
  }
  if (path.empty()) {
    std::cerr << app.help();
    return 2;
  }
  if (std::filesystem::is_directory(path)) {
    try {
      auto suite = evb::cli::run_suite(path, parallel);
      if (as_json)
        std::cout << evb::cli::to_json(suite).dump(2) << '\n';
      else
        std::cout << evb::cli::format_text(suite);
      return evb::cli::exit_code(suite.aggregate);
    } catch (const std::exception& e) {
      std::cerr << e.what() << '\n';
      return 2;
    }
  }
  return emit(evb::cli::run_file(path), as_json);
}
