#include "evb/cli.hpp"

#include <cstdio>
#include <sstream>

namespace evb::cli {

namespace {

std::string milliseconds(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

json to_json(const Report& r) {
  return {{"name", r.name},
          {"kind", r.kind},
          {"verdict", verdict_name(r.verdict)},
          {"exit_code", exit_code(r.verdict)},
          {"witnesses", r.witnesses},
          {"timing_ms", r.timing_ms}};
}

json to_json(const SuiteReport& s) {
  json cases = json::array();
  for (const auto& c : s.cases) cases.push_back(to_json(c));
  return {{"verdict", verdict_name(s.aggregate)},
          {"exit_code", exit_code(s.aggregate)},
          {"count", s.cases.size()},
          {"cases", cases},
          {"timing_ms", s.timing_ms}};
}

std::string format_text(const Report& r) {
  std::ostringstream out;
  out << pad("name:", 10) << r.name << '\n';
  out << pad("kind:", 10) << (r.kind.empty() ? "-" : r.kind) << '\n';
  out << pad("verdict:", 10) << verdict_name(r.verdict) << '\n';
  out << pad("time:", 10) << milliseconds(r.timing_ms) << " ms\n";
  if (!r.witnesses.empty()) {
    out << "witnesses:\n";
    std::size_t width = 0;
    for (const auto& [key, value] : r.witnesses.items()) width = std::max(width, key.size());
    for (const auto& [key, value] : r.witnesses.items())
      out << "  " << pad(key, width + 2) << value.dump() << '\n';
  }
  return out.str();
}

std::string format_text(const SuiteReport& s) {
  std::size_t name_width = 4, kind_width = 4;
  for (const auto& c : s.cases) {
    name_width = std::max(name_width, c.name.size());
    kind_width = std::max(kind_width, c.kind.size());
  }
  std::ostringstream out;
  out << pad("file", name_width + 2) << pad("kind", kind_width + 2) << pad("verdict", 15) << "time (ms)\n";
  for (const auto& c : s.cases)
    out << pad(c.name, name_width + 2) << pad(c.kind.empty() ? "-" : c.kind, kind_width + 2)
        << pad(std::string(verdict_name(c.verdict)), 15) << milliseconds(c.timing_ms) << '\n';
  out << '\n' << s.cases.size() << " case(s), aggregate verdict " << verdict_name(s.aggregate) << " ("
      << milliseconds(s.timing_ms) << " ms)\n";
  for (const auto& c : s.cases) {
    if (c.verdict == Verdict::pass) continue;
    out << '\n' << format_text(c);
  }
  return out.str();
}

}  // namespace evb::cli
