#include "evb/cli.hpp"

#include <algorithm>
#include <stdexcept>

namespace evb::cli {

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"gm-square", "G_m acting on itself through t -> t^2: weight lattice of index 2", Verdict::fail,
       R"({"kind": "neutralizable", "generators": [[2]]})"},
      {"g-mod-u", "G/U for SL3: the weight lattice is the full character lattice of B", Verdict::pass,
       R"({"kind": "neutralizable", "generators": [[1, 0], [0, 1]]})"},
      {"pgl-v-n1", "PGL(V) on P(V) x P(V*), dim V = 2: chi_0 - chi_1", Verdict::pass,
       R"({"kind": "neutralizable", "generators": [[1]]})"},
      {"pgl-v-n2", "PGL(V) on P(V) x P(V*), dim V = 3: chi_0 - chi_2 = sum of simple differences", Verdict::pass,
       R"({"kind": "neutralizable", "generators": [[1], [1]]})"},
      {"pgl-v-n3", "PGL(V) on P(V) x P(V*), dim V = 4", Verdict::pass,
       R"({"kind": "neutralizable", "generators": [[1], [1], [1]]})"},
      {"pgl-v-n4", "PGL(V) on P(V) x P(V*), dim V = 5", Verdict::pass,
       R"({"kind": "neutralizable", "generators": [[1], [1], [1], [1]]})"},
      {"pgl2-mod-n", "PGL2/N(T): weight lattice of index 2 in the character lattice of B", Verdict::fail,
       R"({"kind": "neutralizable", "generators": [[2]]})"},
      {"three-lines", "three distinct lines in a plane admit no common grading", Verdict::fail,
       R"({"kind": "condition-k", "dim": 2, "cone": ["a", "b", "c"],
           "filtrations": {
             "a": {"dim": 2, "steps": [{"level": 1, "basis": [["1", "0"]]}]},
             "b": {"dim": 2, "steps": [{"level": 1, "basis": [["0", "1"]]}]},
             "c": {"dim": 2, "steps": [{"level": 1, "basis": [["1", "1"]]}]}}})"},
      {"two-lines", "two lines in a plane split simultaneously", Verdict::pass,
       R"({"kind": "condition-k", "dim": 2, "cone": ["a", "b"],
           "filtrations": {
             "a": {"dim": 2, "steps": [{"level": 1, "basis": [["1", "0"]]}]},
             "b": {"dim": 2, "steps": [{"level": 1, "basis": [["0", "1"]]}]}}})"},
      {"empty", "zero-dimensional space: every check succeeds vacuously", Verdict::pass,
       R"({"kind": "condition-k", "dim": 0, "filtrations": {"a": {"dim": 0, "steps": []}}})"},
      {"pgl2-raising", "P1 x P1 under PGL2: xi e1 = e2 lowers the level by one", Verdict::pass,
       R"({"kind": "condition-c", "pgl2": {"action": [["0", "0"], ["1", "0"]],
           "filtration": {"dim": 2, "steps": [{"level": 1, "basis": [["1", "0"]]}]}}})"},
      {"pgl2-violation", "P1 x P1 under PGL2: xi e2 = e1 drops two levels", Verdict::fail,
       R"({"kind": "condition-c", "pgl2": {"action": [["0", "1"], ["0", "0"]],
           "filtration": {"dim": 2, "steps": [{"level": 1, "basis": [["0", "1"]]}, {"level": 3, "basis": []}]}}})"},
      {"pgl2-torus-weights", "P1 x P1 under PGL2: semisimple Lie(T) action on coordinate lines", Verdict::pass,
       R"({"kind": "condition-c", "pgl2": {"action": [["1", "0"], ["0", "-1"]],
           "filtration": {"dim": 2, "steps": [{"level": 1, "basis": [["1", "0"]]}]}}})"},
      {"p1-line-bundle", "O(2) on P1 as Klyachko data: jumps 2 and 0", Verdict::pass,
       R"({"kind": "bundle", "dim": 1,
           "fan": {"rank": 1, "rays": [{"id": "p", "gen": [1]}, {"id": "m", "gen": [-1]}],
                   "maximal_cones": [["p"], ["m"]]},
           "filtrations": {
             "p": {"dim": 1, "steps": [{"level": 3, "basis": []}]},
             "m": {"dim": 1, "steps": [{"level": 1, "basis": []}]}}})"},
      {"p1xp1-rank2", "rank-2 bundle on P1 x P1 with three distinct lines on three rays", Verdict::pass,
       R"({"kind": "bundle", "dim": 2,
           "fan": {"rank": 2,
                   "rays": [{"id": "x+", "gen": [1, 0]}, {"id": "x-", "gen": [-1, 0]},
                            {"id": "y+", "gen": [0, 1]}, {"id": "y-", "gen": [0, -1]}],
                   "maximal_cones": [["x+", "y+"], ["x-", "y+"], ["x-", "y-"], ["x+", "y-"]]},
           "filtrations": {
             "x+": {"dim": 2, "steps": [{"level": 1, "basis": [["1", "0"]]}]},
             "x-": {"dim": 2, "steps": [{"level": 1, "basis": [["1", "1"]]}]},
             "y+": {"dim": 2, "steps": [{"level": 1, "basis": [["0", "1"]]}]},
             "y-": {"dim": 2, "steps": [{"level": 1, "basis": []}]}}})"},
      {"p1-sections", "global sections of O(3) on P1", Verdict::pass,
       R"({"kind": "sections", "dim": 1, "expect_h0": 4,
           "fan": {"rank": 1, "rays": [{"id": "p", "gen": [1]}, {"id": "m", "gen": [-1]}],
                   "maximal_cones": [["p"], ["m"]]},
           "filtrations": {
             "p": {"dim": 1, "steps": [{"level": 4, "basis": []}]},
             "m": {"dim": 1, "steps": [{"level": 1, "basis": []}]}}})"},
      {"rees-two-jumps", "Rees module of a filtration jumping at 0 and 2", Verdict::pass,
       R"({"kind": "rees", "filtration": {"dim": 2, "steps": [{"level": 1, "basis": [["0", "1"]]}, {"level": 3, "basis": []}]}})"},
      {"hom-level-shift", "filtered maps from a line at level 0 to a line at level 1", Verdict::pass,
       R"({"kind": "hom", "source": {"dim": 1, "steps": [{"level": 1, "basis": []}]},
           "target": {"dim": 1, "steps": [{"level": 2, "basis": []}]}})"},
  };
  return fixtures;
}

const Fixture& find_fixture(std::string_view name) {
  const auto& all = builtin_fixtures();
  auto it = std::find_if(all.begin(), all.end(), [&](const Fixture& f) { return f.name == name; });
  if (it == all.end()) throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
  return *it;
}

}  // namespace evb::cli
