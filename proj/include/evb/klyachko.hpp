#pragma once

#include "evb/fan.hpp"
#include "evb/filtration.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace evb {

/// Local trivialization of the bundle over one maximal cone.
struct ChartData {
  std::size_t cone_index = 0;
  Cone cone;
  Grading grading;
  std::vector<LatticeVector> characters;  // one per grading piece
  RationalMatrix adapted_basis;           // rows grouped by piece
  std::vector<std::size_t> row_piece;     // piece index of each row

  const LatticeVector& row_character(std::size_t row) const { return characters[row_piece[row]]; }
};

struct ChartFailure {
  std::size_t cone_index = 0;
  Cone cone;
  ConditionKResult condition;
};

struct ChartsResult {
  std::vector<ChartData> charts;
  std::optional<ChartFailure> failure;

  bool ok() const { return !failure.has_value(); }
};

/// Runs (K) on every maximal cone and lifts each grading tuple to a
/// character. Requires a smooth fan of rank ≤ 3 (InvalidInput otherwise)
/// and a filtration for every ray of the fan.
ChartsResult build_charts(const Fan& fan, const MultiFiltration& mf);

/// A monomial entry c·x^χ of a transition matrix; c = 0 means the entry is absent.
struct TransitionEntry {
  Rational coefficient;
  LatticeVector character;
};

/// Change of frame from the source chart to the target chart. Entry (i, j)
/// is the coefficient of target row i in source row j, tagged with the
/// torus weight χ_source(j) − χ_target(i).
struct TransitionData {
  std::size_t source = 0;  // maximal cone indices
  std::size_t target = 0;
  std::size_t size = 0;
  std::vector<TransitionEntry> entries;  // row-major, size × size

  const TransitionEntry& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

/// One transition per ordered pair of distinct charts.
/// Throws SingularMatrix when an adapted basis is not invertible.
std::vector<TransitionData> build_transitions(const std::vector<ChartData>& charts);

struct RegularityViolation {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  LatticeVector character;
};

struct RegularityReport {
  bool regular = true;
  std::vector<RegularityViolation> violations;
};

/// An entry of weight χ is the function x^{−χ}; it is regular on the
/// overlap chart iff −χ lies in the dual of the overlap cone.
RegularityReport check_regularity(const Fan& fan, const std::vector<TransitionData>& transitions);

/// T(σ→υ) = T(τ→υ)·T(σ→τ) for all σ, τ, υ with σ ≠ τ ≠ υ (υ = σ compares
/// with the identity), multiplying monomial matrices exactly.
bool check_cocycle(const std::vector<TransitionData>& transitions);

struct SectionWeight {
  LatticeVector character;
  std::size_t dim = 0;
};

struct GlobalSections {
  std::size_t dim = 0;
  std::vector<SectionWeight> weights;  // characters with a nonzero weight space
};

/// Σ_χ dim ∩_α F_α^{⟨χ, n_α⟩} over all characters χ. Enumerates the box
/// cut out by ⟨χ, n_α⟩ ≤ (top jump of F_α). Throws InvalidInput when that
/// region is unbounded or when (K) fails on some maximal cone.
GlobalSections global_sections(const Fan& fan, const MultiFiltration& mf);

}  // namespace evb
