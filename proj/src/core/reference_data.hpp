#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/srvalue.hpp"

namespace subjrand {

/// One group of the published 8-bit rating table: all O-initial windows that
/// share a (finite-state, context-sensitive) value pair. Groups are listed
/// from most to least random by context value.
struct ReferenceRatingGroup {
  SRValue finite;
  SRValue context;
  std::vector<std::uint8_t> members;  // ascending codes
};
const std::vector<ReferenceRatingGroup>& reference_table1();

/// Note attached to the one rating-table row whose published context
/// monomial disagrees with the duplication formula.
const std::string& table1_row7_note();

/// How a published component row describes its membership.
enum class MemberForm {
  ExplicitSets,  // explicit vertex lists (possibly two components)
  UnionExtra,    // the [5,3] components plus listed extra vertices
  SetMinus,      // S(threshold) minus listed exclusions
  FullSet,       // exactly S(threshold)
};

struct ReferenceComponentRow {
  SRValue threshold;
  int vertices = 0;
  int arcs = 0;
  int basis = 0;
  MemberForm form = MemberForm::FullSet;
  std::vector<std::vector<std::uint8_t>> explicit_sets;  // ExplicitSets / UnionExtra base
  std::vector<std::uint8_t> extra;                       // UnionExtra additions
  std::vector<std::uint8_t> excluded;                    // SetMinus exclusions
  // Where the published arc/basis figures differ from the directed-multigraph
  // count, the values forced by the cyclomatic identity. -1 means "as
  // published".
  int computed_arcs = -1;
  int computed_basis = -1;
  std::string note;  // non-empty on such rows
};

/// The twelve published component rows, from highest threshold [5,3] down to
/// [1,7].
const std::vector<ReferenceComponentRow>& reference_table2();

/// The same twelve thresholds in ascending randomness order
/// [1,7] < [2,6] < ... < [5,3].
const std::vector<SRValue>& component_thresholds();

/// Thresholds with no non-trivial strong component: [5,4], [5,5], [5,6].
const std::vector<SRValue>& empty_component_thresholds();

/// Largest threshold the bounds-based creation method supports.
constexpr SRValue bounds_threshold_limit() { return SRValue::of_halves(4, 9); }

/// The default creation threshold recommended for long streams.
constexpr SRValue default_threshold() { return SRValue::of(4, 4); }

}  // namespace subjrand
