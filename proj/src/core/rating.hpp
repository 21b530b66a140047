#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "core/bitseq.hpp"
#include "core/srvalue.hpp"

namespace subjrand {

/// Falk-Konold difficulty predictor: the minimum over all decompositions of
/// x into pure runs and alternating runs (alternating blocks must span at
/// least 3 symbols) of #pure + 2 * #alternating.
int dp(const BitSeq& x);

struct RatingDiagnostics {
  // A minimization had to fall back to the numeric order because two
  // candidates were formally incomparable.
  bool incomparable_resolved = false;
  // Working-set measure for benchmarking (memo entries, DP rows).
  std::size_t workspace_bytes = 0;
};

/// Likeliest value over all segmentations of x into motif blocks: a block of
/// L symbols on a length-k motif contributes [k, L-1]; blocks may truncate
/// the motif anywhere. Computed by prefix DP. Empty input rates [0,0].
SRValue exact_value(std::span<const Symbol> x, RatingDiagnostics* diag = nullptr);
SRValue exact_value(const BitSeq& x, RatingDiagnostics* diag = nullptr);

/// exact_value with the duplication reading folded in: for an even-length x
/// equal to its first half twice, the likelier of exact_value(x) and
/// exact_value(half) + [1, 3.5].
SRValue exact_context_value(std::span<const Symbol> x);

/// The recursive predictor: special cases for pure and alternating runs,
/// leading-run splitting, then length-3 and length-4 block improvement
/// passes. Agrees with exact_value on every input of length <= 8.
SRValue dp_plus(const BitSeq& x, RatingDiagnostics* diag = nullptr);

/// The same recursion with the block passes disabled (length-1/2 motifs
/// only); matches the 6-state machine restricted to runs.
SRValue dp_plus_runs_only(const BitSeq& x);

/// Context-sensitive rating: dp_plus, improved by the duplication prior
/// [1, 3.5] on perfect duplications.
SRValue sr_rating(const BitSeq& x);

constexpr SRValue duplication_prior() { return SRValue::of_halves(1, 7); }

/// sr(x) >= t for an 8-symbol x. Throws std::domain_error on other lengths
/// or when the comparison is undecidable.
bool meets_threshold(const BitSeq& x, SRValue t);

/// Ratings of all 256 windows, indexed by code. Built once and shared.
struct RatingTable8 {
  std::array<SRValue, 256> finite_state{};  // motif-machine optimum
  std::array<SRValue, 256> context{};       // sr rating
  static RatingTable8 build();
};

}  // namespace subjrand
