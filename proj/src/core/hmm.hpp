#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "core/bitseq.hpp"
#include "core/motifs.hpp"
#include "core/rating.hpp"
#include "core/srvalue.hpp"

namespace subjrand {

/// One emitting state per (motif, position). The state deterministically
/// emits motif.pattern[offset]. Offsets are 0-based here.
struct HmmState {
  int motif = 0;
  int offset = 0;
  bool operator==(const HmmState&) const = default;
};

/// Exponent-semiring Viterbi over the motif state machine. Transition rules,
/// generated from the motif list:
///   - within a motif, (m, p) -> (m, p+1) with weight delta;
///   - after completing a motif, (m, last) -> (m, 0) with weight delta;
///   - from anywhere, (m, p) -> (m', 0) for m' != m with weight alpha^len(m');
///   - no mid-motif restart (m, p) -> (m, 0).
/// Starting in (m, 0) costs alpha^len(m). The normalizer is fixed to 1, so a
/// path's weight is the exponent pair of its alpha/delta factors.
class AbstractMachine {
 public:
  explicit AbstractMachine(std::vector<Motif> motifs);

  int state_count() const { return static_cast<int>(states_.size()); }
  const std::vector<Motif>& motifs() const { return motifs_; }
  const std::vector<HmmState>& states() const { return states_; }

  /// Outgoing arcs of a state with their exponent weights.
  std::vector<std::pair<HmmState, SRValue>> transitions(HmmState from) const;

  /// Exponent pair of the likeliest emitting path. Requires n >= 1.
  SRValue viterbi(std::span<const Symbol> x, RatingDiagnostics* diag = nullptr) const;
  SRValue viterbi(const BitSeq& x, RatingDiagnostics* diag = nullptr) const;

 private:
  std::vector<Motif> motifs_;
  std::vector<HmmState> states_;
  std::vector<int> entry_state_;  // motif index -> state index of (m, 0)
};

/// The concrete six-state numeric model over motifs {X, O, XO, OX} with
/// normalizer C = (1 - delta) / (2 alpha + 2 alpha^2). States follow the
/// published numbering: 1 emits X (motif X), 2 emits O (motif O), 3/4 emit
/// X/O within XO, 5/6 emit X/O within OX.
class NumericModel6 {
 public:
  NumericModel6(double alpha, double delta);

  double alpha() const { return alpha_; }
  double delta() const { return delta_; }
  double normalizer() const { return c_; }

  /// Transition probability from state `from` to state `to` (1-based).
  double transition(int from, int to) const;
  /// Initial probability of a state (C alpha^k on motif entries, else 0).
  double initial(int state) const;
  Symbol emits(int state) const;

  struct Result {
    double log_prob = 0;
    std::vector<int> path;  // 1-based states
    SRValue exponents;      // alpha/delta exponents along the winning path
  };
  /// Max-probability path (log space). Ties keep the smallest state indices.
  Result viterbi(const BitSeq& x) const;

  /// log probability of a specific state path for x; -inf on an emission
  /// mismatch. For auditing individual paths.
  double score_path(const BitSeq& x, std::span<const int> path) const;
  SRValue path_exponents(std::span<const int> path) const;

  /// Row sum plus the row's own motif entry weight; equals 1 exactly when
  /// the outgoing budget is conserved.
  double closed_row_sum(int state) const;
  /// Sum of the initial distribution; equals 1 - delta.
  double initial_sum() const;

 private:
  int motif_len(int state) const;
  int within_successor(int state) const;   // delta arc target, 0 if none
  int entry_state_of_motif(int m) const;   // m in {0:X, 1:O, 2:XO, 3:OX}
  int motif_of_state(int state) const;

  double alpha_, delta_, c_;
};

/// Wall-time comparison of rating all 256 windows by the recursive predictor
/// versus the full motif-machine Viterbi.
struct BenchReport {
  int reps = 1;
  double dp_plus_seconds = 0;
  double viterbi_seconds = 0;
  double time_ratio = 0;  // viterbi / dp_plus
  std::size_t dp_plus_workspace_bytes = 0;
  std::size_t viterbi_workspace_bytes = 0;
  bool outputs_identical = false;
};
BenchReport bench_ratings(int reps);

}  // namespace subjrand
