#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/bitseq.hpp"
#include "core/engine.hpp"
#include "core/srvalue.hpp"

namespace subjrand {

/// One row of the 8-bit rating table: every O-initial window sharing a
/// (finite-state, context) value pair, ordered most random first.
struct Table1Group {
  SRValue finite;
  SRValue context;
  std::vector<std::uint8_t> members;
};
std::vector<Table1Group> reproduce_table1(const RatingTable8& table);

struct PercentileReport {
  int length = 0;
  int samples = 0;
  std::uint64_t rng_seed = 0;
  int jobs = 1;
  std::uint64_t population = 0;  // 2^length
  std::string worst_sequence;
  SRValue worst_value;
  double worst_percentile = 0;  // fraction rated strictly more random
  bool within_10pct = false;
  bool within_9pct = false;
  double seconds = 0;
};
/// Rates the whole population of length-n sequences (exact motif value with
/// the duplication reading) and compares generated walk samples from the
/// [4,4] component against it. Refuses n > 22.
PercentileReport percentile_check(const Engine& engine, int length, int samples,
                                  std::uint64_t rng_seed, int jobs = 1);

struct WindowAuditReport {
  int window_count = 0;
  SRValue threshold;
  SRValue min_value;
  double mean_alpha = 0;
  double mean_delta = 0;
  std::map<std::pair<int, int>, int> histogram;  // (i, j halves) -> windows
  bool pass = false;                             // every window meets the threshold
};
/// Distribution of 8-bit window ratings of x against a threshold. n >= 8.
WindowAuditReport window_audit(const Engine& engine, const BitSeq& x, SRValue threshold);

struct VerificationItem {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct VerificationReport {
  std::vector<VerificationItem> items;
  std::vector<std::string> notes;  // documented deviations from the published tables
  bool pass = false;
  double seconds = 0;
};
/// Reproduces the published rating table and component table, checks the
/// component-structure theorem, and cross-checks the three rating routes
/// (recursive predictor, exact segmentation, motif-machine Viterbi) on all
/// 256 windows.
VerificationReport run_verification(const Engine& engine);

}  // namespace subjrand
