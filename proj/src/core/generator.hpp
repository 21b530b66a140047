#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "core/bitseq.hpp"
#include "core/engine.hpp"
#include "core/srvalue.hpp"

namespace subjrand {

enum class GenMethod { Walk, Bounds };

struct GenConfig {
  GenMethod method = GenMethod::Walk;
  SRValue threshold = SRValue::of(4, 4);
  BitSeq seed;                      // 7 or 8 symbols
  std::uint64_t target_length = 8;  // >= seed length
  std::uint64_t rng_seed = 0;
};

/// Deterministic source of uniform choices. Backed by std::mt19937_64, whose
/// output stream is pinned by the standard, so identical rng seeds reproduce
/// identical sequences on any conforming implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform value in [0, n); n must be a power of two here (n is 1 or 2 in
  /// every call site, keeping the draw bias-free and portable).
  int pick(int n) { return static_cast<int>(engine_() & static_cast<std::uint64_t>(n - 1)); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct GenError : std::runtime_error {
  enum class Kind { InvalidSeed, ConfigMismatch, Sink };
  GenError(Kind k, const std::string& message) : std::runtime_error(message), kind(k) {}
  Kind kind;
};

struct SeedValidation {
  bool ok = false;
  std::string reason;  // names the violated rule when !ok
};

/// Checks a 7-symbol seed against a threshold. At [4,4] the published rules
/// apply: no run of five or more, no motif-machine value with alpha exponent
/// <= 2, and not OOOXOOO or XXXOXXX. Other thresholds test directly whether
/// some 8-bit extension lies in the threshold's component.
SeedValidation validate_seed(const Engine& engine, const BitSeq& seed7, SRValue threshold);

/// Incidence-walk generation: every step moves along an arc of the
/// threshold's strong component, chosen uniformly among out-arcs.
BitSeq generate_walk(const Engine& engine, const GenConfig& cfg);

/// Bounds-based creation: append the symbol whose window keeps
/// sr >= threshold, choosing uniformly when both qualify. Only thresholds up
/// to [4,4.5] are accepted.
BitSeq generate_bounds(const Engine& engine, const GenConfig& cfg);

BitSeq generate(const Engine& engine, const GenConfig& cfg);

struct StreamStatsReport {
  std::uint64_t length = 0;
  std::uint64_t x_count = 0;
  double alternation_rate = 0;  // adjacent unequal pairs / (n-1)
  double imbalance = 0;         // |n/2 - #X|
  double x_minus_half = 0;      // #X - n/2 (signed)
  std::map<int, std::uint64_t> run_histogram;
  bool has_window_ratings = false;  // n >= 8
  SRValue min_window;
  double mean_window_alpha = 0;
  double mean_window_delta = 0;
};
/// Alternation, imbalance, run lengths and (for n >= 8) the distribution of
/// window ratings. Requires n >= 2.
StreamStatsReport stream_stats(const BitSeq& x, const RatingTable8* table);

}  // namespace subjrand
