#include "core/rating.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "core/motifs.hpp"

namespace subjrand {

namespace {

constexpr int kDpPlusMaxLength = 16384;

bool all_equal(std::span<const Symbol> x) {
  for (std::size_t k = 1; k < x.size(); ++k)
    if (x[k] != x[0]) return false;
  return true;
}

bool all_alternating(std::span<const Symbol> x) {
  for (std::size_t k = 1; k < x.size(); ++k)
    if (x[k] == x[k - 1]) return false;
  return true;
}

int leading_run(std::span<const Symbol> x) {
  int r = 1;
  while (r < static_cast<int>(x.size()) && x[static_cast<std::size_t>(r)] == x[0]) ++r;
  return r;
}

int leading_alternation(std::span<const Symbol> x) {
  int a = 1;
  while (a < static_cast<int>(x.size()) &&
         x[static_cast<std::size_t>(a)] != x[static_cast<std::size_t>(a - 1)])
    ++a;
  return a;
}

// Longest block starting at `start` that follows the period-`period` pattern
// x[start..start+period).
int pattern_span(std::span<const Symbol> x, int start, int period) {
  const int n = static_cast<int>(x.size());
  int t = period;
  while (start + t < n &&
         x[static_cast<std::size_t>(start + t)] == x[static_cast<std::size_t>(start + t % period)])
    ++t;
  return t;
}

class DpPlusEval {
 public:
  DpPlusEval(std::span<const Symbol> x, bool block_passes, RatingDiagnostics* diag)
      : x_(x), block_passes_(block_passes), diag_(diag) {}

  SRValue eval(int s, int e) {
    if (s == e) return SRValue{0, 0};
    const std::uint64_t key =
        (static_cast<std::uint64_t>(s) << 32) | static_cast<std::uint64_t>(e);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const SRValue v = compute(s, e);
    memo_.emplace(key, v);
    return v;
  }

  std::size_t memo_entries() const { return memo_.size(); }

 private:
  SRValue compute(int s, int e) {
    const auto part = x_.subspan(static_cast<std::size_t>(s), static_cast<std::size_t>(e - s));
    const int n = e - s;
    if (all_equal(part)) return SRValue::of(1, n - 1);
    if (n >= 3 && all_alternating(part)) return SRValue::of(2, n - 1);

    // Split off the leading run: a pure run of length >= 2, otherwise the
    // maximal alternating prefix (with its trailing half-repeat). A prefix of
    // fewer than two whole pairs splits as a single symbol.
    SRValue best;
    const int r = leading_run(part);
    if (r >= 2) {
      best = SRValue::of(1, r - 1) + eval(s + r, e);
    } else {
      const int a = leading_alternation(part);
      if (a <= 3)
        best = SRValue::of(1, 0) + eval(s + 1, e);
      else
        best = SRValue::of(2, a - 1) + eval(s + a, e);
    }

    if (!block_passes_) return best;

    // Improvement passes: place one maximal length-3 (then length-4) block at
    // every start position and rate the flanks recursively. Blocks shorter
    // than motif + 1 are always dominated by run splittings.
    for (int len : {3, 4}) {
      if (best.alpha_exp < len + 1) continue;
      SRValue pass_best = best;
      for (int i = s; i + len < e; ++i) {
        const int span = pattern_span(part, i - s, len);
        if (span < len + 1) continue;
        const SRValue cand = eval(s, i) + SRValue::of(len, span - 1) + eval(i + span, e);
        bool fb = false;
        pass_best = pick_likelier(pass_best, cand, &fb);
        if (fb && diag_) diag_->incomparable_resolved = true;
      }
      best = pass_best;
    }
    return best;
  }

  std::span<const Symbol> x_;
  bool block_passes_;
  RatingDiagnostics* diag_;
  std::unordered_map<std::uint64_t, SRValue> memo_;
};

}  // namespace

int dp(const BitSeq& x) {
  const int n = x.size();
  if (n == 0) throw std::domain_error("dp: empty sequence");
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  // best[p]: cheapest description of the first p symbols.
  std::vector<int> best(static_cast<std::size_t>(n) + 1, kInf);
  std::vector<int> run_len(static_cast<std::size_t>(n) + 1, 1);
  std::vector<int> alt_len(static_cast<std::size_t>(n) + 1, 1);
  best[0] = 0;
  for (int p = 2; p <= n; ++p) {
    run_len[static_cast<std::size_t>(p)] =
        x[p - 1] == x[p - 2] ? run_len[static_cast<std::size_t>(p - 1)] + 1 : 1;
    alt_len[static_cast<std::size_t>(p)] =
        x[p - 1] != x[p - 2] ? alt_len[static_cast<std::size_t>(p - 1)] + 1 : 1;
  }
  for (int p = 1; p <= n; ++p) {
    for (int L = 1; L <= run_len[static_cast<std::size_t>(p)]; ++L)
      best[static_cast<std::size_t>(p)] =
          std::min(best[static_cast<std::size_t>(p)], best[static_cast<std::size_t>(p - L)] + 1);
    for (int L = 3; L <= alt_len[static_cast<std::size_t>(p)]; ++L)
      best[static_cast<std::size_t>(p)] =
          std::min(best[static_cast<std::size_t>(p)], best[static_cast<std::size_t>(p - L)] + 2);
  }
  return best[static_cast<std::size_t>(n)];
}

SRValue exact_value(std::span<const Symbol> x, RatingDiagnostics* diag) {
  const int n = static_cast<int>(x.size());
  if (n == 0) return SRValue{0, 0};
  static constexpr SRValue kUnset{-1, 0};
  std::vector<SRValue> best(static_cast<std::size_t>(n) + 1, kUnset);
  best[0] = SRValue{0, 0};
  const auto& motifs = motif_set();
  for (int s = 0; s < n; ++s) {
    const SRValue base = best[static_cast<std::size_t>(s)];
    for (const Motif& m : motifs) {
      // Extend the match as far as the motif repetition holds.
      int t = 0;
      while (s + t < n && x[static_cast<std::size_t>(s + t)] == m.at(t)) ++t;
      for (int L = 1; L <= t; ++L) {
        const SRValue cand = base + SRValue::of(m.length, L - 1);
        SRValue& slot = best[static_cast<std::size_t>(s + L)];
        if (slot == kUnset) {
          slot = cand;
        } else {
          bool fb = false;
          slot = pick_likelier(slot, cand, &fb);
          if (fb && diag) diag->incomparable_resolved = true;
        }
      }
    }
  }
  if (diag) diag->workspace_bytes = (static_cast<std::size_t>(n) + 1) * sizeof(SRValue);
  return best[static_cast<std::size_t>(n)];
}

SRValue exact_value(const BitSeq& x, RatingDiagnostics* diag) {
  return exact_value(x.view(), diag);
}

SRValue exact_context_value(std::span<const Symbol> x) {
  SRValue v = exact_value(x);
  const std::size_t n = x.size();
  if (n >= 2 && n % 2 == 0) {
    const auto half = x.subspan(0, n / 2);
    bool dup = true;
    for (std::size_t k = 0; k < n / 2; ++k)
      if (x[k] != x[k + n / 2]) {
        dup = false;
        break;
      }
    if (dup) v = pick_likelier(v, exact_value(half) + duplication_prior());
  }
  return v;
}

SRValue dp_plus(const BitSeq& x, RatingDiagnostics* diag) {
  if (x.size() > kDpPlusMaxLength)
    throw std::domain_error("dp_plus supports sequences up to length 16384; "
                            "use the exact rater for longer inputs");
  DpPlusEval eval(x.view(), /*block_passes=*/true, diag);
  const SRValue v = eval.eval(0, x.size());
  if (diag)
    diag->workspace_bytes =
        eval.memo_entries() * (sizeof(std::uint64_t) + sizeof(SRValue) + 2 * sizeof(void*));
  return v;
}

SRValue dp_plus_runs_only(const BitSeq& x) {
  DpPlusEval eval(x.view(), /*block_passes=*/false, nullptr);
  return eval.eval(0, x.size());
}

SRValue sr_rating(const BitSeq& x) {
  if (x.empty()) throw std::domain_error("sr_rating: empty sequence");
  SRValue v = dp_plus(x);
  if (x.is_duplication()) v = pick_likelier(v, dp_plus(x.first_half()) + duplication_prior());
  return v;
}

bool meets_threshold(const BitSeq& x, SRValue t) {
  if (x.size() != 8) throw std::domain_error("meets_threshold expects an 8-symbol sequence");
  return meets_threshold_value(sr_rating(x), t);
}

RatingTable8 RatingTable8::build() {
  RatingTable8 table;
  for (int code = 0; code < 256; ++code) {
    const BitSeq x = BitSeq::from_code(static_cast<std::uint64_t>(code), 8);
    table.finite_state[static_cast<std::size_t>(code)] = exact_value(x);
    table.context[static_cast<std::size_t>(code)] = sr_rating(x);
  }
  return table;
}

}  // namespace subjrand
