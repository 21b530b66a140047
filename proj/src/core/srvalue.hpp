#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace subjrand {

// Reference parameters for the sequential-presentation fit; used only to
// break formally incomparable ties and as a consistent total order for
// minimizations. They satisfy 0 < alpha < delta^4 < 1.
inline constexpr double kRefAlpha = 0.11;
inline constexpr double kRefDelta = 0.70;

/// Exponent pair [i, j] standing for the monomial alpha^i delta^j under the
/// formal constraint 0 < alpha < delta^4 < 1. j is kept in half-units so the
/// duplication prior [1, 3.5] stays exact.
struct SRValue {
  int alpha_exp = 0;
  int delta_halves = 0;

  static constexpr SRValue of(int i, int j) { return {i, 2 * j}; }
  static constexpr SRValue of_halves(int i, int jh) { return {i, jh}; }

  double delta_exp() const { return delta_halves / 2.0; }

  friend constexpr SRValue operator+(SRValue a, SRValue b) {
    return {a.alpha_exp + b.alpha_exp, a.delta_halves + b.delta_halves};
  }
  SRValue& operator+=(SRValue o) {
    alpha_exp += o.alpha_exp;
    delta_halves += o.delta_halves;
    return *this;
  }
  bool operator==(const SRValue&) const = default;

  /// log of the monomial at (kRefAlpha, kRefDelta). Strictly larger means a
  /// likelier (less random-looking) reading.
  double log_weight() const;

  std::string str() const;       // "[4,4.5]"
  std::string monomial() const;  // "a^4 d^4.5"

  /// Accepts "4,4.5" or "[4,4.5]"; half-integer j only.
  static std::optional<SRValue> parse(std::string_view text);
};

enum class Ordering { MoreRandom, Equal, LessRandom, Incomparable };

const char* ordering_name(Ordering o);

/// Probability-dominance order: a is MoreRandom than b exactly when
/// alpha^a.i delta^a.j < alpha^b.i delta^b.j for every admissible parameter
/// choice. Not total on arbitrary pairs.
Ordering compare(SRValue a, SRValue b);

/// compare(value, threshold) is MoreRandom or Equal. Throws
/// std::domain_error on an Incomparable pair.
bool meets_threshold_value(SRValue value, SRValue threshold);

/// Of two candidate readings, keeps the likelier (larger monomial).
/// Formally incomparable pairs are decided numerically at
/// (kRefAlpha, kRefDelta); *numeric_fallback is set when that happens.
SRValue pick_likelier(SRValue a, SRValue b, bool* numeric_fallback = nullptr);

}  // namespace subjrand
