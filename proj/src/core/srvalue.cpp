#include "core/srvalue.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace subjrand {

namespace {

const double kLogAlpha = std::log(kRefAlpha);
const double kLogDelta = std::log(kRefDelta);

std::string exp_text(int halves) {
  if (halves % 2 == 0) return std::to_string(halves / 2);
  return std::to_string(halves / 2) + "." + "5";
}

}  // namespace

double SRValue::log_weight() const {
  return alpha_exp * kLogAlpha + 0.5 * delta_halves * kLogDelta;
}

std::string SRValue::str() const {
  return "[" + std::to_string(alpha_exp) + "," + exp_text(delta_halves) + "]";
}

std::string SRValue::monomial() const {
  return "a^" + std::to_string(alpha_exp) + " d^" + exp_text(delta_halves);
}

std::optional<SRValue> SRValue::parse(std::string_view text) {
  std::string t(text);
  if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  const auto comma = t.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    const int i = std::stoi(t.substr(0, comma), &used);
    if (used != comma || i < 0) return std::nullopt;
    const std::string jtext = t.substr(comma + 1);
    int jh = 0;
    if (const auto dot = jtext.find('.'); dot != std::string::npos) {
      const std::string frac = jtext.substr(dot + 1);
      if (frac != "5" && frac != "0") return std::nullopt;
      jh = 2 * std::stoi(jtext.substr(0, dot), &used);
      if (used != dot) return std::nullopt;
      if (frac == "5") jh += 1;
    } else {
      jh = 2 * std::stoi(jtext, &used);
      if (used != jtext.size()) return std::nullopt;
    }
    if (jh < 0) return std::nullopt;
    return SRValue{i, jh};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::MoreRandom: return "MoreRandom";
    case Ordering::Equal: return "Equal";
    case Ordering::LessRandom: return "LessRandom";
    case Ordering::Incomparable: return "Incomparable";
  }
  return "?";
}

Ordering compare(SRValue a, SRValue b) {
  const int di = a.alpha_exp - b.alpha_exp;
  const int djh = a.delta_halves - b.delta_halves;
  if (di == 0 && djh == 0) return Ordering::Equal;
  // alpha^di delta^(djh/2) < 1 for all admissible parameters iff di > 0 and
  // djh >= -8 di (one alpha outweighs four deltas), or di = 0 and djh > 0.
  if ((di > 0 && djh >= -8 * di) || (di == 0 && djh > 0)) return Ordering::MoreRandom;
  if ((di < 0 && djh <= -8 * di) || (di == 0 && djh < 0)) return Ordering::LessRandom;
  return Ordering::Incomparable;
}

bool meets_threshold_value(SRValue value, SRValue threshold) {
  switch (compare(value, threshold)) {
    case Ordering::MoreRandom:
    case Ordering::Equal:
      return true;
    case Ordering::LessRandom:
      return false;
    case Ordering::Incomparable:
      throw std::domain_error("rating " + value.str() + " is incomparable with threshold " +
                              threshold.str());
  }
  return false;
}

SRValue pick_likelier(SRValue a, SRValue b, bool* numeric_fallback) {
  switch (compare(a, b)) {
    case Ordering::LessRandom:
    case Ordering::Equal:
      return a;
    case Ordering::MoreRandom:
      return b;
    case Ordering::Incomparable:
      if (numeric_fallback) *numeric_fallback = true;
      return a.log_weight() >= b.log_weight() ? a : b;
  }
  return a;
}

}  // namespace subjrand
