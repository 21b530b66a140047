#include "core/generator.hpp"

#include <algorithm>

#include "core/reference_data.hpp"

namespace subjrand {

namespace {

int longest_run(const BitSeq& s) {
  int best = 1, cur = 1;
  for (int k = 1; k < s.size(); ++k) {
    cur = s[k] == s[k - 1] ? cur + 1 : 1;
    best = std::max(best, cur);
  }
  return best;
}

// The non-trivial strong component containing `code`, or null.
const ComponentInfo* component_of(const ComponentAnalysis& analysis, int code) {
  for (const ComponentInfo* c : analysis.report.nontrivial_strong())
    if (c->member_set().test(static_cast<std::size_t>(code))) return c;
  return nullptr;
}

// Extends a 7-symbol seed into the component, choosing uniformly among the
// qualifying extensions.
BitSeq extend_seed(const Engine& engine, const BitSeq& seed7, SRValue threshold, Rng& rng) {
  const SeedValidation v = validate_seed(engine, seed7, threshold);
  if (!v.ok) throw GenError(GenError::Kind::InvalidSeed, "seed rejected: " + v.reason);
  const ComponentAnalysis& analysis = engine.components(threshold);
  VertexSet members;
  for (const ComponentInfo* c : analysis.report.nontrivial_strong()) members |= c->member_set();
  std::vector<Symbol> options;
  for (Symbol s : {Symbol::O, Symbol::X}) {
    BitSeq cand = seed7;
    cand.push_back(s);
    if (members.test(static_cast<std::size_t>(cand.code()))) options.push_back(s);
  }
  if (options.empty())
    throw GenError(GenError::Kind::InvalidSeed,
                   "seed rejected: no 8-bit extension lies in the component at " +
                       threshold.str());
  BitSeq out = seed7;
  out.push_back(options.size() == 1 ? options[0] : options[static_cast<std::size_t>(rng.pick(2))]);
  return out;
}

BitSeq prepare_seed(const Engine& engine, const GenConfig& cfg, Rng& rng) {
  if (cfg.seed.size() != 7 && cfg.seed.size() != 8)
    throw GenError(GenError::Kind::InvalidSeed, "seed must have 7 or 8 symbols");
  if (cfg.target_length < static_cast<std::uint64_t>(8))
    throw GenError(GenError::Kind::ConfigMismatch, "target length must be at least 8");
  return cfg.seed.size() == 7 ? extend_seed(engine, cfg.seed, cfg.threshold, rng) : cfg.seed;
}

}  // namespace

SeedValidation validate_seed(const Engine& engine, const BitSeq& seed7, SRValue threshold) {
  if (seed7.size() != 7) throw std::domain_error("seed validation expects 7 symbols");
  if (threshold == SRValue::of(4, 4)) {
    if (longest_run(seed7) >= 5) return {false, "contains a run of length 5 or more"};
    if (exact_value(seed7).alpha_exp <= 2)
      return {false, "rating " + exact_value(seed7).str() + " has alpha exponent <= 2"};
    const auto text = seed7.str();
    if (text == "OOOXOOO" || text == "XXXOXXX") return {false, "is " + text};
    return {true, ""};
  }
  // Generic rule: some 8-bit extension must lie in the component.
  const ComponentAnalysis& analysis = engine.components(threshold);
  VertexSet members;
  for (const ComponentInfo* c : analysis.report.nontrivial_strong()) members |= c->member_set();
  for (Symbol s : {Symbol::O, Symbol::X}) {
    BitSeq cand = seed7;
    cand.push_back(s);
    if (members.test(static_cast<std::size_t>(cand.code()))) return {true, ""};
  }
  return {false, "no 8-bit extension lies in the component at " + threshold.str()};
}

BitSeq generate_walk(const Engine& engine, const GenConfig& cfg) {
  Rng rng(cfg.rng_seed);
  BitSeq out = prepare_seed(engine, cfg, rng);
  const ComponentAnalysis& analysis = engine.components(cfg.threshold);
  if (analysis.report.nontrivial_strong().empty())
    throw GenError(GenError::Kind::ConfigMismatch,
                   "threshold " + cfg.threshold.str() +
                       " has no non-trivial strongly connected component to walk");
  int code = static_cast<int>(out.code() & 0xFF);
  const ComponentInfo* comp = component_of(analysis, code);
  if (!comp) {
    std::string names;
    for (const ComponentInfo* c : analysis.report.nontrivial_strong()) {
      names += names.empty() ? "{" : ", {";
      names += std::to_string(c->vertices.front()) + "...}";
    }
    throw GenError(GenError::Kind::InvalidSeed,
                   "seed window " + std::to_string(code) + " is not a vertex of the component at " +
                       cfg.threshold.str() + " (components: " + names + ")");
  }
  const VertexSet inside = comp->member_set();
  out.reserve(cfg.target_length);
  while (static_cast<std::uint64_t>(out.size()) < cfg.target_length) {
    const int s0 = ((code << 1) & 0xFF);
    const int s1 = s0 | 1;
    const bool ok0 = inside.test(static_cast<std::size_t>(s0));
    const bool ok1 = inside.test(static_cast<std::size_t>(s1));
    int next;
    if (ok0 && ok1)
      next = rng.pick(2) ? s1 : s0;
    else if (ok0 || ok1)
      next = ok0 ? s0 : s1;
    else
      throw GenError(GenError::Kind::Sink, "walk reached a sink at window " +
                                               std::to_string(code));  // impossible in an SCC
    out.push_back(symbol_of_bit(next & 1));
    code = next;
  }
  return out;
}

BitSeq generate_bounds(const Engine& engine, const GenConfig& cfg) {
  const Ordering ord = compare(cfg.threshold, bounds_threshold_limit());
  if (ord != Ordering::LessRandom && ord != Ordering::Equal)
    throw GenError(GenError::Kind::ConfigMismatch,
                   "bounds method supports thresholds up to " + bounds_threshold_limit().str() +
                       "; got " + cfg.threshold.str());
  Rng rng(cfg.rng_seed);
  BitSeq out = prepare_seed(engine, cfg, rng);
  const ComponentAnalysis& analysis = engine.components(cfg.threshold);
  int code = static_cast<int>(out.code() & 0xFF);
  if (!component_of(analysis, code))
    throw GenError(GenError::Kind::InvalidSeed,
                   "seed window " + std::to_string(code) + " is not a vertex of the component at " +
                       cfg.threshold.str());
  const RatingTable8& table = engine.ratings();
  out.reserve(cfg.target_length);
  while (static_cast<std::uint64_t>(out.size()) < cfg.target_length) {
    const int s0 = ((code << 1) & 0xFF);
    const int s1 = s0 | 1;
    const bool ok0 =
        meets_threshold_value(table.context[static_cast<std::size_t>(s0)], cfg.threshold);
    const bool ok1 =
        meets_threshold_value(table.context[static_cast<std::size_t>(s1)], cfg.threshold);
    int next;
    if (ok0 && ok1)
      next = rng.pick(2) ? s1 : s0;
    else if (ok0 || ok1)
      next = ok0 ? s0 : s1;
    else
      throw GenError(GenError::Kind::Sink,
                     "both extensions of window " + std::to_string(code) +
                         " fall below the threshold (sink reached)");
    out.push_back(symbol_of_bit(next & 1));
    code = next;
  }
  return out;
}

BitSeq generate(const Engine& engine, const GenConfig& cfg) {
  return cfg.method == GenMethod::Walk ? generate_walk(engine, cfg)
                                       : generate_bounds(engine, cfg);
}

StreamStatsReport stream_stats(const BitSeq& x, const RatingTable8* table) {
  const int n = x.size();
  if (n < 2) throw std::domain_error("stream_stats requires at least 2 symbols");
  StreamStatsReport r;
  r.length = static_cast<std::uint64_t>(n);
  std::uint64_t alternations = 0;
  int run = 1;
  for (int k = 0; k < n; ++k) {
    if (x[k] == Symbol::X) ++r.x_count;
    if (k == 0) continue;
    if (x[k] != x[k - 1]) {
      ++alternations;
      ++r.run_histogram[run];
      run = 1;
    } else {
      ++run;
    }
  }
  ++r.run_histogram[run];
  r.alternation_rate = static_cast<double>(alternations) / static_cast<double>(n - 1);
  r.x_minus_half = static_cast<double>(r.x_count) - static_cast<double>(n) / 2.0;
  r.imbalance = std::abs(r.x_minus_half);
  if (table && n >= 8) {
    r.has_window_ratings = true;
    double sum_alpha = 0, sum_delta = 0;
    bool first = true;
    std::uint64_t windows = 0;
    std::uint8_t code = 0;
    for (int k = 0; k < n; ++k) {
      code = static_cast<std::uint8_t>((code << 1) | bit_of(x[k]));
      if (k < 7) continue;
      const SRValue v = table->context[code];
      if (first) {
        r.min_window = v;
        first = false;
      } else {
        r.min_window = pick_likelier(r.min_window, v);
      }
      sum_alpha += v.alpha_exp;
      sum_delta += v.delta_exp();
      ++windows;
    }
    r.mean_window_alpha = sum_alpha / static_cast<double>(windows);
    r.mean_window_delta = sum_delta / static_cast<double>(windows);
  }
  return r;
}

}  // namespace subjrand
