#include "core/hmm.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace subjrand {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Cell {
  SRValue v{};
  bool live = false;
};

// Keep the likelier of two (possibly dead) cells.
Cell pick_cell(const Cell& a, const Cell& b, bool* fb) {
  if (!a.live) return b;
  if (!b.live) return a;
  return Cell{pick_likelier(a.v, b.v, fb), true};
}

}  // namespace

AbstractMachine::AbstractMachine(std::vector<Motif> motifs) : motifs_(std::move(motifs)) {
  entry_state_.resize(motifs_.size());
  for (std::size_t m = 0; m < motifs_.size(); ++m) {
    entry_state_[m] = static_cast<int>(states_.size());
    for (int p = 0; p < motifs_[m].length; ++p) states_.push_back(HmmState{static_cast<int>(m), p});
  }
}

std::vector<std::pair<HmmState, SRValue>> AbstractMachine::transitions(HmmState from) const {
  std::vector<std::pair<HmmState, SRValue>> out;
  const Motif& m = motifs_[static_cast<std::size_t>(from.motif)];
  if (from.offset + 1 < m.length)
    out.emplace_back(HmmState{from.motif, from.offset + 1}, SRValue::of(0, 1));
  else
    out.emplace_back(HmmState{from.motif, 0}, SRValue::of(0, 1));  // repeat
  for (std::size_t other = 0; other < motifs_.size(); ++other) {
    if (static_cast<int>(other) == from.motif) continue;
    out.emplace_back(HmmState{static_cast<int>(other), 0},
                     SRValue::of(motifs_[other].length, 0));
  }
  return out;
}

SRValue AbstractMachine::viterbi(std::span<const Symbol> x, RatingDiagnostics* diag) const {
  const int n = static_cast<int>(x.size());
  if (n == 0) throw std::domain_error("viterbi: empty sequence");
  const int ns = state_count();
  std::vector<Cell> cur(static_cast<std::size_t>(ns)), nxt(static_cast<std::size_t>(ns));
  bool fb = false;

  for (std::size_t m = 0; m < motifs_.size(); ++m) {
    if (motifs_[m].at(0) == x[0]) {
      cur[static_cast<std::size_t>(entry_state_[m])] =
          Cell{SRValue::of(motifs_[m].length, 0), true};
    }
  }

  for (int t = 1; t < n; ++t) {
    // Best value per motif, and the top two across motifs, so that the best
    // cross-motif entry source excludes the target's own motif.
    std::vector<Cell> motif_best(motifs_.size());
    for (int s = 0; s < ns; ++s) {
      if (!cur[static_cast<std::size_t>(s)].live) continue;
      auto& mb = motif_best[static_cast<std::size_t>(states_[static_cast<std::size_t>(s)].motif)];
      mb = pick_cell(mb, cur[static_cast<std::size_t>(s)], &fb);
    }
    int top1 = -1, top2 = -1;
    for (std::size_t m = 0; m < motifs_.size(); ++m) {
      if (!motif_best[m].live) continue;
      if (top1 < 0 ||
          pick_likelier(motif_best[m].v, motif_best[static_cast<std::size_t>(top1)].v, &fb) ==
              motif_best[m].v) {
        top2 = top1;
        top1 = static_cast<int>(m);
      } else if (top2 < 0 ||
                 pick_likelier(motif_best[m].v, motif_best[static_cast<std::size_t>(top2)].v,
                               &fb) == motif_best[m].v) {
        top2 = static_cast<int>(m);
      }
    }

    for (auto& c : nxt) c = Cell{};
    for (int s = 0; s < ns; ++s) {
      const HmmState st = states_[static_cast<std::size_t>(s)];
      const Motif& m = motifs_[static_cast<std::size_t>(st.motif)];
      if (m.at(st.offset) != x[static_cast<std::size_t>(t)]) continue;
      Cell c;
      if (st.offset > 0) {
        const Cell& prev = cur[static_cast<std::size_t>(s - 1)];  // (m, offset-1) precedes s
        if (prev.live) c = Cell{prev.v + SRValue::of(0, 1), true};
      } else {
        // Entry state: delta-repeat from the motif's last position, or an
        // alpha^k entry from the best state of any other motif.
        const Cell& last =
            cur[static_cast<std::size_t>(entry_state_[static_cast<std::size_t>(st.motif)] +
                                         m.length - 1)];
        if (last.live) c = Cell{last.v + SRValue::of(0, 1), true};
        const int src = (top1 >= 0 && top1 != st.motif) ? top1 : top2;
        if (src >= 0 && src != st.motif && motif_best[static_cast<std::size_t>(src)].live) {
          const Cell entry{motif_best[static_cast<std::size_t>(src)].v + SRValue::of(m.length, 0),
                           true};
          c = pick_cell(c, entry, &fb);
        }
      }
      nxt[static_cast<std::size_t>(s)] = c;
    }
    std::swap(cur, nxt);
  }

  Cell best;
  for (const Cell& c : cur) best = pick_cell(best, c, &fb);
  if (!best.live) throw std::logic_error("viterbi: no live state");  // unreachable
  if (diag) {
    if (fb) diag->incomparable_resolved = true;
    diag->workspace_bytes = 2 * static_cast<std::size_t>(ns) * sizeof(Cell);
  }
  return best.v;
}

SRValue AbstractMachine::viterbi(const BitSeq& x, RatingDiagnostics* diag) const {
  return viterbi(x.view(), diag);
}

// ---------------------------------------------------------------------------

namespace {

// State layout for the six-state model: motif index 0:X 1:O 2:XO 3:OX.
// States 3 and 6 are the entries of the two-symbol motifs, 4 and 5 their
// second symbols.
constexpr int kStateMotif[7] = {0, 0, 1, 2, 2, 3, 3};
constexpr int kMotifLen[4] = {1, 1, 2, 2};
constexpr Symbol kStateEmit[7] = {Symbol::O, Symbol::X, Symbol::O, Symbol::X,
                                  Symbol::O, Symbol::X, Symbol::O};

}  // namespace

NumericModel6::NumericModel6(double alpha, double delta) : alpha_(alpha), delta_(delta) {
  if (!(alpha > 0.0) || !(delta > 0.0) || !(delta < 1.0))
    throw std::domain_error("NumericModel6 requires 0 < alpha and 0 < delta < 1");
  c_ = (1.0 - delta_) / (2.0 * alpha_ + 2.0 * alpha_ * alpha_);
}

int NumericModel6::motif_of_state(int state) const { return kStateMotif[state]; }
int NumericModel6::motif_len(int state) const { return kMotifLen[kStateMotif[state]]; }
Symbol NumericModel6::emits(int state) const { return kStateEmit[state]; }

int NumericModel6::within_successor(int state) const {
  switch (state) {
    case 1: return 1;  // length-1 motifs repeat onto themselves
    case 2: return 2;
    case 3: return 4;  // XO: X then O
    case 4: return 3;  // repeat
    case 5: return 6;  // OX complete, repeat onto its entry
    case 6: return 5;  // OX: O then X
  }
  return 0;
}

int NumericModel6::entry_state_of_motif(int m) const {
  switch (m) {
    case 0: return 1;
    case 1: return 2;
    case 2: return 3;
    case 3: return 6;
  }
  return 0;
}

double NumericModel6::transition(int from, int to) const {
  if (from < 1 || from > 6 || to < 1 || to > 6) throw std::domain_error("state must be in 1..6");
  if (within_successor(from) == to) return delta_;
  const int tm = motif_of_state(to);
  if (to == entry_state_of_motif(tm) && tm != motif_of_state(from))
    return c_ * std::pow(alpha_, kMotifLen[tm]);
  return 0.0;
}

double NumericModel6::initial(int state) const {
  if (state < 1 || state > 6) throw std::domain_error("state must be in 1..6");
  if (entry_state_of_motif(motif_of_state(state)) != state) return 0.0;
  return c_ * std::pow(alpha_, motif_len(state));
}

NumericModel6::Result NumericModel6::viterbi(const BitSeq& x) const {
  const int n = x.size();
  if (n == 0) throw std::domain_error("viterbi: empty sequence");
  std::vector<std::array<double, 7>> score(static_cast<std::size_t>(n));
  std::vector<std::array<int, 7>> back(static_cast<std::size_t>(n));
  for (int s = 1; s <= 6; ++s) {
    const double p = initial(s);
    score[0][static_cast<std::size_t>(s)] =
        (p > 0 && emits(s) == x[0]) ? std::log(p) : kNegInf;
    back[0][static_cast<std::size_t>(s)] = 0;
  }
  for (int t = 1; t < n; ++t) {
    for (int s = 1; s <= 6; ++s) {
      double best = kNegInf;
      int arg = 0;
      if (emits(s) == x[t]) {
        for (int prev = 1; prev <= 6; ++prev) {
          const double w = transition(prev, s);
          if (w <= 0) continue;
          const double cand = score[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(prev)] +
                              std::log(w);
          if (cand > best) {
            best = cand;
            arg = prev;
          }
        }
      }
      score[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = best;
      back[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = arg;
    }
  }
  Result r;
  double best = kNegInf;
  int arg = 0;
  for (int s = 1; s <= 6; ++s) {
    if (score[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(s)] > best) {
      best = score[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(s)];
      arg = s;
    }
  }
  r.log_prob = best;
  r.path.resize(static_cast<std::size_t>(n));
  for (int t = n - 1; t >= 0; --t) {
    r.path[static_cast<std::size_t>(t)] = arg;
    arg = back[static_cast<std::size_t>(t)][static_cast<std::size_t>(arg)];
  }
  r.exponents = path_exponents(r.path);
  return r;
}

double NumericModel6::score_path(const BitSeq& x, std::span<const int> path) const {
  if (static_cast<int>(path.size()) != x.size() || x.empty())
    throw std::domain_error("path length must match the sequence length");
  if (emits(path[0]) != x[0]) return kNegInf;
  const double p0 = initial(path[0]);
  if (p0 <= 0) return kNegInf;
  double lp = std::log(p0);
  for (std::size_t t = 1; t < path.size(); ++t) {
    if (emits(path[t]) != x[static_cast<int>(t)]) return kNegInf;
    const double w = transition(path[t - 1], path[t]);
    if (w <= 0) return kNegInf;
    lp += std::log(w);
  }
  return lp;
}

SRValue NumericModel6::path_exponents(std::span<const int> path) const {
  if (path.empty()) return SRValue{0, 0};
  SRValue v = SRValue::of(motif_len(path[0]), 0);
  for (std::size_t t = 1; t < path.size(); ++t) {
    if (within_successor(path[t - 1]) == path[t])
      v += SRValue::of(0, 1);
    else
      v += SRValue::of(motif_len(path[t]), 0);
  }
  return v;
}

double NumericModel6::closed_row_sum(int state) const {
  double sum = 0;
  for (int to = 1; to <= 6; ++to) sum += transition(state, to);
  return sum + c_ * std::pow(alpha_, motif_len(state));
}

double NumericModel6::initial_sum() const {
  double sum = 0;
  for (int s = 1; s <= 6; ++s) sum += initial(s);
  return sum;
}

// ---------------------------------------------------------------------------

BenchReport bench_ratings(int reps) {
  if (reps < 1) throw std::domain_error("bench: reps must be >= 1");
  using clock = std::chrono::steady_clock;
  BenchReport report;
  report.reps = reps;

  std::vector<BitSeq> inputs;
  inputs.reserve(256);
  for (int code = 0; code < 256; ++code)
    inputs.push_back(BitSeq::from_code(static_cast<std::uint64_t>(code), 8));

  std::array<SRValue, 256> by_dp_plus{}, by_viterbi{};
  const AbstractMachine machine(motif_set());

  const auto t0 = clock::now();
  for (int r = 0; r < reps; ++r) {
    for (int code = 0; code < 256; ++code) {
      RatingDiagnostics diag;
      by_dp_plus[static_cast<std::size_t>(code)] =
          dp_plus(inputs[static_cast<std::size_t>(code)], &diag);
      report.dp_plus_workspace_bytes = std::max(report.dp_plus_workspace_bytes,
                                                diag.workspace_bytes);
    }
  }
  const auto t1 = clock::now();
  for (int r = 0; r < reps; ++r) {
    for (int code = 0; code < 256; ++code) {
      RatingDiagnostics diag;
      by_viterbi[static_cast<std::size_t>(code)] =
          machine.viterbi(inputs[static_cast<std::size_t>(code)], &diag);
      report.viterbi_workspace_bytes = std::max(report.viterbi_workspace_bytes,
                                                diag.workspace_bytes);
    }
  }
  const auto t2 = clock::now();

  report.dp_plus_seconds = std::chrono::duration<double>(t1 - t0).count();
  report.viterbi_seconds = std::chrono::duration<double>(t2 - t1).count();
  report.time_ratio = report.viterbi_seconds / std::max(report.dp_plus_seconds, 1e-12);
  report.outputs_identical = by_dp_plus == by_viterbi;
  return report;
}

}  // namespace subjrand
