#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "core/hmm.hpp"
#include "core/rating.hpp"
#include "core/seqgraph.hpp"

namespace subjrand {

/// Bundles the one-time precomputations: the 256-window rating table, the
/// motif machine, and a per-threshold component cache. Immutable after
/// construction and safe to share across threads.
class Engine {
 public:
  Engine() : Engine(RatingTable8::build()) {}
  explicit Engine(RatingTable8 table) : table_(table), machine_(motif_set()) {}

  const RatingTable8& ratings() const { return table_; }
  const AbstractMachine& machine() const { return machine_; }

  const ComponentAnalysis& components(SRValue threshold) const {
    const std::pair<int, int> key{threshold.alpha_exp, threshold.delta_halves};
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, std::make_unique<ComponentAnalysis>(
                                   analyze_threshold(table_, threshold)))
               .first;
    return *it->second;
  }

 private:
  RatingTable8 table_;
  AbstractMachine machine_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<ComponentAnalysis>> cache_;
};

}  // namespace subjrand
