#pragma once

#include <bitset>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/rating.hpp"
#include "core/srvalue.hpp"

namespace subjrand {

using VertexSet = std::bitset<256>;

/// All windows whose context rating meets t: S(t) = {x : sr(x) >= t}.
VertexSet threshold_set(const RatingTable8& table, SRValue t);

/// Shift digraph on a set of 8-bit windows: u -> v iff v = shift_append(u, s)
/// for some symbol s and both u, v are vertices. Out- and in-degree <= 2.
class ShiftDigraph {
 public:
  ShiftDigraph() = default;
  explicit ShiftDigraph(VertexSet verts) : verts_(verts) {}

  bool has(int code) const { return verts_.test(static_cast<std::size_t>(code)); }
  const VertexSet& vertex_set() const { return verts_; }
  int vertex_count() const { return static_cast<int>(verts_.count()); }

  /// Directed arc count, self-loops included.
  int arc_count() const;
  int out_degree(int code) const;
  /// Successor codes of `code` inside the graph; -1 entries when absent.
  std::array<int, 2> successors(int code) const;
  std::vector<std::uint8_t> vertices() const;  // ascending codes

 private:
  VertexSet verts_;
};

struct ComponentInfo {
  std::vector<std::uint8_t> vertices;  // ascending
  int arc_count = 0;                   // arcs inside the component
  int self_loops = 0;
  int digon_pairs = 0;      // antiparallel arc pairs u<->v, counted once
  int cycle_basis = 0;      // arcs - |V| + 1 (each component is connected)
  int simple_cycle_basis = 0;  // after dropping self-loops and digon doubles
  bool nontrivial = false;  // >= 2 vertices, or one vertex with a self-loop

  VertexSet member_set() const;
};

/// Strong and weak component decomposition. Components are ordered by size
/// descending, then by smallest member code.
struct ComponentReport {
  std::vector<ComponentInfo> strong;
  std::vector<ComponentInfo> weak;
  std::vector<const ComponentInfo*> nontrivial_strong() const;
};

/// Tarjan over the given root order (ascending codes when empty); the
/// partition itself is order-independent.
ComponentReport strong_components(const ShiftDigraph& g,
                                  std::span<const std::uint8_t> root_order = {});

/// Graph and component analysis for one threshold.
struct ComponentAnalysis {
  SRValue threshold;
  ShiftDigraph graph;
  ComponentReport report;
};
ComponentAnalysis analyze_threshold(const RatingTable8& table, SRValue t);

class Engine;

struct ClauseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Checks the component-structure theorem over all published thresholds:
/// (a) exactly one non-trivial strong component below [5,3], exactly two at
///     [5,3];
/// (b) the components are nested along the threshold chain;
/// (c) no non-trivial strong component above [5,3];
/// (d) up to [4,4.5], each component is also a weak component of its graph.
struct TheoremReport {
  std::vector<ClauseResult> clauses;
  bool all_pass = false;
};
TheoremReport verify_theorem1(const Engine& engine);

/// One reproduced row of the published component table.
struct Table2Row {
  SRValue threshold;
  std::vector<std::vector<std::uint8_t>> components;  // non-trivial SCC vertex lists
  int vertices = 0;
  int arcs = 0;
  int cycle_basis = 0;
  int self_loops = 0;
  int digon_pairs = 0;
  int published_vertices = 0;
  int published_arcs = 0;
  int published_basis = 0;
  bool membership_ok = false;
  bool arcs_exact = false;   // computed == published
  bool basis_exact = false;
  bool reproduced = false;   // exact, or published matches the simple-graph count
  std::string note;          // non-empty on a documented deviation
};
std::vector<Table2Row> reproduce_table2(const Engine& engine);

}  // namespace subjrand
