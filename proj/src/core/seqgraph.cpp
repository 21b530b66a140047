#include "core/seqgraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "core/engine.hpp"
#include "core/reference_data.hpp"

namespace subjrand {

namespace {

int succ_code(int code, int bit) { return ((code << 1) & 0xFF) | bit; }

std::string code_list(std::span<const std::uint8_t> codes, std::size_t limit = 12) {
  std::ostringstream os;
  for (std::size_t k = 0; k < codes.size() && k < limit; ++k) {
    if (k) os << ' ';
    os << static_cast<int>(codes[k]);
  }
  if (codes.size() > limit) os << " ...";
  return os.str();
}

}  // namespace

VertexSet threshold_set(const RatingTable8& table, SRValue t) {
  VertexSet out;
  for (int code = 0; code < 256; ++code)
    if (meets_threshold_value(table.context[static_cast<std::size_t>(code)], t))
      out.set(static_cast<std::size_t>(code));
  return out;
}

int ShiftDigraph::arc_count() const {
  int arcs = 0;
  for (int code = 0; code < 256; ++code)
    if (has(code)) arcs += out_degree(code);
  return arcs;
}

int ShiftDigraph::out_degree(int code) const {
  if (!has(code)) return 0;
  return (has(succ_code(code, 0)) ? 1 : 0) + (has(succ_code(code, 1)) ? 1 : 0);
}

std::array<int, 2> ShiftDigraph::successors(int code) const {
  std::array<int, 2> out{-1, -1};
  if (!has(code)) return out;
  if (const int v = succ_code(code, 0); has(v)) out[0] = v;
  if (const int v = succ_code(code, 1); has(v)) out[1] = v;
  return out;
}

std::vector<std::uint8_t> ShiftDigraph::vertices() const {
  std::vector<std::uint8_t> out;
  out.reserve(verts_.count());
  for (int code = 0; code < 256; ++code)
    if (has(code)) out.push_back(static_cast<std::uint8_t>(code));
  return out;
}

VertexSet ComponentInfo::member_set() const {
  VertexSet s;
  for (std::uint8_t v : vertices) s.set(v);
  return s;
}

std::vector<const ComponentInfo*> ComponentReport::nontrivial_strong() const {
  std::vector<const ComponentInfo*> out;
  for (const ComponentInfo& c : strong)
    if (c.nontrivial) out.push_back(&c);
  return out;
}

namespace {

// Fills the counts of a component whose membership is already known.
ComponentInfo finish_component(const ShiftDigraph& g, std::vector<std::uint8_t> members) {
  ComponentInfo info;
  std::sort(members.begin(), members.end());
  info.vertices = std::move(members);
  const VertexSet inside = info.member_set();
  for (std::uint8_t u : info.vertices) {
    for (int bit = 0; bit < 2; ++bit) {
      const int v = succ_code(u, bit);
      if (!g.has(v) || !inside.test(static_cast<std::size_t>(v))) continue;
      ++info.arc_count;
      if (v == u) ++info.self_loops;
      // Count each antiparallel pair once, from its smaller endpoint.
      else if (u < v && succ_code(v, u & 1) == u) ++info.digon_pairs;
    }
  }
  const int n = static_cast<int>(info.vertices.size());
  info.cycle_basis = info.arc_count - n + 1;
  info.simple_cycle_basis = (info.arc_count - info.self_loops - info.digon_pairs) - n + 1;
  info.nontrivial = n >= 2 || info.self_loops > 0;
  return info;
}

void sort_components(std::vector<ComponentInfo>& comps) {
  std::sort(comps.begin(), comps.end(), [](const ComponentInfo& a, const ComponentInfo& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() > b.vertices.size();
    return a.vertices.front() < b.vertices.front();
  });
}

std::vector<ComponentInfo> weak_components(const ShiftDigraph& g) {
  std::array<int, 256> parent;
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int u = 0; u < 256; ++u) {
    if (!g.has(u)) continue;
    for (const int v : g.successors(u))
      if (v >= 0) unite(u, v);
  }
  std::map<int, std::vector<std::uint8_t>> buckets;
  for (int u = 0; u < 256; ++u)
    if (g.has(u)) buckets[find(u)].push_back(static_cast<std::uint8_t>(u));
  std::vector<ComponentInfo> out;
  out.reserve(buckets.size());
  for (auto& [root, members] : buckets) out.push_back(finish_component(g, std::move(members)));
  sort_components(out);
  return out;
}

}  // namespace

ComponentReport strong_components(const ShiftDigraph& g,
                                  std::span<const std::uint8_t> root_order) {
  // Iterative Tarjan.
  std::array<int, 256> index, lowlink;
  std::array<bool, 256> on_stack{};
  index.fill(-1);
  lowlink.fill(-1);
  std::vector<int> stack;
  std::vector<std::vector<std::uint8_t>> sccs;
  int next_index = 0;

  struct Frame {
    int v;
    int next_succ;  // 0 or 1
  };

  auto visit = [&](int root) {
    if (index[static_cast<std::size_t>(root)] != -1) return;
    std::vector<Frame> frames{{root, 0}};
    index[static_cast<std::size_t>(root)] = lowlink[static_cast<std::size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_succ < 2) {
        const int bit = f.next_succ++;
        const int w = succ_code(f.v, bit);
        if (!g.has(w)) continue;
        if (index[static_cast<std::size_t>(w)] == -1) {
          index[static_cast<std::size_t>(w)] = lowlink[static_cast<std::size_t>(w)] =
              next_index++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = true;
          frames.push_back(Frame{w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          lowlink[static_cast<std::size_t>(f.v)] =
              std::min(lowlink[static_cast<std::size_t>(f.v)], index[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      // Successors exhausted: close the vertex.
      const int v = f.v;
      frames.pop_back();
      if (!frames.empty())
        lowlink[static_cast<std::size_t>(frames.back().v)] = std::min(
            lowlink[static_cast<std::size_t>(frames.back().v)], lowlink[static_cast<std::size_t>(v)]);
      if (lowlink[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
        std::vector<std::uint8_t> members;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          members.push_back(static_cast<std::uint8_t>(w));
        } while (w != v);
        sccs.push_back(std::move(members));
      }
    }
  };

  if (root_order.empty()) {
    for (int code = 0; code < 256; ++code)
      if (g.has(code)) visit(code);
  } else {
    for (std::uint8_t code : root_order)
      if (g.has(code)) visit(code);
    for (int code = 0; code < 256; ++code)
      if (g.has(code)) visit(code);
  }

  ComponentReport report;
  report.strong.reserve(sccs.size());
  for (auto& members : sccs) report.strong.push_back(finish_component(g, std::move(members)));
  sort_components(report.strong);
  report.weak = weak_components(g);
  return report;
}

ComponentAnalysis analyze_threshold(const RatingTable8& table, SRValue t) {
  ComponentAnalysis a;
  a.threshold = t;
  a.graph = ShiftDigraph(threshold_set(table, t));
  a.report = strong_components(a.graph);
  return a;
}

namespace {

// Expected vertex set of a published component row.
VertexSet expected_members(const ReferenceComponentRow& row, const RatingTable8& table) {
  VertexSet s;
  switch (row.form) {
    case MemberForm::ExplicitSets:
      for (const auto& comp : row.explicit_sets)
        for (std::uint8_t v : comp) s.set(v);
      break;
    case MemberForm::UnionExtra:
      for (const auto& comp : row.explicit_sets)
        for (std::uint8_t v : comp) s.set(v);
      for (std::uint8_t v : row.extra) s.set(v);
      break;
    case MemberForm::SetMinus: {
      s = threshold_set(table, row.threshold);
      for (std::uint8_t v : row.excluded) s.reset(v);
      break;
    }
    case MemberForm::FullSet:
      s = threshold_set(table, row.threshold);
      break;
  }
  return s;
}

}  // namespace

std::vector<Table2Row> reproduce_table2(const Engine& engine) {
  std::vector<Table2Row> rows;
  for (const ReferenceComponentRow& ref : reference_table2()) {
    const ComponentAnalysis& analysis = engine.components(ref.threshold);
    const auto nontrivial = analysis.report.nontrivial_strong();

    Table2Row row;
    row.threshold = ref.threshold;
    row.published_vertices = ref.vertices;
    row.published_arcs = ref.arcs;
    row.published_basis = ref.basis;
    row.note = ref.note;

    VertexSet all_members;
    for (const ComponentInfo* c : nontrivial) {
      row.components.push_back(c->vertices);
      all_members |= c->member_set();
      row.vertices += static_cast<int>(c->vertices.size());
      row.arcs += c->arc_count;
      row.cycle_basis += c->cycle_basis;
      row.self_loops += c->self_loops;
      row.digon_pairs += c->digon_pairs;
    }

    bool vertices_ok;
    if (ref.form == MemberForm::ExplicitSets) {
      // This row publishes per-component counts; every component must match.
      vertices_ok = !nontrivial.empty();
      row.arcs_exact = row.basis_exact = !nontrivial.empty();
      for (const ComponentInfo* c : nontrivial) {
        vertices_ok = vertices_ok && static_cast<int>(c->vertices.size()) == ref.vertices;
        row.arcs_exact = row.arcs_exact && c->arc_count == ref.arcs;
        row.basis_exact = row.basis_exact && c->cycle_basis == ref.basis;
      }
      row.vertices = nontrivial.empty() ? 0 : static_cast<int>(nontrivial[0]->vertices.size());
      row.arcs = nontrivial.empty() ? 0 : nontrivial[0]->arc_count;
      row.cycle_basis = nontrivial.empty() ? 0 : nontrivial[0]->cycle_basis;
    } else {
      vertices_ok = row.vertices == ref.vertices;
      row.arcs_exact = row.arcs == ref.arcs;
      row.basis_exact = row.cycle_basis == ref.basis;
    }

    row.membership_ok = all_members == expected_members(ref, engine.ratings());
    if (ref.form == MemberForm::ExplicitSets) {
      row.membership_ok =
          row.membership_ok && nontrivial.size() == 2 &&
          std::all_of(nontrivial.begin(), nontrivial.end(), [&](const ComponentInfo* c) {
            return c->vertices == ref.explicit_sets[0] || c->vertices == ref.explicit_sets[1];
          });
    }

    // A published arc or basis figure that differs from the directed count
    // must match the simple-graph reading pinned in the reference row.
    const int simple_arcs = row.arcs - row.self_loops - row.digon_pairs;
    const int simple_basis = simple_arcs - row.vertices + 1;
    const bool arcs_reproduced =
        row.arcs_exact ||
        (ref.computed_arcs == row.arcs && (ref.arcs == simple_arcs || ref.arcs == row.arcs));
    const bool basis_reproduced =
        row.basis_exact || (ref.computed_basis == row.cycle_basis && ref.basis == simple_basis);
    row.reproduced = row.membership_ok && vertices_ok && arcs_reproduced && basis_reproduced;
    rows.push_back(std::move(row));
  }
  return rows;
}

TheoremReport verify_theorem1(const Engine& engine) {
  TheoremReport report;
  const auto& thresholds = component_thresholds();  // ascending randomness
  const SRValue top = SRValue::of(5, 3);

  // (a) exactly one non-trivial strong component below [5,3], two at [5,3].
  {
    ClauseResult clause{"a: component counts", true, ""};
    for (SRValue t : thresholds) {
      const auto nontrivial = engine.components(t).report.nontrivial_strong();
      const std::size_t expected = (t == top) ? 2u : 1u;
      if (nontrivial.size() != expected) {
        clause.pass = false;
        clause.detail += t.str() + " has " + std::to_string(nontrivial.size()) +
                         " non-trivial strong components (expected " + std::to_string(expected) +
                         "); ";
      }
    }
    if (clause.pass) clause.detail = "one component per threshold below [5,3], two at [5,3]";
    report.clauses.push_back(std::move(clause));
  }

  // (b) nesting along the threshold chain.
  {
    ClauseResult clause{"b: nesting chain", true, ""};
    VertexSet prev;
    bool first = true;
    for (SRValue t : thresholds) {
      const auto nontrivial = engine.components(t).report.nontrivial_strong();
      VertexSet members;
      for (const ComponentInfo* c : nontrivial) members |= c->member_set();
      if (!first) {
        if ((members & ~prev).any()) {
          clause.pass = false;
          clause.detail += "C(" + t.str() + ") is not contained in the previous component; ";
        } else if (members == prev) {
          clause.pass = false;
          clause.detail += "C(" + t.str() + ") does not shrink; ";
        }
      }
      prev = members;
      first = false;
    }
    if (clause.pass) clause.detail = "C([1,7]) > C([2,6]) > ... > C([4,6]) > C_i([5,3])";
    report.clauses.push_back(std::move(clause));
  }

  // (c) nothing non-trivial above [5,3].
  {
    ClauseResult clause{"c: empty above [5,3]", true, ""};
    for (SRValue t : empty_component_thresholds()) {
      const auto nontrivial = engine.components(t).report.nontrivial_strong();
      if (!nontrivial.empty()) {
        clause.pass = false;
        clause.detail += t.str() + " unexpectedly has a non-trivial strong component {" +
                         code_list(nontrivial.front()->vertices) + "}; ";
      }
    }
    if (clause.pass) clause.detail = "no non-trivial strong components at [5,4], [5,5], [5,6]";
    report.clauses.push_back(std::move(clause));
  }

  // (d) up to [4,4.5] the strong component is also a weak component.
  {
    ClauseResult clause{"d: weak-component coincidence", true, ""};
    for (SRValue t : thresholds) {
      const Ordering ord = compare(t, bounds_threshold_limit());
      if (ord != Ordering::LessRandom && ord != Ordering::Equal) continue;
      const ComponentAnalysis& analysis = engine.components(t);
      for (const ComponentInfo* c : analysis.report.nontrivial_strong()) {
        const bool found = std::any_of(
            analysis.report.weak.begin(), analysis.report.weak.end(),
            [&](const ComponentInfo& w) { return w.vertices == c->vertices; });
        if (!found) {
          clause.pass = false;
          clause.detail += "at " + t.str() + " the strong component {" +
                           code_list(c->vertices) + "} is not a weak component; ";
        }
      }
    }
    if (clause.pass) clause.detail = "strong components up to [4,4.5] are weak components";
    report.clauses.push_back(std::move(clause));
  }

  report.all_pass = std::all_of(report.clauses.begin(), report.clauses.end(),
                                [](const ClauseResult& c) { return c.pass; });
  return report;
}

}  // namespace subjrand
