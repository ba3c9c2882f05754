#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "actres/types.hpp"

namespace actres {

struct Arc {
    EdgeRef from;
    EdgeRef to;
    std::int64_t weight_ps = 0;
    ConstraintKind kind = ConstraintKind::MinSep;

    friend bool operator==(const Arc&, const Arc&) = default;
};

using ArcKey = std::pair<EdgeRef, EdgeRef>;

/// Digraph of the constraint file: nodes are clock edges, arcs are
/// constraints. At most one arc per ordered (from, to) pair; duplicates
/// collapse to the tightest (maximum) bound at build time.
struct ConstraintGraph {
    std::vector<EdgeRef> nodes; // sorted, unique
    std::vector<Arc> arcs;      // sorted by (from, to)

    const Arc* find_arc(const EdgeRef& from, const EdgeRef& to) const;
    std::int64_t weight(const EdgeRef& from, const EdgeRef& to) const;
};

/// Target graphs share the constraint-graph shape; only the weights differ.
using TargetGraph = ConstraintGraph;

/// One elementary circuit, canonically rotated to start at its smallest node.
struct Cycle {
    std::vector<EdgeRef> nodes; // n nodes; arc i runs nodes[i] -> nodes[(i+1) % n]
    std::vector<Arc> arcs;
    std::int64_t length_ps = 0; // sum of member weights
    int n_minsep = 0;
    int n_minhilike = 0; // MinHi + MinDur

    int n_nodes() const { return static_cast<int>(nodes.size()); }
};

struct FeasibilityReport {
    std::vector<Cycle> cycles;
    std::vector<std::size_t> positive_cycles; // indices of cycles with length > 0

    bool feasible() const { return positive_cycles.empty(); }
};

/// Resolves the constraint kind. Explicit kinds are validated and passed
/// through; otherwise same-phase r->f is MinHi, cross-phase constraints are
/// MinDur when negative and MinSep when nonnegative.
ConstraintKind classify(const Constraint& c);

struct ProjectionResult {
    std::vector<Constraint> constraints;
    std::vector<std::string> warnings;
};

/// Projects constraints to the fast corner: negative MinHi/MinDur bounds are
/// divided by k_fs (round half away from zero); everything else is unchanged.
/// Positive MinHi/MinDur bounds only get a warning; no projection rule exists
/// for them.
ProjectionResult project_to_fast(const std::vector<Constraint>& constraints, const Config& cfg);

ConstraintGraph build_graph(const std::vector<Constraint>& constraints);

/// All elementary circuits, each rotated to start at its smallest node and
/// the list sorted lexicographically by node sequence.
std::vector<Cycle> enumerate_cycles(const ConstraintGraph& g);

/// A difference-constraint system t(to) - t(from) >= w is satisfiable iff
/// no cycle has positive total weight.
FeasibilityReport check_feasibility(const ConstraintGraph& g, std::vector<Cycle> cycles);

} // namespace actres
