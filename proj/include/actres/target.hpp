#pragma once

#include <map>
#include <vector>

#include "actres/graph.hpp"

namespace actres {

/// Per-arc slack (nonpositive ps) plus the per-cycle intermediates that
/// produced it. Cycle ids index the enumerate_cycles() output.
struct SlackAssignment {
    std::map<ArcKey, std::int64_t> slack_ps;
    std::map<ArcKey, Ratio> slack_exact;
    std::vector<Ratio> avg_slack;
    std::vector<Ratio> remaining_slack;
};

/// Distributes slack over the graph:
///   1. cycle lengths; 2. avgSlack = length / n_nodes;
///   3. in-cycle MinSep arcs: max(default, containing avgSlacks);
///   4. per-cycle remaining slack = length - sum of its MinSep slacks;
///   5. in-cycle MinHi/MinDur arcs: max over containing cycles of
///      remaining / n_minhilike;
///   6. arcs in no cycle: max(default, all avgSlacks).
/// Exact rational arithmetic throughout; each arc's final slack is rounded
/// toward zero (and clamped to <= 0).
SlackAssignment assign_slacks(const ConstraintGraph& g, const std::vector<Cycle>& cycles,
                              std::int64_t default_slack_ps);

/// target weight = constraint weight - slack (slack <= 0 tightens).
TargetGraph build_target_graph(const ConstraintGraph& g, const SlackAssignment& slacks);

/// Overshoot guard: every cycle's sum of target weights must stay <= 0.
/// Throws InfeasibleError naming the first offending cycle.
void verify_target_feasibility(const TargetGraph& target, const std::vector<Cycle>& cycles);

struct AcyclicTargetGraph {
    std::vector<EdgeRef> nodes;
    std::vector<Arc> kept_arcs;    // DFS encounter order; forms a DAG
    std::vector<Arc> dropped_arcs; // each closed a cycle on the active DFS path
};

/// DFS cycle breaking: nodes visited in ascending order, an arc is dropped
/// iff its head is on the active DFS path when the arc is examined.
AcyclicTargetGraph break_cycles(const TargetGraph& t);

} // namespace actres
