#pragma once

#include <vector>

#include "actres/target.hpp"
#include "actres/types.hpp"

namespace actres {

/// Times every node of the acyclic target graph by bidirectional DFS from
/// node0 (time 0). Forward-derived nodes take min over timed successors of
/// t(succ) - w; backward-derived nodes take max over timed predecessors of
/// t(pred) + w. Work items are processed FIFO; a node that is a leaf in the
/// current direction is re-enqueued with the opposite direction.
/// Throws InfeasibleError if any node stays untimed or any kept arc ends up
/// violated (cross-arc conflict; lower the default slack and retry).
Schedule schedule_nodes(const AcyclicTargetGraph& a, const EdgeRef& node0);

enum class NormalizeMode { None, ShiftMinToZero };

/// ShiftMinToZero adds a constant so the earliest edge lands at 0; all
/// pairwise differences are preserved.
Schedule normalize_schedule(const Schedule& s, NormalizeMode mode);

/// Checks t(to) - t(from) >= bound for every constraint. Rows keep the
/// input constraint order.
VerificationReport verify_schedule(const Schedule& s, const std::vector<Constraint>& constraints);

/// Picks the reference edge for scheduling: the rising edge of the
/// lowest-numbered phase present in the graph.
EdgeRef default_reference(const std::vector<EdgeRef>& nodes);

} // namespace actres
