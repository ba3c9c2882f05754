#pragma once

#include <utility>
#include <vector>

#include "actres/types.hpp"

namespace actres {

/// Maps a variant's transitions onto the phase's edges: a clk variant keeps
/// (rise, fall); an xclk variant is inverted, so its rising transition
/// realizes the phase's falling edge and vice versa.
std::pair<std::int64_t, std::int64_t> fold_variant(const VariantTiming& v);

/// Folds every variant and takes per-phase min/max of the resulting rise and
/// fall times. Variant phase names must resolve against defs; output is
/// sorted by phase_no.
std::vector<CompositePhase> build_composites(const std::vector<VariantTiming>& variants,
                                             const std::vector<PhaseDef>& defs);

/// Worst-case constraint check: measured = min-edge(to) - max-edge(from),
/// picking r_min/f_min on the to side and r_max/f_max on the from side.
VerificationReport verify_synthesis(const std::vector<CompositePhase>& composites,
                                    const std::vector<Constraint>& constraints);

/// Two-file mode: adds up CTi and CTe delay/slew values per variant name.
/// Every variant must appear in both lists.
std::vector<VariantTiming> sum_variant_timings(const std::vector<VariantTiming>& cti,
                                               const std::vector<VariantTiming>& cte);

} // namespace actres
