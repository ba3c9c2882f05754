#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "actres/ratio.hpp"

namespace actres {

enum class Polarity : std::uint8_t { Rising = 0, Falling = 1 };

/// One clock edge, e.g. "3f" = falling edge of phase 3. Ordered by
/// (phase_no, Rising < Falling); every deterministic traversal in the
/// toolkit leans on this ordering.
struct EdgeRef {
    int phase_no = 0;
    Polarity polarity = Polarity::Rising;

    auto operator<=>(const EdgeRef&) const = default;
};

inline std::string to_string(const EdgeRef& e) {
    return std::to_string(e.phase_no) + (e.polarity == Polarity::Rising ? "r" : "f");
}

/// Definition-file row. duty and period are in half-period units
/// (multiples of t_clk/2), so a plain half-rate clock is duty 1, period 2.
struct PhaseDef {
    int phase_no = 0;
    std::string name;
    int duty = 0;
    int period = 0;
    bool inv = false;
};

enum class ConstraintKind : std::uint8_t { MinSep, MinHi, MinDur };
enum class KindSource : std::uint8_t { Explicit, Inferred };

inline const char* to_string(ConstraintKind k) {
    switch (k) {
    case ConstraintKind::MinSep: return "sep";
    case ConstraintKind::MinHi: return "hi";
    case ConstraintKind::MinDur: return "dur";
    }
    return "?";
}

/// Directed timing requirement: t(to) - t(from) >= bound_ps.
struct Constraint {
    EdgeRef from;
    EdgeRef to;
    std::int64_t bound_ps = 0;
    ConstraintKind kind = ConstraintKind::MinSep;
    KindSource kind_source = KindSource::Inferred;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

enum class Corner : std::uint8_t { Slow, Typical, Fast };

inline const char* to_string(Corner c) {
    switch (c) {
    case Corner::Slow: return "slow";
    case Corner::Typical: return "typical";
    case Corner::Fast: return "fast";
    }
    return "?";
}

/// Toolkit configuration. k_fs and k_fn are the slow->fast and
/// typical->fast speed ratios of the cell library; constraints are
/// projected to the fast corner with k_fs before scheduling.
struct Config {
    std::int64_t t_clk_ps = 16666;
    Ratio k_fs{5, 2};
    Ratio k_fn{8, 5};
    std::int64_t default_slack_ps = -100;
    Corner corner = Corner::Fast;

    void validate() const;
};

/// Post-synthesis timing of one clock-tree endpoint. variant_name has the
/// shape <PhaseName>_<branch>_(clk|xclk); an xclk endpoint is the
/// complementary (inverted) realization of the phase.
struct VariantTiming {
    std::string variant_name;
    std::string phase_name;
    std::string branch;
    bool xclk = false;
    std::int64_t rise_ps = 0;
    std::int64_t rise_slew_ps = 0;
    std::int64_t fall_ps = 0;
    std::int64_t fall_slew_ps = 0;

    friend bool operator==(const VariantTiming&, const VariantTiming&) = default;
};

/// Worst-case edge envelope of one phase over all synthesized variants.
struct CompositePhase {
    int phase_no = 0;
    std::string name;
    std::int64_t r_max = 0;
    std::int64_t r_min = 0;
    std::int64_t f_max = 0;
    std::int64_t f_min = 0;

    friend bool operator==(const CompositePhase&, const CompositePhase&) = default;
};

/// Per-edge time offsets in picoseconds, relative to the reference edge.
struct Schedule {
    std::map<EdgeRef, std::int64_t> times;
    EdgeRef reference;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// One checked constraint: measured = t(to) - t(from) on the schedule (or
/// the worst-case composite difference after synthesis).
struct VerificationRow {
    Constraint constraint;
    std::int64_t measured_ps = 0;
    std::int64_t margin_ps = 0; // measured - bound
    bool pass = false;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;

    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass)
                return false;
        return true;
    }
};

} // namespace actres
