#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "snc/surface.hpp"

namespace snc {

enum class BlowupMode { OneSide, BothSides };

/// Blow up the listed points of one double curve, in one adjacent component
/// or in both simultaneously.
struct BlowupStep {
    std::string double_curve_id;
    std::vector<CurvePoint> points;
    BlowupMode mode = BlowupMode::BothSides;
    std::string component; // OneSide only: which side is blown up
};

struct BlowupPlan {
    std::vector<BlowupStep> steps;
};

/// One entry per original marked point; blow-ups at disjoint centers restrict
/// to isomorphisms on the curve, so the proper transform is the identity.
struct TransformLogEntry {
    std::string curve_id;
    CurvePoint original;
    CurvePoint transformed;
};

struct MismatchDiagnostic {
    std::string curve_id;
    std::size_t step_index = 0;
    std::string message;
};

/// Apply one blow-up step.  Per affected component: χ += #points, one
/// exceptional class appended per point (coefficient +1 in K, -1 in the
/// blown side's curve class); the affected side's normal class drops by the
/// point divisor class.  Everything disjoint is carried over unchanged.
SncSurface blow_up(const SncSurface& surface, const BlowupStep& step);

std::pair<SncSurface, std::vector<TransformLogEntry>>
run_plan(const SncSurface& surface, const BlowupPlan& plan);

/// Gluing-compatibility scan of a plan.  Flags steps whose centers meet the
/// curve's triple marks, and curves whose two sides would end up with
/// different marked-point records (so the declared identification of the two
/// sides cannot survive the plan).
std::vector<MismatchDiagnostic> detect_mismatch(const SncSurface& surface,
                                                const BlowupPlan& plan);

struct PlannerResult {
    std::optional<BlowupPlan> plan;       // empty optional: infeasible
    std::string obstruction;              // names the obstructing curve when infeasible
};

/// Smallest blow-up plan (by total point count) making every collective
/// normal class trivial.  Exhaustive search per curve over one-sided /
/// two-sided point counts; ties prefer BothSides, then the first listed side.
/// Genus-1 batches get their last point solved from the required Jacobian sum.
PlannerResult plan_blowups_to_trivialize(const SncSurface& surface);

} // namespace snc
