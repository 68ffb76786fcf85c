#include "snc/blowup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "snc/checks.hpp"
#include "snc/errors.hpp"

namespace snc {

SncSurface blow_up(const SncSurface& surface, const BlowupStep& step) {
    const DoubleCurve* curve0 = surface.find_curve(step.double_curve_id);
    if (!curve0)
        throw Error("blow-up step references missing curve '" + step.double_curve_id + "'");

    for (std::size_t i = 0; i < step.points.size(); ++i) {
        const CurvePoint& p = step.points[i];
        if (curve0->geometry.genus == 1 && !p.has_coords)
            throw CenterNotOnCurve("genus-1 blow-up center without coordinates on curve '" +
                                   step.double_curve_id + "'");
        for (const auto& m : curve0->triple_marks)
            if (m.location == p)
                throw CenterOnTriplePoint("blow-up center meets triple mark '" +
                                          m.triple_point + "' on curve '" +
                                          step.double_curve_id + "'");
        for (std::size_t j = i + 1; j < step.points.size(); ++j)
            if (step.points[j] == p)
                throw Error("repeated blow-up center on curve '" + step.double_curve_id + "'");
    }

    std::vector<std::size_t> sides;
    if (step.mode == BlowupMode::BothSides) {
        for (std::size_t i = 0; i < curve0->sides.size(); ++i) sides.push_back(i);
    } else {
        for (std::size_t i = 0; i < curve0->sides.size(); ++i)
            if (curve0->sides[i].component == step.component) {
                sides.push_back(i);
                break; // self-gluings: one branch per one-sided step
            }
        if (sides.empty())
            throw Error("component '" + step.component + "' is not a side of curve '" +
                        step.double_curve_id + "'");
    }

    SncSurface out = surface;
    DoubleCurve* curve = out.find_curve(step.double_curve_id);

    for (std::size_t side_index : sides) {
        CurveSide& side = curve->sides[side_index];
        Component* comp = out.find_component(side.component);
        if (!comp)
            throw Error("curve '" + curve->id + "' references missing component '" +
                        side.component + "'");

        const std::size_t first_new = comp->class_basis.size();
        for (std::size_t k = 0; k < step.points.size(); ++k) {
            ++comp->blowup_count;
            comp->class_basis.push_back("E" + std::to_string(comp->blowup_count));
            comp->canonical_class.push_back(1);
            ++comp->euler_char;
        }

        // Pad every class vector living on this component, then put the new
        // exceptional classes into the blown side.
        for (auto& d : out.double_curves)
            for (auto& s : d.sides)
                if (s.component == comp->id)
                    s.curve_class.resize(comp->class_basis.size(), 0);
        for (std::size_t k = 0; k < step.points.size(); ++k)
            curve->sides[side_index].curve_class[first_new + k] = -1;

        // Normal bundle bookkeeping: degree drops by the point count and, on
        // elliptic curves, the Jacobian point by the sum of the centers.
        CurveSide& blown = curve->sides[side_index];
        blown.normal_class.degree -= static_cast<long long>(step.points.size());
        if (curve->geometry.genus == 1) {
            for (const auto& p : step.points) {
                blown.normal_class.a = mod1(blown.normal_class.a - p.a);
                blown.normal_class.b = mod1(blown.normal_class.b - p.b);
            }
        }
    }
    return out;
}

std::pair<SncSurface, std::vector<TransformLogEntry>>
run_plan(const SncSurface& surface, const BlowupPlan& plan) {
    SncSurface current = surface;
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        try {
            current = blow_up(current, plan.steps[i]);
        } catch (const Error& e) {
            throw Error("step " + std::to_string(i + 1) + ": " + e.what());
        }
    }

    // Centers are disjoint from every surviving marked point, so the proper
    // transform is the identity on all of them.
    std::vector<TransformLogEntry> log;
    for (const auto& d : surface.double_curves)
        for (const auto& m : d.triple_marks)
            log.push_back({d.id, m.location, m.location});
    for (const auto& s : plan.steps)
        for (const auto& p : s.points)
            log.push_back({s.double_curve_id, p, p});
    return {std::move(current), std::move(log)};
}

std::vector<MismatchDiagnostic> detect_mismatch(const SncSurface& surface,
                                                const BlowupPlan& plan) {
    std::vector<MismatchDiagnostic> diags;

    // Per curve, per side index: records of forced modifications at triple
    // marks, as (triple point, step index) pairs.
    std::map<std::string, std::array<std::vector<std::pair<std::string, std::size_t>>, 2>>
        records;

    for (std::size_t idx = 0; idx < plan.steps.size(); ++idx) {
        const BlowupStep& step = plan.steps[idx];
        const DoubleCurve* curve = surface.find_curve(step.double_curve_id);
        if (!curve) continue;

        std::set<std::string> affected_components;
        if (step.mode == BlowupMode::BothSides) {
            for (const auto& s : curve->sides) affected_components.insert(s.component);
        } else {
            affected_components.insert(step.component);
        }

        for (const auto& p : step.points) {
            for (const auto& m : curve->triple_marks) {
                if (!(m.location == p)) continue;
                diags.push_back({curve->id, idx,
                                 "blow-up center meets triple mark '" + m.triple_point +
                                     "' on curve '" + curve->id + "'"});
                // The triple point also lies on the other curves through it;
                // blowing up an adjacent component modifies their marked
                // record on that side only.
                for (const auto& other : surface.double_curves) {
                    if (other.id == curve->id) continue;
                    bool marks_t = std::any_of(
                        other.triple_marks.begin(), other.triple_marks.end(),
                        [&](const TripleMark& om) { return om.triple_point == m.triple_point; });
                    if (!marks_t) continue;
                    for (std::size_t si = 0; si < other.sides.size() && si < 2; ++si)
                        if (affected_components.count(other.sides[si].component))
                            records[other.id][si].push_back({m.triple_point, idx});
                }
            }
        }
    }

    for (auto& [curve_id, sides] : records) {
        auto norm = [](std::vector<std::pair<std::string, std::size_t>> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (norm(sides[0]) != norm(sides[1])) {
            std::size_t first = SIZE_MAX;
            for (const auto& side : sides)
                for (const auto& rec : side) first = std::min(first, rec.second);
            diags.push_back({curve_id, first,
                             "the two sides of curve '" + curve_id +
                                 "' carry different marked-point records after the plan"});
        }
    }

    std::sort(diags.begin(), diags.end(),
              [](const MismatchDiagnostic& a, const MismatchDiagnostic& b) {
                  return std::tie(a.step_index, a.curve_id, a.message) <
                         std::tie(b.step_index, b.curve_id, b.message);
              });
    return diags;
}

namespace {

/// Smallest per-curve count split: a one-sided points on side 0, b on side 1,
/// c two-sided, with a + b + 2c = degree.  Exhaustive, tiny search space.
struct CountSplit {
    long long a = 0, b = 0, c = 0;
};

CountSplit best_split(long long degree) {
    CountSplit best;
    bool have = false;
    for (long long c = 0; 2 * c <= degree && c <= 16; ++c)
        for (long long a = 0; a + 2 * c <= degree && a <= 16; ++a) {
            long long b = degree - a - 2 * c;
            if (b < 0 || b > 16) continue;
            long long total = a + b + c;
            long long best_total = best.a + best.b + best.c;
            bool better = !have || total < best_total ||
                          (total == best_total && c > best.c) ||
                          (total == best_total && c == best.c && a > best.a);
            if (better) {
                best = {a, b, c};
                have = true;
            }
        }
    return best;
}

bool collides(const DoubleCurve& curve, const std::vector<CurvePoint>& chosen,
              const CurvePoint& p) {
    for (const auto& m : curve.triple_marks)
        if (m.location == p) return true;
    for (const auto& q : chosen)
        if (q == p) return true;
    return false;
}

} // namespace

PlannerResult plan_blowups_to_trivialize(const SncSurface& surface) {
    CollectiveNormalClass collective = collective_normal_class(surface);

    // Deterministic order: curve ids ascending.
    std::vector<std::string> ids;
    for (const auto& d : surface.double_curves) ids.push_back(d.id);
    std::sort(ids.begin(), ids.end());

    BlowupPlan plan;
    for (const auto& id : ids) {
        const DoubleCurve* curve = surface.find_curve(id);
        const LineBundleClass& cls = collective.per_curve.at(id);
        if (cls.degree < 0)
            return {std::nullopt, id};
        if (cls.degree == 0) {
            if (curve->geometry.genus == 1 && !is_trivial(cls))
                return {std::nullopt, id};
            continue;
        }

        CountSplit split = best_split(cls.degree);
        std::vector<CurvePoint> both_pts, one_a_pts, one_b_pts;
        long long serial = 0;
        auto fresh = [&](const std::string& tag) {
            CurvePoint p;
            ++serial;
            if (curve->geometry.genus == 1) {
                // Spread free centers over distinct small rationals; the last
                // one is re-solved below from the Jacobian constraint.
                do {
                    p = CurvePoint::at(Rational(serial, 101), Rational(serial, 103));
                    ++serial;
                } while (collides(*curve, both_pts, p) || collides(*curve, one_a_pts, p) ||
                         collides(*curve, one_b_pts, p));
            } else {
                p = CurvePoint::labeled("plan-" + id + "-" + tag + "-" +
                                        std::to_string(serial));
            }
            return p;
        };

        for (long long k = 0; k < split.c; ++k) both_pts.push_back(fresh("both"));
        for (long long k = 0; k < split.a; ++k) one_a_pts.push_back(fresh("s0"));
        for (long long k = 0; k < split.b; ++k) one_b_pts.push_back(fresh("s1"));

        if (curve->geometry.genus == 1) {
            // Collective Jacobian point after the plan must be (0,0): the
            // one-sided centers count once, two-sided centers twice.
            Rational ra = cls.a, rb = cls.b;
            auto subtract = [&](const std::vector<CurvePoint>& pts, long long weight,
                                bool skip_last) {
                std::size_t n = pts.size() - (skip_last ? 1 : 0);
                for (std::size_t k = 0; k < n; ++k) {
                    ra = mod1(ra - weight * pts[k].a);
                    rb = mod1(rb - weight * pts[k].b);
                }
            };
            // Solve for the last point of the preferred batch.
            std::vector<CurvePoint>* solve_batch = nullptr;
            long long weight = 1;
            if (!one_a_pts.empty()) solve_batch = &one_a_pts;
            else if (!one_b_pts.empty()) solve_batch = &one_b_pts;
            else { solve_batch = &both_pts; weight = 2; }

            for (int attempt = 0; attempt < 64; ++attempt) {
                Rational sa = ra, sb = rb;
                // recompute residual with current free points
                sa = cls.a; sb = cls.b;
                auto acc = [&](const std::vector<CurvePoint>& pts, long long w, bool skip) {
                    std::size_t n = pts.size() - (skip ? 1 : 0);
                    for (std::size_t k = 0; k < n; ++k) {
                        sa = mod1(sa - w * pts[k].a);
                        sb = mod1(sb - w * pts[k].b);
                    }
                };
                acc(both_pts, 2, solve_batch == &both_pts);
                acc(one_a_pts, 1, solve_batch == &one_a_pts);
                acc(one_b_pts, 1, solve_batch == &one_b_pts);
                CurvePoint solved = (weight == 2)
                                        ? CurvePoint::at(sa / 2, sb / 2)
                                        : CurvePoint::at(sa, sb);
                std::vector<CurvePoint> others;
                for (auto* batch : {&both_pts, &one_a_pts, &one_b_pts})
                    for (std::size_t k = 0; k < batch->size(); ++k)
                        if (!(batch == solve_batch && k + 1 == batch->size()))
                            others.push_back((*batch)[k]);
                if (!collides(*curve, others, solved)) {
                    solve_batch->back() = solved;
                    break;
                }
                // Collision: perturb the first free point of the batch and retry.
                (*solve_batch)[0] = fresh("retry");
            }
        }

        if (!both_pts.empty())
            plan.steps.push_back({id, both_pts, BlowupMode::BothSides, ""});
        if (!one_a_pts.empty())
            plan.steps.push_back({id, one_a_pts, BlowupMode::OneSide,
                                  curve->sides.at(0).component});
        if (!one_b_pts.empty())
            plan.steps.push_back({id, one_b_pts, BlowupMode::OneSide,
                                  curve->sides.at(1).component});
    }
    return {std::move(plan), ""};
}

} // namespace snc
