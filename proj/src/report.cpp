#include "snc/report.hpp"

#include <algorithm>

namespace snc {

std::string to_string(FiberClass c) {
    switch (c) {
    case FiberClass::K3: return "K3";
    case FiberClass::ComplexTorus: return "ComplexTorus";
    case FiberClass::PrimaryKodaira: return "PrimaryKodaira";
    default: return "Unknown";
    }
}

long long euler_fiber(const SncSurface& surface) {
    long long chi = 0;
    for (const auto& c : surface.components) chi += c.euler_char;
    for (const auto& d : surface.double_curves)
        chi -= 2 * (d.geometry.genus == 0 ? 2 : 0);
    chi += 3 * static_cast<long long>(surface.triple_points.size());
    return chi;
}

FiberClass classify_fiber(long long chi, std::optional<int> b1) {
    if (chi == 24) return FiberClass::K3;
    if (chi == 0 && b1) {
        if (*b1 == 4) return FiberClass::ComplexTorus;
        if (*b1 == 3) return FiberClass::PrimaryKodaira;
    }
    return FiberClass::Unknown;
}

SmoothingReport full_report(const SncSurface& surface, std::optional<int> declared_b1) {
    SmoothingReport rep;
    rep.structure_diagnostics = validate_structure(surface);
    rep.structure_ok = rep.structure_diagnostics.empty();
    if (!rep.structure_ok) {
        rep.notes.push_back("structural validation failed; checks skipped");
        return rep;
    }

    rep.collective = collective_normal_class(surface);
    rep.d_semistable = is_d_semistable(surface);
    rep.anticanonical = check_anticanonical(surface);
    bool anticanonical_all = std::all_of(
        rep.anticanonical.begin(), rep.anticanonical.end(),
        [](const auto& kv) { return kv.second != AnticanonicalVerdict::Fails; });

    bool have_rho = true;
    try {
        rep.h0_dim = static_cast<long long>(h0_canonical_dimension(surface));
        rep.residue_ok = check_residue_matching(surface);
    } catch (const MissingTwist&) {
        have_rho = false;
        rep.notes.push_back("residue matching not checkable: missing gluing twist");
    }

    rep.chi_fiber = euler_fiber(surface);

    if (!rep.d_semistable.ok)
        rep.notes.push_back("not d-semistable: nontrivial collective normal class");
    if (!anticanonical_all)
        rep.notes.push_back("double locus is not anticanonical on every component");
    if (have_rho && !rep.residue_ok)
        rep.notes.push_back("residue matching fails for the normalized volume forms");

    if (rep.d_semistable.ok && anticanonical_all && have_rho && rep.residue_ok)
        rep.classification = classify_fiber(rep.chi_fiber, declared_b1);
    else
        rep.classification = FiberClass::Unknown;
    return rep;
}

} // namespace snc
