#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snc/checks.hpp"
#include "snc/surface.hpp"

namespace snc {

enum class FiberClass { K3, ComplexTorus, PrimaryKodaira, Unknown };

std::string to_string(FiberClass c);

struct SmoothingReport {
    bool structure_ok = false;
    std::vector<std::string> structure_diagnostics;
    std::map<std::string, AnticanonicalVerdict> anticanonical;
    DSemistability d_semistable;
    CollectiveNormalClass collective;
    bool residue_ok = false;
    long long h0_dim = 0;
    long long chi_fiber = 0;
    FiberClass classification = FiberClass::Unknown;
    std::vector<std::string> notes;
};

/// Topological Euler characteristic of a nearby smooth fiber:
/// Σχ(components) - 2·Σχ(double curves) + 3·#(triple points).
long long euler_fiber(const SncSurface& surface);

/// χ = 24 -> K3; χ = 0 with declared b1 4 / 3 -> torus / primary Kodaira;
/// anything else Unknown.
FiberClass classify_fiber(long long chi, std::optional<int> b1);

/// All checks in dependency order.  Classification is only attempted when
/// the three smoothing hypotheses hold; every failure becomes a report field.
SmoothingReport full_report(const SncSurface& surface, std::optional<int> declared_b1);

} // namespace snc
