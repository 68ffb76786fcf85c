#pragma once

#include <map>
#include <string>
#include <vector>

#include "snc/blowup.hpp"
#include "snc/rational.hpp"
#include "snc/surface.hpp"

namespace snc {

/// Computed (never declared) class N_X(D) = N_side0 ⊗ N_side1 ⊗ [triple marks]
/// per double curve.
struct CollectiveNormalClass {
    std::map<std::string, LineBundleClass> per_curve;
};

CollectiveNormalClass collective_normal_class(const SncSurface& surface);

struct DSemistability {
    bool ok = false;
    std::vector<std::string> nontrivial_curves; // witnesses
};

DSemistability is_d_semistable(const SncSurface& surface);

enum class AnticanonicalVerdict { Holds, Fails, Unverifiable };

/// Per component: canonical class + sum of incident curve classes == 0.
/// Declared components without class data report Unverifiable.
std::map<std::string, AnticanonicalVerdict> check_anticanonical(const SncSurface& surface);

/// Residue-matching matrix of the canonical-section gluing conditions: one
/// row per double curve over the component columns; entry +1 for the first
/// side, + (twist residue factor) for the second; self-gluings combine both
/// into a single entry.
struct RhoMatrix {
    std::vector<std::vector<GaussianRational>> rows;
    std::vector<std::string> row_ids;    // double curve ids
    std::vector<std::string> column_ids; // component ids
};

RhoMatrix build_rho_matrix(const SncSurface& surface);

/// Exact rank over the Gaussian rationals (fraction-free elimination).
std::size_t rank(const RhoMatrix& m);

/// Basis of the right kernel of rho, one vector per column of the result.
std::vector<std::vector<GaussianRational>> kernel_basis(const RhoMatrix& m);

/// dim H0 of the canonical bundle: #components - rank(rho).
std::size_t h0_canonical_dimension(const SncSurface& surface);

/// True iff the all-ones vector lies in ker(rho), i.e. the chosen volume
/// forms satisfy the residue matching condition as normalized.
bool check_residue_matching(const SncSurface& surface);

} // namespace snc
