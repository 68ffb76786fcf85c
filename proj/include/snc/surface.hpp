#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snc/pic.hpp"

namespace snc {

enum class ComponentKind { ProjectivePlane, Quadric, RuledElliptic, Declared };

/// An irreducible component, as declared algebraic data: a divisor class
/// basis, the canonical class, an intersection form, and χ.  Blow-ups append
/// exceptional basis elements E_k with E·E = -1 past the base block.
struct Component {
    std::string id;
    ComponentKind kind = ComponentKind::ProjectivePlane;

    // RuledElliptic parameters: P(O ⊕ L) over an elliptic base with deg L = d.
    long long ruled_degree = 0;
    CurveGeometry base;

    std::vector<std::string> class_basis;
    std::vector<long long> canonical_class;
    long long euler_char = 0;
    int blowup_count = 0;

    // Declared kind: optional explicit base intersection form (row-major,
    // square, over the non-exceptional part of class_basis).
    std::optional<std::vector<std::vector<long long>>> declared_form;

    std::size_t base_rank() const;
    bool has_form() const;

    static Component projective_plane(std::string id, int preblown = 0);
    static Component quadric(std::string id);
    static Component ruled_elliptic(std::string id, long long d, CurveGeometry base);
    static Component declared(std::string id, std::vector<std::string> basis,
                              std::vector<long long> canonical, long long euler,
                              std::optional<std::vector<std::vector<long long>>> form);
};

/// Bilinear intersection pairing of two classes on a component.
/// Throws UndefinedForm for Declared components without a declared form.
long long intersection_pairing(const Component& c, const std::vector<long long>& u,
                               const std::vector<long long>& v);

long long self_intersection(const Component& c, const std::vector<long long>& curve_class);

/// One side of a double curve.  Self-glued curves list the same component id
/// twice with distinct side labels.
struct CurveSide {
    std::string component;
    std::string label; // "a"/"b" by default; disambiguates self-gluings
    std::vector<long long> curve_class;
    LineBundleClass normal_class;
};

struct TripleMark {
    std::string triple_point;
    CurvePoint location;
};

/// Gluing data of a double curve: the exact scalar by which the second side's
/// residue enters the residue-matching matrix (all orientation signs are
/// folded in at scenario construction), plus the induced lattice
/// automorphism for elliptic curves.
struct GluingTwist {
    GaussianRational residue_factor{Rational(-1)};
    LatticeAction lattice_action;
};

struct DoubleCurve {
    std::string id;
    CurveGeometry geometry;
    std::vector<CurveSide> sides; // exactly two when well-formed
    std::vector<TripleMark> triple_marks;
    std::optional<GluingTwist> twist;
};

struct TripleIncidence {
    std::string component;
    std::array<std::string, 2> curves; // the two double curves through the point on this component
};

/// A point where three components meet.  sigma stores the orientation sign
/// for ordered triples of local component indices (0,1,2 refer to positions
/// in `incident`); missing permutations are derived by alternation.
struct TriplePoint {
    std::string id;
    std::vector<TripleIncidence> incident;
    std::map<std::array<int, 3>, int> sigma;

    /// Sign of sigma on an arbitrary permutation, derived by alternation from
    /// any stored entry.  Defaults to sgn(permutation) when no entry is stored.
    int sigma_at(std::array<int, 3> perm) const;
};

struct SncSurface {
    std::vector<Component> components;
    std::vector<DoubleCurve> double_curves;
    std::vector<TriplePoint> triple_points;

    const Component* find_component(const std::string& id) const;
    Component* find_component(const std::string& id);
    const DoubleCurve* find_curve(const std::string& id) const;
    DoubleCurve* find_curve(const std::string& id);
    const TriplePoint* find_triple(const std::string& id) const;

    /// Sign convention ε_ij = (j-i)/|j-i| induced by component order.
    int epsilon(const std::string& comp_i, const std::string& comp_j) const;
};

/// Structural validation.  Returns human-readable diagnostics naming the
/// violated invariant and the offending ids; empty iff the surface is
/// well-formed.
std::vector<std::string> validate_structure(const SncSurface& surface);

} // namespace snc
