#pragma once

#include <array>
#include <optional>
#include <string>

#include "snc/rational.hpp"

namespace snc {

/// Abstract isomorphism type of a double curve: a rational curve or an
/// elliptic curve C/Λ with lattice basis (1, τ), τ exact.
struct CurveGeometry {
    int genus = 0;
    GaussianRational tau; // present iff genus == 1; Im(tau) != 0

    friend bool operator==(const CurveGeometry& a, const CurveGeometry& b) {
        if (a.genus != b.genus) return false;
        return a.genus == 0 || a.tau == b.tau;
    }
};

/// A point on a double curve.  Genus-1 points are exact lattice coordinates
/// (a, b) for a + b·τ mod Λ, reduced to [0,1)².  Genus-0 points are opaque
/// labels; only identity matters on a rational curve.
struct CurvePoint {
    std::string label;      // genus-0 identity (may also annotate genus-1 points)
    bool has_coords = false;
    Rational a{0}, b{0};

    static CurvePoint labeled(std::string l) {
        CurvePoint p;
        p.label = std::move(l);
        return p;
    }
    static CurvePoint at(Rational a, Rational b, std::string l = "") {
        CurvePoint p;
        p.label = std::move(l);
        p.has_coords = true;
        p.a = mod1(a);
        p.b = mod1(b);
        return p;
    }

    /// Identity test: coordinates when both points carry them, labels otherwise.
    friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
        if (p.has_coords && q.has_coords) return p.a == q.a && p.b == q.b;
        return !p.has_coords && !q.has_coords && p.label == q.label;
    }
};

/// Integer 2x2 matrix acting on lattice coordinates (a, b).  z -> i·z on
/// Λ = <1, i> is [[0,-1],[1,0]]; the identity and negation work on any Λ.
struct LatticeAction {
    std::array<std::array<long long, 2>, 2> m{{{1, 0}, {0, 1}}};

    long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    friend bool operator==(const LatticeAction& a, const LatticeAction& b) {
        return a.m == b.m;
    }
};

} // namespace snc
