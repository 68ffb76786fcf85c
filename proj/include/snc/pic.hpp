#pragma once

#include <optional>

#include "snc/geometry.hpp"

namespace snc {

/// Isomorphism class of a line bundle on a double curve.  On a rational curve
/// the degree is everything; on an elliptic curve we also track the image of
/// the divisor class under Abel-Jacobi, an exact point of C/Λ stored as
/// rational coordinates (a, b) mod Z², reduced to [0,1)².
struct LineBundleClass {
    int genus = 0;
    long long degree = 0;
    Rational a{0}, b{0}; // Jacobian point, genus 1 only

    static LineBundleClass rational_curve(long long deg) {
        LineBundleClass c;
        c.genus = 0;
        c.degree = deg;
        return c;
    }
    static LineBundleClass elliptic(long long deg, Rational a = Rational(0),
                                    Rational b = Rational(0)) {
        LineBundleClass c;
        c.genus = 1;
        c.degree = deg;
        c.a = mod1(a);
        c.b = mod1(b);
        return c;
    }

    friend bool operator==(const LineBundleClass& x, const LineBundleClass& y) {
        if (x.genus != y.genus || x.degree != y.degree) return false;
        return x.genus == 0 || (x.a == y.a && x.b == y.b);
    }
};

/// Degrees add; Jacobian points add in C/Λ with exact reduction.
LineBundleClass tensor(const LineBundleClass& x, const LineBundleClass& y);

/// Inverse class: negated degree, negated point.
LineBundleClass inverse(const LineBundleClass& c);

/// Trivial iff degree 0 and (genus 1) Jacobian point (0, 0).
bool is_trivial(const LineBundleClass& c);

/// Divisor class of a single point.
LineBundleClass point_class(int genus, const CurvePoint& p);

/// Push a class through a gluing twist.  The action must be a lattice
/// automorphism (|det| = 1); genus-0 classes only accept the identity.
LineBundleClass apply_twist(const LineBundleClass& c, const LatticeAction& twist);

/// The twist applied to a bare curve point (used when tracking blow-up
/// centers across a gluing).
CurvePoint apply_twist(const CurvePoint& p, const LatticeAction& twist);

} // namespace snc
