#include "snc/pic.hpp"

#include "snc/errors.hpp"

namespace snc {

LineBundleClass tensor(const LineBundleClass& x, const LineBundleClass& y) {
    if (x.genus != y.genus)
        throw MixedGeometry("tensor of classes on curves of different genus");
    LineBundleClass out;
    out.genus = x.genus;
    out.degree = x.degree + y.degree;
    if (out.genus == 1) {
        out.a = mod1(x.a + y.a);
        out.b = mod1(x.b + y.b);
    }
    return out;
}

LineBundleClass inverse(const LineBundleClass& c) {
    LineBundleClass out = c;
    out.degree = -c.degree;
    if (c.genus == 1) {
        out.a = mod1(-c.a);
        out.b = mod1(-c.b);
    }
    return out;
}

bool is_trivial(const LineBundleClass& c) {
    if (c.degree != 0) return false;
    return c.genus == 0 || (c.a == Rational(0) && c.b == Rational(0));
}

LineBundleClass point_class(int genus, const CurvePoint& p) {
    if (genus == 0) return LineBundleClass::rational_curve(1);
    if (!p.has_coords)
        throw CenterNotOnCurve("genus-1 point without lattice coordinates: '" + p.label + "'");
    return LineBundleClass::elliptic(1, p.a, p.b);
}

LineBundleClass apply_twist(const LineBundleClass& c, const LatticeAction& twist) {
    if (c.genus == 0) {
        if (!(twist == LatticeAction{}))
            throw NotAnAutomorphism("nontrivial lattice action on a rational curve");
        return c;
    }
    long long d = twist.det();
    if (d != 1 && d != -1)
        throw NotAnAutomorphism("lattice action with determinant " + std::to_string(d));
    LineBundleClass out = c;
    out.a = mod1(twist.m[0][0] * c.a + twist.m[0][1] * c.b);
    out.b = mod1(twist.m[1][0] * c.a + twist.m[1][1] * c.b);
    return out;
}

CurvePoint apply_twist(const CurvePoint& p, const LatticeAction& twist) {
    if (!p.has_coords) return p;
    long long d = twist.det();
    if (d != 1 && d != -1)
        throw NotAnAutomorphism("lattice action with determinant " + std::to_string(d));
    return CurvePoint::at(twist.m[0][0] * p.a + twist.m[0][1] * p.b,
                          twist.m[1][0] * p.a + twist.m[1][1] * p.b, p.label);
}

} // namespace snc
