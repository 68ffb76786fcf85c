#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "snc/errors.hpp"

namespace snc {

using Rational = boost::rational<long long>;

/// Reduce r to the half-open interval [0, 1).
inline Rational mod1(Rational r) {
    long long n = r.numerator(), d = r.denominator(); // d > 0 by boost invariant
    long long q = n / d;
    if (n % d != 0 && n < 0) --q;
    return r - Rational(q);
}

/// Parse "p/q" or "p" with optional sign.  Throws ParseError on junk.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(s));
        long long p = std::stoll(s.substr(0, slash));
        long long q = std::stoll(s.substr(slash + 1));
        if (q == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(p, q);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + s + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("rational literal out of range '" + s + "'");
    }
}

inline std::string format_rational(const Rational& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
    return out;
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Exact complex number with rational real/imaginary parts.  Rich enough for
/// every residue twist that occurs here (units i^k times rationals) while
/// keeping kernel computations exact.
struct GaussianRational {
    Rational re{0}, im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(r), im(i) {}
    GaussianRational(long long r) : re(r) {}

    static GaussianRational i_power(long long k) {
        switch (((k % 4) + 4) % 4) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(1)};
        case 2: return {Rational(-1), Rational(0)};
        default: return {Rational(0), Rational(-1)};
        }
    }

    bool is_zero() const { return re == Rational(0) && im == Rational(0); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == Rational(0)) throw Error("division by zero Gaussian rational");
        GaussianRational num = a * GaussianRational{b.re, -b.im};
        return {num.re / n, num.im / n};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

} // namespace snc
