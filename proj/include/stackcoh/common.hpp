#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace zlin {

// Exact integers of unbounded magnitude. Pivot growth in normal-form
// computations overflows any fixed width even on small inputs.
using Int = boost::multiprecision::cpp_int;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IllDefinedHom : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Quotient with remainder in (-|b|/2, |b|/2]; keeps entries small during
// elimination.
inline Int div_round(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    Int b2 = abs(b);
    if (2 * r > b2)
        q += (b > 0) ? 1 : -1;
    else if (2 * r <= -b2)
        q -= (b > 0) ? 1 : -1;
    return q;
}

// a mod m normalized to [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int pow_int(Int base, unsigned e) {
    Int r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace zlin
