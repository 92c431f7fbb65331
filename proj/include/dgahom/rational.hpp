#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <string>

namespace dgahom {

// Plain value semantics (no expression templates): these types flow through
// containers and generic code everywhere.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

inline Rat rat(long n, long d = 1) { return Rat(Int(n), Int(d)); }

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

/// Largest integer <= q.
inline Int floor_rat(const Rat& q) {
    Int n = num(q), d = den(q);  // d > 0 canonical
    Int quo = n / d;
    if (n % d != 0 && n < 0) quo -= 1;
    return quo;
}

inline std::string to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline double to_double(const Rat& q) {
    return q.convert_to<double>();
}

}  // namespace dgahom
