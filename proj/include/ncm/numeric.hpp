#ifndef NCM_NUMERIC_HPP
#define NCM_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ncm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& b, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
    if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

} // namespace ncm

#endif // NCM_NUMERIC_HPP
