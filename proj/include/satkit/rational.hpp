#ifndef SATKIT_RATIONAL_HPP
#define SATKIT_RATIONAL_HPP

#include <boost/rational.hpp>

#include <string>

namespace satkit {

using Rational = boost::rational<long long>;

/// "p" when integral, otherwise "p/q" in lowest terms.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Least integer >= r.
inline long long ceil_of(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

}  // namespace satkit

#endif
