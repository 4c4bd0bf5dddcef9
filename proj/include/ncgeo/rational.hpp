#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

#include "ncgeo/errors.hpp"

namespace ncgeo {

// Exact arbitrary-precision integers and rationals. Expression templates are
// disabled so the types behave as plain values in generic code.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational rational_of(long num, long den = 1) {
    if (den == 0) throw DivisionByZero();
    return Rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace ncgeo
