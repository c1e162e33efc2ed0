#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace macuv {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 after
// canonicalize(), which the class does on every constructed value.
using BigRat = mpq_class;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline BigRat rat(long num, long den = 1) {
    if (den == 0) throw Error("bigrat: zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_string(const BigRat& r) {
    return r.get_str();
}

} // namespace macuv
