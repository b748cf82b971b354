#pragma once

#include <gmpxx.h>

#include <string>

namespace singer {

// Exact rational arithmetic, used for every angle-sum and order computation
// in the core pipeline.  Any floating point value in those paths is a defect.
using Rational = mpq_class;

inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Always renders with an explicit denominator ("0/1", "31/30", ...), the
// format the CLI promises for `euler`.
inline std::string rational_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace singer
