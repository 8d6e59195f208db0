#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qramsey {

// Exact rational arithmetic. mpq_class keeps values in lowest terms with a
// positive denominator as long as every value is canonicalized on entry,
// which parse_rational() guarantees.
using Rational = mpq_class;

inline Rational parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace qramsey
