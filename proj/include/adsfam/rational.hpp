#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace adsfam {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after every canonicalizing operation.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("division by zero");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

}  // namespace adsfam
