#pragma once

#include <boost/rational.hpp>

#include "nonloose/farey.hpp"

// Boost 1.74's rational-vs-integer == and != recurse forever under C++20's
// rewritten comparison candidates. Exact-match overloads win resolution.
namespace boost {

#define NONLOOSE_RATIONAL_EQ(T)                                                                        \
    inline bool operator==(const rational<nonloose::Int>& r, T i) {                                    \
        return r.denominator() == 1 && r.numerator() == static_cast<nonloose::Int>(i);                 \
    }                                                                                                  \
    inline bool operator==(T i, const rational<nonloose::Int>& r) { return r == i; }                   \
    inline bool operator!=(const rational<nonloose::Int>& r, T i) { return !(r == i); }                \
    inline bool operator!=(T i, const rational<nonloose::Int>& r) { return !(r == i); }

NONLOOSE_RATIONAL_EQ(int)
NONLOOSE_RATIONAL_EQ(long)
NONLOOSE_RATIONAL_EQ(long long)

#undef NONLOOSE_RATIONAL_EQ

}  // namespace boost
