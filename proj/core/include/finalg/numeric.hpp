#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace finalg {

// Exact scalars. Every number in the system is an mpq/mpz; no floating
// point exists anywhere.
using Rat = mpq_class;
using Int = mpz_class;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q".
Rat rat_from_string(const std::string& s);

std::string rat_str(const Rat& q);
std::string int_str(const Int& z);

// floor(sqrt(z)) for z >= 0.
Int isqrt_floor(const Int& z);
bool is_perfect_square(const Int& z);

// sign(u^2 - d) comparison helpers used by the quadratic-form code:
// compares u against sqrt(d) for d > 0 non-square, exactly.
bool less_than_sqrt(const Int& u, const Int& d);    // u < sqrt(d)
bool greater_than_sqrt(const Int& u, const Int& d); // u > sqrt(d)

}  // namespace finalg
