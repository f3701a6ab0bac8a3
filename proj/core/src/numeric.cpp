#include "finalg/numeric.hpp"

namespace finalg {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw Error("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }
std::string int_str(const Int& z) { return z.get_str(); }

Int isqrt_floor(const Int& z) {
    if (z < 0) throw Error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& z) {
    if (z < 0) return false;
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

bool less_than_sqrt(const Int& u, const Int& d) {
    if (d <= 0) throw Error("sqrt comparison needs positive discriminant");
    if (u < 0) return true;
    return u * u < d;
}

bool greater_than_sqrt(const Int& u, const Int& d) {
    if (d <= 0) throw Error("sqrt comparison needs positive discriminant");
    if (u <= 0) return false;
    return u * u > d;
}

}  // namespace finalg
