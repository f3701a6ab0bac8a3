#pragma once

#include <cstdint>
#include <vector>

#include "finalg/families.hpp"

namespace finalg {

// Matrix of the Euler bilinear form in the basis of the projectives:
//   X_ij = sum_l (-1)^l dim e_j A^l e_i.
// Requires a basic S-split algebra with d(e_i) = 0 (part of validation).
IntMatrix chi_matrix(const FinAlgebra& a);

// (X^-1)^t for unimodular X.
IntMatrix chi_inverse_transpose(const IntMatrix& x);

// X_C == X_B * X_A, exactly.
bool verify_chi_multiplicative(const FinAlgebra& a, const FinAlgebra& b,
                               const FinAlgebra& c);

// Elementary transvection E_ij^(eps * count): I + eps*count * e_ij.
struct Transvection {
    int i = 0, j = 0;  // 0-based, i != j
    int eps = 1;       // +-1
    long count = 1;

    IntMatrix matrix(int n) const;
};

// Writes M in SL(n, Z) as an ordered product of transvections
// (left to right), verified by multiplication. Throws when det != 1.
std::vector<Transvection> factor_sl(const IntMatrix& m);

struct RealizedGreen {
    std::vector<Transvection> word;
    ProductAlgebra algebra;  // generalized Green DG algebra
    IntMatrix chi;           // equals the input matrix (verified)
};

// Generalized Green DG algebra with chi equal to the given SL(n, Z) matrix:
// each transvection E_ij^eps becomes K_ij[d] with (-1)^d = eps.
RealizedGreen realize_green(const IntMatrix& m);

// Seeded SL(n, Z) sample built from random transvections, entries bounded.
IntMatrix random_sl(int n, std::uint64_t seed, long max_entry = 50);

}  // namespace finalg
