#pragma once

#include <vector>

#include "mat.hpp"

namespace sumrank {

/// Linearized Reed-Solomon code over F_{q^m}: generator matrix with block i,
/// row r, column j entry D_{a_i}^r(beta_{i,j}) = sigma^r(beta_{i,j}) N_r(a_i).
struct LrsCode {
    unsigned k = 1, ell = 1, n_z = 1;          // dimension, block count, block length N
    std::vector<Felem> a;                      // ell pairwise non-conjugate nonzero elements
    std::vector<std::vector<Felem>> b;         // ell blocks of N independent elements
    Mat genmat;                                // k x (ell*N)
    int b_shift = -1;                          // the b used by csc_lrs, -1 otherwise

    unsigned n() const { return ell * n_z; }
};

/// Non-conjugacy via norms: x and y are conjugate iff they share the same norm
/// x^{(q^m-1)/(q-1)} into F_q (Hilbert 90).
bool pairwise_nonconjugate(const Tower& tw, const std::vector<Felem>& a);

LrsCode lrs_build(const Tower& tw, unsigned k, std::vector<Felem> a,
                  std::vector<std::vector<Felem>> b);

/// The cyclic-skew-cyclic subfamily: A = {a^0..a^{ell-1}} for the tower's primitive
/// root a, B_i = {sigma^j(beta) a^{b i}} for the normal element beta.  Requires
/// N = m, gcd(ell, m) = 1 and gcd(ell, q) = 1.
LrsCode csc_lrs(const Tower& tw, Felem a, Felem beta, unsigned b_shift, unsigned k);

struct LrsDual {
    unsigned c = 0;   // dual twist exponent
    Felem gamma = 1;  // normal element generating the dual bases
    LrsCode code;     // C^sigma_{n-k}(A, B') with B'_i = {sigma^j(gamma) a^{c i}}
};

/// Dual of a csc_lrs code, constructed from the one-dimensional dual of the
/// full-length code and verified by exact orthogonality.
LrsDual dual_csc_lrs(const Tower& tw, const LrsCode& primal);

}  // namespace sumrank
