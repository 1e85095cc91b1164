#pragma once

#include <string>
#include <vector>

#include "mat.hpp"
#include "quotient_rings.hpp"

namespace sumrank {

/// Cyclic inter-block shift: blocks rotate right by one.
std::vector<Felem> shift_inter(const std::vector<Felem>& v, unsigned ell, unsigned n_z);
/// Block-wise skew-cyclic shift: (c_0..c_{N-1}) -> (sigma(c_{N-1}), sigma(c_0), ...).
std::vector<Felem> shift_intra(const Tower& tw, const std::vector<Felem>& v, unsigned ell,
                               unsigned n_z);

/// true iff the row space is closed under both shifting operators.
bool is_csc(const Tower& tw, const Mat& basis, unsigned ell, unsigned n_z);

/// A cyclic-skew-cyclic code, assembled from its per-component minimal generator
/// skew polynomials.  Invariants established at construction: every component
/// generator is monic and divides z^N - 1 on both sides, the assembled gen and
/// check satisfy gen*check = check*gen = z^N - 1 in S[z; sigma], and the generator
/// matrix over F has full row rank equal to sum d_i k_i.
struct CscCode {
    const Tower* tw = nullptr;
    unsigned ell = 1, n_z = 1;  // n_z = N; length n = ell*N
    CycFactorization fact;
    std::vector<SElem> idem;
    std::vector<SkewPoly> comp_gen;    // g_i, coefficients in F_{q0^{m d_i}}
    std::vector<SkewPoly> comp_check;  // h_i
    std::vector<unsigned> comp_dim;    // k_i = N - deg_z(g_i)
    ZPoly gen, check;                  // g(x,z), h(x,z) in S[z; sigma]
    BivarElem gen_r;                   // image of g in R
    Mat genmat;                        // over F
    unsigned dim = 0;

    unsigned n() const { return ell * n_z; }
};

CscCode csc_from_components(const Tower& tw, const CycFactorization& fact,
                            std::vector<SkewPoly> comp_gen, unsigned n_z);

/// Defining set, stored only at the coset representatives: for each rep j_i an
/// F_q-basis of the root space T_C(a^{j_i}) union {0}.
struct DefiningSet {
    struct Entry {
        unsigned rep = 0;
        std::vector<Felem> basis;
    };
    std::vector<Entry> at;
};

DefiningSet csc_defining_set(const CscCode& code);  // requires N = m
unsigned dimension_from_defining_set(const Tower& tw, const DefiningSet& ds,
                                     const CycFactorization& fact);

/// (exponent j, beta): the root pair (a^j, beta).
struct RootPair {
    unsigned exponent = 0;
    Felem beta = 1;
};

/// Largest CSC code whose defining set contains the given pairs; per component the
/// generator is the minimal linearized polynomial of the pairs' betas after
/// Frobenius-shifting each pair to the coset representative.  Requires N = m.
CscCode largest_csc_from_root_pairs(const Tower& tw, const CycFactorization& fact,
                                    const std::vector<RootPair>& pairs);

/// The evaluation skew-cyclic code C(a): generator g(a,z) over F_{q0^{m d_i}}.
struct EvalComponent {
    SkewPoly gen;
    unsigned coset = 0;
    unsigned dim_over_f = 0;
};
EvalComponent evaluation_component(const CscCode& code, Felem a);

std::string csc_to_json(const CscCode& code);
CscCode csc_from_json(const Tower& tw, const std::string& text);

}  // namespace sumrank
