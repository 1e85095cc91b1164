#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csc.hpp"
#include "lrs.hpp"

namespace sumrank {

/// q0^m-cyclotomic cosets modulo ell, pure integer data (enough for the bounds).
struct CosetTable {
    unsigned ell = 1;
    std::vector<std::vector<unsigned>> cosets;  // orbit order, rep = front = min
};

CosetTable coset_table(unsigned ell, std::uint64_t multiplier);
CosetTable coset_table(const CycFactorization& fact);

/// Dimension lower bound n - sum_i d_i min(m, s k_i / d_i), with k_i the number of
/// exponents b, b+1, ..., b+delta-2 (mod ell) landing in coset i.  Each summand is
/// min(d_i m, s k_i), an integer.
long bound_eq33(const CosetTable& cosets, unsigned b, unsigned delta, unsigned m, unsigned s);
/// Delsarte's subfield-subcode floor n - s(delta - 1); may be negative.
long bound_delsarte(unsigned n, unsigned s, unsigned delta);

/// Per-coset defining-set structure of an SR-BCH code.
struct DefiningStructure {
    struct Comp {
        unsigned coset = 0;            // index into the factorization
        std::vector<unsigned> j_set;   // J_i, subset of [0, delta-2]
        unsigned j_tilde = 0;          // min J_i (unused when J_i empty)
        std::vector<unsigned> h;       // h_lambda per element of J_i
        std::vector<Felem> v_basis;    // F_q-basis of V_i
    };
    std::vector<Comp> comps;
    unsigned exact_dim = 0;
};

DefiningStructure srbch_defining_structure(const Tower& tw, const CycFactorization& fact,
                                           Felem beta, unsigned b, unsigned delta);

/// Generator matrix over F of the subcode { c in F^n : parity * c^T = 0 }, computed
/// by expanding every parity row into [F_{q^m} : F] rows over F.
Mat subfield_subcode(const Tower& tw, const Mat& parity);

struct SrBchCode {
    const Tower* tw = nullptr;
    unsigned b = 0, delta = 2;
    Felem a = 1, beta = 1;
    Mat parity;  // D(A,B), (delta-1) x n over F_{q^m}
    /// C^sigma_{n-delta+1}(A,B'), the decoding parent.  Empty on the exotic
    /// towers (m >= 3 with ell >= 2) where no dual of the prescribed shape
    /// exists; the decoder then falls back to direct enumeration.
    std::optional<LrsDual> parent;
    Mat genmat;        // over F
    unsigned dim = 0;  // exact dimension, computed two ways and cross-checked
    long singleton = 0, eq33 = 0, delsarte = 0;
    DefiningStructure structure;

    unsigned n() const { return tw->ell() * tw->m(); }
    unsigned radius() const { return (delta - 1) / 2; }
};

/// Builds the SR-BCH code with prescribed distance delta and shift b: the subfield
/// subcode over F of the dual of the CSC linearized Reed-Solomon code of dimension
/// delta-1.  The exact dimension is computed both from the defining-set
/// structure and from the subfield-subcode rank; disagreement is a hard error.
SrBchCode srbch_construct(const Tower& tw, unsigned b, unsigned delta);

struct TableRow {
    unsigned delta = 2, b = 0;
    long singleton = 0, eq33 = 0, delsarte = 0;
    std::optional<unsigned> exact_dim;
    bool beats_delsarte = false;
};

/// Rows sorted by (delta, b); exact dimensions only when with_exact.
std::vector<TableRow> generate_table(const Tower& tw,
                                     std::vector<std::pair<unsigned, unsigned>> rows,
                                     bool with_exact = false, unsigned jobs = 1);

/// The built-in primitive/narrow-sense sweep for m = 2, q0 = 2, ell = 2^s - 1.
std::vector<std::pair<unsigned, unsigned>> preset_rows(unsigned s);

/// CSV with header "delta,b,singleton,eq33,delsarte,exact_dim,beats_delsarte".
std::string table_to_csv(const std::vector<TableRow>& rows);

std::string srbch_to_json(const SrBchCode& code);
SrBchCode srbch_from_json(const Tower& tw, const std::string& text);

}  // namespace sumrank
