#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace sumrank {

/// Element of the ambient field, encoded as the integer whose base-p digits are the
/// coefficients of the polynomial representative (digit i = coefficient of x^i).
/// This integer encoding doubles as the canonical element ordering.
using Felem = std::uint64_t;

struct TowerParams {
    unsigned p = 2;
    unsigned e = 1;
    unsigned m = 1;
    unsigned s = 1;
    unsigned ell = 1;
    unsigned big_degree = 1;  // e*s*m
};

/// The field tower  F_p ⊆ F_{q0} ⊆ { F = F_{q0^m}, F_q = F_{q0^s} } ⊆ F_{q^m},
/// with q0 = p^e and q = q0^s.  All four fields live inside one ambient field
/// F_{p^{e*s*m}} = F_{q^m}, so inclusion maps are identities and subfield membership
/// is a predicate on ambient elements.  sigma(a) = a^q.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial of
/// degree e*s*m over F_p, so towers are reproducible without external tables.
/// Immutable after construction; all element operations are pure.
class Tower {
  public:
    static Tower build(unsigned p, unsigned e, unsigned m, unsigned s, unsigned ell);
    static Tower from_text(const std::string& text);

    const TowerParams& params() const noexcept { return par_; }
    unsigned p() const noexcept { return par_.p; }
    unsigned e() const noexcept { return par_.e; }
    unsigned m() const noexcept { return par_.m; }
    unsigned s() const noexcept { return par_.s; }
    unsigned ell() const noexcept { return par_.ell; }
    unsigned big_degree() const noexcept { return par_.big_degree; }

    std::uint64_t q0() const noexcept { return q0_; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t field_size() const noexcept { return size_; }   // |F_{q^m}|
    std::uint64_t f_size() const noexcept { return f_size_; }     // |F|
    unsigned deg_f() const noexcept { return par_.e * par_.m; }   // [F : F_p]
    unsigned deg_fq() const noexcept { return par_.e * par_.s; }  // [F_q : F_p]

    /// Modulus digits, degree 0 first, length big_degree + 1, monic.
    const std::vector<unsigned>& modulus_digits() const noexcept { return mod_; }

    // --- arithmetic -------------------------------------------------------
    Felem add(Felem a, Felem b) const;
    Felem sub(Felem a, Felem b) const;
    Felem neg(Felem a) const;
    Felem mul(Felem a, Felem b) const;
    Felem inv(Felem a) const;  // throws div_by_zero on 0
    Felem div(Felem a, Felem b) const { return mul(a, inv(b)); }
    Felem pow(Felem a, std::uint64_t k) const;

    /// x^{q^k}; k may be negative (sigma has order m on F_{q^m}).
    Felem sigma(Felem x, long k = 1) const;
    /// x^{q0^v}; v may be negative.
    Felem frob_q0(Felem x, long v) const;

    /// true iff x lies in the subfield of p^d elements; requires d | big_degree.
    bool in_subfield(Felem x, unsigned d) const;
    /// All elements of the subfield of p^d elements, in canonical order.
    const std::vector<Felem>& subfield_elements(unsigned d) const;

    std::uint64_t mul_order(Felem x) const;  // throws on 0

    /// Smallest element of multiplicative order exactly ell (lives in F_q).
    Felem primitive_root_of_unity() const;
    /// Smallest beta whose sigma-orbit is an F_q-basis of F_{q^m}.
    Felem normal_element() const;
    bool is_normal(Felem beta) const;

    // --- subfield coordinates ---------------------------------------------
    /// Coordinates of the degree-dl subfield L over the degree-dk subfield K,
    /// with respect to the canonical greedy K-basis of L (its first element is 1).
    struct SubfieldView {
        unsigned dk = 1, dl = 1, dim = 1;
        std::vector<Felem> basis;        // dim elements of L
        std::vector<Felem> coords_flat;  // size field_size*dim; valid rows only for x in L
    };
    const SubfieldView& view(unsigned dk, unsigned dl) const;
    /// Writes the dim K-coordinates of x (x must lie in L) into out.
    void coords(const SubfieldView& v, Felem x, Felem* out) const;
    Felem from_coords(const SubfieldView& v, const Felem* in) const;

    // --- text forms ---------------------------------------------------------
    /// Base-p digit string of the coefficient sequence, most significant first,
    /// zero-padded to big_degree digits.
    std::string elem_to_text(Felem x) const;
    Felem elem_from_text(const std::string& text) const;
    /// "p=2,e=1,m=2,s=4,ell=15,modulus=<digits>"
    std::string to_text() const;

  private:
    Tower() = default;
    void init_tables();
    void pick_distinguished();
    SubfieldView make_view(unsigned dk, unsigned dl) const;

    Felem mul_raw(Felem a, Felem b) const;  // polynomial-arithmetic fallback
    Felem pow_raw(Felem a, std::uint64_t k) const;

    TowerParams par_;
    std::uint64_t q0_ = 2, q_ = 2, size_ = 2, f_size_ = 2;
    std::vector<unsigned> mod_;

    bool tables_ = false;
    bool full_ = false;  // subfield lists, views and distinguished elements present
    std::vector<std::uint32_t> exp_;  // length 2*(size_-1)
    std::vector<std::uint32_t> log_;  // length size_, log_[0] unused

    std::vector<std::uint64_t> pk_mod_;  // p^k mod (size_-1), k in [0, big_degree]
    std::vector<std::uint64_t> group_factors_;
    Felem root_unity_ = 1, normal_ = 1;

    std::vector<unsigned> sub_degrees_;             // divisors of big_degree
    std::vector<std::vector<Felem>> sub_elements_;  // parallel to sub_degrees_
    std::vector<SubfieldView> views_;               // the distinguished (dk, dl) pairs
};

}  // namespace sumrank
