#pragma once

#include <string>
#include <vector>

#include "gf_tower.hpp"

namespace sumrank {

/// Skew polynomial over a field in the tower: sum f.c[i] z^i with z a = sigma(a) z.
/// Trailing zeros are normalized away; the zero polynomial has an empty sequence.
struct SkewPoly {
    std::vector<Felem> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Felem coeff(unsigned i) const { return i < c.size() ? c[i] : 0; }
    bool operator==(const SkewPoly& o) const = default;
};

SkewPoly sp_make(std::vector<Felem> coeffs);  // trims
SkewPoly sp_one();
SkewPoly sp_zn_minus_one(const Tower& tw, unsigned n);  // z^n - 1

SkewPoly sp_add(const Tower& tw, const SkewPoly& f, const SkewPoly& g);
SkewPoly sp_sub(const Tower& tw, const SkewPoly& f, const SkewPoly& g);
SkewPoly sp_scale(const Tower& tw, Felem k, const SkewPoly& f);
SkewPoly sp_mul(const Tower& tw, const SkewPoly& f, const SkewPoly& g);

/// f = quotient * g + remainder with deg(remainder) < deg(g).
struct SpDivision {
    SkewPoly quotient, remainder;
};
SpDivision sp_right_divide(const Tower& tw, const SkewPoly& f, const SkewPoly& g);
/// f = g * quotient + remainder with deg(remainder) < deg(g).
SpDivision sp_left_divide(const Tower& tw, const SkewPoly& f, const SkewPoly& g);

/// Arithmetic evaluation: the remainder of right division by (z - alpha),
/// computed through the norm expansion f(alpha) = sum f_i N_i(alpha).
Felem sp_evaluate(const Tower& tw, const SkewPoly& f, Felem alpha);

/// G(y) = sum G_i y^{q^i}, an F_q-linear map on F_{q^m}.
struct LinearizedPoly {
    std::vector<Felem> c;
    bool operator==(const LinearizedPoly& o) const = default;
};

LinearizedPoly to_linearized(const SkewPoly& f);
SkewPoly from_linearized(const LinearizedPoly& g);
Felem lin_evaluate(const Tower& tw, const LinearizedPoly& g, Felem beta);

/// 1^beta = sigma(beta) beta^{-1}, the conjugate of 1 with respect to beta.
Felem conjugate_of_one(const Tower& tw, Felem beta);

/// N_i(a) = sigma^{i-1}(a) ... sigma(a) a, with N_0(a) = 1.
Felem norm_i(const Tower& tw, Felem a, unsigned i);
/// D_a^i(b) = sigma^i(b) N_i(a).
Felem op_d(const Tower& tw, Felem a, unsigned i, Felem b);

/// Minimal skew polynomial with coefficients in F_{q0^{m*d}} whose associated
/// linearized polynomial vanishes on every element of roots; d must divide s.
/// Computed as the explicit product over the F_q-span closure of the Frobenius
/// orbits of the roots.  The empty set yields the unit polynomial.
SkewPoly minimal_linearized_poly(const Tower& tw, const std::vector<Felem>& roots, unsigned d);

/// Smallest d with big_degree % d == 0 such that every coefficient lies in F_{p^d}.
unsigned coeff_subfield_degree(const Tower& tw, const SkewPoly& f);

std::string sp_to_text(const Tower& tw, const SkewPoly& f);

}  // namespace sumrank
