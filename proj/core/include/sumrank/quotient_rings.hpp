#pragma once

#include <vector>

#include "skew_poly.hpp"

namespace sumrank {

/// Dense commutative polynomial over the ambient field, c[i] = coefficient of x^i.
using Poly = std::vector<Felem>;

Poly poly_trim(Poly f);
int poly_degree(const Poly& f);
Poly poly_add(const Tower& tw, const Poly& f, const Poly& g);
Poly poly_sub(const Tower& tw, const Poly& f, const Poly& g);
Poly poly_mul(const Tower& tw, const Poly& f, const Poly& g);
struct PolyDivision {
    Poly quotient, remainder;
};
PolyDivision poly_divmod(const Tower& tw, const Poly& f, const Poly& g);
Felem poly_eval(const Tower& tw, const Poly& f, Felem x);
/// g = u*f0 + v*f1 with g the monic gcd.
struct PolyXgcd {
    Poly g, u, v;
};
PolyXgcd poly_xgcd(const Tower& tw, Poly f0, Poly f1);
/// Unique polynomial of degree < points.size() through the given points.
Poly poly_interpolate(const Tower& tw, const std::vector<Felem>& xs, const std::vector<Felem>& ys);

/// Element of S = F[x]/(x^ell - 1): length-ell coefficient vector, multiplication is
/// cyclic convolution, sigma extends coefficient-wise (sigma(x) = x).
struct SElem {
    std::vector<Felem> c;
    bool operator==(const SElem& o) const = default;
};

SElem s_zero(unsigned ell);
SElem s_const(unsigned ell, Felem v);
SElem s_from_poly(const Tower& tw, unsigned ell, const Poly& f);  // reduces mod x^ell - 1
SElem s_add(const Tower& tw, const SElem& f, const SElem& g);
SElem s_sub(const Tower& tw, const SElem& f, const SElem& g);
SElem s_mul(const Tower& tw, const SElem& f, const SElem& g);
SElem s_sigma(const Tower& tw, const SElem& f, long k = 1);
Felem s_eval(const Tower& tw, const SElem& f, Felem a);
bool s_is_zero(const SElem& f);

/// Element of R = S[z; sigma]/(z^N - 1): c[j] = z^j coefficient, reduction eager.
struct BivarElem {
    unsigned ell = 1, n_z = 1;  // n_z = N
    std::vector<SElem> c;       // size N
    bool operator==(const BivarElem& o) const = default;
};

/// Element of S[z; sigma] with unreduced z-degree (for identities stated in the
/// polynomial ring rather than in R, e.g. g h = z^N - 1).
struct ZPoly {
    unsigned ell = 1;
    std::vector<SElem> c;  // c[j] = z^j coefficient; trailing zero SElems trimmed
    bool operator==(const ZPoly& o) const = default;
};

BivarElem b_zero(unsigned ell, unsigned n_z);
BivarElem b_one(unsigned ell, unsigned n_z);
BivarElem b_add(const Tower& tw, const BivarElem& f, const BivarElem& g);
BivarElem b_sub(const Tower& tw, const BivarElem& f, const BivarElem& g);
BivarElem b_mul(const Tower& tw, const BivarElem& f, const BivarElem& g);
bool b_is_zero(const BivarElem& f);

ZPoly zp_zero(unsigned ell);
ZPoly zp_trim(ZPoly f);
ZPoly zp_add(const Tower& tw, const ZPoly& f, const ZPoly& g);
ZPoly zp_mul(const Tower& tw, const ZPoly& f, const ZPoly& g);
ZPoly zp_scale_s(const Tower& tw, const SElem& k, const ZPoly& f);  // left multiply by k(x)
ZPoly zp_zn_minus_one(const Tower& tw, unsigned ell, unsigned n);
BivarElem zp_reduce(const Tower& tw, const ZPoly& f, unsigned n_z);
ZPoly zp_from_bivar(const BivarElem& f);

/// Coordinate isomorphisms between F^n (n = ell*N, blocks of length N) and the
/// rings R' and R of the two presentations.  Since x and z commute and sigma fixes
/// x, both presentations carry identical coordinates, so mu and nu share one
/// implementation.
BivarElem nu(const Tower& tw, const std::vector<Felem>& v, unsigned ell, unsigned n_z);
std::vector<Felem> nu_inv(const Tower& tw, const BivarElem& f);
BivarElem mu(const Tower& tw, const std::vector<Felem>& v, unsigned ell, unsigned n_z);
std::vector<Felem> mu_inv(const Tower& tw, const BivarElem& f);

/// Factorization of x^ell - 1 over F into irreducible components, indexed by the
/// q0^m-cyclotomic cosets modulo ell.  cosets[i][h] = rep_i * (q0^m)^h mod ell.
struct CycFactorization {
    unsigned ell = 1;
    Felem a = 1;                               // primitive ell-th root of unity
    std::vector<std::vector<unsigned>> cosets;  // orbit order, rep first (= min)
    std::vector<unsigned> reps;
    std::vector<unsigned> degrees;  // d_i = coset size = deg m_i
    std::vector<Poly> factors;      // m_i(x), coefficients in F
};

CycFactorization factor_cyclotomic(const Tower& tw, Felem a);

/// e_i(x) with e_i = 1 mod m_i and 0 mod m_j (j != i); Bezout coefficients from
/// the extended Euclidean algorithm in ambient arithmetic.
std::vector<SElem> primitive_idempotents(const Tower& tw, const CycFactorization& fact);

/// rho composed with the root-evaluation isomorphism S_i = F[x]/(m_i) -> F_{q0^{m d_i}}:
/// component i is the skew polynomial with coefficients f_j(a^{rep_i}).
std::vector<SkewPoly> crt_rho(const Tower& tw, const BivarElem& f, const CycFactorization& fact);
BivarElem crt_inverse(const Tower& tw, const std::vector<SkewPoly>& comps,
                      const CycFactorization& fact, const std::vector<SElem>& idem,
                      unsigned n_z);

/// Preimage under evaluation at the coset roots: the unique polynomial of degree
/// < d_i over F whose value at a^{rep_i} is c (interpolation at the conjugates).
Poly lift_component_coeff(const Tower& tw, Felem c, const CycFactorization& fact, unsigned i);
ZPoly lift_component(const Tower& tw, const SkewPoly& comp, const CycFactorization& fact,
                     unsigned i);

/// Ev_{a,z}: substitute x := a in every z-coefficient; a ring morphism since
/// sigma(a) = a for roots of unity.
SkewPoly ev_partial(const Tower& tw, Felem a, const BivarElem& f);
/// Same substitution on an element of S[z; sigma] (z-degree unreduced).
SkewPoly ev_partial_z(const Tower& tw, Felem a, const ZPoly& f);
/// Ev_{a,beta} = Ev^sigma_beta of Ev_{a,z}; also (sum_j f_j(a) sigma^j(beta)) beta^{-1};
/// both routes are computed and must agree.
Felem ev_total(const Tower& tw, Felem a, Felem beta, const BivarElem& f);

}  // namespace sumrank
