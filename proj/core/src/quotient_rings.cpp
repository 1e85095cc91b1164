#include "sumrank/quotient_rings.hpp"

#include <algorithm>
#include <numeric>

namespace sumrank {

// --- commutative polynomial helpers ----------------------------------------

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int poly_degree(const Poly& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[static_cast<std::size_t>(d)] == 0) --d;
    return d;
}

Poly poly_add(const Tower& tw, const Poly& f, const Poly& g) {
    Poly out(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = tw.add(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
    return poly_trim(std::move(out));
}

Poly poly_sub(const Tower& tw, const Poly& f, const Poly& g) {
    Poly out(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = tw.sub(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
    return poly_trim(std::move(out));
}

Poly poly_mul(const Tower& tw, const Poly& f, const Poly& g) {
    if (f.empty() || g.empty()) return {};
    Poly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = tw.add(out[i + j], tw.mul(f[i], g[j]));
    }
    return poly_trim(std::move(out));
}

PolyDivision poly_divmod(const Tower& tw, const Poly& f, const Poly& g) {
    int dg = poly_degree(g);
    require(dg >= 0, Errc::div_by_zero, "polynomial division by zero");
    Poly rem = f;
    int dr = poly_degree(rem);
    Poly quot;
    if (dr >= dg) quot.assign(static_cast<std::size_t>(dr - dg) + 1, 0);
    Felem lead_inv = tw.inv(g[static_cast<std::size_t>(dg)]);
    while (dr >= dg) {
        Felem qk = tw.mul(rem[static_cast<std::size_t>(dr)], lead_inv);
        unsigned k = static_cast<unsigned>(dr - dg);
        quot[k] = qk;
        for (int j = 0; j <= dg; ++j)
            rem[k + static_cast<unsigned>(j)] =
                tw.sub(rem[k + static_cast<unsigned>(j)],
                       tw.mul(qk, g[static_cast<std::size_t>(j)]));
        dr = poly_degree(rem);
    }
    rem.resize(static_cast<std::size_t>(dr + 1));
    return {poly_trim(std::move(quot)), std::move(rem)};
}

Felem poly_eval(const Tower& tw, const Poly& f, Felem x) {
    Felem acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = tw.add(tw.mul(acc, x), f[i]);
    return acc;
}

PolyXgcd poly_xgcd(const Tower& tw, Poly f0, Poly f1) {
    Poly r0 = poly_trim(std::move(f0)), r1 = poly_trim(std::move(f1));
    Poly u0{1}, u1{}, v0{}, v1{1};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(tw, r0, r1);
        Poly u2 = poly_sub(tw, u0, poly_mul(tw, q, u1));
        Poly v2 = poly_sub(tw, v0, poly_mul(tw, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.empty() && r0.back() != 1) {
        Felem li = tw.inv(r0.back());
        for (auto& c : r0) c = tw.mul(c, li);
        for (auto& c : u0) c = tw.mul(c, li);
        for (auto& c : v0) c = tw.mul(c, li);
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

Poly poly_interpolate(const Tower& tw, const std::vector<Felem>& xs,
                      const std::vector<Felem>& ys) {
    require(xs.size() == ys.size(), Errc::length_mismatch, "interpolation point mismatch");
    Poly acc{};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly li{1};
        Felem denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = poly_mul(tw, li, Poly{tw.neg(xs[j]), 1});
            denom = tw.mul(denom, tw.sub(xs[i], xs[j]));
        }
        Felem scale = tw.mul(ys[i], tw.inv(denom));
        for (auto& c : li) c = tw.mul(c, scale);
        acc = poly_add(tw, acc, li);
    }
    return acc;
}

// --- S = F[x]/(x^ell - 1) ----------------------------------------------------

SElem s_zero(unsigned ell) { return SElem{std::vector<Felem>(ell, 0)}; }

SElem s_const(unsigned ell, Felem v) {
    SElem out = s_zero(ell);
    out.c[0] = v;
    return out;
}

SElem s_from_poly(const Tower& tw, unsigned ell, const Poly& f) {
    SElem out = s_zero(ell);
    for (std::size_t i = 0; i < f.size(); ++i)
        out.c[i % ell] = tw.add(out.c[i % ell], f[i]);
    return out;
}

SElem s_add(const Tower& tw, const SElem& f, const SElem& g) {
    SElem out = f;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = tw.add(out.c[i], g.c[i]);
    return out;
}

SElem s_sub(const Tower& tw, const SElem& f, const SElem& g) {
    SElem out = f;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = tw.sub(out.c[i], g.c[i]);
    return out;
}

SElem s_mul(const Tower& tw, const SElem& f, const SElem& g) {
    const unsigned ell = static_cast<unsigned>(f.c.size());
    SElem out = s_zero(ell);
    for (unsigned i = 0; i < ell; ++i) {
        if (!f.c[i]) continue;
        for (unsigned j = 0; j < ell; ++j) {
            if (!g.c[j]) continue;
            unsigned k = (i + j) % ell;
            out.c[k] = tw.add(out.c[k], tw.mul(f.c[i], g.c[j]));
        }
    }
    return out;
}

SElem s_sigma(const Tower& tw, const SElem& f, long k) {
    SElem out = f;
    for (auto& c : out.c) c = tw.sigma(c, k);
    return out;
}

Felem s_eval(const Tower& tw, const SElem& f, Felem a) { return poly_eval(tw, f.c, a); }

bool s_is_zero(const SElem& f) {
    return std::all_of(f.c.begin(), f.c.end(), [](Felem c) { return c == 0; });
}

// --- R = S[z; sigma]/(z^N - 1) and S[z; sigma] -------------------------------

BivarElem b_zero(unsigned ell, unsigned n_z) {
    BivarElem out;
    out.ell = ell;
    out.n_z = n_z;
    out.c.assign(n_z, s_zero(ell));
    return out;
}

BivarElem b_one(unsigned ell, unsigned n_z) {
    BivarElem out = b_zero(ell, n_z);
    out.c[0].c[0] = 1;
    return out;
}

BivarElem b_add(const Tower& tw, const BivarElem& f, const BivarElem& g) {
    BivarElem out = f;
    for (unsigned j = 0; j < out.n_z; ++j) out.c[j] = s_add(tw, out.c[j], g.c[j]);
    return out;
}

BivarElem b_sub(const Tower& tw, const BivarElem& f, const BivarElem& g) {
    BivarElem out = f;
    for (unsigned j = 0; j < out.n_z; ++j) out.c[j] = s_sub(tw, out.c[j], g.c[j]);
    return out;
}

BivarElem b_mul(const Tower& tw, const BivarElem& f, const BivarElem& g) {
    require(f.ell == g.ell && f.n_z == g.n_z, Errc::length_mismatch, "ring mismatch");
    BivarElem out = b_zero(f.ell, f.n_z);
    for (unsigned i = 0; i < f.n_z; ++i) {
        if (s_is_zero(f.c[i])) continue;
        for (unsigned j = 0; j < g.n_z; ++j) {
            // (f_i z^i)(g_j z^j) = f_i sigma^i(g_j) z^{(i+j) mod N}
            unsigned k = (i + j) % f.n_z;
            out.c[k] = s_add(tw, out.c[k], s_mul(tw, f.c[i], s_sigma(tw, g.c[j], i)));
        }
    }
    return out;
}

bool b_is_zero(const BivarElem& f) {
    return std::all_of(f.c.begin(), f.c.end(), s_is_zero);
}

ZPoly zp_zero(unsigned ell) { return ZPoly{ell, {}}; }

ZPoly zp_trim(ZPoly f) {
    while (!f.c.empty() && s_is_zero(f.c.back())) f.c.pop_back();
    return f;
}

ZPoly zp_add(const Tower& tw, const ZPoly& f, const ZPoly& g) {
    ZPoly out;
    out.ell = f.ell;
    out.c.assign(std::max(f.c.size(), g.c.size()), s_zero(f.ell));
    for (std::size_t j = 0; j < out.c.size(); ++j) {
        if (j < f.c.size()) out.c[j] = s_add(tw, out.c[j], f.c[j]);
        if (j < g.c.size()) out.c[j] = s_add(tw, out.c[j], g.c[j]);
    }
    return zp_trim(std::move(out));
}

ZPoly zp_mul(const Tower& tw, const ZPoly& f, const ZPoly& g) {
    if (f.c.empty() || g.c.empty()) return zp_zero(f.ell);
    ZPoly out;
    out.ell = f.ell;
    out.c.assign(f.c.size() + g.c.size() - 1, s_zero(f.ell));
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (s_is_zero(f.c[i])) continue;
        for (std::size_t j = 0; j < g.c.size(); ++j)
            out.c[i + j] = s_add(tw, out.c[i + j],
                                 s_mul(tw, f.c[i], s_sigma(tw, g.c[j], static_cast<long>(i))));
    }
    return zp_trim(std::move(out));
}

ZPoly zp_scale_s(const Tower& tw, const SElem& k, const ZPoly& f) {
    ZPoly out = f;
    for (auto& cj : out.c) cj = s_mul(tw, k, cj);
    return zp_trim(std::move(out));
}

ZPoly zp_zn_minus_one(const Tower& tw, unsigned ell, unsigned n) {
    ZPoly out;
    out.ell = ell;
    out.c.assign(n + 1, s_zero(ell));
    out.c[0].c[0] = tw.neg(1);
    out.c[n].c[0] = 1;
    return out;
}

BivarElem zp_reduce(const Tower& tw, const ZPoly& f, unsigned n_z) {
    BivarElem out = b_zero(f.ell, n_z);
    for (std::size_t j = 0; j < f.c.size(); ++j)
        out.c[j % n_z] = s_add(tw, out.c[j % n_z], f.c[j]);
    return out;
}

ZPoly zp_from_bivar(const BivarElem& f) { return zp_trim(ZPoly{f.ell, f.c}); }

// --- coordinate maps ----------------------------------------------------------

BivarElem nu(const Tower& tw, const std::vector<Felem>& v, unsigned ell, unsigned n_z) {
    (void)tw;
    require(v.size() == static_cast<std::size_t>(ell) * n_z, Errc::length_mismatch,
            "vector length must be ell*N");
    BivarElem out = b_zero(ell, n_z);
    for (unsigned i = 0; i < ell; ++i)
        for (unsigned j = 0; j < n_z; ++j) out.c[j].c[i] = v[static_cast<std::size_t>(i) * n_z + j];
    return out;
}

std::vector<Felem> nu_inv(const Tower& tw, const BivarElem& f) {
    (void)tw;
    std::vector<Felem> v(static_cast<std::size_t>(f.ell) * f.n_z, 0);
    for (unsigned i = 0; i < f.ell; ++i)
        for (unsigned j = 0; j < f.n_z; ++j) v[static_cast<std::size_t>(i) * f.n_z + j] = f.c[j].c[i];
    return v;
}

BivarElem mu(const Tower& tw, const std::vector<Felem>& v, unsigned ell, unsigned n_z) {
    return nu(tw, v, ell, n_z);
}

std::vector<Felem> mu_inv(const Tower& tw, const BivarElem& f) { return nu_inv(tw, f); }

// --- cyclotomic factorization and idempotents --------------------------------

CycFactorization factor_cyclotomic(const Tower& tw, Felem a) {
    const unsigned ell = tw.ell();
    require(ell % tw.p() != 0, Errc::p_divides_ell, "p divides ell");
    require(tw.pow(a, ell) == 1, Errc::not_root_of_unity, "a^ell != 1");
    if (ell > 1)
        require(tw.mul_order(a) == ell, Errc::not_root_of_unity, "a is not a primitive root");
    CycFactorization fact;
    fact.ell = ell;
    fact.a = a;
    std::uint64_t mult = 1;  // q0^m mod ell
    for (unsigned k = 0; k < tw.m(); ++k) mult = mult * (tw.q0() % ell) % ell;
    std::vector<bool> seen(ell, false);
    for (unsigned j = 0; j < ell; ++j) {
        if (seen[j]) continue;
        std::vector<unsigned> coset;
        unsigned cur = j;
        do {
            coset.push_back(cur);
            seen[cur] = true;
            cur = static_cast<unsigned>((static_cast<std::uint64_t>(cur) * mult) % ell);
        } while (cur != j);
        Poly mi{1};
        for (unsigned expo : coset) mi = poly_mul(tw, mi, Poly{tw.neg(tw.pow(a, expo)), 1});
        for (Felem cc : mi)
            require(tw.in_subfield(cc, tw.deg_f()), Errc::verification_failed,
                    "cyclotomic factor has a coefficient outside F");
        fact.reps.push_back(j);
        fact.degrees.push_back(static_cast<unsigned>(coset.size()));
        fact.cosets.push_back(std::move(coset));
        fact.factors.push_back(std::move(mi));
    }
    // product of the factors must be x^ell - 1
    Poly prod{1};
    for (const auto& mi : fact.factors) prod = poly_mul(tw, prod, mi);
    Poly target(ell + 1, 0);
    target[0] = tw.neg(1);
    target[ell] = 1;
    require(prod == target, Errc::verification_failed, "factor product != x^ell - 1");
    return fact;
}

std::vector<SElem> primitive_idempotents(const Tower& tw, const CycFactorization& fact) {
    const unsigned ell = fact.ell;
    Poly xell(ell + 1, 0);
    xell[0] = tw.neg(1);
    xell[ell] = 1;
    std::vector<SElem> out;
    for (std::size_t i = 0; i < fact.factors.size(); ++i) {
        auto [quot, rem] = poly_divmod(tw, xell, fact.factors[i]);
        require(rem.empty(), Errc::verification_failed, "factor does not divide x^ell - 1");
        auto x = poly_xgcd(tw, quot, fact.factors[i]);
        require(poly_degree(x.g) == 0, Errc::non_coprime_factors,
                "cyclotomic factors are not coprime");
        // x.g is monic hence 1; e_i = u * (x^ell - 1)/m_i
        Poly ei = poly_mul(tw, x.u, quot);
        SElem e = s_from_poly(tw, ell, ei);
        require(s_sigma(tw, e, 1) == e, Errc::verification_failed,
                "idempotent is not sigma-invariant");
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<SkewPoly> crt_rho(const Tower& tw, const BivarElem& f, const CycFactorization& fact) {
    std::vector<SkewPoly> out;
    out.reserve(fact.reps.size());
    for (std::size_t i = 0; i < fact.reps.size(); ++i) {
        Felem ai = tw.pow(fact.a, fact.reps[i]);
        std::vector<Felem> coeffs(f.n_z);
        for (unsigned j = 0; j < f.n_z; ++j) coeffs[j] = s_eval(tw, f.c[j], ai);
        out.push_back(sp_make(std::move(coeffs)));
    }
    return out;
}

Poly lift_component_coeff(const Tower& tw, Felem c, const CycFactorization& fact, unsigned i) {
    const auto& coset = fact.cosets[i];
    if (coset.size() == 1) return poly_trim(Poly{c});
    std::vector<Felem> xs(coset.size()), ys(coset.size());
    for (std::size_t h = 0; h < coset.size(); ++h) {
        xs[h] = tw.pow(fact.a, coset[h]);
        ys[h] = tw.frob_q0(c, static_cast<long>(h) * tw.m());
    }
    Poly out = poly_interpolate(tw, xs, ys);
    for (Felem cc : out)
        require(tw.in_subfield(cc, tw.deg_f()), Errc::verification_failed,
                "component lift has a coefficient outside F");
    return out;
}

ZPoly lift_component(const Tower& tw, const SkewPoly& comp, const CycFactorization& fact,
                     unsigned i) {
    ZPoly out;
    out.ell = fact.ell;
    out.c.reserve(comp.c.size());
    for (Felem cj : comp.c)
        out.c.push_back(s_from_poly(tw, fact.ell, lift_component_coeff(tw, cj, fact, i)));
    return zp_trim(std::move(out));
}

BivarElem crt_inverse(const Tower& tw, const std::vector<SkewPoly>& comps,
                      const CycFactorization& fact, const std::vector<SElem>& idem,
                      unsigned n_z) {
    require(comps.size() == fact.reps.size() && idem.size() == fact.reps.size(),
            Errc::component_count_mismatch, "component count mismatch");
    ZPoly acc = zp_zero(fact.ell);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        require(comps[i].c.size() <= n_z, Errc::component_count_mismatch,
                "component degree exceeds N");
        acc = zp_add(tw, acc,
                     zp_scale_s(tw, idem[i],
                                lift_component(tw, comps[i], fact, static_cast<unsigned>(i))));
    }
    return zp_reduce(tw, acc, n_z);
}

// --- evaluation maps -----------------------------------------------------------

SkewPoly ev_partial(const Tower& tw, Felem a, const BivarElem& f) {
    require(tw.pow(a, f.ell) == 1, Errc::not_root_of_unity, "a^ell != 1");
    std::vector<Felem> coeffs(f.n_z);
    for (unsigned j = 0; j < f.n_z; ++j) coeffs[j] = s_eval(tw, f.c[j], a);
    return sp_make(std::move(coeffs));
}

SkewPoly ev_partial_z(const Tower& tw, Felem a, const ZPoly& f) {
    require(tw.pow(a, f.ell) == 1, Errc::not_root_of_unity, "a^ell != 1");
    std::vector<Felem> coeffs(f.c.size());
    for (std::size_t j = 0; j < f.c.size(); ++j) coeffs[j] = s_eval(tw, f.c[j], a);
    return sp_make(std::move(coeffs));
}

Felem ev_total(const Tower& tw, Felem a, Felem beta, const BivarElem& f) {
    require(beta != 0, Errc::zero_beta, "beta must be nonzero");
    require(f.n_z == tw.m(), Errc::requires_n_equals_m, "total evaluation needs N = m");
    SkewPoly fz = ev_partial(tw, a, f);
    Felem via_arith = sp_evaluate(tw, fz, conjugate_of_one(tw, beta));
    Felem acc = 0;
    for (unsigned j = 0; j < f.n_z; ++j)
        acc = tw.add(acc, tw.mul(s_eval(tw, f.c[j], a), tw.sigma(beta, j)));
    Felem via_linear = tw.mul(acc, tw.inv(beta));
    require(via_arith == via_linear, Errc::cross_check_mismatch,
            "total evaluation routes disagree");
    return via_arith;
}

}  // namespace sumrank
