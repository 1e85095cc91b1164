#include "sumrank/skew_poly.hpp"

#include <algorithm>

namespace sumrank {

namespace {
void trim(std::vector<Felem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

SkewPoly sp_make(std::vector<Felem> coeffs) {
    trim(coeffs);
    return SkewPoly{std::move(coeffs)};
}

SkewPoly sp_one() { return SkewPoly{{1}}; }

SkewPoly sp_zn_minus_one(const Tower& tw, unsigned n) {
    std::vector<Felem> c(n + 1, 0);
    c[0] = tw.neg(1);
    c[n] = 1;
    return SkewPoly{std::move(c)};
}

SkewPoly sp_add(const Tower& tw, const SkewPoly& f, const SkewPoly& g) {
    std::vector<Felem> c(std::max(f.c.size(), g.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = tw.add(f.coeff(static_cast<unsigned>(i)), g.coeff(static_cast<unsigned>(i)));
    trim(c);
    return SkewPoly{std::move(c)};
}

SkewPoly sp_sub(const Tower& tw, const SkewPoly& f, const SkewPoly& g) {
    std::vector<Felem> c(std::max(f.c.size(), g.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = tw.sub(f.coeff(static_cast<unsigned>(i)), g.coeff(static_cast<unsigned>(i)));
    trim(c);
    return SkewPoly{std::move(c)};
}

SkewPoly sp_scale(const Tower& tw, Felem k, const SkewPoly& f) {
    if (k == 0) return {};
    std::vector<Felem> c(f.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = tw.mul(k, f.c[i]);
    return SkewPoly{std::move(c)};
}

SkewPoly sp_mul(const Tower& tw, const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Felem> c(f.c.size() + g.c.size() - 1, 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (!f.c[i]) continue;
        for (std::size_t j = 0; j < g.c.size(); ++j) {
            if (!g.c[j]) continue;
            // (f_i z^i)(g_j z^j) = f_i sigma^i(g_j) z^{i+j}
            c[i + j] = tw.add(c[i + j], tw.mul(f.c[i], tw.sigma(g.c[j], static_cast<long>(i))));
        }
    }
    trim(c);
    return SkewPoly{std::move(c)};
}

SpDivision sp_right_divide(const Tower& tw, const SkewPoly& f, const SkewPoly& g) {
    require(!g.is_zero(), Errc::div_by_zero, "skew division by zero");
    std::vector<Felem> rem = f.c;
    const int dg = g.degree();
    const Felem lead = g.c.back();
    std::vector<Felem> quot;
    if (f.degree() >= dg) quot.assign(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
    while (dr >= dg) {
        const unsigned k = static_cast<unsigned>(dr - dg);
        // (q_k z^k)(lead z^dg) has leading coefficient q_k sigma^k(lead)
        Felem qk = tw.mul(rem[static_cast<std::size_t>(dr)],
                          tw.inv(tw.sigma(lead, static_cast<long>(k))));
        quot[k] = qk;
        for (int j = 0; j <= dg; ++j) {
            Felem t = tw.mul(qk, tw.sigma(g.c[static_cast<std::size_t>(j)], static_cast<long>(k)));
            rem[k + static_cast<unsigned>(j)] = tw.sub(rem[k + static_cast<unsigned>(j)], t);
        }
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
    }
    rem.resize(static_cast<std::size_t>(dr + 1));
    trim(quot);
    return {SkewPoly{std::move(quot)}, SkewPoly{std::move(rem)}};
}

SpDivision sp_left_divide(const Tower& tw, const SkewPoly& f, const SkewPoly& g) {
    require(!g.is_zero(), Errc::div_by_zero, "skew division by zero");
    std::vector<Felem> rem = f.c;
    const int dg = g.degree();
    const Felem lead_inv = tw.inv(g.c.back());
    std::vector<Felem> quot;
    if (f.degree() >= dg) quot.assign(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
    while (dr >= dg) {
        const unsigned k = static_cast<unsigned>(dr - dg);
        // (lead z^dg)(q_k z^k) has leading coefficient lead sigma^dg(q_k)
        Felem qk = tw.sigma(tw.mul(lead_inv, rem[static_cast<std::size_t>(dr)]),
                            -static_cast<long>(dg));
        quot[k] = qk;
        for (int j = 0; j <= dg; ++j) {
            Felem t = tw.mul(g.c[static_cast<std::size_t>(j)],
                             tw.sigma(qk, static_cast<long>(j)));
            rem[k + static_cast<unsigned>(j)] = tw.sub(rem[k + static_cast<unsigned>(j)], t);
        }
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
    }
    rem.resize(static_cast<std::size_t>(dr + 1));
    trim(quot);
    return {SkewPoly{std::move(quot)}, SkewPoly{std::move(rem)}};
}

Felem sp_evaluate(const Tower& tw, const SkewPoly& f, Felem alpha) {
    Felem acc = 0, norm = 1;  // norm = N_i(alpha)
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        acc = tw.add(acc, tw.mul(f.c[i], norm));
        norm = tw.mul(tw.sigma(alpha, static_cast<long>(i)), norm);
    }
    return acc;
}

LinearizedPoly to_linearized(const SkewPoly& f) { return LinearizedPoly{f.c}; }

SkewPoly from_linearized(const LinearizedPoly& g) { return sp_make(g.c); }

Felem lin_evaluate(const Tower& tw, const LinearizedPoly& g, Felem beta) {
    Felem acc = 0;
    for (std::size_t i = 0; i < g.c.size(); ++i)
        acc = tw.add(acc, tw.mul(g.c[i], tw.sigma(beta, static_cast<long>(i))));
    return acc;
}

Felem conjugate_of_one(const Tower& tw, Felem beta) {
    require(beta != 0, Errc::zero_beta, "conjugate of 1 needs beta != 0");
    return tw.mul(tw.sigma(beta, 1), tw.inv(beta));
}

Felem norm_i(const Tower& tw, Felem a, unsigned i) {
    Felem acc = 1;
    for (unsigned k = 0; k < i; ++k) acc = tw.mul(tw.sigma(a, static_cast<long>(k)), acc);
    return acc;
}

Felem op_d(const Tower& tw, Felem a, unsigned i, Felem b) {
    return tw.mul(tw.sigma(b, static_cast<long>(i)), norm_i(tw, a, i));
}

SkewPoly minimal_linearized_poly(const Tower& tw, const std::vector<Felem>& roots, unsigned d) {
    require(d >= 1 && tw.s() % d == 0, Errc::bad_subfield_degree, "d must divide s");
    if (roots.empty()) return sp_one();  // V = {0}, G(y) = y

    // U = Frobenius closure of the roots under x -> x^{q0^{m d}}, V = <U>_{F_q}
    const unsigned reps = tw.s() / d;
    std::vector<Felem> span{0};
    std::vector<bool> in_span(tw.field_size(), false);
    in_span[0] = true;
    const auto& fq = tw.subfield_elements(tw.deg_fq());
    for (Felem b : roots) {
        for (unsigned u = 0; u < reps; ++u) {
            Felem w = tw.frob_q0(b, static_cast<long>(u) * tw.m() * d);
            if (in_span[w]) continue;
            const std::size_t old = span.size();
            for (std::size_t i = 0; i < old; ++i)
                for (std::size_t ci = 1; ci < fq.size(); ++ci) {
                    Felem v = tw.add(span[i], tw.mul(fq[ci], w));
                    if (!in_span[v]) {
                        in_span[v] = true;
                        span.push_back(v);
                    }
                }
        }
    }

    // G(y) = prod_{v in V} (y - v), expanded densely
    std::vector<Felem> g{1};
    for (Felem v : span) {
        std::vector<Felem> next(g.size() + 1, 0);
        const Felem mv = tw.neg(v);
        for (std::size_t i = 0; i < g.size(); ++i) {
            next[i + 1] = tw.add(next[i + 1], g[i]);
            next[i] = tw.add(next[i], tw.mul(mv, g[i]));
        }
        g = std::move(next);
    }

    // read off coefficients at q-power exponents; everything else must vanish
    std::vector<Felem> out;
    std::uint64_t qp = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == 0) {
            require(g[0] == 0, Errc::verification_failed, "subspace polynomial: constant term");
            continue;
        }
        if (i == qp) {
            out.push_back(g[i]);
            qp *= tw.q();
        } else {
            require(g[i] == 0, Errc::verification_failed,
                    "subspace polynomial has a non-q-power coefficient");
        }
    }
    for (Felem cc : out)
        require(tw.in_subfield(cc, tw.e() * tw.m() * d), Errc::verification_failed,
                "minimal linearized polynomial coefficient outside expected subfield");
    SkewPoly result = sp_make(std::move(out));
    require(!result.is_zero() && result.c.back() == 1, Errc::verification_failed,
            "minimal linearized polynomial not monic");
    return result;
}

unsigned coeff_subfield_degree(const Tower& tw, const SkewPoly& f) {
    for (unsigned d = 1; d <= tw.big_degree(); ++d) {
        if (tw.big_degree() % d) continue;
        bool all = true;
        for (Felem c : f.c)
            if (!tw.in_subfield(c, d)) {
                all = false;
                break;
            }
        if (all) return d;
    }
    return tw.big_degree();
}

std::string sp_to_text(const Tower& tw, const SkewPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (!out.empty()) out += " + ";
        out += tw.elem_to_text(f.c[i]);
        if (i == 1) out += "*z";
        if (i > 1) out += "*z^" + std::to_string(i);
    }
    return out;
}

}  // namespace sumrank
