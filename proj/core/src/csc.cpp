#include "sumrank/csc.hpp"

#include <json.hpp>

namespace sumrank {

std::vector<Felem> shift_inter(const std::vector<Felem>& v, unsigned ell, unsigned n_z) {
    require(v.size() == static_cast<std::size_t>(ell) * n_z, Errc::bad_partition,
            "vector length must be ell*N");
    std::vector<Felem> out(v.size());
    for (unsigned i = 0; i < ell; ++i) {
        unsigned src = (i + ell - 1) % ell;
        for (unsigned j = 0; j < n_z; ++j)
            out[static_cast<std::size_t>(i) * n_z + j] = v[static_cast<std::size_t>(src) * n_z + j];
    }
    return out;
}

std::vector<Felem> shift_intra(const Tower& tw, const std::vector<Felem>& v, unsigned ell,
                               unsigned n_z) {
    require(v.size() == static_cast<std::size_t>(ell) * n_z, Errc::bad_partition,
            "vector length must be ell*N");
    std::vector<Felem> out(v.size());
    for (unsigned i = 0; i < ell; ++i)
        for (unsigned j = 0; j < n_z; ++j) {
            unsigned src = (j + n_z - 1) % n_z;
            out[static_cast<std::size_t>(i) * n_z + j] =
                tw.sigma(v[static_cast<std::size_t>(i) * n_z + src], 1);
        }
    return out;
}

bool is_csc(const Tower& tw, const Mat& basis, unsigned ell, unsigned n_z) {
    if (basis.rows == 0) return true;
    unsigned r0 = mat_rank(tw, basis);
    Mat shifted(basis.rows, basis.cols);
    for (unsigned r = 0; r < basis.rows; ++r) {
        std::vector<Felem> row(basis.row(r), basis.row(r) + basis.cols);
        auto sh = shift_inter(row, ell, n_z);
        std::copy(sh.begin(), sh.end(), shifted.row(r));
    }
    if (mat_rank(tw, mat_stack(basis, shifted)) != r0) return false;
    for (unsigned r = 0; r < basis.rows; ++r) {
        std::vector<Felem> row(basis.row(r), basis.row(r) + basis.cols);
        auto sh = shift_intra(tw, row, ell, n_z);
        std::copy(sh.begin(), sh.end(), shifted.row(r));
    }
    return mat_rank(tw, mat_stack(basis, shifted)) == r0;
}

CscCode csc_from_components(const Tower& tw, const CycFactorization& fact,
                            std::vector<SkewPoly> comp_gen, unsigned n_z) {
    const unsigned t = static_cast<unsigned>(fact.reps.size());
    require(comp_gen.size() == t, Errc::component_count_mismatch,
            "one generator per cyclotomic coset required");
    CscCode code;
    code.tw = &tw;
    code.ell = fact.ell;
    code.n_z = n_z;
    code.fact = fact;
    code.idem = primitive_idempotents(tw, fact);
    code.comp_gen = std::move(comp_gen);

    const SkewPoly zn1 = sp_zn_minus_one(tw, n_z);
    for (unsigned i = 0; i < t; ++i) {
        const SkewPoly& gi = code.comp_gen[i];
        require(!gi.is_zero() && gi.c.back() == 1, Errc::not_monic,
                "component generator must be monic");
        require(gi.c.size() <= n_z + 1, Errc::not_divisor, "component generator degree > N");
        auto ld = sp_left_divide(tw, zn1, gi);
        require(ld.remainder.is_zero(), Errc::not_divisor,
                "component generator does not divide z^N - 1");
        // two-sided check polynomial
        require(sp_mul(tw, ld.quotient, gi) == zn1, Errc::not_divisor,
                "component generator does not divide z^N - 1 on the right");
        code.comp_check.push_back(ld.quotient);
        code.comp_dim.push_back(n_z - static_cast<unsigned>(gi.degree()));
    }

    // assemble g and h through the idempotents and the interpolation lifts
    code.gen = zp_zero(fact.ell);
    code.check = zp_zero(fact.ell);
    for (unsigned i = 0; i < t; ++i) {
        code.gen =
            zp_add(tw, code.gen, zp_scale_s(tw, code.idem[i], lift_component(tw, code.comp_gen[i], fact, i)));
        code.check =
            zp_add(tw, code.check,
                   zp_scale_s(tw, code.idem[i], lift_component(tw, code.comp_check[i], fact, i)));
    }
    const ZPoly zn1_s = zp_zn_minus_one(tw, fact.ell, n_z);
    require(zp_mul(tw, code.gen, code.check) == zn1_s, Errc::verification_failed,
            "g h != z^N - 1");
    require(zp_mul(tw, code.check, code.gen) == zn1_s, Errc::verification_failed,
            "h g != z^N - 1");
    code.gen_r = zp_reduce(tw, code.gen, n_z);

    // generator matrix: rows nu^{-1}(x^u z^v e_i g) = phi^u(phi_intra^v(vec(e_i g)))
    unsigned dim = 0;
    for (unsigned i = 0; i < t; ++i) dim += fact.degrees[i] * code.comp_dim[i];
    code.dim = dim;
    code.genmat = Mat(dim, code.n());
    unsigned r = 0;
    for (unsigned i = 0; i < t; ++i) {
        BivarElem ei = b_zero(fact.ell, n_z);
        ei.c[0] = code.idem[i];
        BivarElem eig = b_mul(tw, ei, code.gen_r);
        std::vector<Felem> base = nu_inv(tw, eig);
        for (Felem x : base)
            require(tw.in_subfield(x, tw.deg_f()), Errc::verification_failed,
                    "generator row has an entry outside F");
        for (unsigned v = 0; v < code.comp_dim[i]; ++v) {
            std::vector<Felem> row = base;
            for (unsigned vv = 0; vv < v; ++vv) row = shift_intra(tw, row, fact.ell, n_z);
            for (unsigned u = 0; u < fact.degrees[i]; ++u) {
                std::copy(row.begin(), row.end(), code.genmat.row(r));
                ++r;
                row = shift_inter(row, fact.ell, n_z);
            }
        }
    }
    require(r == dim, Errc::verification_failed, "row count mismatch");
    require(mat_rank(tw, code.genmat) == dim, Errc::verification_failed,
            "generator matrix is not full rank");
    return code;
}

DefiningSet csc_defining_set(const CscCode& code) {
    const Tower& tw = *code.tw;
    require(code.n_z == tw.m(), Errc::requires_n_equals_m, "defining sets need N = m");
    const auto& view = tw.view(tw.deg_fq(), tw.big_degree());
    const unsigned m = tw.m();
    DefiningSet ds;
    for (std::size_t i = 0; i < code.fact.reps.size(); ++i) {
        const SkewPoly& gi = code.comp_gen[i];
        LinearizedPoly lin = to_linearized(gi);
        // kernel of the F_q-linear map beta -> lin(beta) on F_{q^m}
        Mat mt(m, m);
        std::vector<Felem> cds(m);
        for (unsigned j = 0; j < m; ++j) {
            Felem img = lin_evaluate(tw, lin, view.basis[j]);
            tw.coords(view, img, cds.data());
            for (unsigned h = 0; h < m; ++h) mt.at(h, j) = cds[h];
        }
        Mat ker = right_kernel(tw, mt);
        DefiningSet::Entry entry;
        entry.rep = code.fact.reps[i];
        for (unsigned kr = 0; kr < ker.rows; ++kr)
            entry.basis.push_back(tw.from_coords(view, ker.row(kr)));
        ds.at.push_back(std::move(entry));
    }
    return ds;
}

unsigned dimension_from_defining_set(const Tower& tw, const DefiningSet& ds,
                                     const CycFactorization& fact) {
    require(ds.at.size() == fact.reps.size(), Errc::component_count_mismatch,
            "defining set / factorization mismatch");
    unsigned n = fact.ell * tw.m();
    unsigned acc = 0;
    for (std::size_t i = 0; i < ds.at.size(); ++i)
        acc += fact.degrees[i] * static_cast<unsigned>(ds.at[i].basis.size());
    return n - acc;
}

CscCode largest_csc_from_root_pairs(const Tower& tw, const CycFactorization& fact,
                                    const std::vector<RootPair>& pairs) {
    const unsigned t = static_cast<unsigned>(fact.reps.size());
    const unsigned m = tw.m(), s = tw.s();
    std::vector<std::vector<Felem>> roots(t);
    for (const auto& pr : pairs) {
        require(pr.beta != 0, Errc::zero_beta, "root pair with beta = 0");
        unsigned expo = pr.exponent % fact.ell;
        // locate the coset and the Frobenius position h with rep*(q0^m)^h = expo
        bool found = false;
        for (unsigned i = 0; i < t && !found; ++i) {
            const auto& coset = fact.cosets[i];
            for (unsigned h = 0; h < coset.size(); ++h) {
                if (coset[h] != expo) continue;
                // (a^{rep q0^{hm}}, beta) in T_C  <=>  (a^{rep}, beta^{q0^{-hm}}) in T_C
                long back = static_cast<long>(m) * ((s - (h % s)) % s);
                roots[i].push_back(tw.frob_q0(pr.beta, back));
                found = true;
                break;
            }
        }
        require(found, Errc::not_root_of_unity, "exponent not in any coset");
    }
    std::vector<SkewPoly> gens(t);
    for (unsigned i = 0; i < t; ++i) {
        require(tw.s() % fact.degrees[i] == 0, Errc::assumption_violated,
                "coset degree must divide s");
        gens[i] = minimal_linearized_poly(tw, roots[i], fact.degrees[i]);
    }
    return csc_from_components(tw, fact, std::move(gens), m);
}

EvalComponent evaluation_component(const CscCode& code, Felem a) {
    const Tower& tw = *code.tw;
    require(tw.pow(a, code.ell) == 1, Errc::not_root_of_unity, "a^ell != 1");
    unsigned expo = 0;
    bool found = false;
    for (unsigned j = 0; j < code.ell; ++j)
        if (tw.pow(code.fact.a, j) == a) {
            expo = j;
            found = true;
            break;
        }
    require(found, Errc::not_root_of_unity, "a is not a power of the primitive root");
    EvalComponent out;
    out.gen = ev_partial_z(tw, a, code.gen);  // unreduced, so k_i = 0 gives z^N - 1
    for (unsigned i = 0; i < code.fact.cosets.size(); ++i)
        for (unsigned h = 0; h < code.fact.cosets[i].size(); ++h)
            if (code.fact.cosets[i][h] == expo) out.coset = i;
    out.dim_over_f = code.fact.degrees[out.coset] * code.comp_dim[out.coset];
    return out;
}

std::string csc_to_json(const CscCode& code) {
    const Tower& tw = *code.tw;
    nlohmann::json j;
    j["kind"] = "csc";
    j["tower"] = tw.to_text();
    j["ell"] = code.ell;
    j["N"] = code.n_z;
    auto comps = nlohmann::json::array();
    for (std::size_t i = 0; i < code.fact.reps.size(); ++i) {
        nlohmann::json c;
        c["coset"] = code.fact.reps[i];
        auto g = nlohmann::json::array();
        for (Felem x : code.comp_gen[i].c) g.push_back(tw.elem_to_text(x));
        c["g"] = g;
        comps.push_back(std::move(c));
    }
    j["components"] = comps;
    return j.dump(2);
}

CscCode csc_from_json(const Tower& tw, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    require(!j.is_discarded(), Errc::parse_error, "bad JSON");
    require(j.value("kind", "csc") == std::string("csc"), Errc::parse_error,
            "not a CSC code record");
    require(j["tower"] == tw.to_text(), Errc::parse_error, "tower mismatch");
    unsigned ell = j["ell"], n_z = j["N"];
    require(ell == tw.ell(), Errc::parse_error, "ell mismatch");
    CycFactorization fact = factor_cyclotomic(tw, tw.primitive_root_of_unity());
    std::vector<SkewPoly> gens(fact.reps.size());
    std::size_t filled = 0;
    for (const auto& c : j["components"]) {
        unsigned rep = c["coset"];
        bool found = false;
        for (std::size_t i = 0; i < fact.reps.size(); ++i)
            if (fact.reps[i] == rep) {
                std::vector<Felem> coeffs;
                for (const auto& g : c["g"]) coeffs.push_back(tw.elem_from_text(g));
                gens[i] = sp_make(std::move(coeffs));
                found = true;
                ++filled;
            }
        require(found, Errc::parse_error, "unknown coset representative");
    }
    require(filled == fact.reps.size(), Errc::parse_error, "missing component");
    return csc_from_components(tw, fact, std::move(gens), n_z);
}

}  // namespace sumrank
