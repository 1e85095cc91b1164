#include "sumrank/srbch.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "sumrank/sum_rank.hpp"

namespace sumrank {

CosetTable coset_table(unsigned ell, std::uint64_t multiplier) {
    CosetTable out;
    out.ell = ell;
    std::vector<bool> seen(ell, false);
    const std::uint64_t mult = multiplier % ell;
    for (unsigned j = 0; j < ell; ++j) {
        if (seen[j]) continue;
        std::vector<unsigned> coset;
        unsigned cur = j;
        do {
            coset.push_back(cur);
            seen[cur] = true;
            cur = static_cast<unsigned>(cur * mult % ell);
        } while (cur != j);
        out.cosets.push_back(std::move(coset));
    }
    return out;
}

CosetTable coset_table(const CycFactorization& fact) {
    CosetTable out;
    out.ell = fact.ell;
    out.cosets = fact.cosets;
    return out;
}

long bound_eq33(const CosetTable& cosets, unsigned b, unsigned delta, unsigned m, unsigned s) {
    const unsigned ell = cosets.ell;
    std::vector<unsigned> coset_of(ell, 0);
    for (unsigned i = 0; i < cosets.cosets.size(); ++i)
        for (unsigned expo : cosets.cosets[i]) coset_of[expo] = i;
    std::vector<unsigned> k(cosets.cosets.size(), 0);
    for (unsigned j = 0; j + 2 <= delta; ++j) ++k[coset_of[(b + j) % ell]];
    long acc = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        long di = static_cast<long>(cosets.cosets[i].size());
        acc += std::min<long>(di * m, static_cast<long>(s) * k[i]);
    }
    return static_cast<long>(ell) * m - acc;
}

long bound_delsarte(unsigned n, unsigned s, unsigned delta) {
    return static_cast<long>(n) - static_cast<long>(s) * (delta - 1);
}

DefiningStructure srbch_defining_structure(const Tower& tw, const CycFactorization& fact,
                                           Felem beta, unsigned b, unsigned delta) {
    const unsigned ell = fact.ell, m = tw.m(), s = tw.s();
    require(delta >= 2 && delta <= ell * m, Errc::assumption_violated, "need 2 <= delta <= n");
    std::vector<unsigned> coset_of(ell, 0);
    std::vector<unsigned> pos_of(ell, 0);  // h with rep*(q0^m)^h = exponent
    for (unsigned i = 0; i < fact.cosets.size(); ++i)
        for (unsigned h = 0; h < fact.cosets[i].size(); ++h) {
            coset_of[fact.cosets[i][h]] = i;
            pos_of[fact.cosets[i][h]] = h;
        }

    DefiningStructure out;
    const auto& fq = tw.subfield_elements(tw.deg_fq());
    unsigned dim_drop = 0;
    for (unsigned i = 0; i < fact.cosets.size(); ++i) {
        DefiningStructure::Comp comp;
        comp.coset = i;
        for (unsigned j = 0; j + 2 <= delta; ++j)
            if (coset_of[(b + j) % ell] == i) comp.j_set.push_back(j);
        if (comp.j_set.empty()) {
            out.comps.push_back(std::move(comp));
            continue;
        }
        const unsigned di = fact.degrees[i];
        require(s % di == 0, Errc::assumption_violated, "coset degree must divide s");
        comp.j_tilde = comp.j_set.front();
        const unsigned rep_exp = (b + comp.j_tilde) % ell;
        // solve b + j_tilde = (b + j_lambda) q0^{h m} (mod ell) with 0 <= h < d_i
        for (unsigned j : comp.j_set) {
            unsigned expo = (b + j) % ell;
            unsigned h = (pos_of[rep_exp] + di - pos_of[expo]) % di;
            // verify the congruence by walking the coset
            std::uint64_t mult = 1, q0m = 1;
            for (unsigned kk = 0; kk < m; ++kk) q0m = q0m * (tw.q0() % ell) % ell;
            for (unsigned kk = 0; kk < h; ++kk) mult = mult * q0m % ell;
            require(static_cast<unsigned>(expo * mult % ell) == rep_exp,
                    Errc::verification_failed, "coset congruence failed");
            comp.h.push_back(h);
        }
        // V_i = <beta^{q0^v} : v = s j_lambda + m (u d_i + h_lambda) mod sm>_{F_q}
        std::vector<unsigned> vs;
        for (std::size_t lam = 0; lam < comp.j_set.size(); ++lam)
            for (unsigned u = 0; u < s / di; ++u)
                vs.push_back((s * comp.j_set[lam] + m * (u * di + comp.h[lam])) % (s * m));
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        std::vector<bool> in_span(tw.field_size(), false);
        in_span[0] = true;
        std::vector<Felem> span{0};
        for (unsigned v : vs) {
            Felem w = tw.frob_q0(beta, static_cast<long>(v));
            if (in_span[w]) continue;
            comp.v_basis.push_back(w);
            const std::size_t old = span.size();
            for (std::size_t x = 0; x < old; ++x)
                for (std::size_t ci = 1; ci < fq.size(); ++ci) {
                    Felem y = tw.add(span[x], tw.mul(fq[ci], w));
                    if (!in_span[y]) {
                        in_span[y] = true;
                        span.push_back(y);
                    }
                }
        }
        dim_drop += fact.degrees[i] * static_cast<unsigned>(comp.v_basis.size());
        out.comps.push_back(std::move(comp));
    }
    out.exact_dim = ell * m - dim_drop;
    return out;
}

Mat subfield_subcode(const Tower& tw, const Mat& parity) {
    const unsigned s = tw.s();
    const auto& view = tw.view(tw.deg_f(), tw.big_degree());
    Mat expanded(parity.rows * s, parity.cols);
    std::vector<Felem> cds(s);
    for (unsigned r = 0; r < parity.rows; ++r)
        for (unsigned j = 0; j < parity.cols; ++j) {
            tw.coords(view, parity.at(r, j), cds.data());
            for (unsigned t = 0; t < s; ++t) expanded.at(r * s + t, j) = cds[t];
        }
    Mat kernel = right_kernel(tw, expanded);
    for (Felem x : kernel.a)
        require(tw.in_subfield(x, tw.deg_f()), Errc::verification_failed,
                "subfield subcode row has an entry outside F");
    return kernel;
}

SrBchCode srbch_construct(const Tower& tw, unsigned b, unsigned delta) {
    const unsigned ell = tw.ell(), m = tw.m();
    require(std::gcd(ell, m) == 1u, Errc::assumption_violated, "gcd(ell, m) must be 1");
    require(delta >= 2 && delta <= ell * m, Errc::assumption_violated, "need 2 <= delta <= n");

    SrBchCode code;
    code.tw = &tw;
    code.b = b;
    code.delta = delta;
    code.a = tw.primitive_root_of_unity();
    code.beta = tw.normal_element();

    LrsCode primal = csc_lrs(tw, code.a, code.beta, b, delta - 1);
    code.parity = primal.genmat;
    code.genmat = subfield_subcode(tw, code.parity);
    try {
        code.parent = dual_csc_lrs(tw, primal);
    } catch (const Error& err) {
        if (err.code() != Errc::verification_failed) throw;
        code.parent.reset();
    }

    CycFactorization fact = factor_cyclotomic(tw, code.a);
    code.structure = srbch_defining_structure(tw, fact, code.beta, b, delta);
    require(code.structure.exact_dim == code.genmat.rows, Errc::cross_check_mismatch,
            "structure dimension != subfield subcode rank");
    code.dim = code.structure.exact_dim;

    code.singleton = static_cast<long>(singleton_rhs(code.n(), delta));
    code.eq33 = bound_eq33(coset_table(fact), b, delta, m, tw.s());
    code.delsarte = bound_delsarte(code.n(), tw.s(), delta);
    return code;
}

std::vector<TableRow> generate_table(const Tower& tw,
                                     std::vector<std::pair<unsigned, unsigned>> rows,
                                     bool with_exact, unsigned jobs) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::vector<TableRow> out(rows.size());
    CosetTable cosets;
    {
        std::uint64_t q0m = 1;
        for (unsigned k = 0; k < tw.m(); ++k) q0m = q0m * (tw.q0() % tw.ell()) % tw.ell();
        cosets = coset_table(tw.ell(), q0m);
    }
    const unsigned n = tw.ell() * tw.m();
    auto compute = [&](std::size_t idx) {
        auto [delta, b] = rows[idx];
        TableRow row;
        row.delta = delta;
        row.b = b;
        row.singleton = static_cast<long>(singleton_rhs(n, delta));
        row.eq33 = bound_eq33(cosets, b, delta, tw.m(), tw.s());
        row.delsarte = bound_delsarte(n, tw.s(), delta);
        row.beats_delsarte = row.eq33 > row.delsarte;
        if (with_exact) row.exact_dim = srbch_construct(tw, b, delta).dim;
        out[idx] = row;
    };
    if (jobs <= 1 || rows.size() <= 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) compute(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1))
                compute(i);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, rows.size()); ++t)
            pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

std::vector<std::pair<unsigned, unsigned>> preset_rows(unsigned s) {
    std::vector<unsigned> deltas;
    switch (s) {
        case 1: deltas = {2}; break;
        case 2: deltas = {2, 3}; break;
        case 3: deltas = {2, 3, 4, 5, 6, 7}; break;
        case 4: deltas = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14}; break;
        case 5: deltas = {2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 18, 22, 26, 30}; break;
        case 6:
        case 7: deltas = {2, 3, 4, 5, 6, 7, 10, 14, 22, 30, 38, 46, 54, 62}; break;
        default:
            raise(Errc::invalid_argument, "preset defined for s = 1..7");
    }
    std::vector<std::pair<unsigned, unsigned>> rows;
    for (unsigned d : deltas)
        for (unsigned b : {0u, 1u}) rows.emplace_back(d, b);
    return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::string out = "delta,b,singleton,eq33,delsarte,exact_dim,beats_delsarte\n";
    for (const auto& r : rows) {
        out += std::to_string(r.delta) + ',' + std::to_string(r.b) + ',' +
               std::to_string(r.singleton) + ',' + std::to_string(r.eq33) + ',' +
               std::to_string(r.delsarte) + ',';
        if (r.exact_dim) out += std::to_string(*r.exact_dim);
        out += ',';
        out += r.beats_delsarte ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string srbch_to_json(const SrBchCode& code) {
    const Tower& tw = *code.tw;
    nlohmann::json j;
    j["kind"] = "srbch";
    j["tower"] = tw.to_text();
    j["b"] = code.b;
    j["delta"] = code.delta;
    j["a"] = tw.elem_to_text(code.a);
    j["beta"] = tw.elem_to_text(code.beta);
    j["dim"] = code.dim;
    j["bounds"] = {{"singleton", code.singleton}, {"eq33", code.eq33},
                   {"delsarte", code.delsarte}};
    auto mat = nlohmann::json::array();
    for (Felem x : code.genmat.a) mat.push_back(tw.elem_to_text(x));
    j["genmat"] = {{"rows", code.genmat.rows}, {"cols", code.genmat.cols}, {"data", mat}};
    return j.dump(2);
}

SrBchCode srbch_from_json(const Tower& tw, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    require(!j.is_discarded(), Errc::parse_error, "bad JSON");
    require(j.value("kind", "") == std::string("srbch"), Errc::parse_error,
            "not an SR-BCH code record");
    require(j["tower"] == tw.to_text(), Errc::parse_error, "tower mismatch");
    SrBchCode code = srbch_construct(tw, j["b"].get<unsigned>(), j["delta"].get<unsigned>());
    require(j["dim"].get<unsigned>() == code.dim, Errc::parse_error,
            "stored dimension mismatch");
    return code;
}

}  // namespace sumrank
