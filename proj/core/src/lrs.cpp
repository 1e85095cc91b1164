#include "sumrank/lrs.hpp"

#include <algorithm>
#include <numeric>

#include "sumrank/skew_poly.hpp"

namespace sumrank {

bool pairwise_nonconjugate(const Tower& tw, const std::vector<Felem>& a) {
    const std::uint64_t norm_exp = (tw.field_size() - 1) / (tw.q() - 1);
    std::vector<Felem> norms;
    for (Felem x : a) {
        require(x != 0, Errc::zero_entry, "conjugacy test needs nonzero entries");
        norms.push_back(tw.pow(x, norm_exp));
    }
    for (std::size_t i = 0; i < norms.size(); ++i)
        for (std::size_t j = i + 1; j < norms.size(); ++j)
            if (norms[i] == norms[j]) return false;
    return true;
}

LrsCode lrs_build(const Tower& tw, unsigned k, std::vector<Felem> a,
                  std::vector<std::vector<Felem>> b) {
    require(!a.empty() && a.size() == b.size(), Errc::length_mismatch,
            "need one basis per evaluation point");
    const unsigned ell = static_cast<unsigned>(a.size());
    const unsigned n_z = static_cast<unsigned>(b[0].size());
    require(n_z >= 1 && n_z <= tw.m(), Errc::invalid_argument, "need 1 <= N <= m");
    require(ell <= tw.q() - 1, Errc::invalid_argument, "need ell <= q-1");
    require(k >= 1 && k <= ell * n_z, Errc::invalid_argument, "need 1 <= k <= n");
    require(pairwise_nonconjugate(tw, a), Errc::conjugate_evaluation_points,
            "evaluation points must be pairwise non-conjugate");
    // each B_i must be F_q-linearly independent
    const auto& view = tw.view(tw.deg_fq(), tw.big_degree());
    for (const auto& bi : b) {
        require(bi.size() == n_z, Errc::length_mismatch, "basis size mismatch");
        Mat mt(tw.m(), n_z);
        std::vector<Felem> cds(tw.m());
        for (unsigned j = 0; j < n_z; ++j) {
            tw.coords(view, bi[j], cds.data());
            for (unsigned h = 0; h < tw.m(); ++h) mt.at(h, j) = cds[h];
        }
        require(mat_rank(tw, mt) == n_z, Errc::dependent_basis,
                "basis entries are F_q-dependent");
    }

    LrsCode code;
    code.k = k;
    code.ell = ell;
    code.n_z = n_z;
    code.a = std::move(a);
    code.b = std::move(b);
    code.genmat = Mat(k, ell * n_z);
    for (unsigned i = 0; i < ell; ++i) {
        Felem norm = 1;  // N_r(a_i)
        for (unsigned r = 0; r < k; ++r) {
            for (unsigned j = 0; j < n_z; ++j)
                code.genmat.at(r, i * n_z + j) =
                    tw.mul(tw.sigma(code.b[i][j], static_cast<long>(r)), norm);
            norm = tw.mul(tw.sigma(code.a[i], static_cast<long>(r)), norm);
        }
    }
    require(mat_rank(tw, code.genmat) == k, Errc::verification_failed,
            "generator matrix is not full rank");
    return code;
}

LrsCode csc_lrs(const Tower& tw, Felem a, Felem beta, unsigned b_shift, unsigned k) {
    const unsigned ell = tw.ell(), m = tw.m();
    require(std::gcd(ell, m) == 1u, Errc::assumption_violated, "gcd(ell, m) must be 1");
    require(std::gcd(static_cast<std::uint64_t>(ell), tw.q()) == 1u, Errc::assumption_violated,
            "gcd(ell, q) must be 1");
    require(tw.pow(a, ell) == 1 && (ell == 1 || tw.mul_order(a) == ell), Errc::assumption_violated,
            "a must be a primitive ell-th root of unity");
    require(tw.is_normal(beta), Errc::assumption_violated, "beta must be normal");
    require(k >= 1 && k <= ell * m, Errc::assumption_violated, "need 1 <= k <= n");
    std::vector<Felem> pts(ell);
    std::vector<std::vector<Felem>> bases(ell, std::vector<Felem>(m));
    for (unsigned i = 0; i < ell; ++i) {
        pts[i] = tw.pow(a, i);
        Felem scale = tw.pow(a, static_cast<std::uint64_t>(b_shift) * i % (tw.q() - 1));
        for (unsigned j = 0; j < m; ++j)
            bases[i][j] = tw.mul(tw.sigma(beta, static_cast<long>(j)), scale);
    }
    LrsCode code = lrs_build(tw, k, std::move(pts), std::move(bases));
    code.b_shift = static_cast<int>(b_shift);
    return code;
}

LrsDual dual_csc_lrs(const Tower& tw, const LrsCode& primal) {
    const unsigned ell = primal.ell, m = primal.n_z, n = primal.n();
    require(m == tw.m(), Errc::requires_n_equals_m, "dual construction needs N = m");
    require(primal.k < n, Errc::invalid_argument, "primal dimension must be < n");

    // one-dimensional dual of the full-length code C^sigma_{n-1}(A, B)
    LrsCode full = lrs_build(tw, n - 1, primal.a, primal.b);
    Mat ker = right_kernel(tw, full.genmat);
    require(ker.rows == 1, Errc::verification_failed, "full-length dual is not one-dimensional");
    const Felem* alpha = ker.row(0);
    for (unsigned i = 0; i < n; ++i)
        require(alpha[i] != 0, Errc::verification_failed, "dual vector has a zero coordinate");

    // the dual of a CSC code is CSC: both shifts act on alpha by scalars
    Felem lambda = tw.mul(tw.sigma(alpha[m - 1], 1), tw.inv(alpha[0]));
    Felem mu_scale = tw.mul(alpha[static_cast<std::size_t>(ell - 1) * m], tw.inv(alpha[0]));
    for (unsigned i = 0; i < ell; ++i)
        for (unsigned j = 0; j < m; ++j) {
            Felem lhs = tw.sigma(alpha[i * m + (j + m - 1) % m], 1);
            require(lhs == tw.mul(lambda, alpha[i * m + j]), Errc::verification_failed,
                    "intra-shift eigenvalue relation failed");
            Felem prev = alpha[static_cast<std::size_t>((i + ell - 1) % ell) * m + j];
            require(prev == tw.mul(mu_scale, alpha[i * m + j]), Errc::verification_failed,
                    "inter-shift eigenvalue relation failed");
        }

    // mu^{-1} = a^c for some c; lambda = sigma(nu)/nu by Hilbert 90
    Felem a = primal.a.size() > 1 ? primal.a[1] : Felem(1);
    unsigned c = 0;
    {
        Felem target = tw.inv(mu_scale);
        bool found = false;
        for (unsigned cc = 0; cc < ell; ++cc)
            if (tw.pow(a, cc) == target) {
                c = cc;
                found = true;
                break;
            }
        require(found, Errc::verification_failed, "inter-shift scalar is not a root of unity");
    }
    Felem nu_elem = 0;
    for (Felem v = 1; v < tw.field_size(); ++v)
        if (tw.mul(tw.sigma(v, 1), tw.inv(v)) == lambda) {
            nu_elem = v;
            break;
        }
    require(nu_elem != 0, Errc::verification_failed, "Hilbert 90 solution not found");

    Felem gamma_tilde = tw.mul(tw.inv(nu_elem), alpha[0]);
    const unsigned delta = primal.k + 1;
    Felem gamma = tw.sigma(gamma_tilde, static_cast<long>(delta) - static_cast<long>(n));

    auto build_dual = [&](unsigned cc, Felem gm) {
        std::vector<std::vector<Felem>> bases(ell, std::vector<Felem>(m));
        for (unsigned i = 0; i < ell; ++i) {
            Felem scale = tw.pow(a, static_cast<std::uint64_t>(cc) * i % ell);
            for (unsigned j = 0; j < m; ++j)
                bases[i][j] = tw.mul(tw.sigma(gm, static_cast<long>(j)), scale);
        }
        return lrs_build(tw, n - primal.k, primal.a, std::move(bases));
    };
    auto orthogonal = [&](const LrsCode& dual) {
        Mat prod = mat_mul(tw, primal.genmat, mat_transpose(dual.genmat));
        return std::all_of(prod.a.begin(), prod.a.end(), [](Felem x) { return x == 0; });
    };

    LrsDual out;
    LrsCode dual = build_dual(c, gamma);
    if (orthogonal(dual)) {
        out.c = c;
        out.gamma = gamma;
        out.code = std::move(dual);
        return out;
    }
    // first verified (c, gamma) pair in canonical search order
    for (unsigned cc = 0; cc < ell; ++cc)
        for (unsigned t = 0; t < m; ++t) {
            Felem gm = tw.sigma(gamma_tilde, static_cast<long>(t));
            LrsCode cand = build_dual(cc, gm);
            if (orthogonal(cand)) {
                out.c = cc;
                out.gamma = gm;
                out.code = std::move(cand);
                return out;
            }
        }
    raise(Errc::verification_failed, "no orthogonal dual of the prescribed shape found");
}

}  // namespace sumrank
