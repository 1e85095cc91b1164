#include "sumrank/sum_rank.hpp"

namespace sumrank {

Extension ext_q(const Tower& tw) { return {tw.deg_fq(), tw.big_degree()}; }
Extension ext_q0(const Tower& tw) { return {tw.e(), tw.deg_f()}; }

namespace {

// Rank over K of the block's coordinate matrix, without materializing it:
// Gaussian elimination on the span of the entries, with K-coordinates.
unsigned block_rank(const Tower& tw, const Tower::SubfieldView& view, const Felem* block,
                    unsigned n_z, std::vector<Felem>& scratch) {
    const unsigned rows = view.dim;
    // scratch holds up to rows pivot coordinate-vectors, each of length rows
    unsigned rank = 0;
    for (unsigned j = 0; j < n_z; ++j) {
        if (block[j] == 0) continue;
        Felem cds[64];
        tw.coords(view, block[j], cds);
        {
            // a nonzero element of L always has a nonzero coordinate; all-zero
            // coordinates mean the entry is outside L
            bool any = false;
            for (unsigned i = 0; i < rows; ++i)
                if (cds[i] != 0) {
                    any = true;
                    break;
                }
            require(any, Errc::bad_partition, "entry outside the extension field L");
        }
        // eliminate against existing pivots
        for (unsigned r = 0; r < rank; ++r) {
            const Felem* pv = &scratch[static_cast<std::size_t>(r) * (rows + 1)];
            unsigned lead = static_cast<unsigned>(pv[rows]);
            if (cds[lead] == 0) continue;
            Felem f = cds[lead];  // pivot vectors are normalized to lead coefficient 1
            for (unsigned i = 0; i < rows; ++i) cds[i] = tw.sub(cds[i], tw.mul(f, pv[i]));
        }
        unsigned lead = rows;
        for (unsigned i = 0; i < rows; ++i)
            if (cds[i] != 0) {
                lead = i;
                break;
            }
        if (lead == rows) continue;
        Felem li = tw.inv(cds[lead]);
        Felem* pv = &scratch[static_cast<std::size_t>(rank) * (rows + 1)];
        for (unsigned i = 0; i < rows; ++i) pv[i] = tw.mul(cds[i], li);
        pv[rows] = lead;
        ++rank;
        if (rank == rows) break;
    }
    return rank;
}

}  // namespace

unsigned sum_rank_weight(const Tower& tw, const std::vector<Felem>& v, Partition part,
                         Extension ext) {
    require(v.size() == part.n(), Errc::bad_partition, "vector length must be ell*N");
    require(ext.l_deg % ext.k_deg == 0 && tw.big_degree() % ext.l_deg == 0, Errc::bad_partition,
            "bad extension degrees");
    const auto& view = tw.view(ext.k_deg, ext.l_deg);
    const unsigned rows = view.dim;
    std::vector<Felem> scratch(static_cast<std::size_t>(rows) * (rows + 1));
    unsigned total = 0;
    for (unsigned b = 0; b < part.ell; ++b)
        total += block_rank(tw, view, &v[static_cast<std::size_t>(b) * part.n_z], part.n_z,
                            scratch);
    return total;
}

std::vector<Mat> to_matrices(const Tower& tw, const std::vector<Felem>& v, Partition part,
                             Extension ext) {
    require(v.size() == part.n(), Errc::bad_partition, "vector length must be ell*N");
    const auto& view = tw.view(ext.k_deg, ext.l_deg);
    const unsigned rows = view.dim;
    std::vector<Mat> out;
    out.reserve(part.ell);
    std::vector<Felem> cds(rows);
    for (unsigned b = 0; b < part.ell; ++b) {
        Mat mat(rows, part.n_z);
        for (unsigned j = 0; j < part.n_z; ++j) {
            Felem x = v[static_cast<std::size_t>(b) * part.n_z + j];
            require(tw.in_subfield(x, ext.l_deg), Errc::bad_partition,
                    "entry outside the extension field L");
            tw.coords(view, x, cds.data());
            for (unsigned h = 0; h < rows; ++h) mat.at(h, j) = cds[h];
        }
        out.push_back(std::move(mat));
    }
    return out;
}

std::vector<Felem> from_matrices(const Tower& tw, const std::vector<Mat>& mats, Partition part,
                                 Extension ext) {
    require(mats.size() == part.ell, Errc::bad_partition, "block count mismatch");
    const auto& view = tw.view(ext.k_deg, ext.l_deg);
    const unsigned rows = view.dim;
    std::vector<Felem> v(part.n(), 0);
    std::vector<Felem> cds(rows);
    for (unsigned b = 0; b < part.ell; ++b) {
        require(mats[b].rows == rows && mats[b].cols == part.n_z, Errc::bad_partition,
                "block matrix shape mismatch");
        for (unsigned j = 0; j < part.n_z; ++j) {
            for (unsigned h = 0; h < rows; ++h) cds[h] = mats[b].at(h, j);
            v[static_cast<std::size_t>(b) * part.n_z + j] = tw.from_coords(view, cds.data());
        }
    }
    return v;
}

unsigned min_sum_rank_distance_bruteforce(const Tower& tw, const Mat& genmat, Partition part,
                                          Extension ext, std::uint64_t budget) {
    require(genmat.rows > 0, Errc::invalid_argument,
            "minimum distance needs at least one generator row");
    require(genmat.cols == part.n(), Errc::bad_partition, "generator width must be ell*N");
    const auto& lelems = tw.subfield_elements(ext.l_deg);
    const std::uint64_t lsize = lelems.size();
    // enumeration budget check: lsize^k <= budget
    std::uint64_t count = 1;
    for (unsigned r = 0; r < genmat.rows; ++r) {
        require(count <= budget / lsize, Errc::budget_exceeded,
                "codeword enumeration exceeds the budget");
        count *= lsize;
    }
    for (Felem x : genmat.a)
        require(tw.in_subfield(x, ext.l_deg), Errc::invalid_argument,
                "generator entry outside the extension field L");

    const unsigned k = genmat.rows, n = genmat.cols;
    const auto& view = tw.view(ext.k_deg, ext.l_deg);
    const unsigned rows = view.dim;
    std::vector<Felem> scratch(static_cast<std::size_t>(rows) * (rows + 1));
    std::vector<Felem> cw(n, 0);
    std::vector<std::uint32_t> idx(k, 0);
    unsigned best = n * rows + 1;
    for (std::uint64_t step = 1; step < count; ++step) {
        // odometer over messages in L^k; update the codeword incrementally
        unsigned digit = 0;
        while (idx[digit] + 1 == lsize) {
            Felem delta = tw.sub(lelems[0], lelems[idx[digit]]);
            const Felem* row = genmat.row(digit);
            for (unsigned j = 0; j < n; ++j) cw[j] = tw.add(cw[j], tw.mul(delta, row[j]));
            idx[digit] = 0;
            ++digit;
        }
        Felem delta = tw.sub(lelems[idx[digit] + 1], lelems[idx[digit]]);
        ++idx[digit];
        const Felem* row = genmat.row(digit);
        for (unsigned j = 0; j < n; ++j) cw[j] = tw.add(cw[j], tw.mul(delta, row[j]));

        unsigned w = 0;
        for (unsigned b = 0; b < part.ell && w < best; ++b)
            w += block_rank(tw, view, &cw[static_cast<std::size_t>(b) * part.n_z], part.n_z,
                            scratch);
        if (w < best) best = w;
        if (best == 0) break;  // dependent generator rows; cannot happen for a basis
    }
    return best;
}

unsigned singleton_rhs(unsigned n, unsigned d) {
    require(d >= 1 && d <= n + 1, Errc::invalid_argument, "need 1 <= d <= n+1");
    return n - d + 1;
}

}  // namespace sumrank
