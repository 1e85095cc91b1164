#include "sumrank/decoder.hpp"

#include <algorithm>

namespace sumrank {

namespace {

// Enumerate the row space of genmat over the subfield of degree l_deg; invoke
// visit(codeword) for every codeword including zero, stopping early when visit
// returns true.  Caller checked the budget.
template <typename Visit>
void enumerate_codewords(const Tower& tw, const Mat& genmat, unsigned l_deg, Visit&& visit) {
    const auto& lelems = tw.subfield_elements(l_deg);
    const std::uint64_t lsize = lelems.size();
    const unsigned k = genmat.rows, n = genmat.cols;
    std::vector<Felem> cw(n, 0);
    std::vector<std::uint32_t> idx(k, 0);
    std::uint64_t count = 1;
    for (unsigned r = 0; r < k; ++r) count *= lsize;
    if (visit(cw)) return;
    for (std::uint64_t step = 1; step < count; ++step) {
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
        if (visit(cw)) return;
    }
}

bool fits_budget(std::uint64_t base, unsigned k, std::uint64_t budget) {
    std::uint64_t count = 1;
    for (unsigned r = 0; r < k; ++r) {
        if (count > budget / base) return false;
        count *= base;
    }
    return true;
}

}  // namespace

DecodeResult decode(const SrBchCode& code, const std::vector<Felem>& y, std::uint64_t budget,
                    const FastLrsDecoder* plugin) {
    const Tower& tw = *code.tw;
    const unsigned n = code.n();
    require(y.size() == n, Errc::length_mismatch, "received word length mismatch");
    for (Felem x : y)
        require(tw.in_subfield(x, tw.deg_f()), Errc::invalid_argument,
                "received word has an entry outside F");
    const unsigned t = code.radius();
    const Partition part{tw.ell(), tw.m()};

    DecodeResult res;
    std::vector<Felem> diff(n);

    if (code.parent && fits_budget(tw.field_size(), code.parent->code.genmat.rows, budget)) {
        // parent path: the unique parent codeword within wt_SR radius t, if any
        res.engine = DecodeResult::Engine::parent;
        std::optional<std::vector<Felem>> hit;
        enumerate_codewords(tw, code.parent->code.genmat, tw.big_degree(),
                            [&](const std::vector<Felem>& cw) {
                                for (unsigned j = 0; j < n; ++j) diff[j] = tw.sub(y[j], cw[j]);
                                if (sum_rank_weight(tw, diff, part, ext_q(tw)) <= t) hit = cw;
                                return hit.has_value();
                            });
        if (!hit) {
            res.failure = DecodeResult::Failure::radius_exceeded;
            return res;
        }
        bool in_f = std::all_of(hit->begin(), hit->end(),
                                [&](Felem x) { return tw.in_subfield(x, tw.deg_f()); });
        if (!in_f || !in_row_space(tw, code.genmat, *hit)) {
            // a parent codeword within radius t exists but is not an SR-BCH word,
            // so no SR-BCH codeword can be within radius t (uniqueness in the parent)
            res.failure = DecodeResult::Failure::radius_exceeded;
            return res;
        }
        for (unsigned j = 0; j < n; ++j) diff[j] = tw.sub(y[j], (*hit)[j]);
        unsigned w0 = sum_rank_weight(tw, diff, part, ext_q0(tw));
        if (w0 > t) {
            // within wt_SR radius but outside wt^0_SR radius; by uniqueness in the
            // parent no other SR-BCH codeword can be within wt^0_SR radius either
            res.failure = DecodeResult::Failure::radius_exceeded;
            return res;
        }
        res.ok = true;
        res.codeword = std::move(*hit);
        res.error_weight = w0;
        return res;
    }

    if (code.dim == 0 || fits_budget(tw.f_size(), code.genmat.rows, budget)) {
        res.engine = DecodeResult::Engine::direct;
        std::optional<std::vector<Felem>> hit;
        unsigned hit_weight = 0;
        enumerate_codewords(tw, code.genmat, tw.deg_f(), [&](const std::vector<Felem>& cw) {
            for (unsigned j = 0; j < n; ++j) diff[j] = tw.sub(y[j], cw[j]);
            unsigned w = sum_rank_weight(tw, diff, part, ext_q0(tw));
            if (w <= t) {
                hit = cw;
                hit_weight = w;
            }
            return hit.has_value();
        });
        if (!hit) {
            res.failure = DecodeResult::Failure::radius_exceeded;
            return res;
        }
        res.ok = true;
        res.codeword = std::move(*hit);
        res.error_weight = hit_weight;
        return res;
    }

    if (plugin && *plugin) {
        res.engine = DecodeResult::Engine::plugin;
        auto hit = (*plugin)(code, y, t);
        if (!hit) {
            res.failure = DecodeResult::Failure::radius_exceeded;
            return res;
        }
        for (unsigned j = 0; j < n; ++j) diff[j] = tw.sub(y[j], (*hit)[j]);
        bool in_f = std::all_of(hit->begin(), hit->end(),
                                [&](Felem x) { return tw.in_subfield(x, tw.deg_f()); });
        if (!in_f || !in_row_space(tw, code.genmat, *hit)) {
            res.failure = DecodeResult::Failure::radius_exceeded;
            return res;
        }
        unsigned w0 = sum_rank_weight(tw, diff, part, ext_q0(tw));
        if (w0 > t) {
            res.failure = DecodeResult::Failure::radius_exceeded;
            return res;
        }
        res.ok = true;
        res.codeword = std::move(*hit);
        res.error_weight = w0;
        return res;
    }

    raise(Errc::budget_exceeded, "no decoding engine fits the budget and no plugin registered");
}

std::vector<Felem> sample_error(const Tower& tw, Partition part, unsigned target_weight,
                                std::mt19937_64& rng) {
    const unsigned rows = tw.m(), n_z = part.n_z;
    const unsigned cap = std::min(rows, n_z);
    require(target_weight <= part.ell * cap, Errc::weight_infeasible,
            "target weight exceeds ell*min(m,N)");
    // split the weight across blocks
    std::vector<unsigned> w(part.ell, 0);
    unsigned remaining = target_weight;
    for (unsigned b = 0; b < part.ell; ++b) {
        unsigned later_cap = (part.ell - 1 - b) * cap;
        unsigned lo = remaining > later_cap ? remaining - later_cap : 0;
        unsigned hi = std::min(cap, remaining);
        std::uniform_int_distribution<unsigned> dist(lo, hi);
        w[b] = dist(rng);
        remaining -= w[b];
    }

    const auto& kelems = tw.subfield_elements(tw.e());
    std::uniform_int_distribution<std::size_t> kdist(0, kelems.size() - 1);
    const Extension ext = ext_q0(tw);
    std::vector<Mat> blocks;
    for (unsigned b = 0; b < part.ell; ++b) {
        Mat mat(rows, n_z);
        if (w[b] > 0) {
            // rank-w product of a full-column-rank (rows x w) and a
            // full-row-rank (w x N) random matrix over F_{q0}
            Mat left(rows, w[b]), right(w[b], n_z);
            do {
                for (auto& x : left.a) x = kelems[kdist(rng)];
            } while (mat_rank(tw, left) != w[b]);
            do {
                for (auto& x : right.a) x = kelems[kdist(rng)];
            } while (mat_rank(tw, right) != w[b]);
            mat = mat_mul(tw, left, right);
        }
        blocks.push_back(std::move(mat));
    }
    std::vector<Felem> err = from_matrices(tw, blocks, part, ext);
    require(sum_rank_weight(tw, err, part, ext) == target_weight, Errc::verification_failed,
            "sampled error has wrong weight");
    return err;
}

}  // namespace sumrank
