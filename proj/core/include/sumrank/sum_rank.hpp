#pragma once

#include <cstdint>
#include <vector>

#include "mat.hpp"

namespace sumrank {

/// Length partition n = ell * N: ell blocks of N coordinates each.
struct Partition {
    unsigned ell = 1, n_z = 1;  // n_z = N
    unsigned n() const { return ell * n_z; }
};

/// Field extension K <= L the rank is measured over, as degrees over F_p.
struct Extension {
    unsigned k_deg = 1, l_deg = 1;
    unsigned rows() const { return l_deg / k_deg; }
};

/// wt_SR for F_q <= F_{q^m}.
Extension ext_q(const Tower& tw);
/// wt^0_SR for F_{q0} <= F.
Extension ext_q0(const Tower& tw);

/// Sum over the blocks of the K-dimension of the span of the block entries.
unsigned sum_rank_weight(const Tower& tw, const std::vector<Felem>& v, Partition part,
                         Extension ext);

/// Per-block coordinate matrices ((l_deg/k_deg) x N, entries in K).
std::vector<Mat> to_matrices(const Tower& tw, const std::vector<Felem>& v, Partition part,
                             Extension ext);
std::vector<Felem> from_matrices(const Tower& tw, const std::vector<Mat>& mats, Partition part,
                                 Extension ext);

constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 22;

/// Minimum sum-rank weight over the nonzero codewords of the row space of genmat,
/// by exhaustive enumeration (linearity reduces distance to weight).
/// Throws budget_exceeded if |L|^k exceeds the budget, invalid_argument if k = 0.
unsigned min_sum_rank_distance_bruteforce(const Tower& tw, const Mat& genmat, Partition part,
                                          Extension ext,
                                          std::uint64_t budget = kDefaultBudget);

/// n - d + 1.
unsigned singleton_rhs(unsigned n, unsigned d);

}  // namespace sumrank
