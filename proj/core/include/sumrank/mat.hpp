#pragma once

#include <vector>

#include "gf_tower.hpp"

namespace sumrank {

/// Dense row-major matrix over the ambient field.  Entries of any subfield stay
/// inside that subfield under elimination, so the same routines serve F, F_q and
/// F_{q^m} linear algebra.
struct Mat {
    unsigned rows = 0, cols = 0;
    std::vector<Felem> a;

    Mat() = default;
    Mat(unsigned r, unsigned c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    Felem& at(unsigned r, unsigned c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    Felem at(unsigned r, unsigned c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Felem* row(unsigned r) const { return &a[static_cast<std::size_t>(r) * cols]; }
    Felem* row(unsigned r) { return &a[static_cast<std::size_t>(r) * cols]; }

    bool operator==(const Mat& o) const = default;
};

Mat mat_mul(const Tower& tw, const Mat& x, const Mat& y);
Mat mat_transpose(const Mat& x);
Mat mat_stack(const Mat& top, const Mat& bottom);

/// In-place reduced row echelon form; returns the rank.
unsigned row_reduce(const Tower& tw, Mat& x);
unsigned mat_rank(const Tower& tw, Mat x);

/// Basis (as rows) of { v : x * v^T = 0 }, from the RREF free-variable construction.
Mat right_kernel(const Tower& tw, const Mat& x);

bool in_row_space(const Tower& tw, const Mat& basis, const std::vector<Felem>& v);
bool same_row_space(const Tower& tw, const Mat& x, const Mat& y);

std::vector<Felem> mat_vec(const Tower& tw, const Mat& x, const std::vector<Felem>& v);
/// Row-vector times matrix (message encoding).
std::vector<Felem> vec_mat(const Tower& tw, const std::vector<Felem>& v, const Mat& x);

}  // namespace sumrank
