#include "sumrank/mat.hpp"

namespace sumrank {

Mat mat_mul(const Tower& tw, const Mat& x, const Mat& y) {
    require(x.cols == y.rows, Errc::length_mismatch, "matrix shape mismatch");
    Mat out(x.rows, y.cols);
    for (unsigned i = 0; i < x.rows; ++i)
        for (unsigned k = 0; k < x.cols; ++k) {
            Felem v = x.at(i, k);
            if (!v) continue;
            for (unsigned j = 0; j < y.cols; ++j)
                out.at(i, j) = tw.add(out.at(i, j), tw.mul(v, y.at(k, j)));
        }
    return out;
}

Mat mat_transpose(const Mat& x) {
    Mat out(x.cols, x.rows);
    for (unsigned i = 0; i < x.rows; ++i)
        for (unsigned j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
    return out;
}

Mat mat_stack(const Mat& top, const Mat& bottom) {
    if (top.rows == 0) return bottom;
    if (bottom.rows == 0) return top;
    require(top.cols == bottom.cols, Errc::length_mismatch, "matrix shape mismatch");
    Mat out(top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), out.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), out.a.begin() + top.a.size());
    return out;
}

unsigned row_reduce(const Tower& tw, Mat& x) {
    unsigned rank = 0;
    for (unsigned col = 0; col < x.cols && rank < x.rows; ++col) {
        unsigned pivot = rank;
        while (pivot < x.rows && x.at(pivot, col) == 0) ++pivot;
        if (pivot == x.rows) continue;
        if (pivot != rank)
            for (unsigned j = 0; j < x.cols; ++j) std::swap(x.at(pivot, j), x.at(rank, j));
        Felem piv_inv = tw.inv(x.at(rank, col));
        for (unsigned j = col; j < x.cols; ++j) x.at(rank, j) = tw.mul(x.at(rank, j), piv_inv);
        for (unsigned i = 0; i < x.rows; ++i) {
            if (i == rank) continue;
            Felem f = x.at(i, col);
            if (!f) continue;
            for (unsigned j = col; j < x.cols; ++j)
                x.at(i, j) = tw.sub(x.at(i, j), tw.mul(f, x.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

unsigned mat_rank(const Tower& tw, Mat x) { return row_reduce(tw, x); }

Mat right_kernel(const Tower& tw, const Mat& x) {
    Mat r = x;
    unsigned rank = row_reduce(tw, r);
    std::vector<int> pivot_of_col(x.cols, -1);
    {
        unsigned row = 0;
        for (unsigned col = 0; col < x.cols && row < rank; ++col) {
            if (r.at(row, col) != 0) pivot_of_col[col] = static_cast<int>(row), ++row;
        }
    }
    Mat out(x.cols - rank, x.cols);
    unsigned k = 0;
    for (unsigned col = 0; col < x.cols; ++col) {
        if (pivot_of_col[col] != -1) continue;
        out.at(k, col) = 1;
        for (unsigned c2 = 0; c2 < col; ++c2)
            if (pivot_of_col[c2] != -1)
                out.at(k, c2) = tw.neg(r.at(static_cast<unsigned>(pivot_of_col[c2]), col));
        ++k;
    }
    return out;
}

bool in_row_space(const Tower& tw, const Mat& basis, const std::vector<Felem>& v) {
    require(basis.cols == v.size(), Errc::length_mismatch, "vector length mismatch");
    Mat ext(basis.rows + 1, basis.cols);
    std::copy(basis.a.begin(), basis.a.end(), ext.a.begin());
    std::copy(v.begin(), v.end(), ext.a.begin() + basis.a.size());
    return mat_rank(tw, ext) == mat_rank(tw, basis);
}

bool same_row_space(const Tower& tw, const Mat& x, const Mat& y) {
    if (x.cols != y.cols) return false;
    unsigned rx = mat_rank(tw, x), ry = mat_rank(tw, y);
    if (rx != ry) return false;
    return mat_rank(tw, mat_stack(x, y)) == rx;
}

std::vector<Felem> mat_vec(const Tower& tw, const Mat& x, const std::vector<Felem>& v) {
    require(x.cols == v.size(), Errc::length_mismatch, "vector length mismatch");
    std::vector<Felem> out(x.rows, 0);
    for (unsigned i = 0; i < x.rows; ++i)
        for (unsigned j = 0; j < x.cols; ++j)
            out[i] = tw.add(out[i], tw.mul(x.at(i, j), v[j]));
    return out;
}

std::vector<Felem> vec_mat(const Tower& tw, const std::vector<Felem>& v, const Mat& x) {
    require(x.rows == v.size(), Errc::length_mismatch, "vector length mismatch");
    std::vector<Felem> out(x.cols, 0);
    for (unsigned i = 0; i < x.rows; ++i) {
        if (!v[i]) continue;
        for (unsigned j = 0; j < x.cols; ++j)
            out[j] = tw.add(out[j], tw.mul(v[i], x.at(i, j)));
    }
    return out;
}

}  // namespace sumrank
