#include "arcva/linalg.hpp"

namespace arcva::exactpoly {

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    if (m.empty()) return {};
    const std::size_t rows = m.size(), cols = m[0].size();
    Matrix a = m;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        Scalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r || a[k][c].is_zero()) continue;
            Scalar f = a[k][c];
            for (std::size_t j = c; j < cols; ++j) a[k][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> kernel;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(cols);
        v[c] = Scalar(1);
        for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    RowSpace rs(m[0].size());
    for (const auto& row : m) rs.add(row);
    return rs.rank();
}

void RowSpace::reduce(std::vector<Scalar>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = v[pivots_[k]];
        if (c.is_zero()) continue;
        Scalar f = c;
        const auto& row = rows_[k];
        for (std::size_t j = 0; j < ncols_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
}

bool RowSpace::add(std::vector<Scalar> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < ncols_ && v[p].is_zero()) ++p;
    if (p == ncols_) return false;
    Scalar inv = v[p].inverse();
    for (std::size_t j = p; j < ncols_; ++j) v[j] *= inv;
    // keep existing rows reduced against the new pivot
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar f = rows_[k][p];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < ncols_; ++j)
            if (!v[j].is_zero()) rows_[k][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowSpace::contains(std::vector<Scalar> v) const {
    reduce(v);
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace arcva::exactpoly
