#include "arn/mat.hpp"

#include <stdexcept>

namespace arn {

Mat Mat::identity(int n, u32 prime) {
    Mat m(n, n, prime);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % prime;
    return m;
}

std::vector<int> rref_inplace(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
        u32 inv = fp_inv(m.at(row, col), m.p);
        for (int c = col; c < m.cols; ++c) m.at(row, c) = fp_mul(m.at(row, c), inv, m.p);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            u32 f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = fp_sub(m.at(r, c), fp_mul(f, m.at(row, c), m.p), m.p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const Mat& m) {
    Mat c = m;
    return static_cast<int>(rref_inplace(c).size());
}

std::vector<Vec> kernel(const Mat& m) {
    Mat r = m;
    auto pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = fp_neg(r.at(static_cast<int>(i), free), m.p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Solution> solve(const Mat& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("solve: right-hand side has wrong length");
    Mat aug(m.rows, m.cols + 1, m.p);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    auto pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    Vec x(m.cols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
    Mat core(m.rows, m.cols, m.p);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) core.at(r, c) = m.at(r, c);
    return Solution{std::move(x), kernel(core)};
}

Vec mat_apply(const Mat& m, const Vec& x) {
    if (static_cast<int>(x.size()) != m.cols)
        throw std::invalid_argument("mat_apply: vector has wrong length");
    Vec y(m.rows, 0);
    for (int r = 0; r < m.rows; ++r) {
        u64 acc = 0;
        for (int c = 0; c < m.cols; ++c) acc += static_cast<u64>(m.at(r, c)) * x[c];
        y[r] = static_cast<u32>(acc % m.p);
    }
    return y;
}

Vec RowBasis::reduce(Vec v, Vec* coeffs) const {
    if (static_cast<int>(v.size()) != width_)
        throw std::invalid_argument("RowBasis::reduce: wrong width");
    if (coeffs) coeffs->assign(inserted_, 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        u32 f = v[pivot_col_[i]];
        if (f == 0) continue;
        for (int c = 0; c < width_; ++c) v[c] = fp_sub(v[c], fp_mul(f, rows_[i][c], p_), p_);
        if (coeffs)
            for (int j = 0; j < inserted_; ++j)
                (*coeffs)[j] = fp_add((*coeffs)[j], fp_mul(f, combo_[i][j], p_), p_);
    }
    return v;
}

int RowBasis::insert(const Vec& v) {
    Vec combo(inserted_ + 1, 0);
    combo[inserted_] = 1;
    Vec r = v;
    for (auto& row : combo_) row.push_back(0);
    ++inserted_;
    for (size_t i = 0; i < rows_.size(); ++i) {
        u32 f = r[pivot_col_[i]];
        if (f == 0) continue;
        for (int c = 0; c < width_; ++c) r[c] = fp_sub(r[c], fp_mul(f, rows_[i][c], p_), p_);
        for (int j = 0; j < inserted_; ++j)
            combo[j] = fp_sub(combo[j], fp_mul(f, combo_[i][j], p_), p_);
    }
    int piv = -1;
    for (int c = 0; c < width_; ++c)
        if (r[c] != 0) {
            piv = c;
            break;
        }
    if (piv < 0) {
        // Dependent vector: roll back so indices count successful insertions.
        for (auto& row : combo_) row.pop_back();
        --inserted_;
        return -1;
    }
    u32 inv = fp_inv(r[piv], p_);
    for (int c = 0; c < width_; ++c) r[c] = fp_mul(r[c], inv, p_);
    for (int j = 0; j < inserted_; ++j) combo[j] = fp_mul(combo[j], inv, p_);
    // Back-substitute into earlier rows to stay fully reduced.
    for (size_t i = 0; i < rows_.size(); ++i) {
        u32 f = rows_[i][piv];
        if (f == 0) continue;
        for (int c = 0; c < width_; ++c)
            rows_[i][c] = fp_sub(rows_[i][c], fp_mul(f, r[c], p_), p_);
        for (int j = 0; j < inserted_; ++j)
            combo_[i][j] = fp_sub(combo_[i][j], fp_mul(f, combo[j], p_), p_);
    }
    // Keep rows ordered by pivot column.
    size_t pos = 0;
    while (pos < rows_.size() && pivot_col_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    combo_.insert(combo_.begin() + pos, std::move(combo));
    pivot_col_.insert(pivot_col_.begin() + pos, piv);
    return inserted_ - 1;
}

bool RowBasis::contains(const Vec& v) const {
    Vec r = reduce(v);
    for (u32 x : r)
        if (x) return false;
    return true;
}

}  // namespace arn
