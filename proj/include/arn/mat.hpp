// Dense matrices over F_p with reduced row echelon form, kernel bases and
// exact linear solves. Matrices here stay small (at most a few hundred
// columns), so a dense representation is deliberate.
#pragma once

#include <optional>
#include <vector>

#include "arn/fp.hpp"

namespace arn {

struct Mat {
    int rows = 0;
    int cols = 0;
    u32 p = kDefaultPrime;
    std::vector<u32> a;  // row-major, size rows*cols

    Mat() = default;
    Mat(int r, int c, u32 prime) : rows(r), cols(c), p(prime), a(static_cast<size_t>(r) * c, 0) {}

    u32& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    u32 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(int n, u32 prime);
    bool operator==(const Mat&) const = default;
};

using Vec = std::vector<u32>;

// In-place Gauss-Jordan; returns the pivot columns in increasing order.
std::vector<int> rref_inplace(Mat& m);

inline std::pair<Mat, std::vector<int>> rref(Mat m) {
    auto piv = rref_inplace(m);
    return {std::move(m), std::move(piv)};
}

int rank(const Mat& m);

// Basis of {v : m v = 0}, one column vector per basis element, produced by
// the standard free-column parametrization of the rref (deterministic).
std::vector<Vec> kernel(const Mat& m);

struct Solution {
    Vec particular;
    std::vector<Vec> kernel;
};

// Exact solve of m x = b; std::nullopt when inconsistent.
std::optional<Solution> solve(const Mat& m, const Vec& b);

Vec mat_apply(const Mat& m, const Vec& x);

// Incremental row space in reduced echelon form. Each inserted vector is
// tracked as a combination of the original insertions, which gives cheap
// repeated "express v in terms of what was inserted" queries.
class RowBasis {
  public:
    RowBasis(int width, u32 prime) : width_(width), p_(prime) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

    // Reduces v against the current basis. Returns the residual and, if
    // coeffs is non-null, the combination of successfully inserted vectors
    // removed from v (indexed by insertion order).
    Vec reduce(Vec v, Vec* coeffs = nullptr) const;

    // Inserts v if independent of the current rows; returns its insertion
    // index, or -1 (and leaves the basis unchanged) if dependent.
    int insert(const Vec& v);

    bool contains(const Vec& v) const;

    const std::vector<Vec>& rows() const { return rows_; }

  private:
    int width_;
    u32 p_;
    std::vector<Vec> rows_;       // reduced echelon rows
    std::vector<Vec> combo_;      // rows_[i] = sum combo_[i][j] * inserted_j
    std::vector<int> pivot_col_;  // pivot column of rows_[i]
    int inserted_ = 0;
};

}  // namespace arn
