#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arn/mat.hpp"

using namespace arn;

namespace {

Mat from_rows(std::vector<std::vector<long long>> rows, u32 p) {
    Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()), p);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = fp_of(rows[r][c], p);
    return m;
}

Mat random_mat(std::mt19937_64& rng, int rows, int cols, u32 p) {
    Mat m(rows, cols, p);
    std::uniform_int_distribution<u32> d(0, p - 1);
    for (auto& x : m.a) x = d(rng);
    return m;
}

}  // namespace

TEST_CASE("rref identity and zero") {
    Mat I = Mat::identity(2, 5);
    auto [r, piv] = rref(I);
    CHECK(r == I);
    CHECK(piv == std::vector<int>{0, 1});

    Mat z(3, 3, 5);
    auto [rz, pz] = rref(z);
    CHECK(rz == z);
    CHECK(pz.empty());
}

TEST_CASE("rref of a rank-1 matrix over F_5") {
    // Hand row-reduction: [[2,4],[1,2]] -> [[1,2],[0,0]].
    Mat m = from_rows({{2, 4}, {1, 2}}, 5);
    auto [r, piv] = rref(m);
    CHECK(r == from_rows({{1, 2}, {0, 0}}, 5));
    CHECK(piv == std::vector<int>{0});
}

TEST_CASE("kernel basics") {
    CHECK(kernel(Mat::identity(4, 7)).empty());

    Mat z(3, 3, 7);
    auto k = kernel(z);
    REQUIRE(k.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k[i][j] == (i == j ? 1u : 0u));

    // [[1,1]] over F_7: kernel spanned by (1,6), found by hand.
    Mat m = from_rows({{1, 1}}, 7);
    auto k2 = kernel(m);
    REQUIRE(k2.size() == 1);
    u32 s = k2[0][0] == 1 ? 1 : fp_inv(k2[0][0], 7);
    CHECK(fp_mul(k2[0][0], s, 7) == 1);
    CHECK(fp_mul(k2[0][1], s, 7) == 6);
}

TEST_CASE("solve") {
    Mat I = Mat::identity(3, 5);
    Vec b{1, 2, 3};
    auto sol = solve(I, b);
    REQUIRE(sol);
    CHECK(sol->particular == b);
    CHECK(sol->kernel.empty());

    Mat z(2, 2, 5);
    CHECK(!solve(z, Vec{1, 0}));

    // Enumeration over F_5^2 confirms (3,0) + t(1,4) is the full solution set.
    Mat m = from_rows({{1, 1}}, 5);
    auto s2 = solve(m, Vec{3});
    REQUIRE(s2);
    CHECK(s2->particular == Vec{3, 0});
    CHECK(s2->kernel.size() == 1);
    CHECK(mat_apply(m, s2->particular) == Vec{3});
}

TEST_CASE("rank + kernel dimension = columns, and solve re-multiplies") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 50; ++iter) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        Mat m = random_mat(rng, rows, cols, 32003);
        int rk = rank(m);
        CHECK(rk + static_cast<int>(kernel(m).size()) == cols);

        Vec x(cols);
        for (auto& v : x) v = static_cast<u32>(rng() % 32003);
        Vec b = mat_apply(m, x);
        auto sol = solve(m, b);
        REQUIRE(sol);
        CHECK(mat_apply(m, sol->particular) == b);
        for (auto& k : sol->kernel) CHECK(mat_apply(m, k) == Vec(rows, 0));
    }
}

TEST_CASE("RowBasis tracks combinations and rejects dependents") {
    RowBasis rb(3, 7);
    CHECK(rb.insert(Vec{1, 2, 3}) == 0);
    CHECK(rb.insert(Vec{2, 4, 6}) == -1);
    CHECK(rb.dim() == 1);
    CHECK(rb.insert(Vec{0, 1, 1}) == 1);

    Vec coeffs;
    // 3*(1,2,3) + 2*(0,1,1) = (3,8,11) = (3,1,4) mod 7.
    Vec res = rb.reduce(Vec{3, 1, 4}, &coeffs);
    CHECK(res == Vec{0, 0, 0});
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs == Vec{3, 2});
    CHECK(rb.contains(Vec{3, 1, 4}));
    CHECK(!rb.contains(Vec{0, 0, 1}));
}

TEST_CASE("RowBasis matches kernel/rank bookkeeping on random data") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 30; ++iter) {
        int cols = 2 + static_cast<int>(rng() % 5);
        int n = 1 + static_cast<int>(rng() % 7);
        Mat m = random_mat(rng, n, cols, 101);
        RowBasis rb(cols, 101);
        for (int r = 0; r < n; ++r) {
            Vec row(m.a.begin() + r * cols, m.a.begin() + (r + 1) * cols);
            rb.insert(row);
        }
        CHECK(rb.dim() == rank(m));
    }
}
