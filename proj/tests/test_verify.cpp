#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arn/verify.hpp"

using namespace arn;

TEST_CASE("catalog integrity on a small window") {
    for (auto [r, N] : {std::pair{1, 2}, {2, 3}}) {
        WindowContext ctx(make_arn_shared(r, N), {-2, 2});
        WindowReport rep = check_catalog(ctx);
        CHECK(rep.verdict == "pass");
    }
}

TEST_CASE("hom dimension table obeys the predicted bounds") {
    WindowContext c1(make_arn_shared(1, 3), {-1, 1});
    WindowReport r1 = check_homdim(c1);
    CHECK(r1.verdict == "pass");
    CHECK(r1.stats["max-dim"] == 2);
    CHECK(r1.table.at("X[0,1] -> X[0,1]") == 2);
    CHECK(r1.table.at("X[0,1] -> L[0,1;a=1]") <= 1);

    WindowContext c2(make_arn_shared(2, 3), {-1, 1});
    WindowReport r2 = check_homdim(c2);
    CHECK(r2.verdict == "pass");
    CHECK(r2.stats["max-dim"] == 1);
}

TEST_CASE("spanning closure passes and the sabotage variant fails") {
    for (auto [r, N] : {std::pair{1, 2}, {2, 3}}) {
        WindowContext ctx(make_arn_shared(r, N), {-2, 2});
        WindowReport rep = check_spanning(ctx);
        CHECK(rep.verdict == "pass");
        CHECK(rep.stats["core-pairs"] > 0);
        WindowReport sab = check_spanning(ctx, true);
        CHECK(sab.verdict == "fail");
        CHECK(sab.witnesses.count("uncovered-pair") == 1);
    }
}

TEST_CASE("almost-vanishing of the radical endomorphism") {
    WindowContext ctx(make_arn_shared(1, 2), {-2, 3});
    WindowReport rep = check_almost_vanishing(ctx, 0, 1);
    CHECK(rep.verdict == "pass");
    CHECK_THROWS_AS(check_almost_vanishing(ctx, -2, 0), std::invalid_argument);
}

TEST_CASE("canonical cone triangles are exact") {
    auto A = make_arn_shared(1, 2);
    ProjComplex X = realize(parse_catalog_id("X[0,1]", *A), A);
    ProjComplex Y = realize(parse_catalog_id("X[0,2]", *A), A);
    ChainMap f = identity_overlap(realize(parse_catalog_id("X[1,2]", *A), A), Y);
    auto ct = cone(f);
    // The defining triangle of any cone: (f, inc, proj).
    HomSpace dummy(ct.cone, ct.cone);
    ChainMap g = ct.inc;
    TriangleVerdict v = check_triangle(f, g, ct.proj, 7);
    CHECK(v.verdict == "exact");
}

TEST_CASE("proof triangles are exact only at lambda = 1") {
    for (auto [r, N] : {std::pair{1, 2}, {2, 3}}) {
        auto A = make_arn_shared(r, N);
        std::vector<std::pair<int, std::pair<int, int>>> smn = {{0, {0, 1}}, {0, {-1, 1}}};
        WindowReport rep = check_rigidity(A, smn, {1, 2, 3}, 11);
        CHECK(rep.verdict == "pass");
        for (auto& [k, v] : rep.witnesses) {
            if (k.find("lambda=1") != std::string::npos)
                CHECK(v == "exact");
            else
                CHECK(v == "non-exact");
        }
    }
}

TEST_CASE("a zero connecting map yields a non-exact triangle") {
    auto A = make_arn_shared(1, 2);
    ProofTriangle t = proof_triangle(0, 0, 1, A);
    TriangleVerdict v = check_triangle(t.inc, t.proj, t.conn.scaled(0), 3);
    CHECK(v.verdict == "non-exact");
}

TEST_CASE("window center dimensions") {
    // r = 1, N = 2, window [-2,2]: k plus one radical direction per X object.
    WindowContext ctx(make_arn_shared(1, 2), {-2, 2});
    WindowCenter wc = window_center(ctx);
    long long xcount = 0;
    for (auto& id : ctx.objects())
        if (id.fam == Family::X) ++xcount;
    CHECK(wc.dim() == 1 + xcount);
    CHECK(xcount == 15);
    // The triangle center collapses each orbit segment to one parameter.
    WindowCenter tc = window_triangle_center(ctx);
    CHECK(tc.dim() == 1 + 5);

    WindowReport rep = check_center(ctx);
    CHECK(rep.verdict == "pass");

    // r = 2, N = 3: both centers are just k at window scale.
    WindowContext ctx2(make_arn_shared(2, 3), {-2, 2});
    CHECK(window_center(ctx2).dim() == 1);
    CHECK(window_triangle_center(ctx2).dim() == 1);
    CHECK(check_center(ctx2).verdict == "pass");
}

TEST_CASE("orbit conjugation and freeness") {
    WindowContext ctx(make_arn_shared(1, 2), {-2, 2});
    WindowReport rep = check_orbit(ctx);
    CHECK(rep.verdict == "pass");
    CHECK(rep.stats["x-objects"] == 15);
}
