#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chebmat/cheb.hpp"
#include "chebmat/closed_forms.hpp"
#include "chebmat/diagrams.hpp"
#include "test_util.hpp"

using namespace chebmat;
using testutil::adj;
using testutil::mat;

namespace {

// Blocks (S, W) of the four block families, in the internal convention.
RectMatrix two_rows_eps1(int m) {
    RectMatrix s(2, m);
    s.set(0, 0, 1);
    s.set(1, 0, 1);
    return s;
}

std::pair<RectMatrix, IntMatrix> blocks_type_d(int m) {
    return {two_rows_eps1(m - 2), adj(DiagramFamily::A, m - 2)};
}

std::pair<RectMatrix, IntMatrix> blocks_type_atilde(int n) {
    RectMatrix s(1, n);
    s.set(0, 0, 1);
    s.set(0, n - 1, 1);
    return {s, adj(DiagramFamily::A, n)};
}

std::pair<RectMatrix, IntMatrix> blocks_type_dtilde(int index) {
    const int m = index - 1;  // W = D_{index-1} reversed
    return {two_rows_eps1(m), reverse_labeling(adj(DiagramFamily::D, m))};
}

std::pair<RectMatrix, IntMatrix> blocks_type_dltilde(int index) {
    const int n = index - 2;  // W = L_n reversed
    return {two_rows_eps1(n), reverse_labeling(adj(DiagramFamily::L, n))};
}

}  // namespace

TEST_CASE("theta sets") {
    auto diag = theta_set(5, 0);
    CHECK(diag.points == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
    CHECK(theta_set(4, 4).points.empty());
    CHECK(theta_set(4, -1).points.empty());
    CHECK(theta_set(3, 1).points ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 3}, {3, 2}});
    CHECK_THROWS_AS(theta_set(3, 4), range_error);
    CHECK_THROWS_AS(theta_set(3, -2), range_error);
}

TEST_CASE("type A closed form") {
    for (int n : {3, 5}) {
        CHECK(type_a_closed(n, 1) == adj(DiagramFamily::A, n));
        CHECK(type_a_closed(n, n).is_zero());
        CHECK(type_a_closed(n, 0).is_identity());
    }
    CHECK(type_a_closed(4, 2) == cheb_eval(adj(DiagramFamily::A, 4), 2));
    for (int n = 2; n <= 12; ++n) {
        ChebContext ctx(adj(DiagramFamily::A, n));
        for (int k = -1; k <= n; ++k) CHECK(type_a_closed(n, k) == ctx.eval(k));
    }
}

TEST_CASE("corner matrices") {
    auto [t1, b1] = corner_matrices(3, 1);
    CHECK(t1 == IntMatrix::unit(3, 0, 0));
    CHECK(b1 == IntMatrix::unit(3, 2, 2));

    auto [t2, b2] = corner_matrices(3, 2);
    CHECK(t2 == mat({{1, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
    CHECK(b2 == reverse_labeling(t2));
    CHECK_THROWS_AS(corner_matrices(3, 0), range_error);
    CHECK_THROWS_AS(corner_matrices(3, 3), range_error);

    // E_11 T_k + A T_k - T_{k-1} = T_{k+1} for k < n-1 (T_0 = 0)
    for (int n : {5, 8}) {
        IntMatrix a = adj(DiagramFamily::A, n);
        IntMatrix e11 = IntMatrix::unit(n, 0, 0);
        for (int k = 1; k + 1 < n - 1; ++k) {
            IntMatrix tk = corner_matrices(n, k).first;
            IntMatrix tkm1 = k == 1 ? IntMatrix::zero(n) : corner_matrices(n, k - 1).first;
            CHECK(e11 * tk + a * tk - tkm1 == corner_matrices(n, k + 1).first);
        }
    }
}

TEST_CASE("type L closed form") {
    for (int n : {2, 3, 4}) {
        CHECK(type_l_closed(n, 2 * n - 1).is_identity());
        CHECK(type_l_closed(n, 2 * n).is_zero());
    }
    CHECK(type_l_closed(3, 2) == cheb_eval(adj(DiagramFamily::L, 3), 2));
    for (int n = 2; n <= 10; ++n) {
        ChebContext ctx(adj(DiagramFamily::L, n));
        for (int k = 0; k <= 2 * n; ++k) CHECK(type_l_closed(n, k) == ctx.eval(k));
    }
    CHECK_THROWS_AS(type_l_closed(3, 7), range_error);
}

TEST_CASE("type Ltilde closed form") {
    CHECK(type_ltilde_closed(2, 1) == mat({{1, 1}, {1, 1}}));
    for (int n : {3, 4, 6}) {
        CHECK(type_ltilde_closed(n, n - 1) == IntMatrix::all_ones(n));
        if (n >= 3)
            CHECK(type_ltilde_closed(n, n - 2) ==
                  IntMatrix::all_ones(n) - IntMatrix::antidiagonal_identity(n));
    }
    for (int n = 2; n <= 10; ++n) {
        ChebContext ctx(adj(DiagramFamily::LTilde, n));
        for (int k = 1; k <= n; ++k) CHECK(type_ltilde_closed(n, k) == ctx.eval(k));
    }
    CHECK_THROWS_AS(type_ltilde_closed(4, 0), range_error);
    CHECK_THROWS_AS(type_ltilde_closed(4, 5), range_error);
}

TEST_CASE("block decomposition") {
    IntMatrix d4 = adj(DiagramFamily::D, 4);
    BlockState st = block_decompose(d4, 2);
    CHECK(st.S == two_rows_eps1(2));
    CHECK(st.W == adj(DiagramFamily::A, 2));
    CHECK(reassemble(st) == d4);

    IntMatrix a4t = adj(DiagramFamily::ATilde, 4);
    // move the extra vertex first: X = [[0, S], [S^t, A_4]] after relabeling
    IntMatrix relabeled(5);
    auto orig = [&](int i) { return i == 0 ? 4 : i - 1; };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) relabeled.set(i, j, a4t.at(orig(i), orig(j)));
    BlockState st2 = block_decompose(relabeled, 1);
    RectMatrix expected_s(1, 4);
    expected_s.set(0, 0, 1);
    expected_s.set(0, 3, 1);
    CHECK(st2.S == expected_s);
    CHECK(st2.W == adj(DiagramFamily::A, 4));

    // rank-one violation: two independent rows
    IntMatrix bad = mat({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK_THROWS_AS(block_decompose(bad, 2), hypothesis_error);
    // nonzero corner
    CHECK_THROWS_AS(block_decompose(adj(DiagramFamily::L, 4), 2), hypothesis_error);
}

TEST_CASE("hsw_step reproduces the full recurrence") {
    for (auto [x, top] : {std::pair{adj(DiagramFamily::D, 4), 2},
                          std::pair{adj(DiagramFamily::D, 6), 2},
                          std::pair{adj(DiagramFamily::DLTilde, 4), 2}}) {
        BlockState st = block_decompose(x, top);
        ChebContext ctx(x);
        for (long k = 1; k <= 24; ++k) {
            CHECK(reassemble(st) == ctx.eval(k));
            st = hsw_step(st);
        }
    }

    // spec'd spot values on D_4: H_2 = SS^t - I_2, H_k = 0 for odd k
    BlockState st = block_decompose(adj(DiagramFamily::D, 4), 2);
    RectMatrix sst = st.S * st.S.transpose();
    RectMatrix id2(2, 2);
    id2.set(0, 0, 1);
    id2.set(1, 1, 1);
    st = hsw_step(st);
    CHECK(st.H == sst - id2);
    for (long k = 3; k <= 7; k += 2) {
        while (st.k < k) st = hsw_step(st);
        CHECK(st.H.is_zero());
    }
}

TEST_CASE("invariants c and lambda_c") {
    // type D blocks: c = 2n; f_{2n}(A_n) = -I makes lambda_c = -1
    for (int m : {4, 5, 6, 7}) {
        auto [s, w] = blocks_type_d(m);
        HswInvariants inv = invariants_c_lambda(s, w, 40);
        CHECK(inv.c == 2 * (m - 2));
        CHECK(inv.lambda_c == -1);
    }
    for (int n : {3, 4, 5, 6}) {
        auto [s, w] = blocks_type_atilde(n);
        HswInvariants inv = invariants_c_lambda(s, w, 40);
        CHECK(inv.c == n - 1);
        CHECK(inv.lambda_c == 1);
    }
    for (int idx : {5, 6, 7}) {
        auto [s, w] = blocks_type_dtilde(idx);
        HswInvariants inv = invariants_c_lambda(s, w, 40);
        CHECK(inv.c == 2 * (idx - 3));
        CHECK(inv.lambda_c == 1);
    }
    for (int idx : {4, 5, 6}) {
        auto [s, w] = blocks_type_dltilde(idx);
        HswInvariants inv = invariants_c_lambda(s, w, 40);
        CHECK(inv.c == 2 * (idx - 2) - 1);
        CHECK(inv.lambda_c == 1);
    }
    // the degenerate DLtilde_3 blocks: W = [1] puts the loop on the gluing
    // vertex, and the first nonzero multiple appears at c = 3 with -1
    {
        auto [s, w] = blocks_type_dltilde(3);
        HswInvariants inv = invariants_c_lambda(s, w, 40);
        CHECK(inv.c == 3);
        CHECK(inv.lambda_c == -1);
    }
    CHECK_THROWS_AS(invariants_c_lambda(two_rows_eps1(2), adj(DiagramFamily::A, 2), 3),
                    not_found_error);
}

TEST_CASE("psi") {
    auto [s, w] = blocks_type_d(5);
    CHECK(psi(s, w, -1).is_zero());
    CHECK(psi(s, w, 0) == (s.transpose() * s).to_square());

    // Dtilde blocks at x = 2n: block-diag(4 I_n, 2 SS^t)
    auto [sd, wd] = blocks_type_dtilde(5);
    const int n = 2;
    IntMatrix expected(4);
    for (int i = 0; i < n; ++i) expected.set(i, i, 4);
    for (int i = n; i < 4; ++i)
        for (int j = n; j < 4; ++j) expected.set(i, j, 2);
    CHECK(psi(sd, wd, 2 * n) == expected);
}

TEST_CASE("hsw_closed matches the stepped blocks over its window") {
    auto check_family = [](std::pair<RectMatrix, IntMatrix> blocks) {
        auto [s, w] = blocks;
        HswInvariants inv = invariants_c_lambda(s, w, 60);
        BlockState st{s,
                      w,
                      1,
                      RectMatrix(s.rows(), s.rows()),
                      s,
                      w,
                      RectMatrix(s.rows(), s.rows()),
                      RectMatrix(s.rows(), s.cols()),
                      IntMatrix::identity(w.dim())};
        for (int i = 0; i < s.rows(); ++i) st.H_prev.set(i, i, 1);
        for (long k = 1; k <= inv.c + 2; ++k) {
            HswTriple closed = hsw_closed(s, w, k, inv);
            CHECK(closed.H == st.H);
            CHECK(closed.Sk == st.Sk);
            CHECK(closed.Wk == st.Wk);
            st = hsw_step(st);
        }
        return inv;
    };
    for (int m : {4, 5, 6}) check_family(blocks_type_d(m));
    for (int n : {3, 4, 5}) check_family(blocks_type_atilde(n));
    for (int idx : {4, 5, 6}) check_family(blocks_type_dtilde(idx));
    for (int idx : {4, 5, 6}) check_family(blocks_type_dltilde(idx));

    // H_k = I at k = 0 mod 4 inside the window
    auto [s, w] = blocks_type_d(6);
    HswTriple t4 = hsw_closed(s, w, 4);
    RectMatrix id2(2, 2);
    id2.set(0, 0, 1);
    id2.set(1, 1, 1);
    CHECK(t4.H == id2);

    // c odd: H_{c+2} = lambda_c SS^t (DLtilde_5 blocks, c = 5, lambda = 1)
    auto [s5, w5] = blocks_type_dltilde(5);
    HswInvariants inv5 = invariants_c_lambda(s5, w5, 40);
    CHECK(inv5.c % 2 == 1);
    CHECK(hsw_closed(s5, w5, inv5.c + 2, inv5).H == s5 * s5.transpose());

    CHECK_THROWS_AS(hsw_closed(s, w, 0), range_error);
    HswInvariants invd = invariants_c_lambda(s, w, 40);
    CHECK_THROWS_AS(hsw_closed(s, w, invd.c + 3, invd), range_error);

    // DLtilde_3: the loop sits on the gluing vertex, S W S^t != 0, and the
    // closed form's bookkeeping genuinely fails there
    auto [s3, w3] = blocks_type_dltilde(3);
    CHECK_THROWS_AS(hsw_closed(s3, w3, 2), hypothesis_error);
}

TEST_CASE("type D fixtures") {
    for (int m = 4; m <= 8; ++m) {
        const int n = m - 2;
        ChebContext ctx(adj(DiagramFamily::D, m));
        for (long k = 1; k < 2 * n + 1; ++k) CHECK_FALSE(ctx.eval(k).is_zero());
        CHECK(ctx.eval(2 * n + 1).is_zero());
        if (n % 2 == 0) {
            CHECK(ctx.eval(2 * n).is_identity());
        } else {
            IntMatrix expected(m);
            expected.set(0, 1, 1);
            expected.set(1, 0, 1);
            for (int i = 2; i < m; ++i) expected.set(i, i, 1);
            CHECK(ctx.eval(2 * n) == expected);
        }

        // last-row lemma
        for (long k = 1; k <= 2 * n; ++k) {
            const IntMatrix& fk = ctx.eval(k);
            std::vector<Int> expected(m, 0);
            if (k < n) {
                expected[2 + (n - k) - 1] = 1;
            } else if (k == n) {
                expected[0] = expected[1] = 1;
            } else {
                expected[2 + (k - n) - 1] = 1;
            }
            for (int j = 0; j < m; ++j) CHECK(fk.at(m - 1, j) == expected[j]);
        }
    }
}
