#pragma once

#include <utility>
#include <vector>

#include "chebmat/int_matrix.hpp"

namespace chebmat {

// The grid point set behind the type-A closed form: pairs (i, j), 1-based,
// with k+2 <= i+j <= 2n-k, i+j = k (mod 2) and |j-i| <= k.
struct ThetaSet {
    int n;
    int k;
    std::vector<std::pair<int, int>> points;  // sorted lexicographically
};

ThetaSet theta_set(int n, int k);

// f_k(A_n) as the sum of matrix units over theta_set(n, k). -1 <= k <= n.
IntMatrix type_a_closed(int n, int k);

// (T_k, B_k): T_k has ones in the upper-left corner up to the line
// i + j = k + 1; B_k is T_k reflected in the line i + j = n + 1 (ones in the
// lower-right corner). 1 <= k <= n-1.
std::pair<IntMatrix, IntMatrix> corner_matrices(int n, int k);

// f_k(L_n) without running the recurrence: f_k(A) + T_k for k < n, and the
// reflection f_k = f_{2n-1-k} beyond. 0 <= k <= 2n.
IntMatrix type_l_closed(int n, int k);

// f_k(LTilde_n): f_k(A) + T_k + B_k for k <= n-1, U + I^0 at k = n.
// 1 <= k <= n.
IntMatrix type_ltilde_closed(int n, int k);

// Rectangular exact integer matrix. Only the block machinery needs
// non-square shapes (the S block is r x m with r in {1, 2}); everything
// else in the library stays on IntMatrix.
class RectMatrix {
public:
    RectMatrix(int rows, int cols);
    static RectMatrix from_square(const IntMatrix& m);
    static RectMatrix block_of(const IntMatrix& m, int row0, int col0, int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const Int& at(int i, int j) const;
    void set(int i, int j, Int v);

    bool operator==(const RectMatrix& other) const = default;

    RectMatrix operator+(const RectMatrix& other) const;
    RectMatrix operator-(const RectMatrix& other) const;
    RectMatrix operator*(const RectMatrix& other) const;
    RectMatrix scaled(const Int& c) const;
    RectMatrix transpose() const;

    bool is_zero() const;
    // Requires rows() == cols().
    IntMatrix to_square() const;

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

// State of the block recursion for X = [[0, S], [S^t, W]] under the standing
// hypothesis S S^t S = 2S with S of rank one. (H_k, S_k, W_k) are the blocks
// of f_k(X); the previous triple is carried because the recursion has depth
// two.
struct BlockState {
    RectMatrix S;  // r x m
    IntMatrix W;   // m x m
    long k = 1;
    RectMatrix H;    // r x r block of f_k(X)
    RectMatrix Sk;   // r x m block of f_k(X)
    IntMatrix Wk;    // m x m block of f_k(X)
    RectMatrix H_prev, Sk_prev;
    IntMatrix Wk_prev;
};

// Splits x into the block form, validating the standing hypotheses: zero
// top-left corner, S S^t S = 2S, rank(S) = 1. Violations raise
// hypothesis_error naming the failed condition.
BlockState block_decompose(const IntMatrix& x, int top);

// One step of the block recursion:
//   H_{k+1} = S S_k^t - H_{k-1},  S_{k+1} = S W_k - S_{k-1},
//   W_{k+1} = S^t S_k + W W_k - W_{k-1}.
BlockState hsw_step(const BlockState& state);

// f_k(X) rebuilt from the blocks.
IntMatrix reassemble(const BlockState& state);
IntMatrix reassemble(const RectMatrix& H, const RectMatrix& Sk, const IntMatrix& Wk);

// The invariants (c, lambda_c): the first c > 1 with S f_c(W) S^t nonzero,
// which must then equal lambda_c * S S^t exactly (integer scalar).
struct HswInvariants {
    long c;
    Int lambda_c;
};

// Scans 1 < c <= bound. Raises not_found_error when the bound is exhausted
// (callers raise the bound), hypothesis_error when S f_c(W) S^t is not a
// scalar multiple of S S^t.
HswInvariants invariants_c_lambda(const RectMatrix& S, const IntMatrix& W, long bound);

// psi_x = sum_{0 <= r <= x} f_r(W) S^t S f_{x-r}(W); zero for x < 0.
IntMatrix psi(const RectMatrix& S, const IntMatrix& W, long x);

struct HswTriple {
    RectMatrix H, Sk;
    IntMatrix Wk;
};

// Closed-form blocks of f_k(X) for 1 <= k <= c+2:
//   S_k = S sum_{i>=0} f_{k-1-2i}(W),  W_k = f_k(W) + sum_{i>=0} psi_{k-2-2i},
//   H_k = 0 / I / SS^t - I by parity, and H_{c+2} from (c, lambda_c).
// Beyond the standing hypotheses this needs S W S^t = 0: the case table
// tacitly drops the f_1 term of the telescoped sums, which is wrong when the
// gluing vertex carries a loop (DLtilde_3). Violations raise
// hypothesis_error.
HswTriple hsw_closed(const RectMatrix& S, const IntMatrix& W, long k);
HswTriple hsw_closed(const RectMatrix& S, const IntMatrix& W, long k, const HswInvariants& inv);

}  // namespace chebmat
