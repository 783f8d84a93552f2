#include "chebmat/closed_forms.hpp"

#include <utility>

#include "chebmat/cheb.hpp"

namespace chebmat {

ThetaSet theta_set(int n, int k) {
    if (n < 2) throw range_error("theta_set requires n >= 2, got " + std::to_string(n));
    if (k < -1 || k > n)
        throw range_error("theta_set requires -1 <= k <= n, got k = " + std::to_string(k));
    ThetaSet t{n, k, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int s = i + j;
            if (s < k + 2 || s > 2 * n - k) continue;
            if ((s - k) % 2 != 0) continue;
            if (j - i < -k || j - i > k) continue;
            t.points.emplace_back(i, j);
        }
    return t;
}

IntMatrix type_a_closed(int n, int k) {
    ThetaSet t = theta_set(n, k);
    IntMatrix m(n);
    for (auto [i, j] : t.points) m.set(i - 1, j - 1, 1);
    return m;
}

std::pair<IntMatrix, IntMatrix> corner_matrices(int n, int k) {
    if (k < 1 || k > n - 1)
        throw range_error("corner_matrices requires 1 <= k <= n-1, got k = " + std::to_string(k));
    IntMatrix t(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j + i <= k + 1; ++j) t.set(i - 1, j - 1, 1);
    return {t, t.reversal_conjugate()};
}

IntMatrix type_l_closed(int n, int k) {
    if (n < 2) throw range_error("type_l_closed requires n >= 2, got " + std::to_string(n));
    if (k < 0 || k > 2 * n)
        throw range_error("type_l_closed requires 0 <= k <= 2n, got k = " + std::to_string(k));
    if (k >= n) {
        // reflection around the plateau f_n = f_{n-1}: f_k = f_{2n-1-k}
        const int r = 2 * n - 1 - k;
        if (r < 0) return IntMatrix::zero(n);  // k = 2n
        return type_l_closed(n, r);
    }
    if (k == 0) return IntMatrix::identity(n);
    return type_a_closed(n, k) + corner_matrices(n, k).first;
}

IntMatrix type_ltilde_closed(int n, int k) {
    if (n < 2) throw range_error("type_ltilde_closed requires n >= 2, got " + std::to_string(n));
    if (k < 1 || k > n)
        throw range_error("type_ltilde_closed requires 1 <= k <= n, got k = " + std::to_string(k));
    if (k == n) return IntMatrix::all_ones(n) + IntMatrix::antidiagonal_identity(n);
    auto [t, b] = corner_matrices(n, k);
    return type_a_closed(n, k) + t + b;
}

// ---------------------------------------------------------------------------
// RectMatrix

RectMatrix::RectMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw dimension_error("rectangular matrix shape must be positive");
    data_.resize(static_cast<size_t>(rows) * cols);
}

RectMatrix RectMatrix::from_square(const IntMatrix& m) {
    return block_of(m, 0, 0, m.dim(), m.dim());
}

RectMatrix RectMatrix::block_of(const IntMatrix& m, int row0, int col0, int rows, int cols) {
    if (row0 < 0 || col0 < 0 || row0 + rows > m.dim() || col0 + cols > m.dim())
        throw dimension_error("block outside matrix");
    RectMatrix r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.set(i, j, m.at(row0 + i, col0 + j));
    return r;
}

const Int& RectMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw range_error("rect entry out of range");
    return data_[static_cast<size_t>(i) * cols_ + j];
}

void RectMatrix::set(int i, int j, Int v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw range_error("rect entry out of range");
    data_[static_cast<size_t>(i) * cols_ + j] = std::move(v);
}

RectMatrix RectMatrix::operator+(const RectMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("rect shape mismatch in sum");
    RectMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

RectMatrix RectMatrix::operator-(const RectMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("rect shape mismatch in difference");
    RectMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

RectMatrix RectMatrix::operator*(const RectMatrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("rect shape mismatch in product");
    RectMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = data_[static_cast<size_t>(i) * cols_ + k];
            if (sgn(aik) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Int& bkj = o.data_[static_cast<size_t>(k) * o.cols_ + j];
                if (sgn(bkj) == 0) continue;
                mpz_addmul(r.data_[static_cast<size_t>(i) * o.cols_ + j].get_mpz_t(),
                           aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
    return r;
}

RectMatrix RectMatrix::scaled(const Int& c) const {
    RectMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = c * data_[k];
    return r;
}

RectMatrix RectMatrix::transpose() const {
    RectMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool RectMatrix::is_zero() const {
    for (const Int& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

IntMatrix RectMatrix::to_square() const {
    if (rows_ != cols_) throw dimension_error("rect matrix is not square");
    IntMatrix m(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    return m;
}

// ---------------------------------------------------------------------------
// Block machinery

namespace {

void validate_standing_hypotheses(const RectMatrix& S) {
    RectMatrix sst = S * S.transpose();
    RectMatrix lhs = sst * S;
    if (lhs != S.scaled(2)) throw hypothesis_error("S S^t S != 2 S");
    if (S.is_zero()) throw hypothesis_error("S does not have rank one (S = 0)");
    for (int i1 = 0; i1 < S.rows(); ++i1)
        for (int i2 = i1 + 1; i2 < S.rows(); ++i2)
            for (int j1 = 0; j1 < S.cols(); ++j1)
                for (int j2 = j1 + 1; j2 < S.cols(); ++j2) {
                    Int det = S.at(i1, j1) * S.at(i2, j2) - S.at(i1, j2) * S.at(i2, j1);
                    if (sgn(det) != 0) throw hypothesis_error("S does not have rank one");
                }
}

}  // namespace

BlockState block_decompose(const IntMatrix& x, int top) {
    const int n = x.dim();
    if (top < 1 || top >= n)
        throw range_error("block size must satisfy 1 <= top < dim, got " + std::to_string(top));
    for (int i = 0; i < top; ++i)
        for (int j = 0; j < top; ++j)
            if (sgn(x.at(i, j)) != 0)
                throw hypothesis_error("top-left corner is not zero at (" + std::to_string(i + 1) +
                                       "," + std::to_string(j + 1) + ")");
    const int m = n - top;
    RectMatrix S = RectMatrix::block_of(x, 0, top, top, m);
    validate_standing_hypotheses(S);
    IntMatrix W = RectMatrix::block_of(x, top, top, m, m).to_square();

    BlockState st{S,
                  W,
                  1,
                  RectMatrix(top, top),            // H_1 = 0
                  S,                               // S_1 = S
                  W,                               // W_1 = W
                  RectMatrix(top, top),            // H_0 = I_r, filled below
                  RectMatrix(top, m),              // S_0 = 0
                  IntMatrix::identity(m)};         // W_0 = I
    for (int i = 0; i < top; ++i) st.H_prev.set(i, i, 1);
    return st;
}

BlockState hsw_step(const BlockState& state) {
    BlockState next = state;
    RectMatrix W_rect = RectMatrix::from_square(state.Wk);
    RectMatrix Wfull = RectMatrix::from_square(state.W);

    RectMatrix H_next = state.S * state.Sk.transpose() - state.H_prev;
    RectMatrix S_next = state.S * W_rect - state.Sk_prev;
    IntMatrix W_next =
        (state.S.transpose() * state.Sk + Wfull * W_rect).to_square() - state.Wk_prev;

    next.k = state.k + 1;
    next.H_prev = state.H;
    next.Sk_prev = state.Sk;
    next.Wk_prev = state.Wk;
    next.H = std::move(H_next);
    next.Sk = std::move(S_next);
    next.Wk = std::move(W_next);
    return next;
}

IntMatrix reassemble(const RectMatrix& H, const RectMatrix& Sk, const IntMatrix& Wk) {
    const int r = H.rows();
    const int m = Wk.dim();
    if (H.cols() != r || Sk.rows() != r || Sk.cols() != m)
        throw dimension_error("inconsistent block shapes in reassemble");
    IntMatrix out(r + m);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out.set(i, j, H.at(i, j));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m; ++j) {
            out.set(i, r + j, Sk.at(i, j));
            out.set(r + j, i, Sk.at(i, j));
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out.set(r + i, r + j, Wk.at(i, j));
    return out;
}

IntMatrix reassemble(const BlockState& state) { return reassemble(state.H, state.Sk, state.Wk); }

HswInvariants invariants_c_lambda(const RectMatrix& S, const IntMatrix& W, long bound) {
    if (bound < 2) throw range_error("invariants bound must be >= 2, got " + std::to_string(bound));
    RectMatrix sst = S * S.transpose();
    ChebContext ctx(W);
    for (long c = 2; c <= bound; ++c) {
        RectMatrix m = S * RectMatrix::from_square(ctx.eval(c)) * S.transpose();
        if (m.is_zero()) continue;
        // m must equal lambda * S S^t entrywise, lambda an exact integer.
        Int lambda = 0;
        bool have = false;
        for (int i = 0; i < m.rows() && !have; ++i)
            for (int j = 0; j < m.cols() && !have; ++j)
                if (sgn(sst.at(i, j)) != 0) {
                    Int q, r;
                    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.at(i, j).get_mpz_t(),
                                sst.at(i, j).get_mpz_t());
                    if (sgn(r) != 0)
                        throw hypothesis_error("S f_c(W) S^t is not an integer multiple of S S^t at c = " +
                                               std::to_string(c));
                    lambda = q;
                    have = true;
                }
        if (!have || m != sst.scaled(lambda))
            throw hypothesis_error("S f_c(W) S^t is not a scalar multiple of S S^t at c = " +
                                   std::to_string(c));
        return HswInvariants{c, lambda};
    }
    throw not_found_error("no c <= " + std::to_string(bound) + " with S f_c(W) S^t nonzero");
}

IntMatrix psi(const RectMatrix& S, const IntMatrix& W, long x) {
    const int m = W.dim();
    if (x < 0) return IntMatrix::zero(m);
    IntMatrix sts = (S.transpose() * S).to_square();
    ChebContext ctx(W);
    IntMatrix acc(m);
    for (long r = 0; r <= x; ++r) acc = acc + ctx.eval(r) * sts * ctx.eval(x - r);
    return acc;
}

HswTriple hsw_closed(const RectMatrix& S, const IntMatrix& W, long k) {
    long bound = std::max<long>(4L * (W.dim() + 2), 64);
    return hsw_closed(S, W, k, invariants_c_lambda(S, W, bound));
}

HswTriple hsw_closed(const RectMatrix& S, const IntMatrix& W, long k, const HswInvariants& inv) {
    validate_standing_hypotheses(S);
    {
        RectMatrix swst = S * RectMatrix::from_square(W) * S.transpose();
        if (!swst.is_zero())
            throw hypothesis_error("S W S^t != 0 (loop at the gluing vertex); closed form not applicable");
    }
    const long c = inv.c;
    if (k < 1 || k > c + 2)
        throw range_error("hsw_closed requires 1 <= k <= c+2 = " + std::to_string(c + 2) +
                          ", got k = " + std::to_string(k));
    const int r = S.rows();
    const int m = W.dim();
    ChebContext ctx(W);

    // S_k = S * sum_{i>=0} f_{k-1-2i}(W); the f_{x<0} = 0 convention ends the sum.
    IntMatrix sum_f(m);
    for (long x = k - 1; x >= 0; x -= 2) sum_f = sum_f + ctx.eval(x);
    RectMatrix Sk = S * RectMatrix::from_square(sum_f);

    IntMatrix Wk = ctx.eval(k);
    for (long x = k - 2; x >= 0; x -= 2) Wk = Wk + psi(S, W, x);

    RectMatrix sst = S * S.transpose();
    auto h_table = [&](long kk) -> RectMatrix {
        if (kk % 2 == 1) return RectMatrix(r, r);
        RectMatrix id(r, r);
        for (int i = 0; i < r; ++i) id.set(i, i, 1);
        if (kk % 4 == 0) return id;
        return sst - id;
    };
    RectMatrix H(r, r);
    if (k < c + 2) {
        H = h_table(k);
    } else if (c % 2 == 0) {
        H = sst.scaled(inv.lambda_c + 1) - h_table(c);
    } else {
        H = sst.scaled(inv.lambda_c);
    }
    return HswTriple{std::move(H), std::move(Sk), std::move(Wk)};
}

}  // namespace chebmat
