#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "chebmat/errors.hpp"

namespace chebmat {

// Exact arbitrary-precision signed integer.
using Int = mpz_class;

// Dense square matrix over Int. Entries never round, truncate or overflow;
// the dimension is fixed at construction. Treat values as immutable once
// built: all operations return fresh matrices, so sharing across threads is
// safe.
class IntMatrix {
public:
    // Zero matrix of dimension n (n >= 1).
    explicit IntMatrix(int n);

    static IntMatrix zero(int n) { return IntMatrix(n); }
    static IntMatrix identity(int n);
    // I^0: ones on the antidiagonal.
    static IntMatrix antidiagonal_identity(int n);
    // U: every entry equal to one.
    static IntMatrix all_ones(int n);
    // E_{ij}, 0-based.
    static IntMatrix unit(int n, int i, int j);
    static IntMatrix from_rows(std::vector<std::vector<Int>> rows);
    static IntMatrix from_ints(const std::vector<std::vector<long>>& rows);

    int dim() const noexcept { return n_; }

    const Int& at(int i, int j) const;
    void set(int i, int j, Int v);

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix operator-() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix scaled(const Int& c) const;

    IntMatrix transpose() const;
    // X^0: each row's entries reversed; equals X * I^0.
    IntMatrix row_reverse() const;
    // I^0 * X * I^0: vertex order reversed.
    IntMatrix reversal_conjugate() const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_symmetric() const;
    Int max_abs_entry() const;

    // Compact single-line rendering, for diagnostics and test failure output.
    std::string str() const;

private:
    Int& cell(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
    const Int& cell(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }

    int n_;
    std::vector<Int> data_;  // row-major
};

inline IntMatrix operator*(const Int& c, const IntMatrix& m) { return m.scaled(c); }

}  // namespace chebmat
