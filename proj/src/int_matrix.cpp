#include "chebmat/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace chebmat {

IntMatrix::IntMatrix(int n) : n_(n) {
    if (n < 1) throw dimension_error("matrix dimension must be positive, got " + std::to_string(n));
    data_.resize(static_cast<size_t>(n) * n);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.cell(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::antidiagonal_identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.cell(i, n - 1 - i) = 1;
    return m;
}

IntMatrix IntMatrix::all_ones(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.cell(i, j) = 1;
    return m;
}

IntMatrix IntMatrix::unit(int n, int i, int j) {
    IntMatrix m(n);
    m.set(i, j, 1);
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Int>> rows) {
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw dimension_error("row " + std::to_string(i) + " has length " +
                                  std::to_string(rows[i].size()) + ", expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) m.cell(i, j) = std::move(rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw dimension_error("row " + std::to_string(i) + " has length " +
                                  std::to_string(rows[i].size()) + ", expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) m.cell(i, j) = rows[i][j];
    }
    return m;
}

const Int& IntMatrix::at(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw range_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside " + std::to_string(n_) + "x" + std::to_string(n_) + " matrix");
    return cell(i, j);
}

void IntMatrix::set(int i, int j, Int v) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw range_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside " + std::to_string(n_) + "x" + std::to_string(n_) + " matrix");
    cell(i, j) = std::move(v);
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (n_ != other.n_) throw dimension_error("dimension mismatch in matrix sum");
    IntMatrix out(n_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (n_ != other.n_) throw dimension_error("dimension mismatch in matrix difference");
    IntMatrix out(n_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(n_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (n_ != other.n_) throw dimension_error("dimension mismatch in matrix product");
    IntMatrix out(n_);
    // i-k-j order so the inner loop runs along rows; mpz_addmul avoids
    // temporaries in the accumulation.
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const Int& aik = cell(i, k);
            if (sgn(aik) == 0) continue;
            for (int j = 0; j < n_; ++j) {
                const Int& bkj = other.cell(k, j);
                if (sgn(bkj) == 0) continue;
                mpz_addmul(out.cell(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix out(n_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = c * data_[k];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.cell(j, i) = cell(i, j);
    return out;
}

IntMatrix IntMatrix::row_reverse() const {
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.cell(i, n_ - 1 - j) = cell(i, j);
    return out;
}

IntMatrix IntMatrix::reversal_conjugate() const {
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.cell(n_ - 1 - i, n_ - 1 - j) = cell(i, j);
    return out;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (cell(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (cell(i, j) != cell(j, i)) return false;
    return true;
}

Int IntMatrix::max_abs_entry() const {
    Int best = 0;
    for (const Int& v : data_) {
        Int a = abs(v);
        if (a > best) best = a;
    }
    return best;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < n_; ++j) os << (j ? " " : "") << cell(i, j).get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace chebmat
