#pragma once

#include "l1m/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace l1m {

using QVector = std::vector<Rational>;

// Sparse matrix over Q with fixed dimensions. Entries are stored row-major
// in ordered maps so iteration order (and hence every elimination) is
// deterministic. No zero entries are stored.
class SparseMatrix {
  public:
    SparseMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(rows) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    void set(long r, long c, const Rational& v) {
        check(r, c);
        if (v.is_zero())
            data_[r].erase(c);
        else
            data_[r][c] = v;
    }
    void add(long r, long c, const Rational& v) {
        check(r, c);
        auto it = data_[r].find(c);
        if (it == data_[r].end()) {
            if (!v.is_zero()) data_[r][c] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) data_[r].erase(it);
        }
    }
    Rational get(long r, long c) const {
        check(r, c);
        auto it = data_[r].find(c);
        return it == data_[r].end() ? Rational(0) : it->second;
    }
    const std::map<long, Rational>& row(long r) const { return data_[r]; }

    long entry_count() const {
        long n = 0;
        for (const auto& r : data_) n += static_cast<long>(r.size());
        return n;
    }

    QVector apply(const QVector& x) const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    void check(long r, long c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("SparseMatrix: index out of range");
    }
    long rows_, cols_;
    std::vector<std::map<long, Rational>> data_;
};

struct RrefResult {
    SparseMatrix reduced;
    std::vector<long> pivot_cols; // strictly increasing
};

// Unique reduced row-echelon form (Gauss-Jordan over Q, deterministic pivot
// choice: first row with a nonzero entry in the leftmost unfinished column).
RrefResult rref(const SparseMatrix& m);

inline long rank(const SparseMatrix& m) { return static_cast<long>(rref(m).pivot_cols.size()); }

// Exact basis of the null space; size == cols - rank. Each vector has a 1 in
// the free column it corresponds to, free columns taken in increasing order.
std::vector<QVector> kernel_basis(const SparseMatrix& m);

// One particular solution of m x = b, or nullopt when the system is
// inconsistent (used by the Massey solver to report an undefined product).
std::optional<QVector> solve(const SparseMatrix& m, const QVector& b);

} // namespace l1m
