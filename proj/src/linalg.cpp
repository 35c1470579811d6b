#include "l1m/linalg.hpp"

#include "l1m/laurent.hpp"

#include <ostream>
#include <sstream>

namespace l1m {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string LaurentPoly::str(const std::string& var) const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeff_) {
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        if (first && c.sign() < 0) os << "-";
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        bool unit = (a == Rational(1));
        if (e == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

QVector SparseMatrix::apply(const QVector& x) const {
    if (static_cast<long>(x.size()) != cols_)
        throw std::invalid_argument("SparseMatrix::apply: size mismatch");
    QVector y(rows_, Rational(0));
    for (long r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
    return y;
}

RrefResult rref(const SparseMatrix& m) {
    const long rows = m.rows(), cols = m.cols();
    // Dense rows of sparse maps; sizes here are desk scale.
    std::vector<std::map<long, Rational>> a(rows);
    for (long r = 0; r < rows; ++r) a[r] = m.row(r);

    std::vector<long> pivots;
    long next_row = 0;
    for (long col = 0; col < cols && next_row < rows; ++col) {
        // deterministic sparsity-aware pivot: shortest candidate row wins,
        // ties broken by row index
        long pr = -1;
        size_t best = 0;
        for (long r = next_row; r < rows; ++r) {
            auto it = a[r].find(col);
            if (it == a[r].end()) continue;
            if (pr < 0 || a[r].size() < best) {
                pr = r;
                best = a[r].size();
            }
        }
        if (pr < 0) continue;
        std::swap(a[next_row], a[pr]);
        Rational inv = a[next_row].at(col).inverse();
        for (auto& [c, v] : a[next_row]) v *= inv;
        for (long r = 0; r < rows; ++r) {
            if (r == next_row) continue;
            auto it = a[r].find(col);
            if (it == a[r].end()) continue;
            Rational f = it->second;
            for (const auto& [c, v] : a[next_row]) {
                auto jt = a[r].find(c);
                if (jt == a[r].end()) {
                    Rational nv = -f * v;
                    if (!nv.is_zero()) a[r][c] = nv;
                } else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) a[r].erase(jt);
                }
            }
        }
        pivots.push_back(col);
        ++next_row;
    }

    SparseMatrix out(rows, cols);
    for (long r = 0; r < rows; ++r)
        for (const auto& [c, v] : a[r]) out.set(r, c, v);
    return {std::move(out), std::move(pivots)};
}

std::vector<QVector> kernel_basis(const SparseMatrix& m) {
    RrefResult rr = rref(m);
    const long cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (long p : rr.pivot_cols) is_pivot[p] = true;

    std::vector<QVector> basis;
    for (long fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        QVector v(cols, Rational(0));
        v[fc] = Rational(1);
        for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.reduced.get(static_cast<long>(i), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const SparseMatrix& m, const QVector& b) {
    if (static_cast<long>(b.size()) != m.rows())
        throw std::invalid_argument("solve: rhs size mismatch");
    SparseMatrix aug(m.rows(), m.cols() + 1);
    for (long r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
        aug.set(r, m.cols(), b[r]);
    }
    RrefResult rr = rref(aug);
    for (long p : rr.pivot_cols)
        if (p == m.cols()) return std::nullopt; // pivot in the rhs column: inconsistent
    QVector x(m.cols(), Rational(0));
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
        x[rr.pivot_cols[i]] = rr.reduced.get(static_cast<long>(i), m.cols());
    return x;
}

} // namespace l1m
