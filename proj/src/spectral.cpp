#include "l1m/spectral.hpp"

#include <algorithm>

namespace l1m {

FilteredComplex::FilteredComplex(FiniteModule mod, int mu, int max_degree, int d_sign)
    : mod_(std::move(mod)), mu_(mu), max_degree_(max_degree), sign_(d_sign) {
    if (mod_.grades.empty()) throw std::invalid_argument("FilteredComplex: empty module");
    if (!std::is_sorted(mod_.grades.begin(), mod_.grades.end()))
        throw std::invalid_argument("FilteredComplex: grades must be sorted");

    bases_.resize(max_degree_ + 1);
    index_.resize(max_degree_ + 1);
    for (int n = 0; n <= max_degree_; ++n) {
        for (int g : mod_.grades) {
            int w = g - mu_;
            if (w < 0) continue;
            for (const auto& m : monomials(n, w)) bases_[n].push_back({m, g});
        }
        std::sort(bases_[n].begin(), bases_[n].end());
        for (long i = 0; i < static_cast<long>(bases_[n].size()); ++i) index_[n][bases_[n][i]] = i;
    }
    for (int n = 0; n < max_degree_; ++n) {
        SparseMatrix m(static_cast<long>(bases_[n + 1].size()), static_cast<long>(bases_[n].size()));
        for (long c = 0; c < static_cast<long>(bases_[n].size()); ++c) {
            MCochain unit{{bases_[n][c], Rational(1)}};
            for (const auto& [tk, tc] : differential(unit, mod_))
                m.add(index_[n + 1].at(tk), c, tc * Rational(sign_));
        }
        d_.push_back(std::move(m));
    }
}

QVector FilteredComplex::to_vector(const MCochain& c, int n) const {
    QVector v(bases_[n].size(), Rational(0));
    for (const auto& [k, coef] : c) {
        auto it = index_[n].find(k);
        if (it == index_[n].end())
            throw std::invalid_argument("FilteredComplex: cochain outside the (mu, degree) block");
        v[it->second] = coef;
    }
    return v;
}

MCochain FilteredComplex::to_cochain(const QVector& v, int n) const {
    MCochain c;
    for (long i = 0; i < static_cast<long>(v.size()); ++i)
        if (!v[i].is_zero()) c[bases_[n][i]] = v[i];
    return c;
}

QVector FilteredComplex::apply_d(const QVector& v, int n) const {
    if (n >= max_degree_) return QVector(0);
    return d_[n].apply(v);
}

std::vector<QVector> FilteredComplex::z_space(int p, int n, int r) const {
    if (n > max_degree_) return {};
    // columns: basis keys of C^n with grade >= p
    std::vector<long> cols;
    for (long i = 0; i < static_cast<long>(bases_[n].size()); ++i)
        if (bases_[n][i].second >= p) cols.push_back(i);
    // rows: basis keys of C^{n+1} with grade < p + r
    std::vector<long> rows;
    if (n < max_degree_) {
        for (long i = 0; i < static_cast<long>(bases_[n + 1].size()); ++i)
            if (bases_[n + 1][i].second < p + r) rows.push_back(i);
    }
    SparseMatrix m(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    if (n < max_degree_) {
        for (long cc = 0; cc < static_cast<long>(cols.size()); ++cc) {
            QVector unit(bases_[n].size(), Rational(0));
            unit[cols[cc]] = Rational(1);
            QVector img = d_[n].apply(unit);
            for (long i = 0; i < static_cast<long>(rows.size()); ++i)
                if (!img[rows[i]].is_zero()) m.set(i, cc, img[rows[i]]);
        }
    }
    std::vector<QVector> out;
    for (const auto& k : kernel_basis(m)) {
        QVector full(bases_[n].size(), Rational(0));
        for (long cc = 0; cc < static_cast<long>(cols.size()); ++cc) full[cols[cc]] = k[cc];
        out.push_back(std::move(full));
    }
    return out;
}

std::vector<QVector> FilteredComplex::boundary_space(int p, int n, int r) const {
    std::vector<QVector> out = z_space(p + 1, n, r - 1);
    if (n >= 1) {
        for (const auto& y : z_space(p - r + 1, n - 1, r - 1)) out.push_back(apply_d(y, n - 1));
    }
    return out;
}

Subquotient FilteredComplex::page(int p, int n, int r) const {
    return Subquotient(z_space(p, n, r), boundary_space(p, n, r), static_cast<long>(bases_[n].size()));
}

long FilteredComplex::page_dim(int p, int n, int r) const { return page(p, n, r).dim(); }

SparseMatrix FilteredComplex::page_differential(int p, int n, int r) const {
    Subquotient src = page(p, n, r);
    Subquotient dst = page(p + r, n + 1, r);
    SparseMatrix m(dst.dim(), src.dim());
    for (long c = 0; c < src.dim(); ++c) {
        QVector img = apply_d(src.representatives()[c], n);
        auto coords = dst.coordinates(img);
        if (!coords)
            throw std::logic_error("page_differential: image not in the target page span");
        for (long rr = 0; rr < dst.dim(); ++rr)
            if (!(*coords)[rr].is_zero()) m.set(rr, c, (*coords)[rr]);
    }
    return m;
}

PageTrace follow_element(const FilteredComplex& fc, const MCochain& x, int n, int r_max,
                         const MCochain* compare_target) {
    PageTrace out;
    const long ambient = static_cast<long>(fc.basis(n).size());
    const long target_ambient = static_cast<long>(fc.basis(n + 1).size());
    int p = fc.max_grade();
    for (const auto& [k, c] : x) p = std::min(p, k.second);

    // maintained representative: y in Z_r with [y]_r the image of [x]_1
    QVector y = fc.to_vector(x, n);
    {
        // y must start in Z_1: dy in F_{p+1}
        QVector dy = fc.apply_d(y, n);
        for (long i = 0; i < target_ambient; ++i)
            if (!dy[i].is_zero() && fc.basis(n + 1)[i].second < p + 1) {
                out.died = true;
                out.died_at_r = 1;
                return out;
            }
    }

    for (int r = 1; r <= r_max; ++r) {
        QVector dy = fc.apply_d(y, n);
        Subquotient target = fc.page(p + r, n + 1, r);
        auto coords = target.coordinates(dy);
        if (!coords)
            throw std::logic_error("follow_element: dy not in the target Z_r span");
        bool nonzero = false;
        for (const auto& c : *coords) nonzero = nonzero || !c.is_zero();
        if (nonzero) {
            out.first_nonzero_r = r;
            out.dr_coords = *coords;
            if (compare_target) {
                QVector tv = fc.to_vector(*compare_target, n + 1);
                out.target_coords = target.coordinates(tv);
            }
            return out;
        }
        // d_r [y] = 0: dy = v + dw with v in Z_{r-1}^{p+r+1}, w in Z_{r-1}^{p+1};
        // replace y by y - w so that d(y - w) lands in F_{p+r+1}
        std::vector<QVector> vsp = fc.z_space(p + r + 1, n + 1, r - 1);
        std::vector<QVector> wsp = fc.z_space(p + 1, n, r - 1);
        const long nv = static_cast<long>(vsp.size()), nw = static_cast<long>(wsp.size());
        SparseMatrix m(target_ambient, nv + nw);
        for (long j = 0; j < nv; ++j)
            for (long i = 0; i < target_ambient; ++i)
                if (!vsp[j][i].is_zero()) m.set(i, j, vsp[j][i]);
        std::vector<QVector> dw(nw);
        for (long j = 0; j < nw; ++j) {
            dw[j] = fc.apply_d(wsp[j], n);
            for (long i = 0; i < target_ambient; ++i)
                if (!dw[j][i].is_zero()) m.set(i, nv + j, dw[j][i]);
        }
        auto sol = solve(m, dy);
        if (!sol)
            throw std::logic_error("follow_element: vanishing d_r class without a correction witness");
        for (long j = 0; j < nw; ++j)
            for (long i = 0; i < ambient; ++i) y[i] -= (*sol)[nv + j] * wsp[j][i];
    }
    return out;
}

} // namespace l1m
