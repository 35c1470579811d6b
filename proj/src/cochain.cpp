#include "l1m/cochain.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace l1m {

static void monomials_rec(int q, int mu, int min_idx, Mono& cur, std::vector<Mono>& out) {
    if (q == 0) {
        if (mu == 0) out.push_back(cur);
        return;
    }
    // remaining indices are strictly increasing, so i, i+1, ..., i+q-1 is the
    // cheapest completion starting at i
    for (int i = min_idx; q * i + q * (q - 1) / 2 <= mu; ++i) {
        cur.push_back(i);
        monomials_rec(q - 1, mu - i, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Mono> monomials(int q, int mu) {
    std::vector<Mono> out;
    if (q < 0 || mu < 0) return out;
    if (q == 0) {
        if (mu == 0) out.push_back(Mono{});
        return out;
    }
    Mono cur;
    monomials_rec(q, mu, 1, cur, out);
    return out;
}

std::pair<Mono, int> wedge_monos(const Mono& a, const Mono& b) {
    Mono m;
    m.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return {Mono{}, 0};
        if (a[i] < b[j]) {
            m.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining a-entries
            if ((a.size() - i) % 2 == 1) sign = -sign;
            m.push_back(b[j++]);
        }
    }
    while (i < a.size()) m.push_back(a[i++]);
    while (j < b.size()) m.push_back(b[j++]);
    return {m, sign};
}

Cochain d_mono(const Mono& m) {
    Cochain out;
    const int q = static_cast<int>(m.size());
    for (int ci = 0; ci < q; ++ci) {
        const int c = m[ci];
        // rest = m without position ci, still increasing
        Mono rest;
        rest.reserve(q - 1);
        for (int t = 0; t < q; ++t)
            if (t != ci) rest.push_back(m[t]);
        // k = how many rest entries are below c (position of e_c in the
        // evaluation argument list)
        int k = 0;
        for (int r : rest)
            if (r < c) ++k;
        for (int a = 1; 2 * a < c; ++a) {
            const int b = c - a;
            if (std::binary_search(rest.begin(), rest.end(), a)) continue;
            if (std::binary_search(rest.begin(), rest.end(), b)) continue;
            Mono target = rest;
            target.push_back(a);
            target.push_back(b);
            std::sort(target.begin(), target.end());
            auto pos = [&target](int x) {
                return static_cast<int>(std::lower_bound(target.begin(), target.end(), x) - target.begin()) + 1;
            };
            const int s = pos(a), u = pos(b);
            int sgn = ((s + u - 1) % 2 == 0) ? 1 : -1;
            if (k % 2 == 1) sgn = -sgn;
            cochain_add(out, target, Rational(sgn) * Rational(b - a));
        }
    }
    return out;
}

FiniteModule trivial_module() {
    FiniteModule m;
    m.grades = {0};
    m.act = [](int, int) { return Rational(0); };
    return m;
}

void mcochain_add(MCochain& dst, const MKey& k, const Rational& c) {
    if (c.is_zero()) return;
    auto it = dst.find(k);
    if (it == dst.end()) {
        dst.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

MCochain differential(const MCochain& c, const FiniteModule& mod) {
    MCochain out;
    const int span = mod.span();
    for (const auto& [key, coef] : c) {
        const auto& [m, g] = key;
        // bracket part: same as trivial coefficients
        for (const auto& [tm, tc] : d_mono(m)) mcochain_add(out, {tm, g}, coef * tc);
        // action part: insert e_k, value moves to grade g + k. The action
        // sign is (-1)^s against the bracket sign (-1)^{s+t-1}; the two must
        // pair this way or d fails to square to zero.
        for (int k = 1; k <= span; ++k) {
            if (!mod.has(g + k)) continue;
            Rational a = mod.act(k, g);
            if (a.is_zero()) continue;
            if (std::binary_search(m.begin(), m.end(), k)) continue;
            Mono target = m;
            target.insert(std::upper_bound(target.begin(), target.end(), k), k);
            const int s = static_cast<int>(std::lower_bound(target.begin(), target.end(), k) - target.begin()) + 1;
            const int sgn = (s % 2 == 1) ? -1 : 1;
            mcochain_add(out, {target, g + k}, coef * a * Rational(sgn));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

Subquotient::Subquotient(const std::vector<QVector>& z_span, const std::vector<QVector>& b_span, long ambient)
    : ambient_(ambient) {
    auto to_matrix = [ambient](const std::vector<QVector>& rows) {
        SparseMatrix m(static_cast<long>(rows.size()), ambient);
        for (long r = 0; r < static_cast<long>(rows.size()); ++r)
            for (long c = 0; c < ambient; ++c)
                if (!rows[r][c].is_zero()) m.set(r, c, rows[r][c]);
        return m;
    };
    auto extract_rows = [ambient](const RrefResult& rr) {
        std::vector<QVector> rows;
        for (long r = 0; r < static_cast<long>(rr.pivot_cols.size()); ++r) {
            QVector v(ambient, Rational(0));
            for (const auto& [c, val] : rr.reduced.row(r)) v[c] = val;
            rows.push_back(std::move(v));
        }
        return rows;
    };

    RrefResult zr = rref(to_matrix(z_span));
    RrefResult br = rref(to_matrix(b_span));
    std::vector<QVector> z_rows = extract_rows(zr);
    b_basis_ = extract_rows(br);
    z_dim_ = static_cast<long>(z_rows.size());
    b_dim_ = static_cast<long>(b_basis_.size());

    // greedy: take rref(Z) rows that stay independent modulo B + chosen
    std::vector<QVector> acc = b_basis_;
    long acc_rank = b_dim_;
    for (const auto& row : z_rows) {
        if (static_cast<long>(reps_.size()) == z_dim_ - b_dim_) break;
        std::vector<QVector> trial = acc;
        trial.push_back(row);
        SparseMatrix tm(static_cast<long>(trial.size()), ambient_);
        for (long r = 0; r < static_cast<long>(trial.size()); ++r)
            for (long c = 0; c < ambient_; ++c)
                if (!trial[r][c].is_zero()) tm.set(r, c, trial[r][c]);
        long nr = rank(tm);
        if (nr > acc_rank) {
            reps_.push_back(row);
            acc = std::move(trial);
            acc_rank = nr;
        }
    }
}

std::optional<QVector> Subquotient::coordinates(const QVector& v) const {
    // Solve v = sum beta_i b_i + sum gamma_j rep_j; columns are B then reps.
    const long nb = b_dim_, nr = dim();
    SparseMatrix m(ambient_, nb + nr);
    for (long j = 0; j < nb; ++j)
        for (long r = 0; r < ambient_; ++r)
            if (!b_basis_[j][r].is_zero()) m.set(r, j, b_basis_[j][r]);
    for (long j = 0; j < nr; ++j)
        for (long r = 0; r < ambient_; ++r)
            if (!reps_[j][r].is_zero()) m.set(r, nb + j, reps_[j][r]);
    auto sol = solve(m, v);
    if (!sol) return std::nullopt;
    QVector out(nr, Rational(0));
    for (long j = 0; j < nr; ++j) out[j] = (*sol)[nb + j];
    return out;
}

// ---------------------------------------------------------------------------

static SparseMatrix block_d_matrix(const std::vector<Mono>& src, const std::vector<Mono>& dst) {
    std::map<Mono, long> dst_index;
    for (long i = 0; i < static_cast<long>(dst.size()); ++i) dst_index[dst[i]] = i;
    SparseMatrix m(static_cast<long>(dst.size()), static_cast<long>(src.size()));
    for (long c = 0; c < static_cast<long>(src.size()); ++c)
        for (const auto& [tm, tc] : d_mono(src[c])) {
            auto it = dst_index.find(tm);
            if (it == dst_index.end())
                throw std::logic_error("block_d_matrix: target outside block");
            m.add(it->second, c, tc);
        }
    return m;
}

CohomologyBlock::CohomologyBlock(int q, int mu, int trunc_n)
    : q_(q), mu_(mu), monos_(monomials(q, mu)), d_out_(0, 0) {
    if (q < 0) throw std::invalid_argument("cohomology: q >= 0 required");
    if (trunc_n >= 0 && trunc_n < mu)
        throw WindowTooSmall("cohomology: truncation N must cover the weight");
    for (long i = 0; i < static_cast<long>(monos_.size()); ++i) index_[monos_[i]] = i;

    const std::vector<Mono> above = monomials(q + 1, mu);
    const std::vector<Mono> below = q >= 1 ? monomials(q - 1, mu) : std::vector<Mono>{};

    d_out_ = block_d_matrix(monos_, above);
    std::vector<QVector> z = kernel_basis(d_out_);
    // q = 0, mu = 0 has the empty monomial; with mu > 0 the block is empty
    std::vector<QVector> b;
    if (q >= 1) {
        for (const auto& m : below) {
            QVector v(monos_.size(), Rational(0));
            for (const auto& [tm, tc] : d_mono(m)) v[index_.at(tm)] += tc;
            b.push_back(std::move(v));
        }
    }
    sub_ = std::make_unique<Subquotient>(z, b, static_cast<long>(monos_.size()));
}

std::vector<Cochain> CohomologyBlock::representatives() const {
    std::vector<Cochain> out;
    for (const auto& v : sub_->representatives()) {
        Cochain c;
        for (long i = 0; i < static_cast<long>(monos_.size()); ++i)
            if (!v[i].is_zero()) c[monos_[i]] = v[i];
        out.push_back(std::move(c));
    }
    return out;
}

QVector CohomologyBlock::coordinates_raw(const Cochain& c) const {
    QVector v(monos_.size(), Rational(0));
    for (const auto& [m, coef] : c) {
        auto it = index_.find(m);
        if (it == index_.end())
            throw std::invalid_argument("cochain does not lie in this (q, mu) block");
        v[it->second] = coef;
    }
    return v;
}

QVector CohomologyBlock::class_of(const Cochain& c) const {
    QVector v = coordinates_raw(c);
    QVector dv = d_out_.apply(v);
    for (const auto& x : dv)
        if (!x.is_zero()) throw NotClosed();
    auto coords = sub_->coordinates(v);
    if (!coords) throw std::logic_error("closed cochain not in kernel span");
    return *coords;
}

bool CohomologyBlock::is_exact(const Cochain& c) const {
    QVector cls = class_of(c);
    for (const auto& x : cls)
        if (!x.is_zero()) return false;
    return true;
}

const CohomologyBlock& cohomology_block(int q, int mu) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<CohomologyBlock>> cache;
    auto key = std::make_pair(q, mu);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto block = std::make_unique<CohomologyBlock>(q, mu);
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::move(block)).first;
    return *it->second;
}

CohomologyReport cohomology(int q, int mu, int trunc_n) {
    if (trunc_n >= 0 && trunc_n < mu)
        throw WindowTooSmall("cohomology: truncation N must cover the weight");
    const CohomologyBlock& b = cohomology_block(q, mu);
    return {q, mu, b.dim(), b.boundary_dim(), b.representatives()};
}

long cohomology_dim(int q, int mu) { return cohomology_block(q, mu).dim(); }

ModuleCohomology module_cohomology(const FiniteModule& mod, int q, int s) {
    auto block_basis = [&](int deg) {
        std::vector<MKey> keys;
        for (int g : mod.grades) {
            int w = g - s;
            if (w < 0) continue;
            if (deg == 0 && w != 0) continue;
            for (const auto& m : monomials(deg, w)) keys.push_back({m, g});
        }
        return keys;
    };
    std::vector<MKey> here = block_basis(q);
    std::vector<MKey> above = block_basis(q + 1);
    std::vector<MKey> below = q >= 1 ? block_basis(q - 1) : std::vector<MKey>{};

    std::map<MKey, long> above_idx, here_idx;
    for (long i = 0; i < static_cast<long>(above.size()); ++i) above_idx[above[i]] = i;
    for (long i = 0; i < static_cast<long>(here.size()); ++i) here_idx[here[i]] = i;

    auto d_vec = [&](const MKey& k, const std::map<MKey, long>& idx, long dim) {
        MCochain c{{k, Rational(1)}};
        MCochain dc = differential(c, mod);
        QVector v(dim, Rational(0));
        for (const auto& [tk, tc] : dc) v[idx.at(tk)] += tc;
        return v;
    };

    SparseMatrix dmat(static_cast<long>(above.size()), static_cast<long>(here.size()));
    for (long c = 0; c < static_cast<long>(here.size()); ++c) {
        QVector v = d_vec(here[c], above_idx, static_cast<long>(above.size()));
        for (long r = 0; r < static_cast<long>(above.size()); ++r)
            if (!v[r].is_zero()) dmat.set(r, c, v[r]);
    }
    std::vector<QVector> z = kernel_basis(dmat);
    std::vector<QVector> b;
    for (const auto& k : below) b.push_back(d_vec(k, here_idx, static_cast<long>(here.size())));

    Subquotient sub(z, b, static_cast<long>(here.size()));
    return {q, s, sub.dim(), here, sub.representatives()};
}

} // namespace l1m
