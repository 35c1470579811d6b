#pragma once

#include "l1m/linalg.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace l1m {

// Exterior monomial e^{i1} ^ ... ^ e^{iq} on L1, stored as the strictly
// increasing index tuple. Degree = length, weight = index sum.
using Mono = std::vector<int>;

inline int mono_weight(const Mono& m) {
    int w = 0;
    for (int i : m) w += i;
    return w;
}

// All strictly increasing q-tuples of positive integers with index sum mu,
// in lexicographic order.
std::vector<Mono> monomials(int q, int mu);

// Concatenate-and-sort with sign; sign 0 means a repeated index.
std::pair<Mono, int> wedge_monos(const Mono& a, const Mono& b);

// Cochain with coefficients in any commutative ring K admitting
// K += K, K * K, K * Rational and is_zero().
template <class K>
using CochainT = std::map<Mono, K>;

using Cochain = CochainT<Rational>;

template <class K>
void cochain_add(CochainT<K>& dst, const Mono& m, const K& c) {
    if (c.is_zero()) return;
    auto it = dst.find(m);
    if (it == dst.end()) {
        dst.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

template <class K>
CochainT<K> cochain_scale(const CochainT<K>& a, const Rational& r) {
    CochainT<K> out;
    if (r.is_zero()) return out;
    for (const auto& [m, c] : a) out.emplace(m, c * K(r));
    return out;
}

template <class K>
CochainT<K> operator+(const CochainT<K>& a, const CochainT<K>& b) {
    CochainT<K> out = a;
    for (const auto& [m, c] : b) cochain_add(out, m, c);
    return out;
}

template <class K>
CochainT<K> operator-(const CochainT<K>& a, const CochainT<K>& b) {
    CochainT<K> out = a;
    for (const auto& [m, c] : b) cochain_add(out, m, K(Rational(-1)) * c);
    return out;
}

template <class K>
CochainT<K> wedge(const CochainT<K>& a, const CochainT<K>& b) {
    CochainT<K> out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto [m, sign] = wedge_monos(ma, mb);
            if (sign == 0) continue;
            cochain_add(out, m, (ca * cb) * K(Rational(sign)));
        }
    return out;
}

// Degree of a homogeneous cochain; throws on mixed degree. Zero cochain: -1.
template <class K>
int cochain_degree(const CochainT<K>& c) {
    int q = -1;
    for (const auto& [m, v] : c) {
        if (q < 0) q = static_cast<int>(m.size());
        else if (q != static_cast<int>(m.size()))
            throw std::domain_error("cochain: mixed degree");
    }
    return q;
}

// Weight when homogeneous, nullopt for a mixed-weight cochain.
template <class K>
std::optional<int> cochain_weight(const CochainT<K>& c) {
    std::optional<int> w;
    for (const auto& [m, v] : c) {
        int mw = mono_weight(m);
        if (!w) w = mw;
        else if (*w != mw) return std::nullopt;
    }
    return w;
}

struct WindowTooSmall : std::domain_error {
    explicit WindowTooSmall(const std::string& what) : std::domain_error(what) {}
};

// d of a basis monomial, trivial coefficients: the dual of the L1 bracket.
// For each c in I the whole sum over splittings c = a + b, a < b, lands back
// inside any truncation window N >= max index of I.
Cochain d_mono(const Mono& m);

template <class K>
CochainT<K> differential(const CochainT<K>& c, int trunc_n = -1) {
    CochainT<K> out;
    for (const auto& [m, coef] : c) {
        if (trunc_n >= 0 && !m.empty() && m.back() > trunc_n)
            throw WindowTooSmall("differential: monomial index exceeds truncation");
        for (const auto& [tm, tc] : d_mono(m)) cochain_add(out, tm, coef * K(tc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Module-valued cochains.  A finite graded module with one-dimensional
// homogeneous components f_g; the action raises the grade.
// ---------------------------------------------------------------------------

struct FiniteModule {
    std::vector<int> grades;                       // sorted ascending
    std::function<Rational(int, int)> act;         // act(i, g): coeff on f_{g+i}

    bool has(int g) const {
        for (int x : grades) if (x == g) return true;
        return false;
    }
    int span() const { return grades.empty() ? 0 : grades.back() - grades.front(); }
};

FiniteModule trivial_module();

// Basis element e^I (x) f_g.
using MKey = std::pair<Mono, int>;
using MCochain = std::map<MKey, Rational>;

void mcochain_add(MCochain& dst, const MKey& k, const Rational& c);
MCochain differential(const MCochain& c, const FiniteModule& mod);

// ---------------------------------------------------------------------------
// Cohomology blocks (trivial coefficients), graded by (degree q, weight mu).
// ---------------------------------------------------------------------------

// Quotient Z/B of two nested row spans inside Q^ambient. Representatives are
// picked greedily from rref(Z) rows, so the first representative is monic at
// its lexicographically earliest basis key.
class Subquotient {
  public:
    Subquotient(const std::vector<QVector>& z_span, const std::vector<QVector>& b_span, long ambient);

    long dim() const { return static_cast<long>(reps_.size()); }
    long z_dim() const { return z_dim_; }
    long b_dim() const { return b_dim_; }
    const std::vector<QVector>& representatives() const { return reps_; }

    // Coordinates of [v] in the representative basis; nullopt if v not in Z.
    std::optional<QVector> coordinates(const QVector& v) const;

  private:
    long ambient_;
    long z_dim_ = 0, b_dim_ = 0;
    std::vector<QVector> b_basis_; // rref rows
    std::vector<QVector> reps_;
};

struct NotClosed : std::domain_error {
    NotClosed() : std::domain_error("cochain is not closed") {}
};

// One (q, mu) cohomology block of L1 with trivial coefficients.
class CohomologyBlock {
  public:
    CohomologyBlock(int q, int mu, int trunc_n = -1); // trunc_n < 0: use N = mu

    int degree() const { return q_; }
    int weight() const { return mu_; }
    long dim() const { return sub_->dim(); }
    long boundary_dim() const { return sub_->b_dim(); }
    const std::vector<Mono>& basis() const { return monos_; }

    std::vector<Cochain> representatives() const;

    // Coordinates of the class [c] in the representative basis; zero vector
    // means coboundary. Throws NotClosed when d(c) != 0.
    QVector class_of(const Cochain& c) const;

    QVector coordinates_raw(const Cochain& c) const; // expansion in the mono basis
    bool is_exact(const Cochain& c) const;

  private:
    int q_, mu_;
    std::vector<Mono> monos_;
    std::map<Mono, long> index_;
    SparseMatrix d_out_;  // d_q on this block
    std::unique_ptr<Subquotient> sub_;
};

struct CohomologyReport {
    int degree, weight;
    long dim, boundary_dim;
    std::vector<Cochain> representatives;
};

CohomologyReport cohomology(int q, int mu, int trunc_n = -1);

// dim H^q_mu, cached; the workhorse for Betti tables and rigidity scans.
long cohomology_dim(int q, int mu);

// Shared block cache (cohomology blocks are immutable).
const CohomologyBlock& cohomology_block(int q, int mu);

// Module-coefficient cohomology in one (q, s) block, grading s = grade - weight.
struct ModuleCohomology {
    int degree;
    int s;
    long dim;
    std::vector<MKey> basis;
    std::vector<QVector> representatives;
};
ModuleCohomology module_cohomology(const FiniteModule& mod, int q, int s);

// Pentagonal weights e_-(q), e_+(q) = (3q^2 -+ q)/2.
inline long pent_minus(long q) { return (3 * q * q - q) / 2; }
inline long pent_plus(long q) { return (3 * q * q + q) / 2; }

} // namespace l1m
