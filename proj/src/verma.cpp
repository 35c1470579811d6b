#include "l1m/verma.hpp"

#include <algorithm>

namespace l1m {

VermaParams VermaParams::from_pqt(int p, int q, const Rational& t) {
    if (p < 1 || q < 1) throw std::invalid_argument("VermaParams: p, q >= 1");
    if (t.is_zero()) throw std::invalid_argument("VermaParams: t must be nonzero");
    Rational h = -Rational(static_cast<long>(p) * p - 1, 4) * t - Rational(static_cast<long>(p) * q - 1, 2)
                 - Rational(static_cast<long>(q) * q - 1, 4) * t.inverse();
    return {h, central_charge(t)};
}

void verma_add(VermaVector& dst, const PBWMono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = dst.find(m);
    if (it == dst.end()) {
        dst[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

namespace {

// e_k (k < 0) applied to mono * v, fully commuted through.
void act_negative(int k, const PBWMono& mono, const Rational& coef, const VermaParams& params,
                  VermaVector& out) {
    if (coef.is_zero()) return;
    if (mono.empty()) return; // e_k v = 0 for k < 0
    const int i = mono[0];
    PBWMono tail(mono.begin() + 1, mono.end());

    // e_k e_i X v = e_i (e_k X v) + [e_k, e_i] X v
    VermaVector inner;
    act_negative(k, tail, coef, params, inner);
    for (const auto& [m, c] : inner) {
        std::vector<int> word;
        word.reserve(m.size() + 1);
        word.push_back(i);
        word.insert(word.end(), m.begin(), m.end());
        const UEAElement no = normal_order(word);
        for (const auto& [nm, nc] : no.terms())
            verma_add(out, nm, c * nc.eval(Rational(0)));
    }

    // [e_k, e_i] = (i - k) e_{k+i} + (i^3 - i)/12 delta_{k+i,0} z
    const int s = k + i;
    const Rational f(i - k);
    if (s > 0) {
        std::vector<int> word;
        word.push_back(s);
        word.insert(word.end(), tail.begin(), tail.end());
        const UEAElement no = normal_order(word);
        for (const auto& [nm, nc] : no.terms())
            verma_add(out, nm, coef * f * nc.eval(Rational(0)));
    } else if (s == 0) {
        const long ii = i;
        Rational scalar = f * (params.h + Rational(pbw_weight(tail)))
                          + Rational(ii * ii * ii - ii, 12) * params.c;
        verma_add(out, tail, coef * scalar);
    } else {
        VermaVector deeper;
        act_negative(s, tail, coef * f, params, deeper);
        for (const auto& [m, c] : deeper) verma_add(out, m, c);
    }
}

} // namespace

VermaVector act(int k, const VermaVector& vec, const VermaParams& params) {
    VermaVector out;
    if (k >= 1) {
        for (const auto& [m, c] : vec) {
            std::vector<int> word;
            word.reserve(m.size() + 1);
            word.push_back(k);
            word.insert(word.end(), m.begin(), m.end());
            const UEAElement no = normal_order(word);
            for (const auto& [nm, nc] : no.terms())
                verma_add(out, nm, c * nc.eval(Rational(0)));
        }
    } else if (k == 0) {
        for (const auto& [m, c] : vec)
            verma_add(out, m, c * (params.h + Rational(pbw_weight(m))));
    } else {
        for (const auto& [m, c] : vec) act_negative(k, m, c, params, out);
    }
    return out;
}

namespace {

// Non-increasing PBW monomials of total weight n, lex order.
void level_monos_rec(int n, int max_part, PBWMono& cur, std::vector<PBWMono>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        level_monos_rec(n - part, part, cur, out);
        cur.pop_back();
    }
}

std::vector<PBWMono> level_monomials(int n) {
    std::vector<PBWMono> out;
    PBWMono cur;
    level_monos_rec(n, n, cur, out);
    return out;
}

} // namespace

VermaVector singular_vector(int p, int q, const Rational& t) {
    const VermaParams params = VermaParams::from_pqt(p, q, t);
    const int n = p * q;
    const std::vector<PBWMono> basis = level_monomials(n);
    const std::vector<PBWMono> lvl1 = level_monomials(n - 1);
    const std::vector<PBWMono> lvl2 = n >= 2 ? level_monomials(n - 2) : std::vector<PBWMono>{};

    std::map<PBWMono, long> idx1, idx2;
    for (long i = 0; i < static_cast<long>(lvl1.size()); ++i) idx1[lvl1[i]] = i;
    for (long i = 0; i < static_cast<long>(lvl2.size()); ++i) idx2[lvl2[i]] = i;

    const long rows = static_cast<long>(lvl1.size() + lvl2.size());
    SparseMatrix m(rows, static_cast<long>(basis.size()));
    for (long c = 0; c < static_cast<long>(basis.size()); ++c) {
        VermaVector unit{{basis[c], Rational(1)}};
        for (const auto& [tm, tc] : act(-1, unit, params)) m.add(idx1.at(tm), c, tc);
        for (const auto& [tm, tc] : act(-2, unit, params))
            m.add(static_cast<long>(lvl1.size()) + idx2.at(tm), c, tc);
    }

    std::vector<QVector> ker = kernel_basis(m);
    if (ker.size() != 1) throw NotUnique(static_cast<long>(ker.size()));

    PBWMono ones(n, 1);
    long ones_idx = -1;
    for (long i = 0; i < static_cast<long>(basis.size()); ++i)
        if (basis[i] == ones) { ones_idx = i; break; }
    const Rational lead = ker[0][ones_idx];
    if (lead.is_zero())
        throw std::domain_error("singular_vector: e_1^{pq} coefficient vanishes, cannot normalize");
    const Rational inv = lead.inverse();

    VermaVector w;
    for (long i = 0; i < static_cast<long>(basis.size()); ++i)
        verma_add(w, basis[i], ker[0][i] * inv);
    return w;
}

UEAElement as_operator(const VermaVector& w) {
    UEAElement out;
    for (const auto& [m, c] : w) out.add(m, LaurentPoly(c));
    return out;
}

} // namespace l1m
