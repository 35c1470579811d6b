#include "l1m/formal.hpp"

namespace l1m {

PCochain to_pcochain(const Cochain& c) {
    PCochain out;
    for (const auto& [m, coef] : c) out[m] = Poly(coef);
    return out;
}

Cochain eval_pcochain(const PCochain& c, const std::map<int, Rational>& assignment) {
    Cochain out;
    for (const auto& [m, coef] : c) {
        Rational v = coef.eval(assignment);
        if (!v.is_zero()) out[m] = v;
    }
    return out;
}

Cochain constant_part(const PCochain& c) {
    Cochain out;
    for (const auto& [m, coef] : c) {
        if (!coef.is_constant())
            throw std::domain_error("constant_part: coefficient depends on parameters");
        if (!coef.constant_term().is_zero()) out[m] = coef.constant_term();
    }
    return out;
}

bool pcochain_has_vars(const PCochain& c) {
    for (const auto& [m, coef] : c)
        if (!coef.is_constant()) return true;
    return false;
}

const PCochain& FormalConnection::entry(int i, int j) const {
    static const PCochain empty;
    auto it = a.find({i, j});
    return it == a.end() ? empty : it->second;
}

void FormalConnection::set_entry(int i, int j, PCochain c) {
    if (i < 1 || j > n || i > j) throw std::invalid_argument("FormalConnection: bad slot");
    if (c.empty())
        a.erase({i, j});
    else
        a[{i, j}] = std::move(c);
}

std::vector<PCochain> FormalConnection::inputs() const {
    std::vector<PCochain> out;
    for (int i = 1; i <= n; ++i) out.push_back(entry(i, i));
    return out;
}

namespace {

std::map<std::pair<int, int>, PCochain> conn_product_impl(const FormalConnection& x,
                                                          const FormalConnection& y, bool bar_left) {
    std::map<std::pair<int, int>, PCochain> out;
    for (int i = 1; i <= x.n; ++i)
        for (int j = i; j <= x.n; ++j) {
            PCochain acc;
            for (int r = i; r < j; ++r) {
                const PCochain& xe = x.entry(i, r);
                const PCochain& ye = y.entry(r + 1, j);
                if (xe.empty() || ye.empty()) continue;
                PCochain w = bar_left ? wedge(involute(xe), ye) : wedge(xe, ye);
                for (const auto& [m, c] : w) cochain_add(acc, m, c);
            }
            if (!acc.empty()) out[{i, j}] = std::move(acc);
        }
    return out;
}

} // namespace

std::map<std::pair<int, int>, PCochain> conn_product(const FormalConnection& x,
                                                     const FormalConnection& y) {
    return conn_product_impl(x, y, false);
}

std::map<std::pair<int, int>, PCochain> conn_bar_product(const FormalConnection& x,
                                                         const FormalConnection& y) {
    return conn_product_impl(x, y, true);
}

std::map<std::pair<int, int>, PCochain> mc_all_entries(const FormalConnection& a) {
    std::map<std::pair<int, int>, PCochain> out = conn_bar_product(a, a);
    for (auto& [slot, c] : out)
        for (auto& [m, coef] : c) coef = -coef;
    for (const auto& [slot, c] : a.a) {
        PCochain dc = differential(c);
        if (dc.empty()) continue;
        auto& acc = out[slot];
        for (const auto& [m, coef] : dc) cochain_add(acc, m, coef);
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.empty()) it = out.erase(it);
        else ++it;
    }
    return out;
}

PCochain mc_residual(const FormalConnection& a) {
    auto mu = mc_all_entries(a);
    PCochain corner;
    for (const auto& [slot, c] : mu) {
        if (slot == std::make_pair(1, a.n)) corner = c;
        else if (!c.empty()) throw NotCentral(slot);
    }
    return corner;
}

PCochain related_cocycle(const FormalConnection& a) {
    PCochain acc;
    for (int r = 1; r < a.n; ++r) {
        const PCochain& left = a.entry(1, r);
        const PCochain& right = a.entry(r + 1, a.n);
        if (left.empty() || right.empty()) continue;
        PCochain w = wedge(involute(left), right);
        for (const auto& [m, c] : w) cochain_add(acc, m, c);
    }
    return acc;
}

FormalConnection connection_of(const ThreadSpec& spec) {
    std::vector<int> basis = spec.basis_indices();
    const int d = static_cast<int>(basis.size());
    if (d < 2) throw std::invalid_argument("connection_of: module must have dimension >= 2");

    FormalConnection conn;
    conn.n = d - 1;
    const int span = basis.back() - basis.front();
    for (int i = 1; i <= conn.n; ++i)
        for (int j = i; j <= conn.n; ++j) {
            // a(i,j): from basis position d-1-j to basis position d-i (0-based)
            const int from = basis[d - 1 - j];
            const int to = basis[d - i];
            PCochain entry;
            for (int w = 1; w <= span; ++w) {
                if (from + w != to) continue;
                Rational c = thread_act(spec, w, from);
                if (!c.is_zero()) entry[{w}] = Poly(c);
            }
            if (!entry.empty()) conn.set_entry(i, j, std::move(entry));
        }

    // strong Maurer-Cartan: every entry of mu(A) vanishes, corner included
    for (const auto& [slot, c] : mc_all_entries(conn))
        if (!c.empty()) throw std::logic_error("connection_of: module action is not a representation");
    return conn;
}

} // namespace l1m
