#include "l1m/threadmod.hpp"

#include "l1m/liealg.hpp"

#include <algorithm>
#include <sstream>

namespace l1m {

ThreadSpec ThreadSpec::a_module(const Rational& alpha) {
    ThreadSpec s;
    s.variant = Variant::A;
    s.alpha = alpha;
    return s;
}
ThreadSpec ThreadSpec::f_module(const Rational& lambda, const Rational& mu) {
    ThreadSpec s;
    s.variant = Variant::F;
    s.lambda = lambda;
    s.mu = mu;
    return s;
}
ThreadSpec ThreadSpec::mtilde() {
    ThreadSpec s;
    s.variant = Variant::Mtilde;
    return s;
}
ThreadSpec ThreadSpec::mtilde_nonzero() {
    ThreadSpec s;
    s.variant = Variant::MtildeNonzero;
    return s;
}
ThreadSpec ThreadSpec::custom_b(const std::map<int, Rational>& b) {
    ThreadSpec s;
    s.variant = Variant::CustomB;
    s.b = b;
    return s;
}
ThreadSpec ThreadSpec::trivial() {
    ThreadSpec s;
    s.variant = Variant::Trivial;
    s.bounds = {{0, 0}};
    return s;
}

ThreadSpec ThreadSpec::with_bounds(int m, int n) const {
    if (m > n) throw std::invalid_argument("ThreadSpec: bounds m <= n required");
    ThreadSpec s = *this;
    s.bounds = {{m, n}};
    return s;
}

bool ThreadSpec::index_valid(int j) const {
    if (variant == Variant::MtildeNonzero && j == 0) return false;
    if (bounds) return j >= bounds->first && j <= bounds->second;
    return true;
}

std::vector<int> ThreadSpec::basis_indices() const {
    if (!bounds) throw std::invalid_argument("ThreadSpec: bounds required for a finite basis");
    std::vector<int> out;
    for (int j = bounds->first; j <= bounds->second; ++j)
        if (index_valid(j)) out.push_back(j);
    return out;
}

std::string ThreadSpec::name() const {
    std::ostringstream os;
    switch (variant) {
        case Variant::A: os << "A_" << alpha.str(); break;
        case Variant::F: os << "F_{" << lambda.str() << "," << mu.str() << "}"; break;
        case Variant::Mtilde: os << "Mtilde"; break;
        case Variant::MtildeNonzero: os << "Mtilde_nonzero"; break;
        case Variant::CustomB: os << "CustomB"; break;
        case Variant::Trivial: os << "trivial"; break;
    }
    if (bounds) os << "^{" << bounds->first << "," << bounds->second << "}";
    return os.str();
}

namespace {

// Unbounded rules, before subquotient clamping.

Rational mtilde_rule(int i, int j) {
    if (j >= 0) return Rational(j);
    if (i + j <= 0) return Rational(i + j);
    return Rational(1);
}

// CustomB acts through the rescaled basis: et_1 f_j = u_j f_{j+1} with
// u_-1 = u_0 = 0 and u_j = 1 otherwise; et_2 f_j = b_j f_{j+2};
// et_{i+1} = [et_1, et_i] for i >= 2.
Rational customb_u(int j) { return (j == -1 || j == 0) ? Rational(0) : Rational(1); }

Rational customb_tilde(const ThreadSpec& spec, int i, int j) {
    auto clamped = [&spec](int idx, const Rational& v) {
        return spec.index_valid(idx) ? v : Rational(0);
    };
    if (!spec.index_valid(j)) return Rational(0);
    if (i == 1) return clamped(j + 1, customb_u(j));
    if (i == 2) {
        auto it = spec.b.find(j);
        Rational bj = it == spec.b.end() ? Rational(0) : it->second;
        return clamped(j + 2, bj);
    }
    // et_i f_j = et_1(et_{i-1} f_j) - et_{i-1}(et_1 f_j)
    return customb_tilde(spec, i - 1, j) * customb_tilde(spec, 1, j + i - 1)
         - customb_tilde(spec, 1, j) * customb_tilde(spec, i - 1, j + 1);
}

} // namespace

Rational thread_act(const ThreadSpec& spec, int i, int j) {
    if (i < 1) throw std::invalid_argument("thread_act: i >= 1 required");
    if (!spec.index_valid(j)) return Rational(0);
    if (!spec.index_valid(i + j)) return Rational(0);

    switch (spec.variant) {
        case ThreadSpec::Variant::Trivial:
            return Rational(0);
        case ThreadSpec::Variant::A:
            if (i == 1) return Rational(1);
            if (i == 2) return spec.alpha;
            return Rational(0);
        case ThreadSpec::Variant::F:
            return Rational(j) + spec.mu - spec.lambda * Rational(i + 1);
        case ThreadSpec::Variant::Mtilde:
        case ThreadSpec::Variant::MtildeNonzero:
            return mtilde_rule(i, j);
        case ThreadSpec::Variant::CustomB:
            return customb_tilde(spec, i, j) / rescaled_basis(i);
    }
    return Rational(0);
}

LaurentPoly sigma_poly(const ThreadSpec& spec, const UEAElement& s, int j) {
    auto w = s.weight();
    if (!w) throw NotThread("sigma: operator is not weight-homogeneous");
    LaurentPoly total;
    for (const auto& [mono, coef] : s.terms()) {
        Rational path(1);
        int pos = j;
        // rightmost generator acts first
        for (auto it = mono.rbegin(); it != mono.rend() && !path.is_zero(); ++it) {
            path *= thread_act(spec, *it, pos);
            pos += *it;
        }
        if (!path.is_zero()) total += coef * LaurentPoly(path);
    }
    return total;
}

Rational sigma_value(const ThreadSpec& spec, const UEAElement& s, int j) {
    LaurentPoly p = sigma_poly(spec, s, j);
    if (!p.is_constant()) throw NotThread("sigma: operator coefficients depend on t");
    return p.coefficient(0);
}

LaurentPoly f_poly(int j, int p) {
    if (j >= 0) throw std::invalid_argument("f_poly: j < 0 required");
    if (p < 2) throw std::invalid_argument("f_poly: p >= 2 required");
    LaurentPoly out(factorial(p - 1) * factorial(p - 1));
    for (int i = 1; i <= p - 1; ++i) {
        LaurentPoly lin = LaurentPoly::t();
        lin += LaurentPoly(Rational(i + j) / Rational(static_cast<long>(i) * (p - i)));
        out *= lin;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Uniqueness recurrence.
// ---------------------------------------------------------------------------

namespace {

struct SymbolicThread {
    int m, n;
    std::map<int, Poly> b; // b_j, some fixed, some variables

    Poly u(int j) const {
        if (j < m || j + 1 > n) return Poly(Rational(0));
        return (j == -1 || j == 0) ? Poly(Rational(0)) : Poly(Rational(1));
    }
    Poly bval(int j) const {
        if (j < m || j + 2 > n) return Poly(Rational(0));
        auto it = b.find(j);
        return it == b.end() ? Poly(Rational(0)) : it->second;
    }
    // Coefficient polynomials of et_i f_j.
    Poly tilde(int i, int j) const {
        if (j < m || j + i > n) return Poly(Rational(0));
        if (i == 1) return u(j);
        if (i == 2) return bval(j);
        return tilde(i - 1, j) * u(j + i - 1) - u(j) * tilde(i - 1, j + 1);
    }
    // R5_i: ([et_2, et_3] - et_5) f_i
    Poly r5(int i) const {
        return tilde(3, i) * bval(i + 3) - bval(i) * tilde(3, i + 2) - tilde(5, i);
    }
    // R7_i: ([et_2, et_5] - 9/10 et_7) f_i
    Poly r7(int i) const {
        return tilde(5, i) * bval(i + 5) - bval(i) * tilde(5, i + 2)
             - tilde(7, i) * Rational(9, 10);
    }
};

} // namespace

std::map<int, Rational> uniqueness_solve(int m, int n) {
    if (n - m + 1 < 11) throw std::invalid_argument("uniqueness_solve: need n - m + 1 >= 11");

    SymbolicThread st{m, n, {}};
    std::map<int, int> var_of;  // b index -> poly var
    std::map<int, int> idx_of;  // poly var -> b index
    int next_var = 0;
    for (int j = m; j <= n - 2; ++j) {
        if (j == -2) st.b[j] = Poly(Rational(0));
        else if (j == -1 || j == 0) st.b[j] = Poly(Rational(1));
        else {
            var_of[j] = next_var;
            idx_of[next_var] = j;
            st.b[j] = Poly::var(next_var);
            ++next_var;
        }
    }

    std::vector<Poly> equations;
    for (int i = m; i <= n - 5; ++i) equations.push_back(st.r5(i));
    for (int i = m; i <= n - 7; ++i) equations.push_back(st.r7(i));

    std::map<int, Rational> solved; // poly var -> value
    auto substitute_all = [&](const Poly& p) {
        Poly out = p;
        for (const auto& [v, val] : solved) out = out.substitute(v, Poly(val));
        return out;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& eq : equations) {
            Poly cur = substitute_all(eq);
            auto vars = cur.vars();
            if (vars.empty()) {
                if (!cur.is_zero())
                    throw Inconsistent("uniqueness_solve: relation violated: " + cur.str("b"));
                continue;
            }
            if (vars.size() == 1 && cur.degree() == 1) {
                int v = *vars.begin();
                Rational a = cur.linear_coeff(v);
                if (a.is_zero()) continue;
                solved[v] = -cur.constant_term() / a;
                progress = true;
            }
        }
    }

    if (static_cast<int>(solved.size()) != next_var)
        throw Inconsistent("uniqueness_solve: system did not determine every b_j");
    for (const auto& eq : equations) {
        Poly cur = substitute_all(eq);
        if (!cur.is_zero()) throw Inconsistent("uniqueness_solve: residual relation nonzero");
    }

    std::map<int, Rational> out;
    for (int j = m; j <= n - 2; ++j) {
        if (j == -2) out[j] = Rational(0);
        else if (j == -1 || j == 0) out[j] = Rational(1);
        else out[j] = solved.at(var_of.at(j));
    }
    return out;
}

} // namespace l1m
