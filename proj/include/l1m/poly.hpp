#pragma once

#include "l1m/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace l1m {

// Sparse multivariate polynomial over Q. Variables are small integer ids;
// a monomial is the sorted list of (var, exponent). Deterministic ordering
// comes for free from the map keys.
class Poly {
  public:
    using Monomial = std::vector<std::pair<int, int>>;

    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) terms_[{}] = c; }
    Poly(long c) : Poly(Rational(c)) {}

    static Poly var(int id) {
        Poly p;
        p.terms_[{{id, 1}}] = Rational(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_term() const {
        auto it = terms_.find({});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int t = 0;
            for (const auto& [v, e] : m) t += e;
            if (t > d) d = t;
        }
        return d;
    }
    bool is_affine() const { return degree() <= 1; }

    std::set<int> vars() const {
        std::set<int> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) out.insert(v);
        return out;
    }

    // Coefficient of the degree-1 term in variable v (affine polynomials).
    Rational linear_coeff(int v) const {
        auto it = terms_.find({{v, 1}});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mul_mono(ma, mb), ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rational& c) const {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Substitute variable -> polynomial.
    Poly substitute(int v, const Poly& value) const;

    Rational eval(const std::map<int, Rational>& assignment) const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    std::string str(const std::string& stem = "x") const;

  private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    static Monomial mul_mono(const Monomial& a, const Monomial& b);

    std::map<Monomial, Rational> terms_;
};

} // namespace l1m
