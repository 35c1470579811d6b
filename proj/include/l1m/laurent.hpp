#pragma once

#include "l1m/rational.hpp"

#include <map>
#include <string>

namespace l1m {

// Laurent polynomial in one formal variable t over Q. No zero coefficients
// are stored; the zero polynomial has an empty coefficient map.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) { if (!c.is_zero()) coeff_[0] = c; }
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly term(const Rational& c, int exp) {
        LaurentPoly p;
        if (!c.is_zero()) p.coeff_[exp] = c;
        return p;
    }
    static LaurentPoly t(int exp = 1) { return term(Rational(1), exp); }

    bool is_zero() const { return coeff_.empty(); }
    bool is_constant() const {
        return coeff_.empty() || (coeff_.size() == 1 && coeff_.begin()->first == 0);
    }
    int lowest_exponent() const { return coeff_.empty() ? 0 : coeff_.begin()->first; }
    int highest_exponent() const { return coeff_.empty() ? 0 : coeff_.rbegin()->first; }

    Rational coefficient(int exp) const {
        auto it = coeff_.find(exp);
        return it == coeff_.end() ? Rational(0) : it->second;
    }
    const std::map<int, Rational>& coefficients() const { return coeff_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeff_) add_term(c, e);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeff_) add_term(-c, e);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeff_)
            for (const auto& [eb, cb] : b.coeff_) r.add_term(ca * cb, ea + eb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const Rational& c) {
        if (c.is_zero()) { coeff_.clear(); return *this; }
        for (auto& [e, v] : coeff_) v *= c;
        return *this;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.coeff_ < b.coeff_; }

    // Exact evaluation at a nonzero rational point (zero is fine when no
    // negative exponents are present).
    Rational eval(const Rational& t0) const {
        Rational r(0);
        for (const auto& [e, c] : coeff_) r += c * pow(t0, e);
        return r;
    }

    std::string str(const std::string& var = "t") const;

  private:
    void add_term(const Rational& c, int exp) {
        auto it = coeff_.find(exp);
        if (it == coeff_.end()) {
            if (!c.is_zero()) coeff_[exp] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeff_.erase(it);
        }
    }
    static Rational pow(const Rational& t0, int e) {
        if (e == 0) return Rational(1);
        Rational base = e > 0 ? t0 : t0.inverse();
        Rational r(1);
        for (int i = 0; i < (e > 0 ? e : -e); ++i) r *= base;
        return r;
    }

    std::map<int, Rational> coeff_;
};

} // namespace l1m
