#include "l1m/poly.hpp"

#include <sstream>

namespace l1m {

Poly::Monomial Poly::mul_mono(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        } else if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

Poly Poly::substitute(int v, const Poly& value) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Poly term(c);
        Poly power(Rational(1));
        for (const auto& [mv, me] : m) {
            if (mv == v) {
                for (int k = 0; k < me; ++k) power *= value;
            } else {
                Poly x;
                Monomial single{{mv, me}};
                x.terms_[single] = Rational(1);
                power *= x;
            }
        }
        out += term * power;
    }
    return out;
}

Rational Poly::eval(const std::map<int, Rational>& assignment) const {
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("Poly::eval: unassigned variable");
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        out += t;
    }
    return out;
}

std::string Poly::str(const std::string& stem) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        bool shown = false;
        if (a != Rational(1) || m.empty()) {
            os << a.str();
            shown = true;
        }
        for (const auto& [v, e] : m) {
            if (shown) os << "*";
            os << stem << v;
            if (e > 1) os << "^" << e;
            shown = true;
        }
    }
    return os.str();
}

} // namespace l1m
