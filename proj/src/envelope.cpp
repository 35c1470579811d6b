#include "l1m/envelope.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace l1m {

void UEAElement::add(const PBWMono& m, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

UEAElement UEAElement::operator*(const LaurentPoly& c) const {
    UEAElement out;
    for (const auto& [m, v] : terms_) out.add(m, v * c);
    return out;
}

std::optional<int> UEAElement::weight() const {
    std::optional<int> w;
    for (const auto& [m, c] : terms_) {
        int mw = pbw_weight(m);
        if (!w) w = mw;
        else if (*w != mw) return std::nullopt;
    }
    return w;
}

UEAElement UEAElement::eval_at(const Rational& t0) const {
    UEAElement out;
    for (const auto& [m, c] : terms_) out.add(m, LaurentPoly(c.eval(t0)));
    return out;
}

std::string UEAElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (m.empty()) {
            os << "*1";
        } else {
            for (int i : m) os << "*e" << i;
        }
    }
    return os.str();
}

UEAElement normal_order(const std::vector<int>& word, const LaurentPoly& coeff) {
    for (int i : word)
        if (i < 1) throw std::invalid_argument("normal_order: indices >= 1 required");
    if (coeff.is_zero()) return UEAElement();
    // generation-wise rewriting with coalescing: identical intermediate
    // words merge every round, which keeps the branching polynomial
    UEAElement out;
    std::map<std::vector<int>, LaurentPoly> cur{{word, coeff}};
    while (!cur.empty()) {
        std::map<std::vector<int>, LaurentPoly> next;
        auto accumulate = [&next](std::vector<int>&& w, const LaurentPoly& c) {
            if (c.is_zero()) return;
            auto it = next.find(w);
            if (it == next.end()) next.emplace(std::move(w), c);
            else {
                it->second += c;
                if (it->second.is_zero()) next.erase(it);
            }
        };
        for (auto& [w, c] : cur) {
            size_t k = 0;
            while (k + 1 < w.size() && w[k] >= w[k + 1]) ++k;
            if (k + 1 >= w.size()) {
                out.add(w, c);
                continue;
            }
            // w[k] < w[k+1]: swap, plus the bracket contraction
            std::vector<int> swapped = w;
            std::swap(swapped[k], swapped[k + 1]);
            accumulate(std::move(swapped), c);
            std::vector<int> contracted;
            contracted.reserve(w.size() - 1);
            for (size_t t = 0; t < w.size(); ++t) {
                if (t == k) contracted.push_back(w[k] + w[k + 1]);
                else if (t != k + 1) contracted.push_back(w[t]);
            }
            accumulate(std::move(contracted), c * LaurentPoly(Rational(w[k + 1] - w[k])));
        }
        cur = std::move(next);
    }
    return out;
}

// a * e_j with element-level coalescing.
static UEAElement multiply_generator(const UEAElement& a, int j) {
    UEAElement out;
    for (const auto& [m, c] : a.terms()) {
        std::vector<int> word = m;
        word.push_back(j);
        out += normal_order(word, c);
    }
    return out;
}

UEAElement multiply(const UEAElement& a, const UEAElement& b) {
    UEAElement out;
    for (const auto& [mb, cb] : b.terms()) {
        UEAElement acc = a * cb;
        for (int j : mb) acc = multiply_generator(acc, j);
        out += acc;
    }
    return out;
}

std::vector<std::vector<int>> compositions(int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // depth-first, first part largest-first would also work; any fixed order is fine
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= rem; ++part) {
            cur.push_back(part);
            rec(rem - part);
            cur.pop_back();
        }
    };
    rec(r);
    return out;
}

Rational bsa_coefficient(int r, const std::vector<int>& composition) {
    int sum = 0;
    for (int i : composition) {
        if (i < 1) throw std::invalid_argument("bsa_coefficient: parts must be positive");
        sum += i;
    }
    if (sum != r) throw std::invalid_argument("bsa_coefficient: composition must sum to r");

    std::vector<bool> is_partial(r + 1, false);
    int acc = 0;
    for (size_t l = 0; l + 1 < composition.size(); ++l) {
        acc += composition[l];
        is_partial[acc] = true;
    }

    Rational prod(1);
    for (int k = 1; k < r; ++k)
        if (!is_partial[k]) prod *= Rational(static_cast<long>(k) * (r - k));

    // closed form (r-1)!^2 / prod(partial sums) / prod(r - partial sums)
    Rational closed = factorial(r - 1) * factorial(r - 1);
    for (int k = 1; k < r; ++k)
        if (is_partial[k]) closed /= Rational(static_cast<long>(k) * (r - k));
    if (closed != prod)
        throw std::logic_error("bsa_coefficient: product and closed forms disagree");
    return prod;
}

UEAElement bsa_operator(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("bsa_operator: p, q >= 1");
    if (p != 1 && q != 1) throw UnsupportedPQ();
    const int r = p * q;
    const bool row_case = (q == 1); // S_{p,1}: powers t^{p-s}; S_{1,q}: t^{s-q}
    UEAElement out;
    for (const auto& comp : compositions(r)) {
        const int s = static_cast<int>(comp.size());
        const int exp = row_case ? (r - s) : (s - r);
        out += normal_order(comp, LaurentPoly::term(bsa_coefficient(r, comp), exp));
    }
    return out;
}

} // namespace l1m
