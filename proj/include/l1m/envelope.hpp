#pragma once

#include "l1m/laurent.hpp"

#include <map>
#include <optional>
#include <vector>

namespace l1m {

// PBW monomial in U(L1): non-increasing tuple of indices >= 1. The empty
// tuple is the unit. Total weight = index sum.
using PBWMono = std::vector<int>;

inline int pbw_weight(const PBWMono& m) {
    int w = 0;
    for (int i : m) w += i;
    return w;
}

// Element of U(L1) with Laurent-polynomial coefficients in t. Rational
// scalars embed as constant polynomials, so one type covers both the
// symbolic-t operators and their specializations.
class UEAElement {
  public:
    UEAElement() = default;
    explicit UEAElement(const LaurentPoly& c) { if (!c.is_zero()) terms_[{}] = c; }

    static UEAElement generator(int i, const LaurentPoly& c = LaurentPoly(1)) {
        UEAElement e;
        if (!c.is_zero() && i >= 1) e.terms_[{i}] = c;
        return e;
    }
    static UEAElement unit() { return UEAElement(LaurentPoly(1)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<PBWMono, LaurentPoly>& terms() const { return terms_; }
    LaurentPoly coefficient(const PBWMono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    void add(const PBWMono& m, const LaurentPoly& c);

    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    UEAElement operator*(const LaurentPoly& c) const;
    friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms_ == b.terms_; }

    // Weight when homogeneous, nullopt otherwise.
    std::optional<int> weight() const;

    UEAElement eval_at(const Rational& t0) const;

    std::string str() const;

  private:
    std::map<PBWMono, LaurentPoly> terms_;
};

// PBW-straightens an arbitrary word of generators (indices >= 1):
// e_i e_j = e_j e_i + (j - i) e_{i+j} whenever i < j. Terminates because a
// swap lowers the inversion count and a contraction shortens the word.
UEAElement normal_order(const std::vector<int>& word, const LaurentPoly& coeff = LaurentPoly(1));

UEAElement multiply(const UEAElement& a, const UEAElement& b);

// c_r(i_1,...,i_s) over a composition of r: product of k (r - k) over
// 1 <= k < r with k not a partial sum. Computed in both the product form
// and the closed form (r-1)!^2 / prod(partial sums) prod(r - partial sums);
// the two must agree.
Rational bsa_coefficient(int r, const std::vector<int>& composition);

struct UnsupportedPQ : std::domain_error {
    UnsupportedPQ() : std::domain_error("bsa_operator requires p = 1 or q = 1") {}
};

// S_{p,1}(t) (q = 1, powers t^{p-s}) or S_{1,q}(t) (p = 1, powers t^{s-q}),
// summed over all compositions and normal-ordered. The e_1^r coefficient is 1.
UEAElement bsa_operator(int p, int q);

// All compositions (ordered tuples of positive integers) of r.
std::vector<std::vector<int>> compositions(int r);

} // namespace l1m
