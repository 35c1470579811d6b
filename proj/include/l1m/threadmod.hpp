#pragma once

#include "l1m/cochain.hpp"
#include "l1m/envelope.hpp"
#include "l1m/laurent.hpp"
#include "l1m/poly.hpp"

#include <map>
#include <optional>

namespace l1m {

// Rule describing a thread L1-module: one-dimensional graded components f_j
// with e_i f_j = (coefficient) f_{i+j}. Optional bounds clamp to the
// subquotient Span(f_m..f_n): targets outside map to zero.
struct ThreadSpec {
    enum class Variant { A, F, Mtilde, MtildeNonzero, CustomB, Trivial };
    Variant variant = Variant::Trivial;
    Rational alpha;        // A
    Rational lambda, mu;   // F
    std::map<int, Rational> b; // CustomB: rescaled-basis coefficients et_2 f_j = b_j f_{j+2}
    std::optional<std::pair<int, int>> bounds;

    static ThreadSpec a_module(const Rational& alpha);
    static ThreadSpec f_module(const Rational& lambda, const Rational& mu);
    static ThreadSpec mtilde();
    static ThreadSpec mtilde_nonzero();
    static ThreadSpec custom_b(const std::map<int, Rational>& b);
    static ThreadSpec trivial();

    ThreadSpec with_bounds(int m, int n) const;

    bool index_valid(int j) const;          // j in range and not the dropped 0
    std::vector<int> basis_indices() const; // requires bounds
    std::string name() const;
};

// Coefficient of f_{i+j} in e_i f_j (0 when clamped away). For CustomB the
// rule is given in the rescaled basis (et_1 chain with the two prescribed
// zeros at f_-1, f_0; et_2 f_j = b_j f_{j+2}; higher et_i via
// et_{i+1} = [et_1, et_i]) and converted back to the e_i normalization.
Rational thread_act(const ThreadSpec& spec, int i, int j);

struct NotThread : std::domain_error {
    explicit NotThread(const std::string& w) : std::domain_error(w) {}
};

// Applies the operator S (weight-homogeneous element of U(L1)) to f_j
// monomial by monomial; the result must be a multiple of f_{j+weight}.
// Coefficients may be Laurent in t; sigma_value extracts the rational
// scalar for an operator with constant coefficients.
LaurentPoly sigma_poly(const ThreadSpec& spec, const UEAElement& s, int j);
Rational sigma_value(const ThreadSpec& spec, const UEAElement& s, int j);

// F_{j,p}(t) = (p-1)!^2 prod_{i=1}^{p-1} (t + (i+j)/(i(p-i))); the scalar by
// which S_{p,1}(t) carries f_j to f_{j+p} in the glued module when j < 0 and
// p + j > 0.
LaurentPoly f_poly(int j, int p);

struct Inconsistent : std::domain_error {
    explicit Inconsistent(const std::string& w) : std::domain_error(w) {}
};

// Solves the defining-relation recurrences R5_i, R7_j for a thread module
// f_m..f_n with the et_1 chain broken at f_-1, f_0, normalized by
// b_-2 = 0, b_-1 = b_0 = 1. Returns the full b_j table for m <= j <= n-2.
std::map<int, Rational> uniqueness_solve(int m, int n);

} // namespace l1m
