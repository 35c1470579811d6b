#pragma once

#include "l1m/envelope.hpp"
#include "l1m/linalg.hpp"

#include <map>

namespace l1m {

// Highest-weight parameters of a Virasoro Verma module V(h, c). When built
// from (p, q, t), c = 13 + 6t + 6/t and
// h = -(p^2-1)t/4 - (pq-1)/2 - (q^2-1)/(4t) hold exactly.
struct VermaParams {
    Rational h, c;

    static VermaParams from_pqt(int p, int q, const Rational& t);
};

inline Rational central_charge(const Rational& t) {
    return Rational(13) + Rational(6) * t + Rational(6) * t.inverse();
}

// Element of V(h, c): combination of PBW monomials applied to the highest
// weight vector v. Level = common weight of the monomials.
using VermaVector = std::map<PBWMono, Rational>;

void verma_add(VermaVector& dst, const PBWMono& m, const Rational& c);

// Action of e_k. k >= 1 prepends and normal-orders inside U(L1); k <= 0
// commutes rightward with the Virasoro bracket (z acts as the scalar c)
// until it hits v, where e_0 v = h v and e_{<0} v = 0.
VermaVector act(int k, const VermaVector& vec, const VermaParams& params);

struct NotUnique : std::domain_error {
    long kernel_dim;
    explicit NotUnique(long dim)
        : std::domain_error("singular vector space has dimension " + std::to_string(dim)),
          kernel_dim(dim) {}
};

// The singular vector w_{p,q}(t) at level pq, normalized so the coefficient
// of e_1^{pq} is 1. Solved as one exact linear system (components of
// e_{-1} w and e_{-2} w); a kernel of dimension != 1 raises NotUnique.
VermaVector singular_vector(int p, int q, const Rational& t);

// Strips v: the operator S with w = S v, coefficients constant in t.
UEAElement as_operator(const VermaVector& w);

} // namespace l1m
