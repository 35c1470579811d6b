#include "l1m/liealg.hpp"

namespace l1m {

BracketResult bracket(const AlgebraKind& kind, int i, int j) {
    if (!kind.contains(i)) throw OutOfWindow(i);
    if (!kind.contains(j)) throw OutOfWindow(j);

    BracketResult out;
    Rational coeff(j - i);
    if (!coeff.is_zero() && kind.contains(i + j)) out.terms.emplace_back(i + j, coeff);
    if (kind.has_center() && i + j == 0) {
        long jj = j;
        out.central = Rational(jj * jj * jj - jj, 12);
    }
    return out;
}

Rational rescaled_basis(int i) {
    if (i < 1) throw std::invalid_argument("rescaled_basis: i >= 1 required");
    if (i == 1) return Rational(1);
    return Rational(6) * factorial(i - 2);
}

} // namespace l1m
