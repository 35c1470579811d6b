#pragma once

#include "l1m/rational.hpp"

#include <stdexcept>
#include <vector>

namespace l1m {

// Graded bases and structure constants for the Witt algebra, its positive
// part L1 (with finite truncations used as quotient algebras), and the
// Virasoro central extension on an index window.
struct AlgebraKind {
    enum class Family { L1Truncated, WittWindow, VirasoroWindow };
    Family family;
    int lo, hi; // basis indices lo..hi; L1Truncated uses 1..hi

    static AlgebraKind l1_truncated(int n) {
        if (n < 1) throw std::invalid_argument("l1_truncated: N >= 1 required");
        return {Family::L1Truncated, 1, n};
    }
    static AlgebraKind witt_window(int lo, int hi) { return {Family::WittWindow, lo, hi}; }
    static AlgebraKind virasoro_window(int lo, int hi) { return {Family::VirasoroWindow, lo, hi}; }

    bool contains(int i) const { return i >= lo && i <= hi; }
    bool has_center() const { return family == Family::VirasoroWindow; }
};

struct OutOfWindow : std::domain_error {
    explicit OutOfWindow(int idx)
        : std::domain_error("basis index e_" + std::to_string(idx) + " outside the declared window") {}
};

// [e_i, e_j]. At most one basis term plus an optional central coefficient.
struct BracketResult {
    std::vector<std::pair<int, Rational>> terms; // (basis index, coefficient)
    Rational central;                            // coefficient of z (Virasoro only)
};

// [e_i, e_j] = (j - i) e_{i+j}, plus (j^3 - j)/12 * delta_{i+j,0} * z for
// Virasoro. Terms whose index leaves an L1 truncation are dropped (the
// truncation is a quotient algebra, not a subalgebra).
BracketResult bracket(const AlgebraKind& kind, int i, int j);

// Scale factor relating the rescaled basis to e_i: et_1 = e_1 and
// et_i = 6 (i-2)! e_i for i >= 2, so that [et_1, et_i] = et_{i+1} for i >= 2.
Rational rescaled_basis(int i);

} // namespace l1m
