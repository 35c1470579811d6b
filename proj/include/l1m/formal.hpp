#pragma once

#include "l1m/cochain.hpp"
#include "l1m/poly.hpp"
#include "l1m/threadmod.hpp"

#include <map>
#include <string>
#include <vector>

namespace l1m {

// Cochain with polynomial coefficients: the carrier for defining systems
// whose slot indeterminacies are symbolic parameters. Parameter-free
// connections are the constant case.
using PCochain = CochainT<Poly>;

PCochain to_pcochain(const Cochain& c);
Cochain eval_pcochain(const PCochain& c, const std::map<int, Rational>& assignment);
Cochain constant_part(const PCochain& c);        // throws if any coefficient has variables
bool pcochain_has_vars(const PCochain& c);

// Involution a -> (-1)^{k+1} a on A^k, extended entrywise to matrices.
template <class K>
CochainT<K> involute(const CochainT<K>& c) {
    CochainT<K> out;
    for (const auto& [m, coef] : c) {
        int k = static_cast<int>(m.size());
        out[m] = (k % 2 == 0) ? coef * K(Rational(-1)) : coef;
    }
    return out;
}

// Lower-triangular matrix over the cochain algebra in defining-system labels:
// entry a(i,j) for 1 <= i <= j <= n, where a(i,i) are the inputs and a(1,n)
// is the corner. Matrix operations are expressed directly on the labels:
// (A.B)(i,j) = sum_{r=i}^{j-1} a(i,r) b(r+1,j).
struct FormalConnection {
    int n = 0;                                     // number of inputs
    std::map<std::pair<int, int>, PCochain> a;     // missing entries are zero

    const PCochain& entry(int i, int j) const;
    void set_entry(int i, int j, PCochain c);
    bool has(int i, int j) const { return a.count({i, j}) != 0; }

    std::vector<PCochain> inputs() const; // a(1,1)..a(n,n)
};

// Label-space matrix products: plain (i,j) -> sum_r x(i,r) ^ y(r+1,j), and
// the variant with the involution applied to the left factor.
std::map<std::pair<int, int>, PCochain> conn_product(const FormalConnection& x,
                                                     const FormalConnection& y);
std::map<std::pair<int, int>, PCochain> conn_bar_product(const FormalConnection& x,
                                                         const FormalConnection& y);

// mu(A) = dA - Abar.A, all entries.
std::map<std::pair<int, int>, PCochain> mc_all_entries(const FormalConnection& a);

struct NotCentral : std::domain_error {
    std::pair<int, int> slot;
    explicit NotCentral(std::pair<int, int> s)
        : std::domain_error("Maurer-Cartan residual nonzero at slot (" + std::to_string(s.first) + "," +
                            std::to_string(s.second) + ")"),
          slot(s) {}
};

// The corner entry of mu(A); throws NotCentral when any other entry is
// nonzero. For a solved defining system with zero corner this is -c(A).
PCochain mc_residual(const FormalConnection& a);

// c(A) = sum_{r=1}^{n-1} abar(1,r) a(r+1,n).
PCochain related_cocycle(const FormalConnection& a);

// The representation-induced connection of a finite thread module: entries
// a(i,j) = sum_w (coefficient of f_{basis[D-i]} in e_w f_{basis[D-1-j]}) e^w
// for the ordered basis f_{basis[0]} < ... < f_{basis[D-1]}. Satisfies the
// strong Maurer-Cartan equation exactly (checked).
FormalConnection connection_of(const ThreadSpec& spec);

} // namespace l1m
