#pragma once

#include "l1m/cochain.hpp"

#include <map>
#include <optional>
#include <vector>

namespace l1m {

// Spectral sequence of the grade filtration on C^*(L1, V) for a finite
// thread-like module V, restricted to one total grading mu = grade - weight.
// Filtration degree is the module grade itself, so the flag condition
// g V_i <= V_{i+1} is built into the types (e_i raises the grade by i >= 1).
//
// The module differential carries a global sign choice; pages and dimensions
// do not depend on it, the signs of the d_r matrices do.
class FilteredComplex {
  public:
    FilteredComplex(FiniteModule mod, int mu, int max_degree, int d_sign = +1);

    int mu() const { return mu_; }
    int max_degree() const { return max_degree_; }
    int min_grade() const { return mod_.grades.front(); }
    int max_grade() const { return mod_.grades.back(); }
    const std::vector<MKey>& basis(int n) const { return bases_.at(n); }

    QVector to_vector(const MCochain& c, int n) const;
    MCochain to_cochain(const QVector& v, int n) const;
    QVector apply_d(const QVector& v, int n) const;

    // Z_r^{p,n} = { x in F_p C^n : d x in F_{p+r} C^{n+1} } as a basis.
    std::vector<QVector> z_space(int p, int n, int r) const;
    // Z_{r-1}^{p+1,n} + d Z_{r-1}^{p-r+1,n-1}.
    std::vector<QVector> boundary_space(int p, int n, int r) const;
    // E_r^{p,n} as a subquotient of C^n.
    Subquotient page(int p, int n, int r) const;
    long page_dim(int p, int n, int r) const;

    // The induced differential d_r: E_r^{p,n} -> E_r^{p+r,n+1} in the pages'
    // representative bases.
    SparseMatrix page_differential(int p, int n, int r) const;

    // Pages stabilize once r exceeds the grade span (the filtration is
    // finite); E_r = E_inf from there on.
    int stable_r() const { return max_grade() - min_grade() + 1; }

  private:
    FiniteModule mod_;
    int mu_, max_degree_, sign_;
    std::vector<std::vector<MKey>> bases_;
    std::vector<std::map<MKey, long>> index_;
    std::vector<SparseMatrix> d_; // d_[n]: C^n -> C^{n+1}, n < max_degree
};

// Follows the class of a filtration-p element x through the pages: reports
// the first r with d_r[x] != 0 (as coordinates in E_r^{p+r, n+1}) together
// with the page, or r_max exhaustion. `died` is set when [x] fails to
// survive to some page (a lower differential hit it).
struct PageTrace {
    bool died = false;
    int died_at_r = -1;
    int first_nonzero_r = -1;          // -1: all differentials vanish up to r_max
    QVector dr_coords;                  // class of d_r [x] on page first_nonzero_r
    std::optional<QVector> target_coords; // class of the comparison element there
};

PageTrace follow_element(const FilteredComplex& fc, const MCochain& x, int n, int r_max,
                         const MCochain* compare_target = nullptr);

} // namespace l1m
