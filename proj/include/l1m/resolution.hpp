#pragma once

#include "l1m/envelope.hpp"
#include "l1m/threadmod.hpp"
#include "l1m/verma.hpp"

#include <optional>
#include <vector>

namespace l1m {

// Stage k of the rank-2 free resolution at t = -3/2. Stage 1 is the row
// (S_{1,1}, S_{1,2}); stage k >= 2 is the 2x2 matrix
//   [  S_{1,3k-2}   S_{2k-1,2} ]
//   [ -S_{2k-1,1}  -S_{1,3k-1} ]
// mapping V(e-(k)) (+) V(e+(k)) -> V(e-(k-1)) (+) V(e+(k-1)). The outer
// column entries come from the closed formula, S_{2k-1,2} from the singular
// vector solver.
struct ResolutionStage {
    int k;
    std::vector<std::vector<UEAElement>> entries; // 1x2 for k = 1, else 2x2
};

const ResolutionStage& delta_stage(int k);

// delta_k . delta_{k+1} = 0 in U(L1): the composite entries
// sum_l delta_{k+1}[l][j] * delta_k[i][l] vanish identically (k >= 1).
// k = 0 checks the augmentation: every delta_1 entry has positive weight.
struct ExactnessFailure : std::logic_error {
    explicit ExactnessFailure(const std::string& w) : std::logic_error(w) {}
};
void verify_exactness(int k);

// D_k matrix of sigma-values for a thread module at grading s; entries whose
// source or target component is missing from a finite module are dropped via
// the component masks.
struct DkMatrix {
    int k;
    long s;
    // component grades: stage k >= 1 has components at s + e_-(k), s + e_+(k);
    // stage 0 has the single component at s
    std::vector<long> src_grades, dst_grades;
    std::vector<bool> src_alive, dst_alive;
    std::vector<std::vector<Rational>> m; // dst x src, full 2x2 (or 2x1) shape
};

DkMatrix dk_matrix(const ThreadSpec& spec, int k, long s);

struct ThreadCohomologyReport {
    long s;
    int k_max;
    std::vector<long> dims; // dims[q] = dim H^q_s(L1, M), q = 0..k_max
};

// Cohomology of the K-complex built from D_0 .. D_{k_max}.
ThreadCohomologyReport thread_cohomology(const ThreadSpec& spec, long s, int k_max = 4);

// Oracle equivalence: resolution route vs direct Chevalley-Eilenberg with
// module coefficients, degree by degree. Returns the first mismatch, if any.
struct CrossValidateMismatch {
    long s;
    int degree;
    long resolution_dim, cochain_dim;
};
std::optional<CrossValidateMismatch> cross_validate(const ThreadSpec& spec, long s, int max_degree);

FiniteModule finite_module(const ThreadSpec& spec);

} // namespace l1m
