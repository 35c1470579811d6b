#pragma once

#include "l1m/formal.hpp"
#include "l1m/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace l1m {

// ---------------------------------------------------------------------------
// Defining systems.  Slots are solved triangularly by window length inside
// weight blocks; the indeterminacy at each solved slot is parameterized by
// the nonzero cohomology classes of the slot's degree at every weight up to
// the slot's window weight (coboundary directions do not move the corner
// class and are omitted). Later slots impose linear solvability constraints
// on the parameters; affine constraints eliminate parameters exactly.
// ---------------------------------------------------------------------------

struct ParamInfo {
    std::pair<int, int> slot; // (i, j)
    int weight;               // weight of the harmonic kernel direction
    int rep_index;            // which representative of H^{deg}_{weight}
};

struct DefiningSystem {
    FormalConnection conn;                 // entries with live parameters only
    std::vector<int> live_params;
    std::map<int, ParamInfo> param_info;   // by variable id (live and eliminated)
    bool undefined = false;
    std::string undefined_reason;
    bool affine_ok = true;                 // false: a nonlinear constraint appeared
    int degree = 0;                        // degree of the product class
    int total_weight = 0;                  // sum of input weights
};

// Solves da(i,j) = sum abar(i,r) a(r+1,j) for all (i,j) != (1,n) with the
// given closed weight-homogeneous inputs on the second diagonal. The corner
// a(1,n) is fixed to zero. Undefined products are reported, not thrown.
DefiningSystem solve_defining_system(const std::vector<Cochain>& inputs);

// Numeric variant: kernel coefficients taken from `assignment` by parameter
// id (missing ids are zero). Returns nullopt when some slot is inconsistent
// under that assignment.
std::optional<FormalConnection> solve_defining_system_numeric(
    const std::vector<Cochain>& inputs, const std::map<int, Rational>& assignment);

// ---------------------------------------------------------------------------
// Verdicts.
// ---------------------------------------------------------------------------

enum class Trivial { Yes, No, Undetermined };

struct MasseyVerdict {
    bool defined = true;
    std::string undefined_reason;

    enum class Kind { Point, Affine, SearchBounded } kind = Kind::Point;
    long value_dim = 0;
    Trivial trivial = Trivial::Undetermined;

    int degree = 0;
    std::vector<int> block_weights;            // target weights with H^deg != 0
    std::vector<long> block_dims;
    QVector offset;                             // class coords at params = 0 (concatenated)
    std::vector<QVector> directions;            // affine directions (concatenated coords)
    long param_count = 0;

    FormalConnection certificate;               // numeric defining system
    Cochain corner_cocycle;                     // c(A) of the certificate

    bool single_valued() const { return kind == Kind::Point || (kind == Kind::Affine && value_dim == 0); }
};

MasseyVerdict product_set(const std::vector<Cochain>& inputs);

// ---------------------------------------------------------------------------

struct SingularC : std::domain_error {
    SingularC() : std::domain_error("gauge matrix is singular") {}
};

// A' = C^{-1} A C for an invertible lower-triangular scalar matrix C given
// in matrix positions (size n+2 x n+2 when A has n+1 inputs... size matches
// A's matrix form, i.e. (n+1) x (n+1) for n inputs).
FormalConnection gauge_transform(const FormalConnection& a,
                                 const std::vector<std::vector<Rational>>& c);

// ---------------------------------------------------------------------------

struct RigidityReport {
    bool nontrivial = false;
    bool single_valued = false;
    bool kernel_weights_below_slots = false; // every live kernel direction sits strictly
                                             // below its slot's window weight
    bool lower_blocks_vanish = false;        // H^deg_w = 0 for reachable w < target
    std::vector<int> reachable_weights;
    long value_dim = 0;
};

// Weight-minimality certification for a product targeting H^degree_weight.
RigidityReport rigidity_check(const std::vector<Cochain>& inputs, int target_weight);

// ---------------------------------------------------------------------------

struct SpectralCheckReport {
    bool ok = false;
    int expected_r = 0;   // the filtration jump
    int first_nonzero_r = -1;
    bool class_matched = false;
    bool corner_nonzero = false;
    std::string detail;
};

// Verifies the representation/spectral-sequence bridge: the connection of
// `conn_spec` extended with the terminal class omega has
// d_1(f_bot @ omega) = ... = d_{jump-1}(...) = 0 and
// d_jump(f_bot @ omega) = f_top @ [c(A)] in the spectral sequence of
// `ss_spec` (usually the same module with the trivial line at grade 0
// included). When `expect_zero` is set the differential must vanish through
// the jump page instead.
SpectralCheckReport spectral_check(const ThreadSpec& conn_spec, const ThreadSpec& ss_spec,
                                   const Cochain& omega, bool expect_zero = false);

// Extends a strong-MC connection with a terminal class: solves the terminal
// column triangularly (parameters set to zero). Nullopt when inconsistent.
std::optional<FormalConnection> extend_with_terminal(const FormalConnection& conn,
                                                     const Cochain& omega);

} // namespace l1m
