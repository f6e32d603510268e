#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "morlab/families.hpp"
#include "morlab/kernels.hpp"
#include "morlab/morrey.hpp"
#include "morlab/operators.hpp"
#include "morlab/profile.hpp"
#include "morlab/report.hpp"
#include "morlab/spaces.hpp"

namespace morlab {

struct GridSpec {
    int dim = 1;
    Vec2 lower{-2, -2};
    Vec2 upper{2, 2};
    double h = 1.0 / 128;
    Grid build() const { return Grid(dim, lower, upper, h); }
    GridSpec refined() const {
        GridSpec s = *this;
        s.h /= 2;
        return s;
    }
};

/// Spaces, weights, and exponents are grid-bound, so experiments carry
/// factories and rebuild them per resolution rung.
using SpaceFactory = std::function<BaseSpace(const Grid&)>;
using ExponentFactory = std::function<ExponentField(const Grid&)>;
using ProfileFactory = std::function<WeightProfile(const Grid&)>;

struct ExperimentBase {
    std::string id;
    std::string anchor;  // free-form annotation echoed into the report
    GridSpec grid;
};

// ---------------------------------------------------------------- pairing
struct HolderCheckParams : ExperimentBase {
    SpaceFactory space;
    std::vector<AnalyticInput> fs, gs;  // table runs over the cross product
    double tol = 1e-6;
    std::optional<SpaceFactory> associate_override;  // designed-to-fail knob
    int refinements = 1;
};
Report holder_check(const HolderCheckParams&);

// ------------------------------------------------------ indicator duality
struct ChiDualityParams : ExperimentBase {
    SpaceFactory space;
    std::vector<Ball> balls;  // radii should span >= 3 dyadic decades
    double lower_tol = 1e-6;
    double stability = 0.10;
    int refinements = 1;
    double family_extension = 2.0;  // radius-range stretch for the sweep
};
Report chi_duality_check(const ChiDualityParams&);

// --------------------------------------------------- indicator products
struct CharacteristicParams : ExperimentBase {
    SpaceFactory X1, X2, Y;
    double alpha = 0;
    enum class Form { ball_extension, cube_necessity, linear } form = Form::ball_extension;
    std::vector<Vec2> centers;
    std::vector<double> scales;  // radii or sides, dyadic
    double drift = 0.5;          // allowed spread factor across scales
};
Report characteristic_condition(const CharacteristicParams&);

// ------------------------------------------------------ ball independence
struct BallIndependenceParams : ExperimentBase {
    AnalyticInput f, g;
    BilinearKernel kernel = FractionalKernel{1.0};
    std::vector<std::pair<Ball, Ball>> pairs;
    std::vector<Vec2> points;  // snapped to nodes; must lie in both balls
    double tol = 1e-3;
    double tol_refined = 0;  // 0: tol / 2
    double noise_floor = 1e-12;
    int refinements = 1;
    bool drop_tails = false;  // designed-to-fail knob
};
Report ball_independence_check(const BallIndependenceParams&);

// ------------------------------------------------------- operator norms
struct AveragingOp {
    Cube Q{Vec2{0, 0}, 1.0};
    double alpha = 0;
};
struct BilinearOp {
    BilinearKernel kernel = FractionalKernel{1.0};
    double eps_floor = 0;
};
struct CommutatorOp {
    BilinearKernel kernel = FractionalKernel{1.0};
    AnalyticInput b;
    int slot = 1;
    double eps_floor = 0;
};
/// One-linear operator (the second input slot is ignored); optionally
/// its commutator with a symbol b.
struct LinearOp {
    LinearOperatorSpec spec;
    bool commutator = false;
    AnalyticInput b;
};
using OpSpec = std::variant<AveragingOp, BilinearOp, CommutatorOp, LinearOp>;

struct OperatorNormParams : ExperimentBase {
    OpSpec op;
    SpaceFactory in1, in2, out;
    std::optional<ProfileFactory> profile_in1, profile_in2, profile_out;  // Morrey wrapping
    BallFamilySpec morrey_family;
    std::vector<AnalyticInput> inputs;  // pairs (inputs[i], inputs[j]) over the index list
    std::vector<std::pair<int, int>> index_pairs;  // empty: diagonal pairs (i, i)
    std::vector<double> dilations{1.0};
    int refinements = 1;
    double stability = 0.25;
    bool divide_by_bmo = false;  // commutator denominators carry bmo_norm(b)
    BallFamilySpec bmo_family;
};
Report operator_norm_estimate(const OperatorNormParams&);

// -------------------------------------------------- averaging equivalence
struct AveragingEquivalenceParams : ExperimentBase {
    SpaceFactory X1, X2, Y;
    double alpha_condition = 0;
    double alpha_operator = 0;  // mismatch is the designed-to-fail knob
    std::vector<Cube> cubes;
    std::vector<AnalyticInput> inputs;
    double tracking_factor = 3.0;
};
Report averaging_equivalence_check(const AveragingEquivalenceParams&);

// --------------------------------------------------------- BMO necessity
struct BmoNecessityParams : ExperimentBase {
    BilinearKernel kernel = FractionalKernel{1.0};
    std::vector<AnalyticInput> b_family;  // indexed k = 1..K
    std::vector<AnalyticInput> inputs;
    std::vector<Vec2> eval_points;
    /// With probe cubes the headline is the mean of |commutator| over
    /// probe_cubes[i] with the diagonal input pair (inputs[i], inputs[i]),
    /// the cube/support geometry of the necessity argument; otherwise the
    /// pointwise max over eval_points and input cross pairs is used.
    std::vector<Cube> probe_cubes;
    double eps = 0;  // >= h; 0 picks 8h
    BallFamilySpec bmo_family;
    std::vector<std::pair<Cube, Cube>> shifted_cube_pairs;
    bool expect_growth = true;
    double plateau_band = 0.15;
    double osc_factor_tol = 1e-6;
};
Report bmo_necessity_experiment(const BmoNecessityParams&);

// -------------------------------------------------- truncation convergence
struct TruncationConvergenceParams : ExperimentBase {
    AnalyticInput f, g;
    BilinearKernel kernel = FractionalKernel{1.0};
    std::vector<Vec2> points;
    double eps0 = 0.125;
    int rungs = 8;  // ladder eps0 * 2^{-j}, j = 0..rungs-1; >= 4
    double tol = 1e-3;
    TruncationMode mode{};
};
Report truncation_convergence_check(const TruncationConvergenceParams&);

// ------------------------------------------------------- sharp-maximal
struct FeffermanSteinParams : ExperimentBase {
    ExponentFactory exponent;
    std::vector<AnalyticInput> inputs;  // mean-zero compactly supported bumps
    double delta = 1.0;
    BallFamilySpec family;
    int refinements = 1;
    double stability = 0.30;
};
Report fefferman_stein_check(const FeffermanSteinParams&);

// ------------------------------------------------------------ axioms
struct BfsAxiomParams : ExperimentBase {
    SpaceFactory space;
    std::uint64_t seed = 7;
    int samples = 6;
    Cube embed_region{Vec2{0, 0}, 1.0};
    bool defective_signed = false;  // designed-to-fail knob: signed "norm"
};
Report bfs_axiom_check(const BfsAxiomParams&);

// ------------------------------------------------------------ profiles
struct ProfileAdmissibilityParams : ExperimentBase {
    ProfileFactory profile;
    SpaceFactory space;
    double alpha = 0;
    bool strengthened = false;
    ProfileLattice lattice;
    bool expect_admissible = true;
};
Report profile_admissibility_check(const ProfileAdmissibilityParams&);

}  // namespace morlab
