#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "morlab/grid.hpp"

namespace morlab {

/// Discretization of the "sup over all balls": centers on every k-th
/// node, radii dyadic from r_min (default 2h) to r_max (default the box
/// half-width).
struct BallFamilySpec {
    int center_stride = 4;
    double r_min = 0;
    double r_max = 0;
    bool include_subcell_radius = false;  // adds r = h/2 (point-cell average)
};

std::vector<Ball> make_ball_family(const Grid& g, const BallFamilySpec& spec);
std::vector<Cube> make_cube_family(const Grid& g, int center_stride, double side_min,
                                   double side_max);

/// Dyadic radius ladder r_min, 2 r_min, ... capped at r_max.
std::vector<double> dyadic_radii(double r_min, double r_max);

std::vector<Region> as_regions(const std::vector<Ball>& balls);
std::vector<Region> as_regions(const std::vector<Cube>& cubes);

/// Analytic input: a closed-form function with an id, sampled per grid.
/// Keeping inputs analytic lets refinement sweeps resample them exactly.
struct AnalyticInput {
    std::string id;
    std::function<double(const Vec2&)> fn;
};

GridFunction sample(const AnalyticInput& in, const Grid& g);

AnalyticInput gaussian_bump(const Vec2& center, double width, int poly_degree = 0,
                            double amplitude = 1.0);
AnalyticInput box_indicator(const Vec2& center, double side);
AnalyticInput ball_indicator(const Vec2& center, double radius);
/// |x - c|^{-beta} cut to |x - c| <= radius; center is shifted off-node.
AnalyticInput power_bump(const Vec2& center, double beta, double radius);
AnalyticInput dilated(const AnalyticInput& in, double factor);  // f(x / factor)

struct InputFamilySpec {
    int count = 6;
    std::uint64_t seed = 1;
    double support_radius = 1.0;  // supports stay within this distance of the origin
    bool gaussians = true;
    bool indicators = true;
    bool power_bumps = false;
    double power_beta_max = 0.4;
};

/// Deterministic seeded family of test inputs.
std::vector<AnalyticInput> seeded_input_family(const InputFamilySpec& spec, int dim);

/// Smooth random trigonometric polynomial, bounded by `amplitude`.
AnalyticInput random_smooth_field(std::uint64_t seed, double amplitude, int dim);

}  // namespace morlab
