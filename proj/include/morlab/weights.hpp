#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "morlab/grid.hpp"

namespace morlab {

/// Strictly positive weight bound to a grid. A closed-form tag
/// (c*|x|^a) switches cell masses to the analytic antiderivative so
/// integrably-singular weights are quadratured correctly near x = 0.
class Weight {
public:
    static Weight tabulated(GridFunction values);
    static Weight power(const Grid& grid, double exponent, double coefficient = 1.0);

    const Grid& grid() const { return grid_; }
    bool has_power_tag() const { return power_.has_value(); }
    double power_exponent() const { return power_ ? power_->a : 0.0; }
    double power_coefficient() const { return power_ ? power_->c : 1.0; }

    /// nodewise value (cell average for tagged power weights)
    double value(std::size_t node) const;
    /// integral of w over the cell of the node
    double cell_mass(std::size_t node) const;

    /// integral of w over region ∩ box (partial cells scaled by covered fraction)
    double measure(const Region& r) const;
    /// integral of w over the full ball, ignoring the box truncation
    /// (closed form for tagged power weights)
    double ball_measure_extended(const Ball& b) const;

    Weight pow(double t) const;
    Weight operator*(const Weight& other) const;

private:
    Weight(Grid g) : grid_(g) {}
    struct PowerTag { double a, c; };
    Grid grid_;
    std::vector<double> values_;      // nodewise
    std::vector<double> cell_mass_;   // per node
    std::optional<PowerTag> power_;
};

/// Integral of c*|x - x0|^a over a box, a > -dim (recursive subdivision
/// around the singular point; exact antiderivative in 1D).
double power_box_integral(int dim, double a, double c, const Vec2& x0,
                          const Vec2& lo, const Vec2& hi);

/// Muckenhoupt-style constants over a declared cube family; each value
/// is a certified lower bound for the true supremum.
double ap_constant(const Weight& w, double p, std::span<const Cube> cubes);
double apq_constant(const Weight& w, double p, double q, std::span<const Cube> cubes);

/// Multiple-weight constant: q absent uses the product class with
/// 1/p = 1/p1 + 1/p2 and w* = w1^{p/p1} w2^{p/p2}; q given uses the
/// fractional class with nu = w1 w2.
double multiple_weight_constant(const Weight& w1, const Weight& w2, double p1, double p2,
                                std::optional<double> q, std::span<const Cube> cubes);

struct ReverseHolderMode {
    bool q_power = false;  // false: product form; true: q-power form
    double q1 = 0, q2 = 0;
};

/// Lower-boundedness ratio of the bilinear reverse Holder inequality
/// on one ball.
double reverse_holder_ratio(const Weight& w1, const Weight& w2, double p1, double p2,
                            const Ball& region, const ReverseHolderMode& mode = {});

}  // namespace morlab
