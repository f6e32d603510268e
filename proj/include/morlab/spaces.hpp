#pragma once

#include <span>
#include <variant>
#include <vector>

#include "morlab/exponents.hpp"
#include "morlab/grid.hpp"
#include "morlab/weights.hpp"

namespace morlab {

/// L^p with cell-volume quadrature; p = inf is the nodewise max.
struct Lebesgue {
    double p;
};

/// Measure-weighted convention: ||f|| = (integral of |f|^p w dx)^{1/p}.
/// p = inf realizes the associate of the weighted L^1 space,
/// ||f|| = sup |f| / w.
struct WeightedLebesgue {
    double p;
    Weight w;
};

/// Luxemburg norm of the variable exponent space.
struct VariableLebesgue {
    ExponentField p;
};

using BaseSpace = std::variant<Lebesgue, WeightedLebesgue, VariableLebesgue>;

const Grid* space_grid(const BaseSpace& X);  // null for plain Lebesgue
std::string space_label(const BaseSpace& X);

double base_norm(const GridFunction& f, const BaseSpace& X);

/// Analytic associate rule: L^p -> L^{p'}; L^p_w -> L^{p'}_{w^{1-p'}};
/// L^{p(.)} -> L^{p'(.)} (equivalent norm, constant from
/// `duality_equivalence_constant`).
BaseSpace associate_space(const BaseSpace& X);
double associate_norm(const GridFunction& f, const BaseSpace& X);

/// Recorded constant K of the analytic associate rule: 1 for the exact
/// variants, 2 for the variable exponent one.
double duality_equivalence_constant(const BaseSpace& X);

/// Exact discrete associate norm: sup { integral f g : ||g||_X <= 1 } on
/// the grid, via the closed-form extremizer (constant / weighted p) or a
/// Lagrange-multiplier bisection (variable p with p_- > 1).
double dual_pairing_norm(const GridFunction& f, const BaseSpace& X);

struct AssociateCrossCheck {
    double analytic = 0;      // associate norm by the analytic rule
    double pairing_sup = 0;   // sup over extremizer candidates + supplied tests
    double discrete_dual = 0; // exact discrete pairing sup (lower reference)
    bool ok = false;
};

AssociateCrossCheck associate_norm_crosscheck(const GridFunction& f, const BaseSpace& X,
                                              std::span<const GridFunction> extra_tests = {});

/// Norm of the nodewise indicator of the region.
double chi_norm(const BaseSpace& X, const Grid& g, const Region& r);

/// Indicator-of-ball norm without box truncation: closed form for
/// Lebesgue, analytic tail for tagged power weights, declared-limit tail
/// for variable exponents. Used by the weight-profile checker, whose
/// dyadic radii outgrow any feasible box.
double chi_ball_norm_extended(const BaseSpace& X, const Grid& g, const Ball& b);

/// sup over the family of the mean oscillation (L^1 average of |b - b_R|).
double bmo_norm(const GridFunction& b, std::span<const Region> family);

/// Base-space version: ||chi_R (b - b_R)||_X / ||chi_R||_X, sup over family.
double bmo_x_norm(const GridFunction& b, const BaseSpace& X, std::span<const Region> family);

}  // namespace morlab
