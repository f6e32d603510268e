#pragma once

#include <optional>
#include <vector>

#include "morlab/grid.hpp"

namespace morlab {

/// Variable exponent p(.) sampled on a grid, values in [1, inf].
/// p(x) = infinity is representable (std::numeric_limits infinity).
class ExponentField {
public:
    ExponentField(Grid grid, std::vector<double> values,
                  std::optional<double> p_at_infinity = std::nullopt);
    static ExponentField constant(const Grid& grid, double p);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    double p_minus() const { return p_minus_; }
    double p_plus() const { return p_plus_; }
    const std::optional<double>& p_at_infinity() const { return p_inf_; }

private:
    Grid grid_;
    std::vector<double> values_;
    double p_minus_, p_plus_;
    std::optional<double> p_inf_;
};

/// rho_p(f): integral of |f|^p(x) over the nodes with finite exponent
/// plus the max of |f| over the nodes with p(x) = infinity.
double modular(const GridFunction& f, const ExponentField& p);

/// inf{lambda > 0 : rho_p(f/lambda) <= 1} by bisection, relative
/// tolerance 1e-8; returns 0 for the zero function.
double luxemburg_norm(const GridFunction& f, const ExponentField& p);

/// Pointwise conjugate 1/p + 1/p' = 1, with 1 <-> infinity.
ExponentField dual_exponent(const ExponentField& p);

double conjugate_exponent(double p);

struct LogHolderConstants {
    double local;        // smallest C with |p(x)-p(y)| <= C / log(e + 1/|x-y|)
    double at_infinity;  // smallest C with |p(x)-p_inf| <= C / log(e + |x|)
};

/// Grid-level certificate (a lower bound for the true constants),
/// scanned over all sampled node pairs. Requires p_plus < inf and a
/// declared limit at infinity.
LogHolderConstants log_holder_constants(const ExponentField& p);

/// 1/p_Q = average of 1/p over Q; p = inf contributes 0.
double harmonic_mean_exponent(const ExponentField& p, const Cube& Q);

}  // namespace morlab
