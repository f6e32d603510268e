#include "morlab/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace morlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ExponentField::ExponentField(Grid grid, std::vector<double> values,
                             std::optional<double> p_at_infinity)
    : grid_(grid), values_(std::move(values)), p_inf_(p_at_infinity) {
    if (values_.size() != grid_.size())
        throw std::invalid_argument("value count does not match grid size");
    p_minus_ = kInf;
    p_plus_ = 1;
    for (double v : values_) {
        if (std::isnan(v) || v < 1)
            throw std::invalid_argument("exponent values must lie in [1, inf]");
        p_minus_ = std::min(p_minus_, v);
        p_plus_ = std::max(p_plus_, v);
    }
}

ExponentField ExponentField::constant(const Grid& grid, double p) {
    return ExponentField(grid, std::vector<double>(grid.size(), p), p);
}

double modular(const GridFunction& f, const ExponentField& p) {
    if (!(f.grid() == p.grid()))
        throw std::invalid_argument("function and exponent live on different grids");
    const Grid& g = f.grid();
    double integral = 0, sup = 0;
    bool has_inf = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double pi = p[i];
        double a = std::abs(f[i]);
        if (std::isinf(pi)) {
            has_inf = true;
            sup = std::max(sup, a);
        } else {
            integral += std::pow(a, pi) * g.cell_volume(i);
        }
    }
    return integral + (has_inf ? sup : 0.0);
}

double luxemburg_norm(const GridFunction& f, const ExponentField& p) {
    double fmax = 0;
    for (double v : f.values()) fmax = std::max(fmax, std::abs(v));
    if (fmax == 0) return 0;

    double lo = 1e-12;
    double hi = fmax * (f.grid().box_volume() + 1);
    auto scaled_modular = [&](double lambda) {
        GridFunction s(f.grid(), std::vector<double>(f.values()));
        for (double& v : s.values()) v /= lambda;
        return modular(s, p);
    };
    if (scaled_modular(hi) > 1) return hi;  // cannot happen for finite boxes; safety
    while (scaled_modular(lo) <= 1 && lo > 1e-300) lo /= 16;
    for (int it = 0; it < 200 && (hi - lo) > 1e-8 * hi; ++it) {
        double mid = (hi + lo) / 2;
        if (scaled_modular(mid) <= 1)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double conjugate_exponent(double p) {
    if (p == 1) return kInf;
    if (std::isinf(p)) return 1;
    return p / (p - 1);
}

ExponentField dual_exponent(const ExponentField& p) {
    std::vector<double> q(p.values().size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = conjugate_exponent(p[i]);
    std::optional<double> qi;
    if (p.p_at_infinity()) qi = conjugate_exponent(*p.p_at_infinity());
    return ExponentField(p.grid(), std::move(q), qi);
}

LogHolderConstants log_holder_constants(const ExponentField& p) {
    if (std::isinf(p.p_plus()))
        throw std::invalid_argument("requires bounded exponent");
    if (!p.p_at_infinity())
        throw std::invalid_argument("requires a declared limit at infinity");
    const Grid& g = p.grid();
    const double e = std::exp(1.0);
    std::size_t n = g.size();
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = g.node(i);

    double c_local = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = dist(pts[i], pts[j]);
            double c = std::abs(p[i] - p[j]) * std::log(e + 1 / d);
            c_local = std::max(c_local, c);
        }
    double c_inf = 0;
    double pinf = *p.p_at_infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double c = std::abs(p[i] - pinf) * std::log(e + norm2(pts[i]));
        c_inf = std::max(c_inf, c);
    }
    return {c_local, c_inf};
}

double harmonic_mean_exponent(const ExponentField& p, const Cube& Q) {
    const Grid& g = p.grid();
    std::vector<double> recip(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        recip[i] = std::isinf(p[i]) ? 0.0 : 1.0 / p[i];
    double avg = region_average(GridFunction(g, std::move(recip)), Region{Q});
    if (avg <= 0) return kInf;
    return 1.0 / avg;
}

}  // namespace morlab
