#include "morlab/weights.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace morlab {

namespace {

// exact antiderivative of c*|x|^a in 1D over [lo, hi]
double power_interval_integral(double a, double c, double lo, double hi) {
    if (hi <= lo) return 0;
    auto prim = [&](double t) {  // antiderivative of |x|^a, odd extension
        double s = t < 0 ? -1.0 : 1.0;
        return s * std::pow(std::abs(t), a + 1) / (a + 1);
    };
    if (a == 0) return c * (hi - lo);
    if (a <= -1 && lo <= 0 && hi >= 0)
        throw std::invalid_argument("power weight is not integrable across the origin");
    return c * (prim(hi) - prim(lo));
}

double box_min_dist(const Vec2& x0, const Vec2& lo, const Vec2& hi, int dim) {
    double d2 = 0;
    for (int a = 0; a < dim; ++a) {
        double d = 0;
        if (x0[a] < lo[a]) d = lo[a] - x0[a];
        else if (x0[a] > hi[a]) d = x0[a] - hi[a];
        d2 += d * d;
    }
    return std::sqrt(d2);
}

double power_box_recurse(double a, double c, const Vec2& x0, const Vec2& lo, const Vec2& hi,
                         int depth) {
    double sx = hi[0] - lo[0], sy = hi[1] - lo[1];
    double size = std::max(sx, sy);
    double dmin = box_min_dist(x0, lo, hi, 2);
    Vec2 mid{(lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2};
    if (dmin > 2 * size || depth >= 40) {
        if (dmin == 0) {
            // at the depth cap a still-singular box contributes O(size^{a+2})
            double r = std::max(dist(mid, x0), size / 4);
            return c * std::pow(r, a) * sx * sy;
        }
        // tensor two-point Gauss rule on the well-separated leaf
        const double off = 0.5 / std::sqrt(3.0);
        double s = 0;
        for (int qx = -1; qx <= 1; qx += 2)
            for (int qy = -1; qy <= 1; qy += 2) {
                Vec2 pt{mid[0] + qx * off * sx, mid[1] + qy * off * sy};
                s += std::pow(dist(pt, x0), a);
            }
        return c * s / 4 * sx * sy;
    }
    double total = 0;
    for (int qx = 0; qx < 2; ++qx)
        for (int qy = 0; qy < 2; ++qy) {
            Vec2 l2{qx ? mid[0] : lo[0], qy ? mid[1] : lo[1]};
            Vec2 h2{qx ? hi[0] : mid[0], qy ? hi[1] : mid[1]};
            total += power_box_recurse(a, c, x0, l2, h2, depth + 1);
        }
    return total;
}

}  // namespace

double power_box_integral(int dim, double a, double c, const Vec2& x0, const Vec2& lo,
                          const Vec2& hi) {
    if (dim == 1) return power_interval_integral(a, c, lo[0] - x0[0], hi[0] - x0[0]);
    if (a <= -2 && box_min_dist(x0, lo, hi, 2) == 0)
        throw std::invalid_argument("power weight is not integrable across the origin");
    return power_box_recurse(a, c, x0, lo, hi, 0);
}

Weight Weight::tabulated(GridFunction values) {
    Weight w(values.grid());
    for (double v : values.values())
        if (!(v > 0)) throw std::invalid_argument("weight must be positive");
    w.values_ = values.values();
    w.cell_mass_.resize(w.grid_.size());
    for (std::size_t i = 0; i < w.grid_.size(); ++i)
        w.cell_mass_[i] = w.values_[i] * w.grid_.cell_volume(i);
    return w;
}

Weight Weight::power(const Grid& grid, double exponent, double coefficient) {
    if (!(coefficient > 0)) throw std::invalid_argument("weight must be positive");
    Weight w(grid);
    w.power_ = PowerTag{exponent, coefficient};
    w.values_.resize(grid.size());
    w.cell_mass_.resize(grid.size());
    Vec2 origin{0, 0};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Vec2 lo, hi;
        grid.cell(i, lo, hi);
        double m = power_box_integral(grid.dim(), exponent, coefficient, origin, lo, hi);
        w.cell_mass_[i] = m;
        w.values_[i] = m / grid.cell_volume(i);
        if (!(w.values_[i] > 0)) throw std::invalid_argument("weight must be positive");
    }
    return w;
}

double Weight::value(std::size_t node) const { return values_[node]; }
double Weight::cell_mass(std::size_t node) const { return cell_mass_[node]; }

double Weight::measure(const Region& r) const {
    double s = 0;
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        double cov = cell_coverage(grid_, i, r);
        if (cov > 0) s += cell_mass_[i] * (cov / grid_.cell_volume(i));
    }
    return s;
}

double Weight::ball_measure_extended(const Ball& b) const {
    if (power_) {
        if (grid_.dim() == 1)
            return power_interval_integral(power_->a, power_->c, b.center[0] - b.radius,
                                           b.center[0] + b.radius);
        double d0 = norm2(b.center);
        if (d0 < 1e-14)  // origin-centered disk: closed form
            return power_->c * 2 * std::numbers::pi * std::pow(b.radius, power_->a + 2) /
                   (power_->a + 2);
        // polar decomposition around the origin, panel quadrature in angle
        const int panels = 256;
        double total = 0;
        double a = power_->a;
        for (int k = 0; k < panels; ++k) {
            double th = 2 * std::numbers::pi * (k + 0.5) / panels;
            // ray from origin in direction th: radial extent inside the ball
            double cx = b.center[0], cy = b.center[1];
            double proj = cx * std::cos(th) + cy * std::sin(th);
            double disc = proj * proj - (d0 * d0 - b.radius * b.radius);
            if (disc <= 0) continue;
            double r1 = proj - std::sqrt(disc), r2 = proj + std::sqrt(disc);
            r1 = std::max(r1, 0.0);
            if (r2 <= r1) continue;
            // integral of rho^{a+1} drho over [r1, r2]
            total += (std::pow(r2, a + 2) - std::pow(r1, a + 2)) / (a + 2) *
                     (2 * std::numbers::pi / panels);
        }
        return power_->c * total;
    }
    return measure(Region{b});
}

Weight Weight::pow(double t) const {
    if (power_) return Weight::power(grid_, power_->a * t, std::pow(power_->c, t));
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::pow(values_[i], t);
    return Weight::tabulated(GridFunction(grid_, std::move(v)));
}

Weight Weight::operator*(const Weight& o) const {
    if (!(grid_ == o.grid_)) throw std::invalid_argument("weights live on different grids");
    if (power_ && o.power_)
        return Weight::power(grid_, power_->a + o.power_->a, power_->c * o.power_->c);
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
    return Weight::tabulated(GridFunction(grid_, std::move(v)));
}

namespace {

double cube_average(const Weight& w, const Cube& q) {
    double m = measure(w.grid(), Region{q});
    if (!(m > 0)) throw std::invalid_argument("degenerate region");
    return w.measure(Region{q}) / m;
}

}  // namespace

double ap_constant(const Weight& w, double p, std::span<const Cube> cubes) {
    if (!(p > 1)) throw std::invalid_argument("A_p requires p > 1");
    if (cubes.empty()) throw std::invalid_argument("empty cube family");
    double pp = p / (p - 1);
    Weight dual = w.pow(1 - pp);
    double best = 0;
    for (const Cube& q : cubes) {
        double v = cube_average(w, q) * std::pow(cube_average(dual, q), p - 1);
        best = std::max(best, v);
    }
    return best;
}

double apq_constant(const Weight& w, double p, double q, std::span<const Cube> cubes) {
    if (!(1 < p && p < q && std::isfinite(q)))
        throw std::invalid_argument("A_(p,q) requires 1 < p < q < inf");
    if (cubes.empty()) throw std::invalid_argument("empty cube family");
    double pp = p / (p - 1);
    Weight wq = w.pow(q), wd = w.pow(-pp);
    double best = 0;
    for (const Cube& c : cubes) {
        double v = std::pow(cube_average(wq, c), 1 / q) * std::pow(cube_average(wd, c), 1 / pp);
        best = std::max(best, v);
    }
    return best;
}

double multiple_weight_constant(const Weight& w1, const Weight& w2, double p1, double p2,
                                std::optional<double> q, std::span<const Cube> cubes) {
    if (!(p1 > 1 && p2 > 1)) throw std::invalid_argument("multiple weights require p_i > 1");
    if (cubes.empty()) throw std::invalid_argument("empty cube family");
    double p1c = p1 / (p1 - 1), p2c = p2 / (p2 - 1);
    double best = 0;
    if (!q) {
        double p = 1 / (1 / p1 + 1 / p2);
        Weight wstar = w1.pow(p / p1) * w2.pow(p / p2);
        Weight d1 = w1.pow(1 - p1c), d2 = w2.pow(1 - p2c);
        for (const Cube& c : cubes) {
            double v = std::pow(cube_average(wstar, c), 1 / p) *
                       std::pow(cube_average(d1, c), 1 / p1c) *
                       std::pow(cube_average(d2, c), 1 / p2c);
            best = std::max(best, v);
        }
    } else {
        if (!(*q > 0)) throw std::invalid_argument("multiple weights require q > 0");
        Weight nu_q = (w1 * w2).pow(*q);
        Weight d1 = w1.pow(-p1c), d2 = w2.pow(-p2c);
        for (const Cube& c : cubes) {
            double v = std::pow(cube_average(nu_q, c), 1 / *q) *
                       std::pow(cube_average(d1, c), 1 / p1c) *
                       std::pow(cube_average(d2, c), 1 / p2c);
            best = std::max(best, v);
        }
    }
    return best;
}

double reverse_holder_ratio(const Weight& w1, const Weight& w2, double p1, double p2,
                            const Ball& region, const ReverseHolderMode& mode) {
    Region r{region};
    if (!mode.q_power) {
        double p = 1 / (1 / p1 + 1 / p2);
        Weight wstar = w1.pow(p / p1) * w2.pow(p / p2);
        double denom = std::pow(w1.measure(r), p / p1) * std::pow(w2.measure(r), p / p2);
        return wstar.measure(r) / denom;
    }
    double q = 1 / (1 / mode.q1 + 1 / mode.q2);
    Weight nu_q = (w1 * w2).pow(q);
    double denom = std::pow(w1.pow(mode.q1).measure(r), q / mode.q1) *
                   std::pow(w2.pow(mode.q2).measure(r), q / mode.q2);
    return nu_q.measure(r) / denom;
}

}  // namespace morlab
