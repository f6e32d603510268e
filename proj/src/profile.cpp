#include "morlab/profile.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace morlab {

WeightProfile WeightProfile::power(double c, double lambda) {
    if (!(c > 0)) throw std::invalid_argument("profile coefficient must be positive");
    WeightProfile u;
    u.impl_ = Power{c, lambda};
    return u;
}

WeightProfile WeightProfile::chi_norm_power(BaseSpace X, Grid g, double theta,
                                            bool extended) {
    WeightProfile u;
    u.impl_ = ChiNorm{std::move(X), g, theta, extended};
    return u;
}

WeightProfile WeightProfile::weight_measure_power(Weight w, double kappa) {
    WeightProfile u;
    u.impl_ = Measure{std::move(w), kappa};
    return u;
}

WeightProfile WeightProfile::product(WeightProfile u1, WeightProfile u2) {
    WeightProfile u;
    u.impl_ = Product{std::make_shared<WeightProfile>(std::move(u1)),
                      std::make_shared<WeightProfile>(std::move(u2))};
    return u;
}

WeightProfile WeightProfile::tabulated(std::vector<Vec2> centers, std::vector<double> radii,
                                       std::vector<std::vector<double>> values) {
    if (values.size() != centers.size())
        throw std::invalid_argument("tabulated profile: one row per center expected");
    for (const auto& row : values) {
        if (row.size() != radii.size())
            throw std::invalid_argument("tabulated profile: one value per radius expected");
        for (double v : row)
            if (!(v > 0)) throw std::invalid_argument("profile values must be positive");
    }
    WeightProfile u;
    u.impl_ = Table{std::move(centers), std::move(radii), std::move(values)};
    return u;
}

double WeightProfile::operator()(const Vec2& y, double r) const {
    if (const auto* p = std::get_if<Power>(&impl_)) return p->c * std::pow(r, p->lambda);
    if (const auto* cn = std::get_if<ChiNorm>(&impl_)) {
        double nrm = cn->extended ? chi_ball_norm_extended(cn->X, cn->g, Ball(y, r))
                                  : chi_norm(cn->X, cn->g, Region{Ball(y, r)});
        return std::pow(nrm, cn->theta);
    }
    if (const auto* m = std::get_if<Measure>(&impl_))
        return std::pow(m->w.ball_measure_extended(Ball(y, r)), m->kappa);
    if (const auto* pr = std::get_if<Product>(&impl_)) return (*pr->u1)(y, r) * (*pr->u2)(y, r);
    const Table& t = std::get<Table>(impl_);
    // nearest tabulated center, radius interpolated geometrically
    std::size_t ci = 0;
    double best = 1e300;
    for (std::size_t i = 0; i < t.centers.size(); ++i) {
        double d = dist(t.centers[i], y);
        if (d < best) { best = d; ci = i; }
    }
    const auto& radii = t.radii;
    if (r <= radii.front()) return t.values[ci].front();
    if (r >= radii.back()) return t.values[ci].back();
    for (std::size_t j = 0; j + 1 < radii.size(); ++j)
        if (r >= radii[j] && r <= radii[j + 1]) {
            double s = std::log(r / radii[j]) / std::log(radii[j + 1] / radii[j]);
            return std::exp((1 - s) * std::log(t.values[ci][j]) +
                            s * std::log(t.values[ci][j + 1]));
        }
    return t.values[ci].back();
}

std::string WeightProfile::label() const {
    std::ostringstream os;
    if (const auto* p = std::get_if<Power>(&impl_))
        os << p->c << "*r^" << p->lambda;
    else if (const auto* cn = std::get_if<ChiNorm>(&impl_))
        os << "chi-norm(" << space_label(cn->X) << ")^" << cn->theta;
    else if (const auto* m = std::get_if<Measure>(&impl_))
        os << "w(B)^" << m->kappa;
    else if (std::holds_alternative<Product>(impl_))
        os << "product";
    else
        os << "tabulated";
    return os.str();
}

ProfileCertificate w_class_check(const WeightProfile& u, const BaseSpace& X, const Grid& g,
                                 double alpha, bool strengthened,
                                 const ProfileLattice& lattice) {
    if (lattice.levels < 4)
        throw std::invalid_argument("series truncation unreliable");
    if (lattice.centers.empty())
        throw std::invalid_argument("profile lattice needs at least one center");
    if (!(alpha >= 0 && alpha < 2 * g.dim()))
        throw std::invalid_argument("alpha must lie in [0, 2n)");

    ProfileCertificate cert;
    cert.levels = lattice.levels;
    cert.alpha = alpha;
    cert.note = "tail series evaluated from j = 0 as displayed; companion estimates sum from j = 1";

    double min_large = 1e300, max_small = 0, sum_max = 0, strong_max = 0, last_ratio = 0,
           doubling = 0;
    int J = lattice.levels;
    for (const Vec2& x : lattice.centers) {
        // scan the same dyadic radii as the tail ladder plus the unit range
        for (double r = lattice.r0; r <= 4.0 * (1 + 1e-12); r *= 2) {
            double ur = u(x, r);
            if (!(ur > 0)) throw std::invalid_argument("profile values must be positive");
            if (r >= 1) min_large = std::min(min_large, ur);
            if (r < 1) {
                double chi = chi_ball_norm_extended(X, g, Ball(x, r));
                max_small = std::max(max_small, chi / ur);
            }
            doubling = std::max(doubling, u(x, 2 * r) / ur);
        }
        double r = lattice.r0;
        double chi_r = chi_ball_norm_extended(X, g, Ball(x, r));
        double ur = u(x, r);
        double sum = 0, strong = 0, t_prev = 0, t_last = 0;
        for (int j = 0; j <= J; ++j) {
            double rj = std::ldexp(r, j + 1);  // 2^{j+1} r
            double chi_j = chi_ball_norm_extended(X, g, Ball(x, rj));
            double term = std::pow(2.0, (j + 1) * alpha) * (chi_r / chi_j) * u(x, rj);
            sum += term;
            strong += (j + 1) * term;
            t_prev = t_last;
            t_last = term;
        }
        sum_max = std::max(sum_max, sum / ur);
        strong_max = std::max(strong_max, strong / ur);
        if (t_prev > 0) last_ratio = std::max(last_ratio, t_last / t_prev);
    }
    cert.lower_bound_large_r = min_large;
    cert.chi_over_u_small_r = max_small;
    cert.tail_sum_max = sum_max;
    cert.tail_last_term_ratio = last_ratio;
    if (strengthened) cert.strengthened_sum_max = strong_max;
    cert.doubling_max = doubling;
    cert.admissible = last_ratio < 1.0 && std::isfinite(sum_max) && min_large > 0 &&
                      std::isfinite(max_small);
    return cert;
}

}  // namespace morlab
