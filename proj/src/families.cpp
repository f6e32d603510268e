#include "morlab/families.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace morlab {

std::vector<double> dyadic_radii(double r_min, double r_max) {
    std::vector<double> out;
    for (double r = r_min; r <= r_max * (1 + 1e-12); r *= 2) out.push_back(r);
    return out;
}

std::vector<Ball> make_ball_family(const Grid& g, const BallFamilySpec& spec) {
    double h = g.spacing();
    double rmin = spec.r_min > 0 ? spec.r_min : 2 * h;
    double rmax = spec.r_max > 0 ? spec.r_max : g.half_width();
    std::vector<double> radii = dyadic_radii(rmin, rmax);
    if (spec.include_subcell_radius) radii.insert(radii.begin(), h / 2);
    std::vector<Ball> out;
    for (int iy = 0; iy < g.npts(1); iy += spec.center_stride) {
        for (int ix = 0; ix < g.npts(0); ix += spec.center_stride) {
            Vec2 c = g.node(g.index(ix, iy));
            for (double r : radii) out.emplace_back(c, r);
        }
        if (g.dim() == 1) break;
    }
    return out;
}

std::vector<Cube> make_cube_family(const Grid& g, int center_stride, double side_min,
                                   double side_max) {
    std::vector<Cube> out;
    for (int iy = 0; iy < g.npts(1); iy += center_stride) {
        for (int ix = 0; ix < g.npts(0); ix += center_stride) {
            Vec2 c = g.node(g.index(ix, iy));
            for (double s : dyadic_radii(side_min, side_max)) out.emplace_back(c, s);
        }
        if (g.dim() == 1) break;
    }
    return out;
}

std::vector<Region> as_regions(const std::vector<Ball>& balls) {
    std::vector<Region> out;
    out.reserve(balls.size());
    for (const Ball& b : balls) out.emplace_back(b);
    return out;
}

std::vector<Region> as_regions(const std::vector<Cube>& cubes) {
    std::vector<Region> out;
    out.reserve(cubes.size());
    for (const Cube& c : cubes) out.emplace_back(c);
    return out;
}

GridFunction sample(const AnalyticInput& in, const Grid& g) {
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = in.fn(g.node(i));
    return GridFunction(g, std::move(v));
}

namespace {
std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}
}  // namespace

AnalyticInput gaussian_bump(const Vec2& center, double width, int poly_degree,
                            double amplitude) {
    std::string id = "gauss(c=" + fmt(center[0]) + "," + fmt(center[1]) + ",s=" + fmt(width) +
                     ",d=" + std::to_string(poly_degree) + ")";
    return {id, [=](const Vec2& x) {
                double d = dist(x, center);
                double poly = poly_degree == 0 ? 1.0 : std::pow((x[0] - center[0]) / width,
                                                                poly_degree);
                return amplitude * poly * std::exp(-d * d / (2 * width * width));
            }};
}

AnalyticInput box_indicator(const Vec2& center, double side) {
    std::string id = "chi_box(c=" + fmt(center[0]) + "," + fmt(center[1]) + ",s=" + fmt(side) + ")";
    Cube q(center, side);
    return {id, [=](const Vec2& x) { return contains(q, x) ? 1.0 : 0.0; }};
}

AnalyticInput ball_indicator(const Vec2& center, double radius) {
    std::string id = "chi_ball(c=" + fmt(center[0]) + "," + fmt(center[1]) + ",r=" + fmt(radius) + ")";
    Ball b(center, radius);
    return {id, [=](const Vec2& x) { return contains(b, x) ? 1.0 : 0.0; }};
}

AnalyticInput power_bump(const Vec2& center, double beta, double radius) {
    std::string id = "power(c=" + fmt(center[0]) + ",beta=" + fmt(beta) + ",r=" + fmt(radius) + ")";
    return {id, [=](const Vec2& x) {
                double d = dist(x, center);
                if (d > radius || d == 0) return d == 0 ? std::pow(1e-6, -beta) : 0.0;
                return std::pow(d, -beta);
            }};
}

AnalyticInput dilated(const AnalyticInput& in, double factor) {
    auto base = in.fn;
    return {in.id + "@dil" + fmt(factor),
            [base, factor](const Vec2& x) { return base({x[0] / factor, x[1] / factor}); }};
}

std::vector<AnalyticInput> seeded_input_family(const InputFamilySpec& spec, int dim) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<AnalyticInput> out;
    int kinds = (spec.gaussians ? 1 : 0) + (spec.indicators ? 1 : 0) + (spec.power_bumps ? 1 : 0);
    if (kinds == 0) return out;
    double R = spec.support_radius;
    while (static_cast<int>(out.size()) < spec.count) {
        double u = unit(rng);
        Vec2 c{(unit(rng) - 0.5) * R, 0};
        if (dim == 2) c[1] = (unit(rng) - 0.5) * R;
        if (spec.gaussians && u < 1.0 / kinds) {
            double width = 0.1 + 0.3 * unit(rng);
            int deg = static_cast<int>(unit(rng) * 3);
            out.push_back(gaussian_bump(c, width, deg, 0.5 + unit(rng)));
        } else if (spec.indicators && (u < 2.0 / kinds || !spec.power_bumps)) {
            double s = 0.2 + 0.6 * unit(rng);
            out.push_back(box_indicator(c, s));
        } else if (spec.power_bumps) {
            double beta = 0.1 + (spec.power_beta_max - 0.1) * unit(rng);
            c[0] += 1e-3;  // off-node so the sampled values stay finite
            out.push_back(power_bump(c, beta, 0.2 + 0.3 * unit(rng)));
        }
    }
    return out;
}

AnalyticInput random_smooth_field(std::uint64_t seed, double amplitude, int dim) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    struct Term {
        double a, kx, ky, phase;
    };
    std::vector<Term> terms;
    double total = 0;
    for (int k = 0; k < 5; ++k) {
        Term t{unit(rng), std::round(unit(rng) * 3), dim == 2 ? std::round(unit(rng) * 3) : 0,
               unit(rng) * 3.14159};
        total += std::abs(t.a);
        terms.push_back(t);
    }
    for (Term& t : terms) t.a *= amplitude / total;
    return {"smooth(seed=" + std::to_string(seed) + ")", [terms](const Vec2& x) {
                double s = 0;
                for (const Term& t : terms)
                    s += t.a * std::sin(t.kx * x[0] + t.ky * x[1] + t.phase);
                return s;
            }};
}

}  // namespace morlab
