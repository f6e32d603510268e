#include "morlab/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace morlab {

OmegaFunction OmegaFunction::named(Id id) {
    OmegaFunction f;
    f.impl_ = id;
    return f;
}

OmegaFunction OmegaFunction::named(const std::string& id) {
    if (id == "one") return named(Id::one);
    if (id == "cos") return named(Id::cos1);
    if (id == "sin") return named(Id::sin1);
    if (id == "cos3") return named(Id::cos3);
    if (id == "sin2") return named(Id::sin2);
    if (id == "first-coordinate") return named(Id::first_coordinate);
    throw std::invalid_argument("unknown angular form: " + id);
}

OmegaFunction OmegaFunction::tabulated(std::vector<double> angles, std::vector<double> values) {
    if (angles.size() != values.size() || angles.size() < 2)
        throw std::invalid_argument("tabulated angular form needs matching angle/value samples");
    OmegaFunction f;
    f.impl_ = Table{std::move(angles), std::move(values)};
    return f;
}

double OmegaFunction::eval(const Vec2& u, const Vec2& v, double rho, int dim) const {
    if (const Id* id = std::get_if<Id>(&impl_)) {
        if (dim == 1) {
            double c = u[0] / rho, s = v[0] / rho;  // cos/sin of the S^1 angle
            switch (*id) {
                case Id::one: return 1;
                case Id::cos1: return c;
                case Id::sin1: return s;
                case Id::cos3: return c * (4 * c * c - 3);
                case Id::sin2: return 2 * s * c;
                case Id::first_coordinate: return c;
            }
        }
        switch (*id) {
            case Id::one: return 1;
            case Id::first_coordinate: return u[0] / rho;
            case Id::cos1: return u[0] / rho;
            case Id::sin1: return v[0] / rho;
            case Id::cos3: {
                double c = u[0] / rho;
                return c * (4 * c * c - 3);
            }
            case Id::sin2: return 2 * (u[0] / rho) * (v[0] / rho);
        }
        return 0;
    }
    const Table& t = std::get<Table>(impl_);
    double th = std::atan2(v[0], u[0]);  // tabulated form is for n = 1 only
    const auto& a = t.angles;
    if (th <= a.front() || th >= a.back()) {
        // periodic wrap between the last and first sample
        double span = (a.front() + 2 * std::numbers::pi) - a.back();
        double d = th < a.front() ? th + 2 * std::numbers::pi - a.back() : th - a.back();
        double s = span > 0 ? d / span : 0;
        return (1 - s) * t.values.back() + s * t.values.front();
    }
    for (std::size_t k = 0; k + 1 < a.size(); ++k)
        if (th >= a[k] && th <= a[k + 1]) {
            double s = (th - a[k]) / (a[k + 1] - a[k]);
            return (1 - s) * t.values[k] + s * t.values[k + 1];
        }
    return t.values.back();
}

double OmegaFunction::sphere_mean(int dim) const {
    if (dim == 1) {
        const int m = 4096;
        double s = 0;
        for (int k = 0; k < m; ++k) {
            double th = 2 * std::numbers::pi * (k + 0.5) / m;
            Vec2 u{std::cos(th), 0}, v{std::sin(th), 0};
            s += eval(u, v, 1.0, 1);
        }
        return s / m;
    }
    // S^3: angles (psi, th, ph), measure sin^2(psi) sin(th)
    const int m = 24;
    double s = 0, wsum = 0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < 2 * m; ++c) {
                double psi = std::numbers::pi * (a + 0.5) / m;
                double th = std::numbers::pi * (b + 0.5) / m;
                double ph = 2 * std::numbers::pi * (c + 0.5) / (2 * m);
                double w = std::sin(psi) * std::sin(psi) * std::sin(th);
                Vec2 u{std::cos(psi), std::sin(psi) * std::cos(th)};
                Vec2 v{std::sin(psi) * std::sin(th) * std::cos(ph),
                       std::sin(psi) * std::sin(th) * std::sin(ph)};
                s += w * eval(u, v, 1.0, 2);
                wsum += w;
            }
    return s / wsum;
}

double OmegaFunction::sup_abs(int dim) const {
    if (const Table* t = std::get_if<Table>(&impl_)) {
        double m = 0;
        for (double v : t->values) m = std::max(m, std::abs(v));
        return m;
    }
    (void)dim;
    return 1.0;  // all named forms are bounded by 1
}

bool OmegaFunction::antipodally_odd() const {
    if (const Id* id = std::get_if<Id>(&impl_))
        return *id == Id::cos1 || *id == Id::sin1 || *id == Id::cos3 ||
               *id == Id::first_coordinate;
    const Table& t = std::get<Table>(impl_);
    // sampled check at the tabulated angles
    for (std::size_t k = 0; k < t.angles.size(); ++k) {
        double th = t.angles[k];
        Vec2 u{std::cos(th), 0}, v{std::sin(th), 0};
        Vec2 mu{-u[0], 0}, mv{-v[0], 0};
        if (std::abs(eval(u, v, 1, 1) + eval(mu, mv, 1, 1)) > 1e-9) return false;
    }
    return true;
}

std::string OmegaFunction::label() const {
    if (const Id* id = std::get_if<Id>(&impl_)) {
        switch (*id) {
            case Id::one: return "one";
            case Id::cos1: return "cos";
            case Id::sin1: return "sin";
            case Id::cos3: return "cos3";
            case Id::sin2: return "sin2";
            case Id::first_coordinate: return "first-coordinate";
        }
    }
    return "tabulated";
}

double kernel_order(const BilinearKernel& K) {
    if (const auto* f = std::get_if<FractionalKernel>(&K)) return f->alpha;
    return 0;
}

double kernel_size_bound(const BilinearKernel& K, int dim) {
    if (const auto* f = std::get_if<FractionalKernel>(&K)) return f->bound;
    double n = dim;
    if (const auto* r = std::get_if<RoughKernel>(&K))
        return r->bound > 0 ? r->bound : std::pow(2.0, n) * r->omega.sup_abs(dim);
    const auto& c = std::get<CzKernel>(K);
    return c.bound > 0 ? c.bound : std::pow(2.0, n) * c.omega.sup_abs(dim);
}

std::string kernel_label(const BilinearKernel& K) {
    if (const auto* f = std::get_if<FractionalKernel>(&K))
        return "fractional(alpha=" + std::to_string(f->alpha) + ")";
    if (const auto* r = std::get_if<RoughKernel>(&K))
        return "rough(" + r->omega.label() + (r->mean_zero ? ",mean-zero" : "") + ")";
    return "cz(" + std::get<CzKernel>(K).omega.label() + ")";
}

KernelEval::KernelEval(const BilinearKernel& K, int d) : dim(d) {
    if (const auto* f = std::get_if<FractionalKernel>(&K)) {
        if (!(f->alpha > 0 && f->alpha < 2 * d))
            throw std::invalid_argument("fractional order must lie in (0, 2n)");
        form = 0;
        expo = f->alpha - 2 * d;
    } else {
        form = 1;
        expo = -2.0 * d;
        omega = std::get_if<RoughKernel>(&K) ? &std::get<RoughKernel>(K).omega
                                             : &std::get<CzKernel>(K).omega;
    }
}

double kernel_uv(const BilinearKernel& K, int dim, const Vec2& u, const Vec2& v) {
    return KernelEval(K, dim)(u, v);
}

double kernel_majorant_uv(const BilinearKernel& K, int dim, const Vec2& u, const Vec2& v) {
    double nu = dim == 1 ? std::abs(u[0]) : norm2(u);
    double nv = dim == 1 ? std::abs(v[0]) : norm2(v);
    double s = nu + nv;
    if (s == 0) return 0;
    return kernel_size_bound(K, dim) * std::pow(s, kernel_order(K) - 2 * dim);
}

namespace {

// recursive integral of (|u| + |v|)^{alpha - 2n} over [-a,a]^{2n}
double frac_cell_recurse(int dim, double alpha, const std::vector<double>& lo,
                         const std::vector<double>& hi, int depth) {
    int d2 = 2 * dim;
    double size = 0, vol = 1;
    std::vector<double> mid(d2);
    bool touches = true;
    for (int k = 0; k < d2; ++k) {
        size = std::max(size, hi[k] - lo[k]);
        vol *= hi[k] - lo[k];
        mid[k] = (lo[k] + hi[k]) / 2;
        if (lo[k] > 0 || hi[k] < 0) touches = false;
    }
    double s = 0;
    if (dim == 1)
        s = std::abs(mid[0]) + std::abs(mid[1]);
    else
        s = std::hypot(mid[0], mid[1]) + std::hypot(mid[2], mid[3]);
    if (!touches || depth >= 28) {
        double floor = size / 4;
        return std::pow(std::max(s, floor), alpha - 2 * dim) * vol;
    }
    double total = 0;
    int parts = 1 << d2;
    for (int mask = 0; mask < parts; ++mask) {
        std::vector<double> l2(d2), h2(d2);
        for (int k = 0; k < d2; ++k) {
            if (mask & (1 << k)) {
                l2[k] = mid[k];
                h2[k] = hi[k];
            } else {
                l2[k] = lo[k];
                h2[k] = mid[k];
            }
        }
        total += frac_cell_recurse(dim, alpha, l2, h2, depth + 1);
    }
    return total;
}

}  // namespace

double singular_cell_integral(const BilinearKernel& K, int dim, double h) {
    const auto* f = std::get_if<FractionalKernel>(&K);
    if (!f) return 0;  // order-0 kernels: principal-value cell excluded
    double a = h / 2, alpha = f->alpha;
    if (dim == 1) {
        // 4 * integral over [0,a]^2 of (u+v)^{alpha-2}
        if (alpha == 1.0) return 4 * (2 * a * std::numbers::ln2);
        return 4 * (std::pow(2.0, alpha) - 2) * std::pow(a, alpha) / (alpha * (alpha - 1));
    }
    std::vector<double> lo(4, -a), hi(4, a);
    return frac_cell_recurse(dim, alpha, lo, hi, 0);
}

}  // namespace morlab
