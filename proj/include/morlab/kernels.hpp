#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "morlab/grid.hpp"

namespace morlab {

/// Angular part of a homogeneous kernel, defined on the unit sphere of
/// R^{2n}. Named forms are evaluated algebraically from the direction
/// components (no trig in the hot loop); tabulated samples are supported
/// on the circle (n = 1), linearly interpolated in angle.
class OmegaFunction {
public:
    enum class Id { one, cos1, sin1, cos3, sin2, first_coordinate };

    static OmegaFunction named(Id id);
    static OmegaFunction named(const std::string& id);
    static OmegaFunction tabulated(std::vector<double> angles, std::vector<double> values);

    /// u = x - y1, v = x - y2 (each of dimension n); rho = |(u,v)|.
    double eval(const Vec2& u, const Vec2& v, double rho, int dim) const;
    /// quadrature of Omega over the sphere, divided by the sphere area
    double sphere_mean(int dim) const;
    double sup_abs(int dim) const;
    std::string label() const;
    bool antipodally_odd() const;

private:
    OmegaFunction() = default;
    struct Table {
        std::vector<double> angles, values;
    };
    std::variant<Id, Table> impl_{Id::one};
};

/// K = (|x-y1| + |x-y2|)^{-(2n-alpha)}, 0 < alpha < 2n.
struct FractionalKernel {
    double alpha;
    double bound = 1.0;  // constant of the size estimate
};

/// K = Omega((u,v)/rho) / rho^{2n}; order 0. `mean_zero` declares the
/// cancellation hypothesis; the invariant check measures it.
struct RoughKernel {
    OmegaFunction omega;
    bool mean_zero = true;
    double bound = 0;  // 0: derive 2^n * sup|Omega|
};

/// Smooth rough kernel with declared Holder regularity; order 0.
struct CzKernel {
    OmegaFunction omega;
    double regularity = 1.0;  // Holder exponent of the smoothness estimates
    double bound = 0;
};

using BilinearKernel = std::variant<FractionalKernel, RoughKernel, CzKernel>;

double kernel_order(const BilinearKernel& K);
double kernel_size_bound(const BilinearKernel& K, int dim);
std::string kernel_label(const BilinearKernel& K);

/// Kernel value in convolution coordinates u = x - y1, v = x - y2.
double kernel_uv(const BilinearKernel& K, int dim, const Vec2& u, const Vec2& v);

/// The size majorant C / (|u| + |v|)^{2n - alpha}.
double kernel_majorant_uv(const BilinearKernel& K, int dim, const Vec2& u, const Vec2& v);

/// Integral of |K| over the cell pair around the double singularity,
/// cell = [-h/2, h/2]^n per slot (closed form in 1D for the fractional
/// kernel; recursive subdivision otherwise). Zero for order-0 kernels
/// whose principal-value cell contribution is excluded.
double singular_cell_integral(const BilinearKernel& K, int dim, double h);

/// Flattened evaluator for hot loops.
struct KernelEval {
    int form;  // 0: fractional, 1: homogeneous of order 0
    int dim;
    double expo;  // alpha - 2n
    const OmegaFunction* omega = nullptr;

    explicit KernelEval(const BilinearKernel& K, int dim);

    double operator()(const Vec2& u, const Vec2& v) const {
        double nu = dim == 1 ? std::abs(u[0]) : norm2(u);
        double nv = dim == 1 ? std::abs(v[0]) : norm2(v);
        if (form == 0) {
            double s = nu + nv;
            if (s == 0) return 0;
            if (expo == -1.0) return 1.0 / s;
            if (expo == -2.0) return 1.0 / (s * s);
            return std::pow(s, expo);
        }
        double r2 = nu * nu + nv * nv;
        if (r2 == 0) return 0;
        double rho = std::sqrt(r2);
        double om = omega->eval(u, v, rho, dim);
        double denom = dim == 1 ? r2 : r2 * r2;
        return om / denom;
    }
};

}  // namespace morlab
