#pragma once

#include <span>

#include "morlab/families.hpp"
#include "morlab/grid.hpp"
#include "morlab/kernels.hpp"

namespace morlab {

/// Centered maximal function over a radius ladder (averages of |f| over
/// balls centered at each node).
GridFunction hl_maximal(const GridFunction& f, std::span<const double> radii);

/// Sharp maximal function at exponent delta in (0, 1]: per node the max
/// over family balls containing it of the mean oscillation of |f|^delta,
/// raised to 1/delta.
GridFunction sharp_maximal(const GridFunction& f, double delta, std::span<const Ball> family);

/// Unnormalized Riesz potential, 0 < alpha < n; the singular cell is
/// integrated analytically.
GridFunction riesz_potential(const GridFunction& f, double alpha);
double riesz_potential_at(const GridFunction& f, double alpha, std::size_t node);

/// Kernel (|x-y1| + |x-y2|)^{-(2n-alpha)}, full double quadrature with
/// the analytic singular-cell rule.
GridFunction bilinear_fractional(const GridFunction& f, const GridFunction& g, double alpha);
double bilinear_fractional_at(const GridFunction& f, const GridFunction& g, double alpha,
                              std::size_t node);

struct TruncationMode {
    bool product = false;  // exclude on max(|u|,|v|) <= eps instead of the joint ball
};

/// Truncated bilinear integral at one node; the exclusion region is the
/// 2n-ball |x-y1|^2 + |x-y2|^2 <= eps^2 tested on cell centers.
/// Requires eps >= h.
double truncated_bilinear(const GridFunction& f, const GridFunction& g, const BilinearKernel& K,
                          double eps, std::size_t node, const TruncationMode& mode = {});

/// All rungs of a decreasing eps ladder in one pass over the cell pairs.
std::vector<double> truncated_bilinear_ladder(const GridFunction& f, const GridFunction& g,
                                              const BilinearKernel& K,
                                              std::span<const double> eps_ladder,
                                              std::size_t node, const TruncationMode& mode = {});

/// Truncated value at every node (threaded).
GridFunction truncated_bilinear_field(const GridFunction& f, const GridFunction& g,
                                      const BilinearKernel& K, double eps,
                                      const TruncationMode& mode = {});

/// sup over the ladder of |T_eps|.
double maximal_truncated(const GridFunction& f, const GridFunction& g, const BilinearKernel& K,
                         std::size_t node, std::span<const double> eps_ladder);

/// Ball-decomposed extension: local truncated part on data cut to 2B
/// plus the three absolutely convergent tail integrals. Requires the
/// node to lie in B.
double extended_bilinear(const GridFunction& f, const GridFunction& g, const BilinearKernel& K,
                         const Ball& B, std::size_t node, double eps_floor = 0);

/// b(x) T_eps(f, g)(x) - T_eps(.., b f_slot, ..)(x), slot in {1, 2}.
double bilinear_commutator(const GridFunction& b, int slot, const GridFunction& f,
                           const GridFunction& g, const BilinearKernel& K, double eps,
                           std::size_t node, const TruncationMode& mode = {});

/// Same value through the (b(x) - b(y_slot)) kernel factor; kept as an
/// independent computation path for the two-route identity check.
double bilinear_commutator_kernel_path(const GridFunction& b, int slot, const GridFunction& f,
                                       const GridFunction& g, const BilinearKernel& K,
                                       double eps, std::size_t node,
                                       const TruncationMode& mode = {});

double extended_bilinear_commutator(const GridFunction& b, int slot, const GridFunction& f,
                                    const GridFunction& g, const BilinearKernel& K,
                                    const Ball& B, std::size_t node, double eps_floor = 0);

/// |Q|^{alpha/n} avg_Q(f) avg_Q(g) chi_Q.
GridFunction averaging_operator(const GridFunction& f, const GridFunction& g, const Cube& Q,
                                double alpha);

/// One-linear operators for the linear commutator: a truncated singular
/// integral with kernel Omega((x-y)')/|x-y|^n, or the Riesz potential.
struct LinearOperatorSpec {
    enum class Kind { singular, riesz } kind = Kind::singular;
    OmegaFunction omega = OmegaFunction::named(OmegaFunction::Id::cos1);
    double eps = 0;    // singular truncation (>= h)
    double alpha = 0;  // riesz order
};

double linear_apply(const LinearOperatorSpec& op, const GridFunction& f, std::size_t node);
double linear_commutator(const LinearOperatorSpec& op, const GridFunction& b,
                         const GridFunction& f, std::size_t node);

/// Number of worker threads used by the field evaluators (0 = hardware).
void set_thread_count(int n);
int thread_count();

}  // namespace morlab
