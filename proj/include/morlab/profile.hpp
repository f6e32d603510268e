#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "morlab/spaces.hpp"

namespace morlab {

/// Morrey weight u(y, r) > 0. Parametric families or a tabulated grid
/// over (center-lattice x dyadic radii).
class WeightProfile {
public:
    static WeightProfile power(double c, double lambda);  // u = c r^lambda
    /// ||chi_B||_X^theta; `extended` switches from the grid (nodewise)
    /// indicator norm to the beyond-box model the admissibility ladders use.
    static WeightProfile chi_norm_power(BaseSpace X, Grid g, double theta,
                                        bool extended = false);
    static WeightProfile weight_measure_power(Weight w, double kappa);  // w(B)^kappa
    static WeightProfile product(WeightProfile u1, WeightProfile u2);
    static WeightProfile tabulated(std::vector<Vec2> centers, std::vector<double> radii,
                                   std::vector<std::vector<double>> values);

    double operator()(const Vec2& y, double r) const;
    std::string label() const;

private:
    WeightProfile() = default;
    struct Power { double c, lambda; };
    struct ChiNorm { BaseSpace X; Grid g; double theta; bool extended; };
    struct Measure { Weight w; double kappa; };
    struct Product { std::shared_ptr<WeightProfile> u1, u2; };
    struct Table {
        std::vector<Vec2> centers;
        std::vector<double> radii;
        std::vector<std::vector<double>> values;  // [center][radius]
    };
    std::variant<Power, ChiNorm, Measure, Product, Table> impl_{Power{1, 0}};
};

struct ProfileLattice {
    std::vector<Vec2> centers;
    double r0 = 0.25;  // base radius; ladder is r0 * 2^j, j = 0..J
    int levels = 8;    // J
};

/// Admissibility certificate for u against a base space at order alpha:
/// measured constants for the large-radius lower bound, the small-radius
/// indicator bound, the truncated dyadic tail sum (plus the strengthened
/// variant with the extra (j+1) factor), and the doubling ratio. The
/// last-term ratio of the tail series is reported so geometric decay can
/// be asserted instead of silently truncating.
struct ProfileCertificate {
    double lower_bound_large_r = 0;   // min u(x, r) over r >= 1
    double chi_over_u_small_r = 0;    // max ||chi_B||_X / u over r < 1
    double tail_sum_max = 0;          // max over lattice of the truncated sum / u(x, r)
    double tail_last_term_ratio = 0;  // max over lattice of t_J / t_{J-1}
    std::optional<double> strengthened_sum_max;
    double doubling_max = 0;          // max u(x, 2r) / u(x, r)
    int levels = 0;
    double alpha = 0;
    bool admissible = false;
    std::string note;
};

/// The tail series is evaluated from j = 0 as in the defining display;
/// certificates note that the companion estimates start at j = 1.
ProfileCertificate w_class_check(const WeightProfile& u, const BaseSpace& X, const Grid& g,
                                 double alpha, bool strengthened, const ProfileLattice& lattice);

}  // namespace morlab
