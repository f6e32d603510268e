#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "morlab/operators.hpp"
#include "morlab/spaces.hpp"

using namespace morlab;

namespace {

Grid grid1d(double half = 2, double h = 1.0 / 128) { return Grid(1, {-half, 0}, {half, 0}, h); }

GridFunction chi(const Grid& g, double a, double b) {
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        double x = g.node(i)[0];
        v[i] = x >= a && x <= b ? 1.0 : 0.0;
    }
    return GridFunction(g, std::move(v));
}

GridFunction bump(const Grid& g, double c, double w) {
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        double x = g.node(i)[0] - c;
        v[i] = std::exp(-x * x / (2 * w * w));
    }
    return GridFunction(g, std::move(v));
}

std::size_t node_at(const Grid& g, double x) {
    return static_cast<std::size_t>(std::lround((x - g.lower()[0]) / g.spacing()));
}

// independent quadrature of the truncated bilinear integral (plain loops,
// kernel written out from its formula)
double brute_truncated_fractional(const GridFunction& f, const GridFunction& g, double alpha,
                                  double eps, double x) {
    const Grid& gr = f.grid();
    double s = 0;
    for (std::size_t a = 0; a < gr.size(); ++a)
        for (std::size_t b = 0; b < gr.size(); ++b) {
            double u = x - gr.node(a)[0], v = x - gr.node(b)[0];
            if (u * u + v * v <= eps * eps) continue;
            double k = std::pow(std::abs(u) + std::abs(v), alpha - 2);
            s += k * f[a] * g[b] * gr.cell_volume(a) * gr.cell_volume(b);
        }
    return s;
}

}  // namespace

TEST_CASE("centered maximal function") {
    Grid g = grid1d(4, 1.0 / 64);
    std::vector<double> radii{g.spacing() / 2, 0.25, 0.5, 1.0, 2.0};
    GridFunction c(g, 1.5);
    GridFunction mc = hl_maximal(c, radii);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(mc[i] == doctest::Approx(1.5));

    // best average of chi_[0,1] seen from x = 2 is 1/4, at radius 2
    GridFunction f = chi(g, 0, 1);
    GridFunction mf = hl_maximal(f, radii);
    CHECK(mf[node_at(g, 2.0)] == doctest::Approx(0.25).epsilon(0.02));

    // with a sub-cell radius in the family the maximal dominates |f|
    GridFunction wavy = bump(g, 0.3, 0.4);
    GridFunction mw = hl_maximal(wavy, radii);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(mw[i] >= wavy[i] - 1e-12);
}

TEST_CASE("sharp maximal function") {
    Grid g(1, {0, 0}, {1, 0}, 1.0 / 128);
    std::vector<Ball> fam;
    for (double c = 0; c <= 1.0 + 1e-12; c += 1.0 / 16)
        for (double r : {0.125, 0.25, 0.5}) fam.emplace_back(Vec2{c, 0}, r);
    fam.emplace_back(Vec2{0.5, 0}, 0.5);  // the full interval

    GridFunction c(g, 2.0);
    GridFunction sc = sharp_maximal(c, 0.7, fam);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(sc[i] == doctest::Approx(0.0));

    std::vector<double> lin(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) lin[i] = g.node(i)[0];
    GridFunction ramp(g, lin);
    GridFunction sr = sharp_maximal(ramp, 1.0, fam);
    double mx = 0;
    for (std::size_t i = 0; i < g.size(); ++i) mx = std::max(mx, sr[i]);
    CHECK(mx == doctest::Approx(0.25).epsilon(0.02));
    CHECK_THROWS(sharp_maximal(ramp, 1.5, fam));

    // per ball, the mean oscillation is at most twice the mean of |f|;
    // nodewise this caps the sharp function by the family-matched maximal
    Grid g2 = grid1d(2, 1.0 / 64);
    GridFunction f = bump(g2, 0.1, 0.3);
    std::vector<Ball> centered;
    for (std::size_t i = 0; i < g2.size(); i += 4)
        for (double r : {0.25, 0.5, 1.0}) centered.emplace_back(g2.node(i), r);
    GridFunction sf = sharp_maximal(f, 1.0, centered);
    std::vector<double> cap(g2.size(), 0.0);
    for (const Ball& b : centered) {
        double avg = region_average(f, Region{b});
        for (std::size_t i = 0; i < g2.size(); ++i)
            if (contains(b, g2.node(i))) cap[i] = std::max(cap[i], 2 * avg);
    }
    for (std::size_t i = 0; i < g2.size(); ++i) CHECK(sf[i] <= cap[i] + 1e-9);
}

TEST_CASE("riesz potential") {
    Grid g = grid1d(2, 1.0 / 128);
    GridFunction zero(g, 0.0);
    GridFunction rz = riesz_potential(zero, 0.5);
    CHECK(base_norm(rz, Lebesgue{std::numeric_limits<double>::infinity()}) == 0.0);

    // integral of |y|^{-1/2} over [-1,1] is 4
    GridFunction f = chi(g, -1, 1);
    CHECK(riesz_potential_at(f, 0.5, node_at(g, 0.0)) == doctest::Approx(4.0).epsilon(0.01));
    CHECK_THROWS(riesz_potential(f, 1.5));

    // translation equivariance on aligned grids
    GridFunction ft = chi(g, -0.5, 1.5);
    GridFunction r1 = riesz_potential(f, 0.5), r2 = riesz_potential(ft, 0.5);
    CHECK(r2[node_at(g, 0.5)] == doctest::Approx(r1[node_at(g, 0.0)]).epsilon(1e-12));
    CHECK(r2[node_at(g, 1.0)] == doctest::Approx(r1[node_at(g, 0.5)]).epsilon(1e-12));
}

TEST_CASE("bilinear fractional integral") {
    Grid g = grid1d(2, 1.0 / 128);
    GridFunction f = chi(g, -1, 1);
    GridFunction zero(g, 0.0);
    CHECK(bilinear_fractional_at(f, zero, 1.0, node_at(g, 0.3)) == 0.0);

    // the double integral of (|u|+|v|)^{-1} over [-1,1]^2 is 8 ln 2
    double got = bilinear_fractional_at(f, f, 1.0, node_at(g, 0.0));
    CHECK(got == doctest::Approx(8 * std::numbers::ln2).epsilon(0.01));

    // slot symmetry of the symmetric kernel
    GridFunction h = bump(g, 0.2, 0.5);
    GridFunction ab = bilinear_fractional(f, h, 0.7), ba = bilinear_fractional(h, f, 0.7);
    for (std::size_t i = 0; i < g.size(); i += 7)
        CHECK(ab[i] == doctest::Approx(ba[i]).epsilon(1e-12));
    CHECK(ab[node_at(g, 0.25)] ==
          doctest::Approx(bilinear_fractional_at(f, h, 0.7, node_at(g, 0.25))).epsilon(1e-12));
}

TEST_CASE("truncated bilinear integral") {
    Grid g = grid1d(2, 1.0 / 64);
    GridFunction f = chi(g, -1, 1);
    BilinearKernel K = FractionalKernel{1.0};

    CHECK_THROWS_WITH(truncated_bilinear(f, f, K, g.spacing() / 4, node_at(g, 0.0)),
                      "truncation below grid resolution");

    // truncation radius beyond the support: nothing left
    CHECK(truncated_bilinear(f, f, K, 3.9, node_at(g, 0.0)) == 0.0);

    // odd angular part, even data: exact cancellation at the symmetric node
    BilinearKernel Kodd = RoughKernel{OmegaFunction::named(OmegaFunction::Id::cos1), true, 0};
    double v = truncated_bilinear(f, f, Kodd, 0.25, node_at(g, 0.0));
    CHECK(std::abs(v) <= 1e-9);

    // independent brute-force quadrature agrees
    GridFunction h = bump(g, -0.2, 0.4);
    double mine = truncated_bilinear(f, h, K, 0.5, node_at(g, 0.25));
    double ref = brute_truncated_fractional(f, h, 1.0, 0.5, 0.25);
    CHECK(mine == doctest::Approx(ref).epsilon(1e-10));

    // one-pass ladder equals rung-by-rung evaluation
    std::vector<double> eps{0.5, 0.25, 0.125, 0.0625};
    std::vector<double> lad = truncated_bilinear_ladder(f, h, K, eps, node_at(g, 0.25));
    for (std::size_t j = 0; j < eps.size(); ++j)
        CHECK(lad[j] ==
              doctest::Approx(truncated_bilinear(f, h, K, eps[j], node_at(g, 0.25)))
                  .epsilon(1e-12));

    // product-mode truncation removes the axis strips as well
    TruncationMode pm{true};
    double joint = truncated_bilinear(f, f, K, 0.5, node_at(g, 0.0));
    double prod = truncated_bilinear(f, f, K, 0.5, node_at(g, 0.0), pm);
    CHECK(prod < joint);

    // bilinearity in each slot
    GridFunction combo = f;
    for (std::size_t i = 0; i < g.size(); ++i) combo[i] = 2.5 * f[i] + h[i];
    double lhs = truncated_bilinear(combo, h, K, 0.25, node_at(g, 0.125));
    double rhs = 2.5 * truncated_bilinear(f, h, K, 0.25, node_at(g, 0.125)) +
                 truncated_bilinear(h, h, K, 0.25, node_at(g, 0.125));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));

    // the size majorant dominates with the declared constant
    std::vector<double> fs(g.size()), gs2(g.size());
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1, 1);
    for (auto& x : fs) x = u(rng);
    for (auto& x : gs2) x = u(rng);
    GridFunction rf(g, fs), rg(g, gs2);
    for (const BilinearKernel& KK :
         {BilinearKernel{FractionalKernel{0.8}},
          BilinearKernel{RoughKernel{OmegaFunction::named(OmegaFunction::Id::cos3), true, 0}}}) {
        double val = std::abs(truncated_bilinear(rf, rg, KK, 0.25, node_at(g, 0.5)));
        GridFunction af = rf, ag = rg;
        for (std::size_t i = 0; i < g.size(); ++i) {
            af[i] = std::abs(af[i]);
            ag[i] = std::abs(ag[i]);
        }
        // majorant route: same loop with the size bound in place of the kernel
        double maj = 0;
        double x = g.node(node_at(g, 0.5))[0];
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = 0; b < g.size(); ++b) {
                double du = x - g.node(a)[0], dv = x - g.node(b)[0];
                if (du * du + dv * dv <= 0.0625) continue;
                maj += kernel_majorant_uv(KK, 1, {du, 0}, {dv, 0}) * af[a] * ag[b] *
                       g.cell_volume(a) * g.cell_volume(b);
            }
        CHECK(val <= maj * (1 + 1e-9));
    }
}

TEST_CASE("maximal truncation") {
    Grid g = grid1d(2, 1.0 / 64);
    GridFunction f = chi(g, -1, 1);
    BilinearKernel K = FractionalKernel{1.0};
    std::vector<double> eps{0.5, 0.25, 0.125, 0.0625};
    // nonnegative data: the sup is the smallest truncation
    CHECK(maximal_truncated(f, f, K, node_at(g, 0.0), eps) ==
          doctest::Approx(truncated_bilinear(f, f, K, 0.0625, node_at(g, 0.0))));
    GridFunction zero(g, 0.0);
    CHECK(maximal_truncated(zero, f, K, node_at(g, 0.0), eps) == 0.0);
}

TEST_CASE("extended operator: decomposition and ball independence") {
    Grid g = grid1d(2, 1.0 / 128);
    GridFunction f = bump(g, 0.0, 0.25), h = bump(g, 0.1, 0.3);
    BilinearKernel K = FractionalKernel{1.0};

    // supports effectively inside 2B: the tails vanish and the local part
    // is the truncated operator itself
    Ball B({0.0, 0}, 1.2);
    std::size_t x = node_at(g, 0.25);
    GridFunction fc = restrict_to(f, Region{dilate(B, 2)});
    GridFunction hc = restrict_to(h, Region{dilate(B, 2)});
    double ext = extended_bilinear(fc, hc, K, B, x);
    double loc = truncated_bilinear(fc, hc, K, g.spacing(), x);
    CHECK(ext == loc);  // identical sums, bitwise

    CHECK_THROWS_WITH(extended_bilinear(f, h, K, Ball({1.9, 0}, 0.05), node_at(g, 0.0)),
                      "evaluation node must lie in the ball");

    // two overlapping balls give the same value
    Ball B1({0.0, 0}, 0.5), B2({0.25, 0}, 0.75);
    double t1 = extended_bilinear(f, h, K, B1, x);
    double t2 = extended_bilinear(f, h, K, B2, x);
    CHECK(std::abs(t1 - t2) <= 1e-12 * (std::abs(t1) + 1));
}

TEST_CASE("bilinear commutator") {
    Grid g = grid1d(2, 1.0 / 64);
    GridFunction f = chi(g, -1, 1), h = bump(g, 0.2, 0.4);
    BilinearKernel K = FractionalKernel{1.0};
    std::size_t x = node_at(g, 0.25);

    GridFunction cb(g, 4.2);
    CHECK(bilinear_commutator(cb, 1, f, h, K, 0.25, x) == doctest::Approx(0.0).epsilon(1e-13));

    // symmetric kernel and equal slots: the two commutator slots agree
    double c1 = bilinear_commutator(h, 1, f, f, K, 0.25, x);
    double c2 = bilinear_commutator(h, 2, f, f, K, 0.25, x);
    CHECK(c1 == doctest::Approx(c2).epsilon(1e-12));

    // two routes, one value
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.1, 1.9);
    for (int t = 0; t < 10; ++t) {
        std::vector<double> bv(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            bv[i] = std::sin(3 * u(rng) * g.node(i)[0]) + 0.3 * u(rng);
        GridFunction b(g, bv);
        double eps = 0.1 + 0.4 * u(rng);
        int slot = t % 2 + 1;
        std::size_t node = node_at(g, u(rng) - 1.0);
        double a1 = bilinear_commutator(b, slot, f, h, K, eps, node);
        double a2 = bilinear_commutator_kernel_path(b, slot, f, h, K, eps, node);
        CHECK(a1 == doctest::Approx(a2).epsilon(1e-10));
    }

    // independent oracle for b(x) = x, direct double loop
    std::vector<double> lin(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) lin[i] = g.node(i)[0];
    GridFunction bx(g, lin);
    double mine = bilinear_commutator(bx, 1, f, f, K, 0.5, x);
    double xx = g.node(x)[0];
    double ref = 0;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b2 = 0; b2 < g.size(); ++b2) {
            double du = xx - g.node(a)[0], dv = xx - g.node(b2)[0];
            if (du * du + dv * dv <= 0.25) continue;
            ref += (xx - g.node(a)[0]) * std::pow(std::abs(du) + std::abs(dv), -1.0) * f[a] *
                   f[b2] * g.cell_volume(a) * g.cell_volume(b2);
        }
    CHECK(mine == doctest::Approx(ref).epsilon(1e-10));

    // extended commutator: constant symbols vanish, local case matches
    Ball B({0.0, 0}, 1.2);
    CHECK(extended_bilinear_commutator(cb, 1, f, h, K, B, x) ==
          doctest::Approx(0.0).epsilon(1e-13));
    GridFunction fc = restrict_to(f, Region{dilate(B, 2)});
    GridFunction hc = restrict_to(h, Region{dilate(B, 2)});
    CHECK(extended_bilinear_commutator(bx, 1, fc, hc, K, B, x) ==
          doctest::Approx(bilinear_commutator_kernel_path(bx, 1, fc, hc, K, g.spacing(), x))
              .epsilon(1e-12));

    // ball independence of the extended commutator
    Ball B1({0.0, 0}, 0.5), B2({0.25, 0}, 0.75);
    double e1 = extended_bilinear_commutator(bx, 1, f, h, K, B1, x);
    double e2 = extended_bilinear_commutator(bx, 1, f, h, K, B2, x);
    CHECK(std::abs(e1 - e2) <= 1e-12 * (std::abs(e1) + 1));
}

TEST_CASE("averaging operator") {
    Grid g = grid1d(2, 1.0 / 128);
    Cube Q({0.5, 0}, 1.0);
    GridFunction cQ = chi(g, 0, 1);
    GridFunction a = averaging_operator(cQ, cQ, Q, 0.6);
    double m = measure(g, Region{Q});
    for (std::size_t i = 0; i < g.size(); i += 5) {
        if (contains(Q, g.node(i)))
            CHECK(a[i] == doctest::Approx(std::pow(m, 0.6)).epsilon(1e-6));
        else
            CHECK(a[i] == 0.0);
    }
    std::vector<double> lin(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) lin[i] = g.node(i)[0];
    GridFunction bx(g, lin);
    GridFunction a0 = averaging_operator(bx, bx, Q, 0.0);
    CHECK(a0[node_at(g, 0.5)] == doctest::Approx(0.25).epsilon(1e-6));
}

TEST_CASE("linear operators and their commutators") {
    Grid g = grid1d(2, 1.0 / 128);
    GridFunction f = chi(g, -1, 1);
    GridFunction cb(g, 2.0);
    LinearOperatorSpec riesz{LinearOperatorSpec::Kind::riesz,
                             OmegaFunction::named(OmegaFunction::Id::cos1), 0, 0.5};
    CHECK(linear_commutator(riesz, cb, f, node_at(g, 0.0)) == doctest::Approx(0.0));

    // brute-force oracle for the riesz commutator with b(x) = x
    std::vector<double> lin(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) lin[i] = g.node(i)[0];
    GridFunction bx(g, lin);
    std::size_t x = node_at(g, 0.0);
    double mine = linear_commutator(riesz, bx, f, x);
    double ref = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (j == x || f[j] == 0) continue;
        double d = std::abs(g.node(j)[0]);
        ref += (0.0 - g.node(j)[0]) * std::pow(d, -0.5) * f[j] * g.cell_volume(j);
    }
    // singular cell: (b(x) - b(y)) vanishes at y = x, so the cell term is O(h^2)
    CHECK(mine == doctest::Approx(ref).epsilon(1e-6));

    // odd angular part, even data, even symbol: cancellation at the center
    LinearOperatorSpec sing{LinearOperatorSpec::Kind::singular,
                            OmegaFunction::named(OmegaFunction::Id::cos1), 0.25, 0};
    GridFunction beven = bump(g, 0.0, 0.5);
    CHECK(std::abs(linear_commutator(sing, beven, f, node_at(g, 0.0))) <= 1e-9);
}

TEST_CASE("kernel size bound and cancellation declarations") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<BilinearKernel> kernels{
        FractionalKernel{1.3},
        RoughKernel{OmegaFunction::named(OmegaFunction::Id::cos3), true, 0},
        CzKernel{OmegaFunction::named(OmegaFunction::Id::cos3), 1.0, 0}};
    for (const BilinearKernel& K : kernels) {
        for (int t = 0; t < 200; ++t) {
            Vec2 uu{u(rng), 0}, vv{u(rng), 0};
            if (std::abs(uu[0]) + std::abs(vv[0]) < 1e-6) continue;
            CHECK(std::abs(kernel_uv(K, 1, uu, vv)) <=
                  kernel_majorant_uv(K, 1, uu, vv) * (1 + 1e-9));
        }
    }
    // declared mean-zero angular parts integrate to zero on the sphere
    for (auto id : {OmegaFunction::Id::cos1, OmegaFunction::Id::sin1, OmegaFunction::Id::cos3,
                    OmegaFunction::Id::sin2})
        CHECK(std::abs(OmegaFunction::named(id).sphere_mean(1)) <= 1e-9);
    CHECK(OmegaFunction::named(OmegaFunction::Id::one).sphere_mean(1) ==
          doctest::Approx(1.0));
    CHECK(std::abs(OmegaFunction::named(OmegaFunction::Id::first_coordinate).sphere_mean(2)) <=
          1e-6);

    // smoothness of the regular kernel on admissible perturbations
    CzKernel cz{OmegaFunction::named(OmegaFunction::Id::cos3), 1.0, 0};
    BilinearKernel K{cz};
    double worst = 0;
    for (int t = 0; t < 500; ++t) {
        Vec2 x{u(rng), 0}, y1{u(rng), 0}, y2{u(rng), 0};
        double m = std::max(std::abs(x[0] - y1[0]), std::abs(y2[0] - y1[0]));
        if (m < 0.1) continue;
        double step = 0.4 * m * (u(rng) / 4);
        Vec2 y1p{y1[0] + step, 0};
        double du = std::abs(x[0] - y1[0]) + std::abs(x[0] - y2[0]);
        double num = std::abs(kernel_uv(K, 1, {x[0] - y1[0], 0}, {x[0] - y2[0], 0}) -
                              kernel_uv(K, 1, {x[0] - y1p[0], 0}, {x[0] - y2[0], 0}));
        double bound = std::abs(step) / std::pow(du, 2 + cz.regularity);
        if (bound > 0) worst = std::max(worst, num / bound);
    }
    CHECK(worst < 50.0);  // measured smoothness constant stays modest
}

TEST_CASE("oscillation estimates against the mean: base-space form") {
    Grid g = grid1d(4, 1.0 / 64);
    std::vector<double> bv(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        double ax = std::abs(g.node(i)[0]);
        bv[i] = std::min(3.0, ax > 0 ? std::log(1 / ax) : 3.0);
    }
    GridFunction b(g, bv);
    std::vector<Region> fam;
    for (double c : {-0.5, 0.0, 0.5})
        for (double r : {0.125, 0.25, 0.5, 1.0}) fam.emplace_back(Ball({c, 0}, r));
    double bstar = bmo_norm(b, fam);
    CHECK(bstar > 0);

    BaseSpace L2{Lebesgue{2}};
    BaseSpace L2a = associate_space(L2);
    double worst_plain = 0, worst_dilated = 0;
    for (double c : {-0.5, 0.0, 0.5}) {
        Ball B({c, 0}, 0.125);
        double avg = region_average(b, Region{B});
        for (int j = 0; j <= 4; ++j) {
            Ball Bj = dilate(B, std::ldexp(1.0, j));
            std::vector<double> dev(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) dev[i] = b[i] - avg;
            GridFunction osc = restrict_to(GridFunction(g, std::move(dev)), Region{Bj});
            double lhs = base_norm(osc, L2a);
            double rhs = bstar * chi_norm(L2a, g, Region{Bj});
            double ratio = lhs / rhs;
            if (j == 0)
                worst_plain = std::max(worst_plain, ratio);
            else
                worst_dilated = std::max(worst_dilated, ratio / (j + 1));
        }
    }
    CHECK(worst_plain <= 4.0);
    CHECK(worst_dilated <= 4.0);
}

TEST_CASE("sharp-maximal control of the order-zero operator") {
    BilinearKernel K = CzKernel{OmegaFunction::named(OmegaFunction::Id::cos3), 1.0, 0};
    double prev = 0;
    for (double h : {1.0 / 64, 1.0 / 128}) {
        Grid g = grid1d(2, h);
        GridFunction f = bump(g, -0.1, 0.3), w = bump(g, 0.15, 0.25);
        GridFunction T = truncated_bilinear_field(f, w, K, 2 * h);
        std::vector<Ball> fam;
        for (std::size_t i = 0; i < g.size(); i += 4)
            for (double r : {0.125, 0.25, 0.5, 1.0}) fam.emplace_back(g.node(i), r);
        GridFunction sharp = sharp_maximal(T, 0.4, fam);
        std::vector<double> radii{0.125, 0.25, 0.5, 1.0};
        GridFunction mf = hl_maximal(f, radii), mw = hl_maximal(w, radii);
        double worst = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            worst = std::max(worst, sharp[i] / (mf[i] * mw[i]));
        CHECK(std::isfinite(worst));
        if (prev > 0) CHECK(worst <= prev * 1.3);
        prev = worst;
    }
}
