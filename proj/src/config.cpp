#include "morlab/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace morlab {

namespace {

using nlohmann::json;

Vec2 to_vec(const json& j) {
    if (j.is_number()) return Vec2{j.get<double>(), 0};
    Vec2 v{0, 0};
    for (std::size_t a = 0; a < std::min<std::size_t>(2, j.size()); ++a)
        v[a] = j[a].get<double>();
    return v;
}

double to_exponent(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf")
        return std::numeric_limits<double>::infinity();
    return j.get<double>();
}

GridSpec parse_grid(const json& j) {
    GridSpec g;
    g.dim = j.value("dim", 1);
    if (j.contains("lower")) g.lower = to_vec(j.at("lower"));
    if (j.contains("upper")) g.upper = to_vec(j.at("upper"));
    g.h = j.value("h", 1.0 / 128);
    return g;
}

struct Declarations {
    json weights = json::object();
    json exponents = json::object();
    json spaces = json::object();
    json profiles = json::object();
    json kernels = json::object();
    json inputs = json::object();
    std::uint64_t seed = 1;
};

const json& lookup(const json& table, const std::string& name, const char* what) {
    auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument(std::string("unresolved ") + what + " reference: " + name);
    return *it;
}

Weight build_weight(const Declarations& D, const std::string& name, const Grid& g) {
    const json& j = lookup(D.weights, name, "weight");
    std::string kind = j.value("kind", "power");
    if (kind == "power") return Weight::power(g, j.value("a", 0.0), j.value("c", 1.0));
    if (kind == "exponential") {
        double rate = j.value("rate", 1.0);
        std::vector<double> v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            v[i] = std::exp(rate * norm2(g.node(i)));
        return Weight::tabulated(GridFunction(g, std::move(v)));
    }
    throw std::invalid_argument("unknown weight kind: " + kind);
}

ExponentField build_exponent(const Declarations& D, const std::string& name, const Grid& g) {
    const json& j = lookup(D.exponents, name, "exponent");
    std::string kind = j.value("kind", "constant");
    if (kind == "constant") return ExponentField::constant(g, to_exponent(j.at("p")));
    if (kind == "log-smooth") {
        double base = j.value("base", 2.0), amp = j.value("amplitude", 1.0);
        std::vector<double> v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            v[i] = base + amp / std::log(std::exp(1.0) + norm2(g.node(i)));
        return ExponentField(g, std::move(v), base);
    }
    if (kind == "two-step") {
        double left = to_exponent(j.at("left")), right = to_exponent(j.at("right"));
        double split = j.value("split", 0.0);
        std::vector<double> v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            v[i] = g.node(i)[0] <= split ? left : right;
        return ExponentField(g, std::move(v), right);
    }
    if (kind == "harmonic-sum") {  // 1/p = 1/p_a + 1/p_b pointwise
        const json& of = j.at("of");
        ExponentField a = build_exponent(D, of.at(0).get<std::string>(), g);
        ExponentField b = build_exponent(D, of.at(1).get<std::string>(), g);
        std::vector<double> v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) v[i] = 1.0 / (1.0 / a[i] + 1.0 / b[i]);
        std::optional<double> pinf;
        if (a.p_at_infinity() && b.p_at_infinity())
            pinf = 1.0 / (1.0 / *a.p_at_infinity() + 1.0 / *b.p_at_infinity());
        return ExponentField(g, std::move(v), pinf);
    }
    if (kind == "fractional-shift") {  // 1/q = 1/p - shift
        ExponentField p = build_exponent(D, j.at("of").get<std::string>(), g);
        double shift = j.at("shift").get<double>();
        std::vector<double> v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            double inv = 1.0 / p[i] - shift;
            if (!(inv > 0))
                throw std::invalid_argument("exponent " + name + ": fractional shift leaves "
                                            "no integrability");
            v[i] = 1.0 / inv;
        }
        std::optional<double> pinf;
        if (p.p_at_infinity()) pinf = 1.0 / (1.0 / *p.p_at_infinity() - shift);
        return ExponentField(g, std::move(v), pinf);
    }
    throw std::invalid_argument("unknown exponent kind: " + kind);
}

BaseSpace build_space(const Declarations& D, const std::string& name, const Grid& g) {
    const json& j = lookup(D.spaces, name, "space");
    std::string kind = j.value("kind", "lebesgue");
    if (kind == "lebesgue") return Lebesgue{to_exponent(j.at("p"))};
    if (kind == "weighted")
        return WeightedLebesgue{to_exponent(j.at("p")),
                                build_weight(D, j.at("weight").get<std::string>(), g)};
    if (kind == "variable")
        return VariableLebesgue{build_exponent(D, j.at("exponent").get<std::string>(), g)};
    throw std::invalid_argument("unknown space kind: " + kind);
}

SpaceFactory space_factory(const Declarations& D, const std::string& name) {
    return [&D, name](const Grid& g) { return build_space(D, name, g); };
}

WeightProfile build_profile(const Declarations& D, const std::string& name, const Grid& g) {
    const json& j = lookup(D.profiles, name, "profile");
    std::string kind = j.value("kind", "power");
    if (kind == "power")
        return WeightProfile::power(j.value("c", 1.0), j.value("lambda", 0.0));
    if (kind == "chi-norm")
        return WeightProfile::chi_norm_power(build_space(D, j.at("space").get<std::string>(), g),
                                             g, j.value("theta", 1.0),
                                             j.value("extended", false));
    if (kind == "measure")
        return WeightProfile::weight_measure_power(
            build_weight(D, j.at("weight").get<std::string>(), g), j.value("kappa", 1.0));
    if (kind == "product") {
        const json& of = j.at("of");
        return WeightProfile::product(build_profile(D, of.at(0).get<std::string>(), g),
                                      build_profile(D, of.at(1).get<std::string>(), g));
    }
    throw std::invalid_argument("unknown profile kind: " + kind);
}

BilinearKernel build_kernel(const Declarations& D, const std::string& name, int dim) {
    const json& j = lookup(D.kernels, name, "kernel");
    std::string form = j.value("form", "fractional");
    if (form == "fractional") {
        double alpha = j.at("alpha").get<double>();
        if (!(alpha > 0 && alpha < 2 * dim))
            throw std::invalid_argument(
                "kernel " + name + ": fractional order must lie in (0, 2n)");
        return FractionalKernel{alpha, j.value("bound", 1.0)};
    }
    OmegaFunction omega = OmegaFunction::named(j.value("omega", std::string("cos3")));
    if (j.contains("omega_samples")) {
        std::vector<double> angles, values;
        for (const auto& row : j.at("omega_samples")) {
            angles.push_back(row.at(0).get<double>());
            values.push_back(row.at(1).get<double>());
        }
        omega = OmegaFunction::tabulated(std::move(angles), std::move(values));
    }
    if (form == "rough") return RoughKernel{omega, j.value("mean_zero", true), j.value("bound", 0.0)};
    if (form == "cz") return CzKernel{omega, j.value("regularity", 1.0), j.value("bound", 0.0)};
    throw std::invalid_argument("unknown kernel form: " + form);
}

void append_inputs(const Declarations& D, const std::string& name,
                   std::vector<AnalyticInput>& out) {
    const json& j = lookup(D.inputs, name, "input");
    std::string kind = j.value("kind", "gaussian");
    if (kind == "gaussian") {
        out.push_back(gaussian_bump(to_vec(j.value("center", json(0.0))), j.value("width", 0.3),
                                    j.value("degree", 0), j.value("amplitude", 1.0)));
    } else if (kind == "box") {
        out.push_back(box_indicator(to_vec(j.value("center", json(0.0))), j.value("side", 1.0)));
    } else if (kind == "ball") {
        out.push_back(ball_indicator(to_vec(j.value("center", json(0.0))),
                                     j.value("radius", 0.5)));
    } else if (kind == "power-bump") {
        out.push_back(power_bump(to_vec(j.value("center", json(1e-3))), j.value("beta", 0.25),
                                 j.value("radius", 0.5)));
    } else if (kind == "linear") {
        out.push_back({"linear", [](const Vec2& x) { return x[0]; }});
    } else if (kind == "smooth") {
        out.push_back(random_smooth_field(j.value("seed", 1) ^ D.seed, j.value("amplitude", 1.0),
                                          j.value("dim", 1)));
    } else if (kind == "seeded-family") {
        InputFamilySpec spec;
        spec.count = j.value("count", 6);
        spec.seed = j.value("seed", 1) ^ D.seed;
        spec.support_radius = j.value("support_radius", 1.0);
        spec.gaussians = j.value("gaussians", true);
        spec.indicators = j.value("indicators", true);
        spec.power_bumps = j.value("power_bumps", false);
        for (auto& f : seeded_input_family(spec, j.value("dim", 1))) out.push_back(std::move(f));
    } else if (kind == "signed-log-family" || kind == "capped-log-family") {
        bool signed_form = kind == "signed-log-family";
        int kmax = j.value("k_max", 5);
        for (int k = 1; k <= kmax; ++k) {
            std::string id = (signed_form ? "signed-log(k=" : "capped-log(k=") +
                             std::to_string(k) + ")";
            out.push_back({id, [k, signed_form](const Vec2& x) {
                               double ax = std::abs(x[0]);
                               double v = std::min<double>(k, ax > 0 ? std::log(1.0 / ax)
                                                                     : 1e18);
                               return signed_form ? (x[0] < 0 ? -v : (x[0] > 0 ? v : 0.0)) : v;
                           }});
        }
    } else {
        throw std::invalid_argument("unknown input kind: " + kind);
    }
}

std::vector<AnalyticInput> build_inputs(const Declarations& D, const json& names) {
    std::vector<AnalyticInput> out;
    if (names.is_string()) {
        append_inputs(D, names.get<std::string>(), out);
    } else {
        for (const auto& n : names) append_inputs(D, n.get<std::string>(), out);
    }
    return out;
}

BallFamilySpec parse_ball_family(const json& j) {
    BallFamilySpec s;
    s.center_stride = j.value("stride", 4);
    s.r_min = j.value("r_min", 0.0);
    s.r_max = j.value("r_max", 0.0);
    s.include_subcell_radius = j.value("subcell", false);
    return s;
}

std::vector<Ball> parse_balls(const json& j) {
    std::vector<Ball> out;
    double rmin = j.at("r_min").get<double>(), rmax = j.at("r_max").get<double>();
    for (const auto& c : j.at("centers"))
        for (double r : dyadic_radii(rmin, rmax)) out.emplace_back(to_vec(c), r);
    return out;
}

std::vector<Vec2> parse_points(const json& j) {
    std::vector<Vec2> out;
    for (const auto& c : j) out.push_back(to_vec(c));
    return out;
}

// -------------------------------------------------------------- dispatch

Report run_experiment(const Declarations& D, const GridSpec& grid, const json& e) {
    std::string type = e.at("type").get<std::string>();
    ExperimentBase base;
    base.id = e.value("id", type);
    base.anchor = e.value("anchor", "");
    base.grid = grid;
    if (e.contains("grid")) base.grid = parse_grid(e.at("grid"));

    if (type == "holder_check") {
        HolderCheckParams P;
        static_cast<ExperimentBase&>(P) = base;
        P.space = space_factory(D, e.at("space").get<std::string>());
        P.fs = build_inputs(D, e.at("fs"));
        P.gs = build_inputs(D, e.at("gs"));
        P.tol = e.value("tol", 1e-6);
        P.refinements = e.value("refinements", 1);
        if (e.contains("associate_override"))
            P.associate_override = space_factory(D, e.at("associate_override").get<std::string>());
        return holder_check(P);
    }
    if (type == "chi_duality_check") {
        ChiDualityParams P;
        static_cast<ExperimentBase&>(P) = base;
        P.space = space_factory(D, e.at("space").get<std::string>());
        P.balls = parse_balls(e.at("balls"));
        P.lower_tol = e.value("lower_tol", 1e-6);
        P.stability = e.value("stability", 0.10);
        P.refinements = e.value("refinements", 1);
        P.family_extension = e.value("family_extension", 2.0);
        return chi_duality_check(P);
    }
    if (type == "characteristic_condition") {
        CharacteristicParams P;
        static_cast<ExperimentBase&>(P) = base;
        P.X1 = space_factory(D, e.at("X1").get<std::string>());
        P.X2 = space_factory(D, e.at("X2").get<std::string>());
        P.Y = space_factory(D, e.at("Y").get<std::string>());
        P.alpha = e.value("alpha", 0.0);
        std::string form = e.value("form", "ball");
        P.form = form == "cube" ? CharacteristicParams::Form::cube_necessity
                 : form == "linear" ? CharacteristicParams::Form::linear
                                    : CharacteristicParams::Form::ball_extension;
        P.centers = parse_points(e.at("centers"));
        for (double s : dyadic_radii(e.at("scale_min").get<double>(),
                                     e.at("scale_max").get<double>()))
            P.scales.push_back(s);
        P.drift = e.value("drift", 0.5);
        return characteristic_condition(P);
    }
    if (type == "ball_independence_check") {
        BallIndependenceParams P;
        static_cast<ExperimentBase&>(P) = base;
        auto fs = build_inputs(D, e.at("f"));
        auto gs = build_inputs(D, e.at("g"));
        P.f = fs.at(0);
        P.g = gs.at(0);
        P.kernel = build_kernel(D, e.at("kernel").get<std::string>(), base.grid.dim);
        for (const auto& pr : e.at("pairs"))
            P.pairs.push_back({Ball(to_vec(pr.at("c1")), pr.at("r1").get<double>()),
                               Ball(to_vec(pr.at("c2")), pr.at("r2").get<double>())});
        P.points = parse_points(e.at("points"));
        P.tol = e.value("tol", 1e-3);
        P.tol_refined = e.value("tol_refined", 0.0);
        P.refinements = e.value("refinements", 1);
        P.drop_tails = e.value("drop_tails", false);
        return ball_independence_check(P);
    }
    if (type == "operator_norm_estimate") {
        OperatorNormParams P;
        static_cast<ExperimentBase&>(P) = base;
        const json& op = e.at("op");
        std::string kind = op.value("kind", "bilinear");
        if (kind == "averaging") {
            P.op = AveragingOp{Cube(to_vec(op.value("center", json(0.0))), op.value("side", 1.0)),
                               op.value("alpha", 0.0)};
        } else if (kind == "bilinear") {
            P.op = BilinearOp{build_kernel(D, op.at("kernel").get<std::string>(), base.grid.dim),
                              op.value("eps_floor", 0.0)};
        } else if (kind == "commutator") {
            P.op = CommutatorOp{build_kernel(D, op.at("kernel").get<std::string>(), base.grid.dim),
                                build_inputs(D, op.at("b")).at(0), op.value("slot", 1),
                                op.value("eps_floor", 0.0)};
        } else if (kind == "linear-singular" || kind == "linear-riesz") {
            LinearOp lo;
            lo.spec.kind = kind == "linear-riesz" ? LinearOperatorSpec::Kind::riesz
                                                  : LinearOperatorSpec::Kind::singular;
            lo.spec.alpha = op.value("alpha", 0.5);
            lo.spec.eps = op.value("eps", 0.0);
            if (op.contains("omega"))
                lo.spec.omega = OmegaFunction::named(op.at("omega").get<std::string>());
            lo.commutator = op.contains("b");
            if (lo.commutator) lo.b = build_inputs(D, op.at("b")).at(0);
            P.op = lo;
        } else {
            throw std::invalid_argument("unknown operator kind: " + kind);
        }
        P.in1 = space_factory(D, e.at("in1").get<std::string>());
        P.in2 = space_factory(D, e.at("in2").get<std::string>());
        P.out = space_factory(D, e.at("out").get<std::string>());
        auto pf = [&](const char* key) -> std::optional<ProfileFactory> {
            if (!e.contains(key)) return std::nullopt;
            std::string name = e.at(key).get<std::string>();
            return ProfileFactory([&D, name](const Grid& g) { return build_profile(D, name, g); });
        };
        P.profile_in1 = pf("profile_in1");
        P.profile_in2 = pf("profile_in2");
        P.profile_out = pf("profile_out");
        if (e.contains("morrey_family")) P.morrey_family = parse_ball_family(e.at("morrey_family"));
        P.inputs = build_inputs(D, e.at("inputs"));
        if (e.contains("dilations")) {
            P.dilations.clear();
            for (const auto& d : e.at("dilations")) P.dilations.push_back(d.get<double>());
        }
        P.refinements = e.value("refinements", 1);
        P.stability = e.value("stability", 0.25);
        P.divide_by_bmo = e.value("divide_by_bmo", false);
        if (e.contains("bmo_family")) P.bmo_family = parse_ball_family(e.at("bmo_family"));
        return operator_norm_estimate(P);
    }
    if (type == "averaging_equivalence_check") {
        AveragingEquivalenceParams P;
        static_cast<ExperimentBase&>(P) = base;
        P.X1 = space_factory(D, e.at("X1").get<std::string>());
        P.X2 = space_factory(D, e.at("X2").get<std::string>());
        P.Y = space_factory(D, e.at("Y").get<std::string>());
        P.alpha_condition = e.value("alpha", 0.0);
        P.alpha_operator = e.value("alpha_operator", P.alpha_condition);
        for (const auto& c : e.at("cube_centers"))
            for (double s : dyadic_radii(e.at("side_min").get<double>(),
                                         e.at("side_max").get<double>()))
                P.cubes.emplace_back(to_vec(c), s);
        P.inputs = build_inputs(D, e.at("inputs"));
        P.tracking_factor = e.value("tracking_factor", 3.0);
        return averaging_equivalence_check(P);
    }
    if (type == "bmo_necessity_experiment") {
        BmoNecessityParams P;
        static_cast<ExperimentBase&>(P) = base;
        P.kernel = build_kernel(D, e.at("kernel").get<std::string>(), base.grid.dim);
        P.b_family = build_inputs(D, e.at("b_family"));
        P.inputs = build_inputs(D, e.at("inputs"));
        P.eval_points = parse_points(e.at("points"));
        P.eps = e.value("eps", 0.0);
        if (e.contains("bmo_family")) P.bmo_family = parse_ball_family(e.at("bmo_family"));
        for (const auto& pr : e.value("cube_pairs", json::array())) {
            Cube Q(to_vec(pr.at("center")), pr.at("side").get<double>());
            Cube Qp(Vec2{Q.center[0] + pr.at("shift").get<double>(), Q.center[1]}, Q.side);
            P.shifted_cube_pairs.push_back({Q, Qp});
        }
        P.expect_growth = e.value("expect_growth", true);
        P.plateau_band = e.value("plateau_band", 0.15);
        return bmo_necessity_experiment(P);
    }
    if (type == "truncation_convergence_check") {
        TruncationConvergenceParams P;
        static_cast<ExperimentBase&>(P) = base;
        P.f = build_inputs(D, e.at("f")).at(0);
        P.g = build_inputs(D, e.at("g")).at(0);
        P.kernel = build_kernel(D, e.at("kernel").get<std::string>(), base.grid.dim);
        P.points = parse_points(e.at("points"));
        P.eps0 = e.value("eps0", 0.125);
        P.rungs = e.value("rungs", 8);
        P.tol = e.value("tol", 1e-3);
        P.mode.product = e.value("product_mode", false);
        return truncation_convergence_check(P);
    }
    if (type == "fefferman_stein_check") {
        FeffermanSteinParams P;
        static_cast<ExperimentBase&>(P) = base;
        std::string pname = e.at("exponent").get<std::string>();
        P.exponent = [&D, pname](const Grid& g) { return build_exponent(D, pname, g); };
        P.inputs = build_inputs(D, e.at("inputs"));
        P.delta = e.value("delta", 1.0);
        if (e.contains("family")) P.family = parse_ball_family(e.at("family"));
        P.refinements = e.value("refinements", 1);
        P.stability = e.value("stability", 0.30);
        return fefferman_stein_check(P);
    }
    if (type == "bfs_axiom_check") {
        BfsAxiomParams P;
        static_cast<ExperimentBase&>(P) = base;
        P.space = space_factory(D, e.at("space").get<std::string>());
        P.seed = e.value("seed", 7);
        P.samples = e.value("samples", 6);
        if (e.contains("embed"))
            P.embed_region = Cube(to_vec(e.at("embed").value("center", json(0.0))),
                                  e.at("embed").value("side", 1.0));
        P.defective_signed = e.value("defective_signed", false);
        return bfs_axiom_check(P);
    }
    if (type == "profile_admissibility_check") {
        ProfileAdmissibilityParams P;
        static_cast<ExperimentBase&>(P) = base;
        std::string uname = e.at("profile").get<std::string>();
        P.profile = [&D, uname](const Grid& g) { return build_profile(D, uname, g); };
        P.space = space_factory(D, e.at("space").get<std::string>());
        P.alpha = e.value("alpha", 0.0);
        P.strengthened = e.value("strengthened", false);
        P.lattice.centers = parse_points(e.value("centers", json::array({json(0.0)})));
        P.lattice.r0 = e.value("r0", 0.25);
        P.lattice.levels = e.value("levels", 8);
        P.expect_admissible = e.value("expect_admissible", true);
        return profile_admissibility_check(P);
    }
    throw std::invalid_argument("unknown experiment type: " + type);
}

double experiment_cost(const GridSpec& grid, const json& e) {
    GridSpec gs = grid;
    if (e.contains("grid")) gs = parse_grid(e.at("grid"));
    double n = (gs.upper[0] - gs.lower[0]) / gs.h + 1;
    if (gs.dim == 2) n *= (gs.upper[1] - gs.lower[1]) / gs.h + 1;
    std::string type = e.at("type").get<std::string>();
    if (type == "operator_norm_estimate") {
        std::string kind = e.at("op").value("kind", "bilinear");
        double pairs = e.contains("inputs") && e.at("inputs").is_array()
                           ? static_cast<double>(e.at("inputs").size())
                           : 1.0;
        if (kind == "bilinear" || kind == "commutator") return pairs * 4 * n * n * n;
        return pairs * 4 * n * n;
    }
    if (type == "ball_independence_check" || type == "bmo_necessity_experiment" ||
        type == "truncation_convergence_check")
        return 16 * n * n;
    return n * n;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const json& doc) {
    ExperimentConfig c;
    c.doc_ = doc;
    // validation pass: resolve every reference by building on a coarse grid
    Declarations D{doc.value("weights", json::object()), doc.value("exponents", json::object()),
                   doc.value("spaces", json::object()), doc.value("profiles", json::object()),
                   doc.value("kernels", json::object()), doc.value("inputs", json::object()),
                   doc.value("seed", std::uint64_t{1})};
    GridSpec gs = parse_grid(doc.value("grid", json::object()));
    GridSpec coarse = gs;
    coarse.h = (gs.upper[0] - gs.lower[0]) / 16;
    Grid probe = coarse.build();
    if (!doc.contains("experiments") || doc.at("experiments").empty())
        throw std::invalid_argument("config declares no experiments");
    for (const auto& e : doc.at("experiments")) {
        if (!e.contains("type")) throw std::invalid_argument("experiment entry without a type");
        std::string type = e.at("type").get<std::string>();
        for (const char* key : {"space", "X1", "X2", "Y", "in1", "in2", "out",
                                "associate_override"})
            if (e.contains(key) && e.at(key).is_string())
                build_space(D, e.at(key).get<std::string>(), probe);
        if (e.contains("kernel")) build_kernel(D, e.at("kernel").get<std::string>(), gs.dim);
        if (e.contains("exponent")) build_exponent(D, e.at("exponent").get<std::string>(), probe);
        if (e.contains("profile")) build_profile(D, e.at("profile").get<std::string>(), probe);
        for (const char* key : {"fs", "gs", "inputs", "b_family", "f", "g"})
            if (e.contains(key)) build_inputs(D, e.at(key));
        double alpha = e.value("alpha", 0.0);
        if (!(alpha >= 0 && alpha < 2 * gs.dim)) {
            std::ostringstream os;
            os << "experiment " << e.value("id", type) << ": alpha = " << alpha
               << " violates 0 <= alpha < 2n (order constraint of the kernel size bound)";
            throw std::invalid_argument(os.str());
        }
    }
    return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open config: " + path);
    json doc;
    try {
        doc = json::parse(is);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument("config parse failure at byte " + std::to_string(err.byte) +
                                    ": " + err.what());
    }
    return from_json(doc);
}

GridSpec ExperimentConfig::grid() const { return parse_grid(doc_.value("grid", json::object())); }
std::uint64_t ExperimentConfig::seed() const { return doc_.value("seed", std::uint64_t{1}); }
int ExperimentConfig::threads() const { return doc_.value("threads", 0); }
std::string ExperimentConfig::out_dir() const {
    return doc_.value("output", json::object()).value("dir", "out");
}
std::string ExperimentConfig::format() const {
    return doc_.value("output", json::object()).value("format", "json");
}
std::size_t ExperimentConfig::experiment_count() const {
    return doc_.at("experiments").size();
}

double ExperimentConfig::estimated_cost(const RunOverrides& o) const {
    GridSpec gs = grid();
    if (o.resolution > 0) gs.h = o.resolution;
    double total = 0;
    for (const auto& e : doc_.at("experiments")) total += experiment_cost(gs, e);
    return total;
}

std::string ExperimentConfig::describe(const RunOverrides& o) const {
    std::ostringstream os;
    GridSpec gs = grid();
    if (o.resolution > 0) gs.h = o.resolution;
    os << "grid: dim=" << gs.dim << " box=[" << gs.lower[0] << "," << gs.upper[0] << "]"
       << " h=" << gs.h << "\n";
    os << "seed: " << (o.seed ? o.seed : seed()) << "\n";
    for (const char* section : {"spaces", "weights", "exponents", "profiles", "kernels",
                                "inputs"}) {
        if (!doc_.contains(section)) continue;
        os << section << ":";
        for (const auto& [k, v] : doc_.at(section).items()) os << " " << k;
        os << "\n";
    }
    os << "experiments:\n";
    GridSpec base = gs;
    for (const auto& e : doc_.at("experiments")) {
        double cost = experiment_cost(base, e);
        os << "  - " << e.value("id", e.at("type").get<std::string>()) << " ["
           << e.at("type").get<std::string>() << "]";
        if (e.contains("anchor")) os << " anchor=" << e.at("anchor").get<std::string>();
        os << " est-evals=" << cost;
        if (cost > kQuadratureBudget / 10) os << "  ** heavy quadrature **";
        os << "\n";
    }
    os << "total est-evals: " << estimated_cost(o) << "\n";
    return os.str();
}

RunResult ExperimentConfig::run(const RunOverrides& o) const {
    RunResult res;
    double cost = estimated_cost(o);
    if (cost > kQuadratureBudget && !o.force) {
        std::ostringstream os;
        os << "estimated " << cost << " kernel evaluations exceed the budget (" <<
            kQuadratureBudget << "); pass force to proceed";
        throw std::runtime_error(os.str());
    }
    Declarations D{doc_.value("weights", json::object()),
                   doc_.value("exponents", json::object()),
                   doc_.value("spaces", json::object()),
                   doc_.value("profiles", json::object()),
                   doc_.value("kernels", json::object()),
                   doc_.value("inputs", json::object()),
                   o.seed ? o.seed : seed()};
    int threads = o.threads >= 0 ? o.threads : this->threads();
    set_thread_count(threads);
    GridSpec gs = grid();
    if (o.resolution > 0) gs.h = o.resolution;
    res.out_dir = o.out_dir.empty() ? out_dir() : o.out_dir;
    std::string fmt = o.format.empty() ? format() : o.format;

    std::filesystem::create_directories(res.out_dir);
    json summary = json::array();
    for (const auto& e : doc_.at("experiments")) {
        Report r = run_experiment(D, gs, e);
        r.config_echo["experiment"] = e;
        r.config_echo["effective"] = {{"h", gs.h}, {"seed", D.seed}, {"threads", threads}};
        std::string stem = res.out_dir + "/" + r.experiment;
        if (fmt == "json" || fmt == "both") r.write_json(stem + ".json");
        if (fmt == "csv" || fmt == "both") r.write_csv(stem + ".csv");
        summary.push_back({{"experiment", r.experiment},
                           {"type", r.type},
                           {"verdict", to_string(r.verdict)},
                           {"headline", r.headline},
                           {"hash", r.determinism_hash()}});
        if (r.verdict == Verdict::fail) ++res.failed;
        res.reports.push_back(std::move(r));
    }
    std::ofstream os(res.out_dir + "/summary.json");
    os << summary.dump(2) << "\n";
    return res;
}

}  // namespace morlab
