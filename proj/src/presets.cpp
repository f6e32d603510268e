#include <stdexcept>

#include "morlab/config.hpp"

namespace morlab {

namespace {

using nlohmann::json;

json base_frame(double h, double half) {
    return json{{"grid", {{"dim", 1}, {"lower", {-half}}, {"upper", {half}}, {"h", h}}},
                {"seed", 1},
                {"threads", 0},
                {"output", {{"dir", "out"}, {"format", "json"}}}};
}

json smoke() {
    json c = base_frame(1.0 / 64, 2);
    c["description"] = "minimal pairing check on L^3 with two bump inputs";
    c["spaces"] = {{"X", {{"kind", "lebesgue"}, {"p", 3}}}};
    c["inputs"] = {{"fam", {{"kind", "seeded-family"}, {"count", 3}, {"seed", 11}}}};
    c["experiments"] = json::array({{{"type", "holder_check"},
                                     {"id", "holder-smoke"},
                                     {"anchor", "norm-pairing"},
                                     {"space", "X"},
                                     {"fs", json::array({"fam"})},
                                     {"gs", json::array({"fam"})},
                                     {"refinements", 1}}});
    return c;
}

// Weighted product setup: two A_p power weights, product target weight.
json product_weights_singular() {
    json c = base_frame(1.0 / 128, 4);
    c["description"] =
        "product-weight setup: rough bilinear commutator growth and indicator products on "
        "weighted Morrey spaces (power weights)";
    c["weights"] = {{"w1", {{"kind", "power"}, {"a", 0.25}}},
                    {"w2", {{"kind", "power"}, {"a", 0.25}}},
                    {"wstar", {{"kind", "power"}, {"a", 0.25}}}};
    c["spaces"] = {{"X1", {{"kind", "weighted"}, {"p", 4}, {"weight", "w1"}}},
                   {"X2", {{"kind", "weighted"}, {"p", 4}, {"weight", "w2"}}},
                   {"Y", {{"kind", "weighted"}, {"p", 2}, {"weight", "wstar"}}}};
    c["kernels"] = {{"K", {{"form", "rough"}, {"omega", "cos3"}, {"mean_zero", true}}}};
    c["inputs"] = {{"blog", {{"kind", "signed-log-family"}, {"k_max", 4}}},
                   {"fbox", {{"kind", "box"}, {"center", {0.25}}, {"side", 1.0}}},
                   {"gbox", {{"kind", "box"}, {"center", {-0.25}}, {"side", 1.0}}}};
    c["experiments"] = json::array(
        {{{"type", "characteristic_condition"},
          {"id", "weighted-indicator-products"},
          {"anchor", "necessity-side indicator bound"},
          {"X1", "X1"},
          {"X2", "X2"},
          {"Y", "Y"},
          {"alpha", 0.0},
          {"form", "cube"},
          {"centers", {{0.0}, {0.5}}},
          {"scale_min", 0.25},
          {"scale_max", 2.0},
          {"drift", 1.5}},
         {{"type", "bmo_necessity_experiment"},
          {"id", "weighted-commutator-growth"},
          {"anchor", "commutator growth forces unbounded mean oscillation"},
          {"kernel", "K"},
          {"b_family", json::array({"blog"})},
          {"inputs", json::array({"fbox", "gbox"})},
          {"points", {{0.375}, {-0.375}}},
          {"bmo_family", {{"stride", 8}, {"r_min", 0.015625}, {"r_max", 2.0}}},
          {"cube_pairs", json::array({{{"center", {0.0}}, {"side", 0.5}, {"shift", 1.67}}})},
          {"expect_growth", true}}});
    return c;
}

json linear_weighted_singular() {
    json c = base_frame(1.0 / 128, 4);
    c["description"] =
        "linear singular integral with an A_2 power weight: indicator products and the "
        "weighted-Morrey commutator norm sweep";
    c["weights"] = {{"w", {{"kind", "power"}, {"a", 0.5}}}};
    c["spaces"] = {{"X", {{"kind", "weighted"}, {"p", 2}, {"weight", "w"}}}};
    c["profiles"] = {{"u", {{"kind", "measure"}, {"weight", "w"}, {"kappa", 0.25}}}};
    c["inputs"] = {{"b", {{"kind", "linear"}}},
                   {"fam", {{"kind", "seeded-family"}, {"count", 4}, {"seed", 5}}}};
    c["experiments"] = json::array(
        {{{"type", "characteristic_condition"},
          {"id", "weighted-linear-products"},
          {"anchor", "linear indicator bound"},
          {"X1", "X"},
          {"X2", "X"},
          {"Y", "X"},
          {"alpha", 0.0},
          {"form", "linear"},
          {"centers", {{0.0}, {1.0}}},
          {"scale_min", 0.25},
          {"scale_max", 2.0},
          {"drift", 1.5}},
         {{"type", "operator_norm_estimate"},
          {"id", "weighted-linear-commutator-norm"},
          {"anchor", "commutator bounded on the weighted Morrey scale"},
          {"op",
           {{"kind", "linear-singular"}, {"omega", "cos"}, {"eps", 0.03125}, {"b", "b"}}},
          {"in1", "X"},
          {"in2", "X"},
          {"out", "X"},
          {"profile_in1", "u"},
          {"profile_in2", "u"},
          {"profile_out", "u"},
          {"morrey_family", {{"stride", 16}, {"r_min", 0.125}, {"r_max", 2.0}}},
          {"inputs", json::array({"fam"})},
          {"divide_by_bmo", true},
          {"bmo_family", {{"stride", 16}, {"r_min", 0.0625}, {"r_max", 2.0}}},
          {"stability", 0.6},
          {"refinements", 1}}});
    return c;
}

json two_weight_fractional() {
    json c = base_frame(1.0 / 128, 4);
    c["description"] =
        "bilinear fractional integral between two-weight Morrey spaces (measure weight in the "
        "norm, a second weight in the profile)";
    c["weights"] = {{"mu", {{"kind", "power"}, {"a", 0.2}}},
                    {"nu", {{"kind", "power"}, {"a", 0.3}}}};
    c["spaces"] = {{"Xin", {{"kind", "weighted"}, {"p", 2}, {"weight", "mu"}}},
                   {"Yout", {{"kind", "weighted"}, {"p", 2}, {"weight", "nu"}}}};
    c["profiles"] = {{"uin", {{"kind", "measure"}, {"weight", "nu"}, {"kappa", 0.25}}},
                     {"uout", {{"kind", "product"}, {"of", {"uin", "uin"}}}}};
    c["kernels"] = {{"K", {{"form", "fractional"}, {"alpha", 0.5}}}};
    c["inputs"] = {{"fam", {{"kind", "seeded-family"}, {"count", 3}, {"seed", 9}}}};
    c["experiments"] = json::array({{{"type", "operator_norm_estimate"},
                                     {"id", "two-weight-fractional-norm"},
                                     {"anchor", "fractional operator on two-weight scale"},
                                     {"op", {{"kind", "bilinear"}, {"kernel", "K"}}},
                                     {"in1", "Xin"},
                                     {"in2", "Xin"},
                                     {"out", "Yout"},
                                     {"profile_in1", "uin"},
                                     {"profile_in2", "uin"},
                                     {"profile_out", "uout"},
                                     {"morrey_family", {{"stride", 16}, {"r_min", 0.125},
                                                        {"r_max", 2.0}}},
                                     {"inputs", json::array({"fam"})},
                                     {"dilations", {1.0, 0.5}},
                                     {"stability", 0.8},
                                     {"refinements", 1}}});
    return c;
}

json linear_riesz_weighted() {
    json c = base_frame(1.0 / 128, 4);
    c["description"] =
        "Riesz potential commutator with a power weight between the matching two-weight "
        "Morrey spaces";
    c["weights"] = {{"wp", {{"kind", "power"}, {"a", 0.075}}},
                    {"wq", {{"kind", "power"}, {"a", 0.3}}}};
    c["spaces"] = {{"Xin", {{"kind", "weighted"}, {"p", 1.5}, {"weight", "wp"}}},
                   {"Yout", {{"kind", "weighted"}, {"p", 6}, {"weight", "wq"}}}};
    c["profiles"] = {{"uin", {{"kind", "measure"}, {"weight", "wq"}, {"kappa", 0.333333}}},
                     {"uout", {{"kind", "measure"}, {"weight", "wq"}, {"kappa", 0.0833333}}}};
    c["inputs"] = {{"b", {{"kind", "linear"}}},
                   {"fam", {{"kind", "seeded-family"}, {"count", 3}, {"seed", 13}}}};
    c["experiments"] = json::array({{{"type", "operator_norm_estimate"},
                                     {"id", "weighted-riesz-commutator"},
                                     {"anchor", "fractional linear commutator, weighted scale"},
                                     {"op", {{"kind", "linear-riesz"}, {"alpha", 0.5},
                                             {"b", "b"}}},
                                     {"in1", "Xin"},
                                     {"in2", "Xin"},
                                     {"out", "Yout"},
                                     {"profile_in1", "uin"},
                                     {"profile_in2", "uin"},
                                     {"profile_out", "uout"},
                                     {"morrey_family", {{"stride", 16}, {"r_min", 0.125},
                                                        {"r_max", 2.0}}},
                                     {"inputs", json::array({"fam"})},
                                     {"divide_by_bmo", true},
                                     {"bmo_family", {{"stride", 16}, {"r_min", 0.0625},
                                                     {"r_max", 2.0}}},
                                     {"stability", 0.8},
                                     {"refinements", 1}}});
    return c;
}

json varexp_product_singular() {
    json c = base_frame(1.0 / 128, 4);
    c["description"] =
        "variable-exponent product setup: indicator products for the pointwise harmonic sum "
        "and commutator growth under the rough kernel";
    c["exponents"] = {{"p1", {{"kind", "log-smooth"}, {"base", 2.2}, {"amplitude", 0.5}}},
                      {"p2", {{"kind", "log-smooth"}, {"base", 2.8}, {"amplitude", 0.4}}},
                      {"p", {{"kind", "harmonic-sum"}, {"of", {"p1", "p2"}}}}};
    c["spaces"] = {{"X1", {{"kind", "variable"}, {"exponent", "p1"}}},
                   {"X2", {{"kind", "variable"}, {"exponent", "p2"}}},
                   {"Y", {{"kind", "variable"}, {"exponent", "p"}}}};
    c["kernels"] = {{"K", {{"form", "rough"}, {"omega", "cos3"}, {"mean_zero", true}}}};
    c["inputs"] = {{"blog", {{"kind", "signed-log-family"}, {"k_max", 4}}},
                   {"fbox", {{"kind", "box"}, {"center", {0.25}}, {"side", 1.0}}},
                   {"gbox", {{"kind", "box"}, {"center", {-0.25}}, {"side", 1.0}}}};
    c["experiments"] = json::array(
        {{{"type", "characteristic_condition"},
          {"id", "varexp-indicator-products"},
          {"anchor", "harmonic-sum indicator bound"},
          {"X1", "X1"},
          {"X2", "X2"},
          {"Y", "Y"},
          {"alpha", 0.0},
          {"form", "cube"},
          {"centers", {{0.0}, {0.5}}},
          {"scale_min", 0.25},
          {"scale_max", 2.0},
          {"drift", 1.0}},
         {{"type", "bmo_necessity_experiment"},
          {"id", "varexp-commutator-growth"},
          {"anchor", "commutator growth, variable exponents"},
          {"kernel", "K"},
          {"b_family", json::array({"blog"})},
          {"inputs", json::array({"fbox", "gbox"})},
          {"points", {{0.375}, {-0.375}}},
          {"bmo_family", {{"stride", 8}, {"r_min", 0.015625}, {"r_max", 2.0}}},
          {"cube_pairs", json::array({{{"center", {0.0}}, {"side", 0.5}, {"shift", 1.67}}})},
          {"expect_growth", true}}});
    return c;
}

json varexp_fractional() {
    json c = base_frame(1.0 / 128, 4);
    c["description"] =
        "variable-exponent fractional setup: indicator products with the fractional shift of "
        "the harmonic-sum exponent";
    c["exponents"] = {{"p1", {{"kind", "log-smooth"}, {"base", 2.5}, {"amplitude", 0.4}}},
                      {"p2", {{"kind", "log-smooth"}, {"base", 3.0}, {"amplitude", 0.3}}},
                      {"p", {{"kind", "harmonic-sum"}, {"of", {"p1", "p2"}}}},
                      {"q", {{"kind", "fractional-shift"}, {"of", "p"}, {"shift", 0.25}}}};
    c["spaces"] = {{"X1", {{"kind", "variable"}, {"exponent", "p1"}}},
                   {"X2", {{"kind", "variable"}, {"exponent", "p2"}}},
                   {"Yq", {{"kind", "variable"}, {"exponent", "q"}}}};
    c["experiments"] = json::array({{{"type", "characteristic_condition"},
                                     {"id", "varexp-fractional-products"},
                                     {"anchor", "fractional-shift indicator bound"},
                                     {"X1", "X1"},
                                     {"X2", "X2"},
                                     {"Y", "Yq"},
                                     {"alpha", 0.25},
                                     {"form", "cube"},
                                     {"centers", {{0.0}, {0.5}}},
                                     {"scale_min", 0.25},
                                     {"scale_max", 2.0},
                                     {"drift", 1.0}}});
    return c;
}

json varexp_rough_bounded() {
    json c = base_frame(1.0 / 128, 4);
    c["description"] =
        "rough bilinear operator between variable-exponent Morrey spaces with power profiles";
    c["exponents"] = {{"p1", {{"kind", "log-smooth"}, {"base", 2.2}, {"amplitude", 0.5}}},
                      {"p2", {{"kind", "log-smooth"}, {"base", 2.8}, {"amplitude", 0.4}}},
                      {"p", {{"kind", "harmonic-sum"}, {"of", {"p1", "p2"}}}}};
    c["spaces"] = {{"X1", {{"kind", "variable"}, {"exponent", "p1"}}},
                   {"X2", {{"kind", "variable"}, {"exponent", "p2"}}},
                   {"Y", {{"kind", "variable"}, {"exponent", "p"}}}};
    c["profiles"] = {{"u1", {{"kind", "power"}, {"c", 1.0}, {"lambda", 0.2}}},
                     {"u2", {{"kind", "power"}, {"c", 1.0}, {"lambda", 0.15}}},
                     {"u", {{"kind", "product"}, {"of", {"u1", "u2"}}}}};
    c["kernels"] = {{"K", {{"form", "rough"}, {"omega", "cos3"}, {"mean_zero", true}}}};
    c["inputs"] = {{"fam", {{"kind", "seeded-family"}, {"count", 3}, {"seed", 21}}}};
    c["experiments"] = json::array({{{"type", "operator_norm_estimate"},
                                     {"id", "varexp-rough-norm"},
                                     {"anchor", "rough bilinear operator, variable Morrey"},
                                     {"op", {{"kind", "bilinear"}, {"kernel", "K"}}},
                                     {"in1", "X1"},
                                     {"in2", "X2"},
                                     {"out", "Y"},
                                     {"profile_in1", "u1"},
                                     {"profile_in2", "u2"},
                                     {"profile_out", "u"},
                                     {"morrey_family", {{"stride", 16}, {"r_min", 0.125},
                                                        {"r_max", 2.0}}},
                                     {"inputs", json::array({"fam"})},
                                     {"dilations", {1.0, 0.5}},
                                     {"stability", 0.8},
                                     {"refinements", 1}}});
    return c;
}

json varexp_cz_bounded() {
    json c = base_frame(1.0 / 256, 2);
    c["description"] =
        "smooth order-zero kernel on variable-exponent Morrey spaces, with the truncation "
        "ladder and the sharp-maximal lower bound";
    c["exponents"] = {{"p1", {{"kind", "log-smooth"}, {"base", 2.4}, {"amplitude", 0.4}}},
                      {"p2", {{"kind", "log-smooth"}, {"base", 2.6}, {"amplitude", 0.3}}},
                      {"p", {{"kind", "harmonic-sum"}, {"of", {"p1", "p2"}}}}};
    c["spaces"] = {{"X1", {{"kind", "variable"}, {"exponent", "p1"}}},
                   {"X2", {{"kind", "variable"}, {"exponent", "p2"}}},
                   {"Y", {{"kind", "variable"}, {"exponent", "p"}}}};
    c["profiles"] = {{"u1", {{"kind", "power"}, {"c", 1.0}, {"lambda", 0.2}}},
                     {"u2", {{"kind", "power"}, {"c", 1.0}, {"lambda", 0.15}}},
                     {"u", {{"kind", "product"}, {"of", {"u1", "u2"}}}}};
    c["kernels"] = {{"K", {{"form", "cz"}, {"omega", "cos3"}, {"regularity", 1.0}}}};
    c["inputs"] = {{"fam", {{"kind", "seeded-family"}, {"count", 3}, {"seed", 31}}},
                   {"fg", {{"kind", "gaussian"}, {"center", {0.1}}, {"width", 0.4}}},
                   {"gg", {{"kind", "gaussian"}, {"center", {-0.2}}, {"width", 0.5}}},
                   {"bump", {{"kind", "gaussian"}, {"center", {0.0}}, {"width", 0.3},
                             {"degree", 1}}}};
    c["experiments"] = json::array(
        {{{"type", "operator_norm_estimate"},
          {"id", "varexp-cz-norm"},
          {"anchor", "order-zero smooth kernel, variable Morrey"},
          {"op", {{"kind", "bilinear"}, {"kernel", "K"}}},
          {"in1", "X1"},
          {"in2", "X2"},
          {"out", "Y"},
          {"profile_in1", "u1"},
          {"profile_in2", "u2"},
          {"profile_out", "u"},
          {"morrey_family", {{"stride", 16}, {"r_min", 0.125}, {"r_max", 1.0}}},
          {"inputs", json::array({"fam"})},
          {"stability", 0.8},
          {"refinements", 1}},
         {{"type", "truncation_convergence_check"},
          {"id", "varexp-cz-truncation"},
          {"anchor", "principal-value ladder settles"},
          {"f", "fg"},
          {"g", "gg"},
          {"kernel", "K"},
          {"points", {{0.0}, {0.25}, {-0.375}}},
          {"eps0", 0.125},
          {"rungs", 8},
          {"tol", 0.001}},
         {{"type", "fefferman_stein_check"},
          {"id", "varexp-sharp-lower-bound"},
          {"anchor", "norm controlled by the sharp maximal function"},
          {"exponent", "p"},
          {"inputs", json::array({"bump"})},
          {"delta", 1.0},
          {"family", {{"stride", 8}, {"r_min", 0.03125}, {"r_max", 1.0}}},
          {"refinements", 1},
          {"stability", 0.5}}});
    return c;
}

json negative_controls() {
    json c = base_frame(1.0 / 128, 4);
    c["description"] =
        "designed-to-fail control per experiment type; the run must report every verdict as "
        "fail (exit status equals the count)";
    c["weights"] = {{"wexp", {{"kind", "exponential"}, {"rate", 4.0}}},
                    {"w", {{"kind", "power"}, {"a", 0.5}}}};
    c["exponents"] = {{"p2", {{"kind", "constant"}, {"p", 2}}}};
    c["spaces"] = {{"L2", {{"kind", "lebesgue"}, {"p", 2}}},
                   {"L3", {{"kind", "lebesgue"}, {"p", 3}}},
                   {"L1", {{"kind", "lebesgue"}, {"p", 1}}},
                   {"Wexp", {{"kind", "weighted"}, {"p", 2}, {"weight", "wexp"}}},
                   {"V2", {{"kind", "variable"}, {"exponent", "p2"}}}};
    c["profiles"] = {{"utoobig", {{"kind", "power"}, {"c", 1.0}, {"lambda", 0.25}}}};
    c["kernels"] = {{"K", {{"form", "fractional"}, {"alpha", 1.0}}},
                    {"Kbad", {{"form", "rough"}, {"omega", "one"}, {"mean_zero", false}}}};
    c["inputs"] = {{"fam", {{"kind", "seeded-family"}, {"count", 4}, {"seed", 3}}},
                   {"blog", {{"kind", "capped-log-family"}, {"k_max", 4}}},
                   {"fbox", {{"kind", "box"}, {"center", {0.0}}, {"side", 2.0}}},
                   {"gauss", {{"kind", "gaussian"}, {"center", {0.0}}, {"width", 0.4}}},
                   {"drift", {{"kind", "gaussian"}, {"center", {0.3}}, {"width", 0.5}}},
                   {"b", {{"kind", "linear"}}}};
    c["experiments"] = json::array(
        {// pairing against the wrong associate exponent
         {{"type", "holder_check"},
          {"id", "control-holder"},
          {"anchor", "control: self-pairing violates the bound"},
          {"space", "L3"},
          {"fs", json::array({"fam"})},
          {"gs", json::array({"fam"})},
          {"associate_override", "L3"},
          {"refinements", 0}},
         // indicator duality blows up for a non-doubling exponential weight
         {{"type", "chi_duality_check"},
          {"id", "control-chi-duality"},
          {"anchor", "control: exponential weight breaks stability"},
          {"space", "Wexp"},
          {"balls", {{"centers", {{0.0}}}, {"r_min", 0.125}, {"r_max", 2.0}}},
          {"refinements", 0}},
         // mismatched exponents scale like a power of the side
         {{"type", "characteristic_condition"},
          {"id", "control-characteristic"},
          {"anchor", "control: exponent mismatch drifts across scales"},
          {"X1", "L2"},
          {"X2", "L2"},
          {"Y", "L1"},
          {"alpha", 1.0},
          {"form", "ball"},
          {"centers", {{0.0}}},
          {"scale_min", 0.125},
          {"scale_max", 2.0},
          {"drift", 0.5}},
         // dropping the tail integrals breaks ball independence
         {{"type", "ball_independence_check"},
          {"id", "control-ball-independence"},
          {"anchor", "control: tails dropped"},
          {"f", "fbox"},
          {"g", "fbox"},
          {"kernel", "K"},
          {"pairs", json::array({{{"c1", {0.0}}, {"r1", 0.25}, {"c2", {0.125}},
                                  {"r2", 0.5}}})},
          {"points", {{0.0625}}},
          {"tol", 0.001},
          {"drop_tails", true},
          {"refinements", 1}},
         // fractional operator aimed at the wrong target exponent drifts under dilation
         {{"type", "operator_norm_estimate"},
          {"id", "control-operator-norm"},
          {"anchor", "control: wrong target space"},
          {"op", {{"kind", "bilinear"}, {"kernel", "K"}}},
          {"in1", "L2"},
          {"in2", "L2"},
          {"out", "L2"},
          {"inputs", json::array({"gauss"})},
          {"dilations", {1.0, 0.5, 0.25}},
          {"stability", 0.15},
          {"refinements", 0}},
         // condition side computed at a mismatched order cannot track the operator side
         {{"type", "averaging_equivalence_check"},
          {"id", "control-averaging-equivalence"},
          {"anchor", "control: order mismatch between the two sides"},
          {"X1", "L2"},
          {"X2", "L2"},
          {"Y", "L1"},
          {"alpha", 0.0},
          {"alpha_operator", 1.0},
          {"cube_centers", {{0.0}}},
          {"side_min", 0.125},
          {"side_max", 2.0},
          {"inputs", json::array({"fbox"})},
          {"tracking_factor", 2.0}},
         // a uniformly bounded-oscillation family cannot show strict growth
         {{"type", "bmo_necessity_experiment"},
          {"id", "control-bmo-necessity"},
          {"anchor", "control: bounded-oscillation family declared as growing"},
          {"kernel", "K"},
          {"b_family", json::array({"blog"})},
          {"inputs", json::array({"fbox"})},
          {"points", {{0.375}, {-0.375}}},
          {"bmo_family", {{"stride", 8}, {"r_min", 0.03125}, {"r_max", 2.0}}},
          {"expect_growth", true}},
         // non-mean-zero angular part log-diverges along the ladder
         {{"type", "truncation_convergence_check"},
          {"id", "control-truncation"},
          {"anchor", "control: no cancellation, ladder diverges"},
          {"f", "gauss"},
          {"g", "gauss"},
          {"kernel", "Kbad"},
          {"points", {{0.0}, {0.25}}},
          {"eps0", 0.25},
          {"rungs", 8},
          {"tol", 0.001}},
         // constants defeat the sharp-maximal lower bound
         {{"type", "fefferman_stein_check"},
          {"id", "control-fefferman-stein"},
          {"anchor", "control: growing constant component"},
          {"exponent", "p2"},
          {"inputs", json::array({"gauss", "drift", "fbox"})},
          {"delta", 1.0},
          {"family", {{"stride", 8}, {"r_min", 0.0625}, {"r_max", 2.0}}},
          {"refinements", 0},
          {"stability", 0.3}},
         // a signed functional is not a lattice norm
         {{"type", "bfs_axiom_check"},
          {"id", "control-bfs-axioms"},
          {"anchor", "control: signed functional"},
          {"space", "L2"},
          {"defective_signed", true}},
         // order too large for the profile: the tail series diverges
         {{"type", "profile_admissibility_check"},
          {"id", "control-profile"},
          {"anchor", "control: tail series diverges"},
          {"profile", "utoobig"},
          {"space", "L2"},
          {"alpha", 0.75},
          {"r0", 0.25},
          {"levels", 8},
          {"expect_admissible", true}}});
    return c;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"smoke",
            "product-weights-singular",
            "linear-weighted-singular",
            "two-weight-fractional",
            "linear-riesz-weighted",
            "varexp-product-singular",
            "varexp-fractional",
            "varexp-rough-bounded",
            "varexp-cz-bounded",
            "negative-controls"};
}

nlohmann::json preset_config(const std::string& name) {
    if (name == "smoke") return smoke();
    if (name == "product-weights-singular") return product_weights_singular();
    if (name == "linear-weighted-singular") return linear_weighted_singular();
    if (name == "two-weight-fractional") return two_weight_fractional();
    if (name == "linear-riesz-weighted") return linear_riesz_weighted();
    if (name == "varexp-product-singular") return varexp_product_singular();
    if (name == "varexp-fractional") return varexp_fractional();
    if (name == "varexp-rough-bounded") return varexp_rough_bounded();
    if (name == "varexp-cz-bounded") return varexp_cz_bounded();
    if (name == "negative-controls") return negative_controls();
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace morlab
