#pragma once

#include "morlab/families.hpp"
#include "morlab/profile.hpp"
#include "morlab/spaces.hpp"

namespace morlab {

/// Morrey space over a base space: sup over a declared ball family of
/// ||chi_B f||_X / u(y, r).
struct MorreySpace {
    BaseSpace base;
    WeightProfile profile;
    BallFamilySpec family;
};

struct MorreyNormResult {
    double value = 0;
    Ball argmax{Vec2{0, 0}, 1};
};

MorreyNormResult morrey_norm_detailed(const GridFunction& f, const MorreySpace& M);
double morrey_norm(const GridFunction& f, const MorreySpace& M);

}  // namespace morlab
