#include "morlab/morrey.hpp"

#include <stdexcept>

namespace morlab {

MorreyNormResult morrey_norm_detailed(const GridFunction& f, const MorreySpace& M) {
    std::vector<Ball> balls = make_ball_family(f.grid(), M.family);
    if (balls.empty()) throw std::invalid_argument("empty ball family");
    MorreyNormResult out;
    out.argmax = balls.front();
    for (const Ball& b : balls) {
        double u = M.profile(b.center, b.radius);
        double v = base_norm(restrict_to(f, Region{b}), M.base) / u;
        if (v > out.value) {
            out.value = v;
            out.argmax = b;
        }
    }
    return out;
}

double morrey_norm(const GridFunction& f, const MorreySpace& M) {
    return morrey_norm_detailed(f, M).value;
}

}  // namespace morlab
