#include "morlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace morlab {

double norm2(const Vec2& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1]); }

double dist(const Vec2& a, const Vec2& b) {
    return norm2({a[0] - b[0], a[1] - b[1]});
}

Grid::Grid(int dim, Vec2 lower, Vec2 upper, double h)
    : dim_(dim), lower_(lower), upper_(upper), h_(h) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("grid dimension must be 1 or 2");
    if (!(h > 0)) throw std::invalid_argument("grid spacing must be positive");
    total_ = 1;
    for (int a = 0; a < 2; ++a) {
        if (a >= dim_) {
            lower_[a] = upper_[a] = 0;
            npts_[a] = 1;
            continue;
        }
        double len = upper[a] - lower[a];
        if (!(len > 0)) throw std::invalid_argument("grid box must have positive extent");
        double k = len / h;
        double kr = std::round(k);
        if (std::abs(k - kr) > 1e-12 * std::max(1.0, k))
            throw std::invalid_argument("box extent must be an integer multiple of the spacing");
        npts_[a] = static_cast<int>(kr) + 1;
        total_ *= static_cast<std::size_t>(npts_[a]);
    }
}

Vec2 Grid::node(std::size_t i) const {
    int ix = static_cast<int>(i % static_cast<std::size_t>(npts_[0]));
    int iy = static_cast<int>(i / static_cast<std::size_t>(npts_[0]));
    Vec2 p{lower_[0] + ix * h_, 0};
    if (dim_ == 2) p[1] = lower_[1] + iy * h_;
    return p;
}

std::size_t Grid::index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * static_cast<std::size_t>(npts_[0]) +
           static_cast<std::size_t>(ix);
}

void Grid::cell(std::size_t i, Vec2& lo, Vec2& hi) const {
    Vec2 p = node(i);
    for (int a = 0; a < 2; ++a) {
        lo[a] = std::max(p[a] - h_ / 2, lower_[a]);
        hi[a] = std::min(p[a] + h_ / 2, upper_[a]);
    }
}

double Grid::cell_volume(std::size_t i) const {
    Vec2 lo, hi;
    cell(i, lo, hi);
    double v = hi[0] - lo[0];
    if (dim_ == 2) v *= hi[1] - lo[1];
    return v;
}

double Grid::box_volume() const {
    double v = upper_[0] - lower_[0];
    if (dim_ == 2) v *= upper_[1] - lower_[1];
    return v;
}

double Grid::half_width() const {
    double w = (upper_[0] - lower_[0]) / 2;
    if (dim_ == 2) w = std::min(w, (upper_[1] - lower_[1]) / 2);
    return w;
}

Grid Grid::refined() const { return Grid(dim_, lower_, upper_, h_ / 2); }

bool Grid::operator==(const Grid& o) const {
    return dim_ == o.dim_ && lower_ == o.lower_ && upper_ == o.upper_ && h_ == o.h_;
}

Ball::Ball(Vec2 c, double r) : center(c), radius(r) {
    if (!(r > 0)) throw std::invalid_argument("ball radius must be positive");
}

Cube::Cube(Vec2 c, double s) : center(c), side(s) {
    if (!(s > 0)) throw std::invalid_argument("cube side must be positive");
}

bool contains(const Ball& b, const Vec2& x) { return dist(b.center, x) <= b.radius; }

bool contains(const Cube& q, const Vec2& x) {
    return std::abs(x[0] - q.center[0]) <= q.side / 2 &&
           std::abs(x[1] - q.center[1]) <= q.side / 2;
}

bool contains(const Region& r, const Vec2& x) {
    if (std::holds_alternative<Everywhere>(r)) return true;
    if (const Ball* b = std::get_if<Ball>(&r)) return contains(*b, x);
    return contains(std::get<Cube>(r), x);
}

Ball dilate(const Ball& b, double factor) { return Ball(b.center, b.radius * factor); }

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw std::invalid_argument("value count does not match grid size");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite input");
}

GridFunction::GridFunction(const Grid& grid, double constant)
    : grid_(grid), values_(grid.size(), constant) {
    if (!std::isfinite(constant)) throw std::invalid_argument("non-finite input");
}

namespace {

double interval_overlap(double a0, double a1, double b0, double b1) {
    return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

// area under the circle arc: antiderivative of sqrt(r^2 - x^2)
double arc_antideriv(double r, double x) {
    x = std::clamp(x, -r, r);
    return (x * std::sqrt(std::max(0.0, r * r - x * x)) + r * r * std::asin(x / r)) / 2;
}

}  // namespace

double disk_rect_area(const Vec2& c, double r, double x0, double x1, double y0, double y1) {
    // shift so the disk is centered at the origin
    x0 -= c[0]; x1 -= c[0]; y0 -= c[1]; y1 -= c[1];
    x0 = std::max(x0, -r); x1 = std::min(x1, r);
    if (x0 >= x1) return 0;

    // breakpoints where the chord height crosses |y0| or |y1|
    std::vector<double> xs{x0, x1};
    for (double y : {y0, y1}) {
        if (std::abs(y) < r) {
            double xb = std::sqrt(r * r - y * y);
            if (xb > x0 && xb < x1) xs.push_back(xb);
            if (-xb > x0 && -xb < x1) xs.push_back(-xb);
        }
    }
    std::sort(xs.begin(), xs.end());

    double area = 0;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        double a = xs[k], b = xs[k + 1];
        if (b - a <= 0) continue;
        double xm = (a + b) / 2;
        double ch = std::sqrt(std::max(0.0, r * r - xm * xm));
        double top = std::min(y1, ch);    // on this piece: constant y1 or the arc
        double bot = std::max(y0, -ch);
        if (top <= bot) continue;
        double piece = 0;
        piece += (top == y1) ? y1 * (b - a) : (arc_antideriv(r, b) - arc_antideriv(r, a));
        piece -= (bot == y0) ? y0 * (b - a) : -(arc_antideriv(r, b) - arc_antideriv(r, a));
        area += piece;
    }
    return area;
}

double cell_coverage(const Grid& g, std::size_t i, const Region& r) {
    Vec2 lo, hi;
    g.cell(i, lo, hi);
    if (std::holds_alternative<Everywhere>(r)) {
        double v = hi[0] - lo[0];
        if (g.dim() == 2) v *= hi[1] - lo[1];
        return v;
    }
    if (const Cube* q = std::get_if<Cube>(&r)) {
        double v = interval_overlap(lo[0], hi[0], q->center[0] - q->side / 2,
                                    q->center[0] + q->side / 2);
        if (g.dim() == 2)
            v *= interval_overlap(lo[1], hi[1], q->center[1] - q->side / 2,
                                  q->center[1] + q->side / 2);
        return v;
    }
    const Ball& b = std::get<Ball>(r);
    if (g.dim() == 1)
        return interval_overlap(lo[0], hi[0], b.center[0] - b.radius, b.center[0] + b.radius);
    return disk_rect_area(b.center, b.radius, lo[0], hi[0], lo[1], hi[1]);
}

double integrate(const GridFunction& f, const Region& r) {
    const Grid& g = f.grid();
    double s = 0;
    if (std::holds_alternative<Everywhere>(r)) {
        for (std::size_t i = 0; i < g.size(); ++i) s += f[i] * g.cell_volume(i);
        return s;
    }
    // restrict the loop to the bounding box of the region
    Vec2 rlo{g.lower()}, rhi{g.upper()};
    if (const Ball* b = std::get_if<Ball>(&r)) {
        for (int a = 0; a < g.dim(); ++a) {
            rlo[a] = b->center[a] - b->radius;
            rhi[a] = b->center[a] + b->radius;
        }
    } else if (const Cube* q = std::get_if<Cube>(&r)) {
        for (int a = 0; a < g.dim(); ++a) {
            rlo[a] = q->center[a] - q->side / 2;
            rhi[a] = q->center[a] + q->side / 2;
        }
    }
    double h = g.spacing();
    int ix0 = std::max(0, static_cast<int>(std::floor((rlo[0] - h / 2 - g.lower()[0]) / h)));
    int ix1 = std::min(g.npts(0) - 1,
                       static_cast<int>(std::ceil((rhi[0] + h / 2 - g.lower()[0]) / h)));
    int iy0 = 0, iy1 = 0;
    if (g.dim() == 2) {
        iy0 = std::max(0, static_cast<int>(std::floor((rlo[1] - h / 2 - g.lower()[1]) / h)));
        iy1 = std::min(g.npts(1) - 1,
                       static_cast<int>(std::ceil((rhi[1] + h / 2 - g.lower()[1]) / h)));
    }
    for (int iy = iy0; iy <= iy1; ++iy)
        for (int ix = ix0; ix <= ix1; ++ix) {
            std::size_t i = g.index(ix, iy);
            double c = cell_coverage(g, i, r);
            if (c > 0) s += f[i] * c;
        }
    return s;
}

double measure(const Grid& g, const Region& r) {
    if (std::holds_alternative<Everywhere>(r)) return g.box_volume();
    // same bounded loop as integrate, without the temporary function
    Vec2 rlo{g.lower()}, rhi{g.upper()};
    if (const Ball* b = std::get_if<Ball>(&r)) {
        for (int a = 0; a < g.dim(); ++a) {
            rlo[a] = b->center[a] - b->radius;
            rhi[a] = b->center[a] + b->radius;
        }
    } else if (const Cube* q = std::get_if<Cube>(&r)) {
        for (int a = 0; a < g.dim(); ++a) {
            rlo[a] = q->center[a] - q->side / 2;
            rhi[a] = q->center[a] + q->side / 2;
        }
    }
    double h = g.spacing();
    int ix0 = std::max(0, static_cast<int>(std::floor((rlo[0] - h / 2 - g.lower()[0]) / h)));
    int ix1 = std::min(g.npts(0) - 1,
                       static_cast<int>(std::ceil((rhi[0] + h / 2 - g.lower()[0]) / h)));
    int iy0 = 0, iy1 = 0;
    if (g.dim() == 2) {
        iy0 = std::max(0, static_cast<int>(std::floor((rlo[1] - h / 2 - g.lower()[1]) / h)));
        iy1 = std::min(g.npts(1) - 1,
                       static_cast<int>(std::ceil((rhi[1] + h / 2 - g.lower()[1]) / h)));
    }
    double s = 0;
    for (int iy = iy0; iy <= iy1; ++iy)
        for (int ix = ix0; ix <= ix1; ++ix) s += cell_coverage(g, g.index(ix, iy), r);
    return s;
}

double region_average(const GridFunction& f, const Region& r) {
    double m = measure(f.grid(), r);
    if (!(m > 0)) throw std::invalid_argument("degenerate region");
    return integrate(f, r) / m;
}

GridFunction restrict_to(const GridFunction& f, const Region& r, bool complement) {
    const Grid& g = f.grid();
    std::vector<double> v(g.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool in = contains(r, g.node(i));
        if (in != complement) v[i] = f[i];
    }
    return GridFunction(g, std::move(v));
}

}  // namespace morlab
