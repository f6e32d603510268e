#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace morlab {

using Vec2 = std::array<double, 2>;

double norm2(const Vec2& v);
double dist(const Vec2& a, const Vec2& b);

/// Uniform node lattice over an axis-aligned box in R^n, n in {1,2}.
/// Nodes sit at lower + i*h per axis; node i owns the cell
/// [x_i - h/2, x_i + h/2] clipped to the box, so the cells tile the box.
class Grid {
public:
    Grid(int dim, Vec2 lower, Vec2 upper, double h);

    int dim() const { return dim_; }
    double spacing() const { return h_; }
    const Vec2& lower() const { return lower_; }
    const Vec2& upper() const { return upper_; }
    int npts(int axis) const { return npts_[axis]; }
    std::size_t size() const { return total_; }

    Vec2 node(std::size_t i) const;
    std::size_t index(int ix, int iy = 0) const;

    // cell of node i clipped to the box
    void cell(std::size_t i, Vec2& lo, Vec2& hi) const;
    double cell_volume(std::size_t i) const;
    double box_volume() const;
    double half_width() const;  // smallest half-extent of the box

    Grid refined() const;  // same box, spacing h/2

    bool operator==(const Grid& o) const;

private:
    int dim_;
    Vec2 lower_, upper_;
    double h_;
    std::array<int, 2> npts_;
    std::size_t total_;
};

struct Ball {
    Vec2 center{0, 0};
    double radius = 0;
    Ball() = default;
    Ball(Vec2 c, double r);
    Ball(double c, double r) : Ball(Vec2{c, 0}, r) {}
};

struct Cube {
    Vec2 center{0, 0};
    double side = 0;
    Cube() = default;
    Cube(Vec2 c, double s);
    Cube(double c, double s) : Cube(Vec2{c, 0}, s) {}
};

struct Everywhere {};

using Region = std::variant<Everywhere, Ball, Cube>;

/// Closed-region membership (boundary nodes belong to the region).
bool contains(const Region& r, const Vec2& x);
bool contains(const Ball& b, const Vec2& x);
bool contains(const Cube& q, const Vec2& x);

Ball dilate(const Ball& b, double factor);

/// Real-valued sample vector over a Grid; one value per node, all finite.
class GridFunction {
public:
    GridFunction(Grid grid, std::vector<double> values);
    GridFunction(const Grid& grid, double constant);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    std::size_t size() const { return values_.size(); }

private:
    Grid grid_;
    std::vector<double> values_;
};

/// Volume of cell_i ∩ region: exact interval overlap in 1D, exact
/// rectangle overlap for cubes, circular-segment area for 2D balls.
double cell_coverage(const Grid& g, std::size_t i, const Region& r);

/// Composite midpoint quadrature of f over region ∩ box with
/// partial cells weighted by the covered fraction.
double integrate(const GridFunction& f, const Region& r);

/// |region ∩ box| by the same cell-coverage quadrature (exact).
double measure(const Grid& g, const Region& r);

/// integrate / measure; throws "degenerate region" on zero measure.
double region_average(const GridFunction& f, const Region& r);

/// Nodewise product with the (complemented) closed indicator of the region.
GridFunction restrict_to(const GridFunction& f, const Region& r, bool complement = false);

/// Area of {x in [x0,x1] x [y0,y1] : |x - c| <= r} (exact, 2D).
double disk_rect_area(const Vec2& c, double r, double x0, double x1, double y0, double y1);

}  // namespace morlab
