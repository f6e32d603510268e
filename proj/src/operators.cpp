#include "morlab/operators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "morlab/weights.hpp"

namespace morlab {

namespace {

int g_threads = 0;

struct Support {
    std::vector<std::size_t> idx;
    std::vector<double> val;   // f value
    std::vector<double> vol;   // cell volume
    std::vector<Vec2> pos;
};

Support support_of(const GridFunction& f) {
    Support s;
    const Grid& g = f.grid();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (f[i] != 0) {
            s.idx.push_back(i);
            s.val.push_back(f[i]);
            s.vol.push_back(g.cell_volume(i));
            s.pos.push_back(g.node(i));
        }
    return s;
}

void check_shared_grid(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid() == g.grid()))
        throw std::invalid_argument("operands live on different grids");
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    int workers = g_threads > 0 ? g_threads : static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next.fetch_add(16); i < n; i = next.fetch_add(16))
            for (std::size_t k = i; k < std::min(i + 16, n); ++k) body(k);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

}  // namespace

void set_thread_count(int n) { g_threads = n; }
int thread_count() { return g_threads; }

GridFunction hl_maximal(const GridFunction& f, std::span<const double> radii) {
    if (radii.empty()) throw std::invalid_argument("empty radius family");
    const Grid& g = f.grid();
    std::vector<double> absf(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) absf[i] = std::abs(f[i]);
    GridFunction af(g, std::move(absf));
    std::vector<double> out(g.size(), 0.0);
    parallel_for(g.size(), [&](std::size_t i) {
        Vec2 x = g.node(i);
        double best = 0;
        for (double r : radii) {
            Region ball{Ball(x, r)};
            double m = measure(g, ball);
            if (m > 0) best = std::max(best, integrate(af, ball) / m);
        }
        out[i] = best;
    });
    return GridFunction(g, std::move(out));
}

GridFunction sharp_maximal(const GridFunction& f, double delta, std::span<const Ball> family) {
    if (!(delta > 0 && delta <= 1)) throw std::invalid_argument("delta must lie in (0, 1]");
    const Grid& g = f.grid();
    std::vector<double> pd(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) pd[i] = std::pow(std::abs(f[i]), delta);
    GridFunction fd(g, std::move(pd));
    std::vector<double> best(g.size(), 0.0);
    for (const Ball& b : family) {
        Region r{b};
        double m = measure(g, r);
        if (!(m > 0)) continue;
        double avg = integrate(fd, r) / m;
        std::vector<double> dev(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) dev[i] = std::abs(fd[i] - avg);
        double osc = integrate(GridFunction(g, std::move(dev)), r) / m;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (contains(b, g.node(i))) best[i] = std::max(best[i], osc);
    }
    for (double& v : best) v = std::pow(v, 1 / delta);
    return GridFunction(g, std::move(best));
}

double riesz_potential_at(const GridFunction& f, double alpha, std::size_t node) {
    const Grid& g = f.grid();
    int n = g.dim();
    if (!(alpha > 0 && alpha < n)) throw std::invalid_argument("riesz order must lie in (0, n)");
    Vec2 x = g.node(node);
    double s = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (f[j] == 0) continue;
        if (j == node) continue;
        double d = dist(x, g.node(j));
        s += f[j] * std::pow(d, alpha - n) * g.cell_volume(j);
    }
    if (f[node] != 0) {
        Vec2 lo, hi;
        g.cell(node, lo, hi);
        s += f[node] * power_box_integral(n, alpha - n, 1.0, x, lo, hi);
    }
    return s;
}

GridFunction riesz_potential(const GridFunction& f, double alpha) {
    const Grid& g = f.grid();
    int n = g.dim();
    if (!(alpha > 0 && alpha < n)) throw std::invalid_argument("riesz order must lie in (0, n)");
    Support sf = support_of(f);
    std::vector<double> out(g.size(), 0.0);
    parallel_for(g.size(), [&](std::size_t i) {
        Vec2 x = g.node(i);
        double s = 0;
        for (std::size_t k = 0; k < sf.idx.size(); ++k) {
            if (sf.idx[k] == i) continue;
            double d = dist(x, sf.pos[k]);
            s += sf.val[k] * std::pow(d, alpha - n) * sf.vol[k];
        }
        if (f[i] != 0) {
            Vec2 lo, hi;
            g.cell(i, lo, hi);
            s += f[i] * power_box_integral(n, alpha - n, 1.0, x, lo, hi);
        }
        out[i] = s;
    });
    return GridFunction(g, std::move(out));
}

double bilinear_fractional_at(const GridFunction& f, const GridFunction& g, double alpha,
                              std::size_t node) {
    check_shared_grid(f, g);
    const Grid& gr = f.grid();
    BilinearKernel K = FractionalKernel{alpha};
    KernelEval ke(K, gr.dim());
    Support sf = support_of(f), sg = support_of(g);
    Vec2 x = gr.node(node);
    double s = 0;
    for (std::size_t a = 0; a < sf.idx.size(); ++a) {
        Vec2 u{x[0] - sf.pos[a][0], x[1] - sf.pos[a][1]};
        double fa = sf.val[a] * sf.vol[a];
        for (std::size_t b = 0; b < sg.idx.size(); ++b) {
            if (sf.idx[a] == node && sg.idx[b] == node) continue;
            Vec2 v{x[0] - sg.pos[b][0], x[1] - sg.pos[b][1]};
            s += ke(u, v) * fa * sg.val[b] * sg.vol[b];
        }
    }
    if (f[node] != 0 && g[node] != 0)
        s += f[node] * g[node] * singular_cell_integral(K, gr.dim(), gr.spacing());
    return s;
}

GridFunction bilinear_fractional(const GridFunction& f, const GridFunction& g, double alpha) {
    check_shared_grid(f, g);
    const Grid& gr = f.grid();
    BilinearKernel K = FractionalKernel{alpha};
    KernelEval ke(K, gr.dim());
    Support sf = support_of(f), sg = support_of(g);
    double sing = singular_cell_integral(K, gr.dim(), gr.spacing());
    std::vector<double> out(gr.size(), 0.0);
    parallel_for(gr.size(), [&](std::size_t i) {
        Vec2 x = gr.node(i);
        double s = 0;
        for (std::size_t a = 0; a < sf.idx.size(); ++a) {
            Vec2 u{x[0] - sf.pos[a][0], x[1] - sf.pos[a][1]};
            double fa = sf.val[a] * sf.vol[a];
            for (std::size_t b = 0; b < sg.idx.size(); ++b) {
                if (sf.idx[a] == i && sg.idx[b] == i) continue;
                Vec2 v{x[0] - sg.pos[b][0], x[1] - sg.pos[b][1]};
                s += ke(u, v) * fa * sg.val[b] * sg.vol[b];
            }
        }
        if (f[i] != 0 && g[i] != 0) s += f[i] * g[i] * sing;
        out[i] = s;
    });
    return GridFunction(gr, std::move(out));
}

namespace {

double truncated_core(const GridFunction& f, const GridFunction& g, const BilinearKernel& K,
                      double eps, std::size_t node, const TruncationMode& mode,
                      const GridFunction* bfactor, int slot, double bx) {
    check_shared_grid(f, g);
    const Grid& gr = f.grid();
    if (!(eps >= gr.spacing())) throw std::invalid_argument("truncation below grid resolution");
    KernelEval ke(K, gr.dim());
    Support sf = support_of(f), sg = support_of(g);
    Vec2 x = gr.node(node);
    double e2 = eps * eps;
    double s = 0;
    for (std::size_t a = 0; a < sf.idx.size(); ++a) {
        Vec2 u{x[0] - sf.pos[a][0], x[1] - sf.pos[a][1]};
        double du2 = u[0] * u[0] + u[1] * u[1];
        if (mode.product && du2 <= e2) continue;
        double fa = sf.val[a] * sf.vol[a];
        if (bfactor && slot == 1) fa *= bx - (*bfactor)[sf.idx[a]];
        for (std::size_t b = 0; b < sg.idx.size(); ++b) {
            Vec2 v{x[0] - sg.pos[b][0], x[1] - sg.pos[b][1]};
            double dv2 = v[0] * v[0] + v[1] * v[1];
            if (mode.product) {
                if (dv2 <= e2) continue;
            } else if (du2 + dv2 <= e2) {
                continue;
            }
            double gb = sg.val[b] * sg.vol[b];
            if (bfactor && slot == 2) gb *= bx - (*bfactor)[sg.idx[b]];
            s += ke(u, v) * fa * gb;
        }
    }
    return s;
}

}  // namespace

double truncated_bilinear(const GridFunction& f, const GridFunction& g, const BilinearKernel& K,
                          double eps, std::size_t node, const TruncationMode& mode) {
    return truncated_core(f, g, K, eps, node, mode, nullptr, 0, 0);
}

std::vector<double> truncated_bilinear_ladder(const GridFunction& f, const GridFunction& g,
                                              const BilinearKernel& K,
                                              std::span<const double> eps_ladder,
                                              std::size_t node, const TruncationMode& mode) {
    check_shared_grid(f, g);
    const Grid& gr = f.grid();
    std::vector<double> eps(eps_ladder.begin(), eps_ladder.end());
    if (eps.empty()) throw std::invalid_argument("empty truncation ladder");
    for (std::size_t k = 0; k + 1 < eps.size(); ++k)
        if (eps[k] <= eps[k + 1])
            throw std::invalid_argument("truncation ladder must decrease");
    if (!(eps.back() >= gr.spacing()))
        throw std::invalid_argument("truncation below grid resolution");

    KernelEval ke(K, gr.dim());
    Support sf = support_of(f), sg = support_of(g);
    Vec2 x = gr.node(node);
    // bucket[c] = contribution of pairs excluded by exactly the first c rungs
    std::vector<double> bucket(eps.size() + 1, 0.0);
    for (std::size_t a = 0; a < sf.idx.size(); ++a) {
        Vec2 u{x[0] - sf.pos[a][0], x[1] - sf.pos[a][1]};
        double du2 = u[0] * u[0] + u[1] * u[1];
        double fa = sf.val[a] * sf.vol[a];
        for (std::size_t b = 0; b < sg.idx.size(); ++b) {
            Vec2 v{x[0] - sg.pos[b][0], x[1] - sg.pos[b][1]};
            double dv2 = v[0] * v[0] + v[1] * v[1];
            double d2 = mode.product ? std::max(du2, dv2) : du2 + dv2;
            // rungs excluding the pair form a prefix (ladder decreases)
            std::size_t c = 0;
            while (c < eps.size() && d2 <= eps[c] * eps[c]) ++c;
            if (c == eps.size()) continue;  // excluded by every rung
            bucket[c] += ke(u, v) * fa * sg.val[b] * sg.vol[b];
        }
    }
    std::vector<double> out(eps.size());
    double acc = 0;
    for (std::size_t j = 0; j < eps.size(); ++j) {
        acc += bucket[j];
        out[j] = acc;
    }
    return out;
}

GridFunction truncated_bilinear_field(const GridFunction& f, const GridFunction& g,
                                      const BilinearKernel& K, double eps,
                                      const TruncationMode& mode) {
    check_shared_grid(f, g);
    const Grid& gr = f.grid();
    std::vector<double> out(gr.size(), 0.0);
    parallel_for(gr.size(), [&](std::size_t i) {
        out[i] = truncated_bilinear(f, g, K, eps, i, mode);
    });
    return GridFunction(gr, std::move(out));
}

double maximal_truncated(const GridFunction& f, const GridFunction& g, const BilinearKernel& K,
                         std::size_t node, std::span<const double> eps_ladder) {
    std::vector<double> vals = truncated_bilinear_ladder(f, g, K, eps_ladder, node);
    double m = 0;
    for (double v : vals) m = std::max(m, std::abs(v));
    return m;
}

namespace {

double extended_core(const GridFunction& f, const GridFunction& g, const BilinearKernel& K,
                     const Ball& B, std::size_t node, double eps_floor,
                     const GridFunction* bfactor, int slot) {
    check_shared_grid(f, g);
    const Grid& gr = f.grid();
    Vec2 x = gr.node(node);
    if (!contains(B, x)) throw std::invalid_argument("evaluation node must lie in the ball");
    double eps = std::max(gr.spacing(), eps_floor);
    Ball twoB = dilate(B, 2);
    KernelEval ke(K, gr.dim());
    Support sf = support_of(f), sg = support_of(g);
    std::vector<char> in2B(gr.size(), 0);
    for (std::size_t i = 0; i < gr.size(); ++i) in2B[i] = contains(twoB, gr.node(i)) ? 1 : 0;
    double bx = bfactor ? (*bfactor)[node] : 0;
    double e2 = eps * eps;
    double s = 0;
    for (std::size_t a = 0; a < sf.idx.size(); ++a) {
        Vec2 u{x[0] - sf.pos[a][0], x[1] - sf.pos[a][1]};
        double du2 = u[0] * u[0] + u[1] * u[1];
        bool in1 = in2B[sf.idx[a]];
        double fa = sf.val[a] * sf.vol[a];
        if (bfactor && slot == 1) fa *= bx - (*bfactor)[sf.idx[a]];
        for (std::size_t b = 0; b < sg.idx.size(); ++b) {
            bool in2 = in2B[sg.idx[b]];
            Vec2 v{x[0] - sg.pos[b][0], x[1] - sg.pos[b][1]};
            if (in1 && in2) {
                double dv2 = v[0] * v[0] + v[1] * v[1];
                if (du2 + dv2 <= e2) continue;  // local truncated part
            }
            double gb = sg.val[b] * sg.vol[b];
            if (bfactor && slot == 2) gb *= bx - (*bfactor)[sg.idx[b]];
            s += ke(u, v) * fa * gb;
        }
    }
    return s;
}

}  // namespace

double extended_bilinear(const GridFunction& f, const GridFunction& g, const BilinearKernel& K,
                         const Ball& B, std::size_t node, double eps_floor) {
    return extended_core(f, g, K, B, node, eps_floor, nullptr, 0);
}

double bilinear_commutator(const GridFunction& b, int slot, const GridFunction& f,
                           const GridFunction& g, const BilinearKernel& K, double eps,
                           std::size_t node, const TruncationMode& mode) {
    if (slot != 1 && slot != 2) throw std::invalid_argument("commutator slot must be 1 or 2");
    check_shared_grid(b, f);
    GridFunction bf = f, bg = g;
    if (slot == 1)
        for (std::size_t i = 0; i < f.size(); ++i) bf[i] = b[i] * f[i];
    else
        for (std::size_t i = 0; i < g.size(); ++i) bg[i] = b[i] * g[i];
    double t_fg = truncated_bilinear(f, g, K, eps, node, mode);
    double t_b = truncated_bilinear(bf, bg, K, eps, node, mode);
    return b[node] * t_fg - t_b;
}

double bilinear_commutator_kernel_path(const GridFunction& b, int slot, const GridFunction& f,
                                       const GridFunction& g, const BilinearKernel& K,
                                       double eps, std::size_t node,
                                       const TruncationMode& mode) {
    if (slot != 1 && slot != 2) throw std::invalid_argument("commutator slot must be 1 or 2");
    check_shared_grid(b, f);
    return truncated_core(f, g, K, eps, node, mode, &b, slot, b[node]);
}

double extended_bilinear_commutator(const GridFunction& b, int slot, const GridFunction& f,
                                    const GridFunction& g, const BilinearKernel& K,
                                    const Ball& B, std::size_t node, double eps_floor) {
    if (slot != 1 && slot != 2) throw std::invalid_argument("commutator slot must be 1 or 2");
    check_shared_grid(b, f);
    return extended_core(f, g, K, B, node, eps_floor, &b, slot);
}

GridFunction averaging_operator(const GridFunction& f, const GridFunction& g, const Cube& Q,
                                double alpha) {
    check_shared_grid(f, g);
    const Grid& gr = f.grid();
    Region r{Q};
    double m = measure(gr, r);
    if (!(m > 0)) throw std::invalid_argument("degenerate region");
    double scale = std::pow(m, alpha / gr.dim());
    double avg_f = integrate(f, r) / m, avg_g = integrate(g, r) / m;
    std::vector<double> out(gr.size(), 0.0);
    for (std::size_t i = 0; i < gr.size(); ++i)
        if (contains(Q, gr.node(i))) out[i] = scale * avg_f * avg_g;
    return GridFunction(gr, std::move(out));
}

double linear_apply(const LinearOperatorSpec& op, const GridFunction& f, std::size_t node) {
    const Grid& g = f.grid();
    int n = g.dim();
    Vec2 x = g.node(node);
    if (op.kind == LinearOperatorSpec::Kind::riesz) return riesz_potential_at(f, op.alpha, node);
    if (!(op.eps >= g.spacing())) throw std::invalid_argument("truncation below grid resolution");
    double s = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (f[j] == 0) continue;
        Vec2 u{x[0] - g.node(j)[0], x[1] - g.node(j)[1]};
        double d = n == 1 ? std::abs(u[0]) : norm2(u);
        if (d <= op.eps) continue;
        // Omega on S^{n-1}: embed the direction as the first slot pair
        Vec2 zero{0, 0};
        double om = op.omega.eval(u, zero, d, n);
        s += om / std::pow(d, n) * f[j] * g.cell_volume(j);
    }
    return s;
}

double linear_commutator(const LinearOperatorSpec& op, const GridFunction& b,
                         const GridFunction& f, std::size_t node) {
    check_shared_grid(b, f);
    GridFunction bf = f;
    for (std::size_t i = 0; i < f.size(); ++i) bf[i] = b[i] * f[i];
    return b[node] * linear_apply(op, f, node) - linear_apply(op, bf, node);
}

}  // namespace morlab
