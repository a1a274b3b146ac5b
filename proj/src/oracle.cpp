#include "isotri/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

namespace isotri {

namespace {

constexpr double kPi = std::numbers::pi;

std::array<Point, 3> rotated_shape(double gamma, double theta) {
    auto v = canonical_shape(gamma);
    for (Point& p : v) p = rotate(p, theta);
    return v;
}

struct HalfPlanes {
    std::array<Point, 3> n;   // outward unit normals
    std::array<double, 3> d;  // support offsets: n.x <= d inside
};

HalfPlanes input_half_planes(const Triangle& t) {
    HalfPlanes hp;
    for (int i = 0; i < 3; ++i) {
        Point e = t[(i + 1) % 3] - t[i];
        hp.n[i] = normalized(Point{e.y, -e.x});
        hp.d[i] = dot(hp.n[i], t[i]);
    }
    return hp;
}

// Support-function reduction of the placement LP: at fixed pose the binding
// vertex per input edge is the one maximizing n_i . u_j, so max s solves
// the 3x3 equality system h_i s + n_i . T = d_i.
bool embedded_scale_fast(const HalfPlanes& hp, const std::array<Point, 3>& u,
                         double& s, Point& tr) {
    double h[3];
    for (int i = 0; i < 3; ++i) {
        h[i] = std::max({dot(hp.n[i], u[0]), dot(hp.n[i], u[1]),
                         dot(hp.n[i], u[2])});
    }
    const double a0 = h[0], b0 = hp.n[0].x, c0 = hp.n[0].y;
    const double a1 = h[1], b1 = hp.n[1].x, c1 = hp.n[1].y;
    const double a2 = h[2], b2 = hp.n[2].x, c2 = hp.n[2].y;
    double det = a0 * (b1 * c2 - b2 * c1) - b0 * (a1 * c2 - a2 * c1) +
                 c0 * (a1 * b2 - a2 * b1);
    if (std::abs(det) < 1e-14) return false;
    const double d0 = hp.d[0], d1 = hp.d[1], d2 = hp.d[2];
    s = (d0 * (b1 * c2 - b2 * c1) - b0 * (d1 * c2 - d2 * c1) +
         c0 * (d1 * b2 - d2 * b1)) /
        det;
    tr.x = (a0 * (d1 * c2 - d2 * c1) - d0 * (a1 * c2 - a2 * c1) +
            c0 * (a1 * d2 - a2 * d1)) /
           det;
    tr.y = (a0 * (b1 * d2 - b2 * d1) - b0 * (a1 * d2 - a2 * d1) +
            d0 * (a1 * b2 - a2 * b1)) /
           det;
    return s > 0.0;
}

struct EnclosingRaw {
    std::array<Point, 3> v;
    bool ok = false;
};

EnclosingRaw enclosing_at_pose_raw(const Triangle& t, double gamma,
                                   double theta) {
    EnclosingRaw out;
    auto w = rotated_shape(gamma, theta);
    Point n[3];
    double h[3];
    for (int k = 0; k < 3; ++k) {
        Point e = w[(k + 1) % 3] - w[k];
        n[k] = normalized(Point{e.y, -e.x});
        h[k] = std::max({dot(n[k], t[0]), dot(n[k], t[1]), dot(n[k], t[2])});
    }
    // vertex between edges k and k+1 corresponds to shape vertex k+1
    for (int k = 0; k < 3; ++k) {
        int k2 = (k + 1) % 3;
        double det = n[k].x * n[k2].y - n[k2].x * n[k].y;
        if (std::abs(det) < 1e-14) return out;
        out.v[k2] = {(h[k] * n[k2].y - h[k2] * n[k].y) / det,
                     (n[k].x * h[k2] - n[k2].x * h[k]) / det};
    }
    out.ok = true;
    return out;
}

double raw_metric(const std::array<Point, 3>& v, Metric m) {
    if (m == Metric::Area) {
        return 0.5 * std::abs(cross(v[1] - v[0], v[2] - v[0]));
    }
    return dist(v[0], v[1]) + dist(v[1], v[2]) + dist(v[2], v[0]);
}

// 2-D Nelder-Mead; returns true when the simplex collapsed below param_tol.
template <typename F>
bool nelder_mead(F&& f, std::array<double, 2>& x, double step0, double step1,
                 int max_iters, double param_tol) {
    struct Vert {
        std::array<double, 2> p;
        double f;
    };
    std::array<Vert, 3> s;
    s[0] = {x, f(x)};
    s[1] = {{x[0] + step0, x[1]}, 0.0};
    s[1].f = f(s[1].p);
    s[2] = {{x[0], x[1] + step1}, 0.0};
    s[2].f = f(s[2].p);
    bool converged = false;
    for (int it = 0; it < max_iters; ++it) {
        std::sort(s.begin(), s.end(),
                  [](const Vert& a, const Vert& b) { return a.f < b.f; });
        double diam = 0.0;
        for (int i = 1; i < 3; ++i) {
            diam = std::max({diam, std::abs(s[i].p[0] - s[0].p[0]),
                             std::abs(s[i].p[1] - s[0].p[1])});
        }
        if (diam < param_tol) {
            converged = true;
            break;
        }
        std::array<double, 2> cen{0.5 * (s[0].p[0] + s[1].p[0]),
                                  0.5 * (s[0].p[1] + s[1].p[1])};
        auto at = [&](double coef) {
            return std::array<double, 2>{cen[0] + coef * (cen[0] - s[2].p[0]),
                                         cen[1] + coef * (cen[1] - s[2].p[1])};
        };
        auto refl = at(1.0);
        double fr = f(refl);
        if (fr < s[0].f) {
            auto exp_ = at(2.0);
            double fe = f(exp_);
            s[2] = fe < fr ? Vert{exp_, fe} : Vert{refl, fr};
        } else if (fr < s[1].f) {
            s[2] = {refl, fr};
        } else {
            auto con = at(fr < s[2].f ? 0.5 : -0.5);
            double fc = f(con);
            if (fc < std::min(fr, s[2].f)) {
                s[2] = {con, fc};
            } else {
                for (int i = 1; i < 3; ++i) {
                    s[i].p = {0.5 * (s[i].p[0] + s[0].p[0]),
                              0.5 * (s[i].p[1] + s[0].p[1])};
                    s[i].f = f(s[i].p);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(),
              [](const Vert& a, const Vert& b) { return a.f < b.f; });
    x = s[0].p;
    return converged;
}

// deterministic compass search with step halving; robust on the kinked
// ridges the support-function objectives produce
template <typename F>
bool pattern_refine(F&& f, std::array<double, 2>& x, double step0, double step1,
                    double tol, long long max_moves) {
    static constexpr int kDirs[8][2] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                        {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    double fx = f(x);
    double s0 = step0, s1 = step1;
    long long moves = 0;
    while (std::max(s0, s1) > tol && moves < max_moves) {
        bool improved = false;
        for (const auto& d : kDirs) {
            std::array<double, 2> y{x[0] + d[0] * s0, x[1] + d[1] * s1};
            double fy = f(y);
            ++moves;
            if (fy < fx) {
                x = y;
                fx = fy;
                improved = true;
                break;
            }
        }
        if (!improved) {
            s0 *= 0.5;
            s1 *= 0.5;
        }
    }
    return std::max(s0, s1) <= tol;
}

struct GridCell {
    double value = 0.0;
    int gi = 0, ti = 0;
};

}  // namespace

std::array<Point, 3> canonical_shape(double gamma) {
    double cg = std::cos(0.5 * gamma), sg = std::sin(0.5 * gamma);
    return {Point{0, 0}, Point{cg, -sg}, Point{cg, sg}};
}

std::pair<double, Triangle> min_enclosing_at_pose(const Triangle& t,
                                                  const ShapePose& pose,
                                                  Metric metric) {
    auto raw = enclosing_at_pose_raw(t, pose.gamma, pose.theta);
    if (!raw.ok) throw InvalidPose("support lines do not bound a triangle");
    Triangle enc(raw.v[0], raw.v[1], raw.v[2]);
    return {raw_metric(raw.v, metric), enc};
}

std::pair<double, Triangle> max_embedded_at_pose(const Triangle& t,
                                                 const ShapePose& pose) {
    HalfPlanes hp = input_half_planes(t);
    auto u = rotated_shape(pose.gamma, pose.theta);

    // 9 constraints: row (i,j) is  (n_i.u_j) s + n_i . T <= d_i
    double as[9], bx[9], by[9], rhs[9];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            int r = 3 * i + j;
            as[r] = dot(hp.n[i], u[j]);
            bx[r] = hp.n[i].x;
            by[r] = hp.n[i].y;
            rhs[r] = hp.d[i];
        }
    }
    double feas_eps = 1e-9 * diameter(t);
    double best_s = -1.0;
    Point best_tr{};
    for (int p = 0; p < 9; ++p) {
        for (int q = p + 1; q < 9; ++q) {
            for (int r = q + 1; r < 9; ++r) {
                double det = as[p] * (bx[q] * by[r] - bx[r] * by[q]) -
                             bx[p] * (as[q] * by[r] - as[r] * by[q]) +
                             by[p] * (as[q] * bx[r] - as[r] * bx[q]);
                if (std::abs(det) < 1e-14) continue;
                double s = (rhs[p] * (bx[q] * by[r] - bx[r] * by[q]) -
                            bx[p] * (rhs[q] * by[r] - rhs[r] * by[q]) +
                            by[p] * (rhs[q] * bx[r] - rhs[r] * bx[q])) /
                           det;
                if (s <= best_s) continue;
                double tx = (as[p] * (rhs[q] * by[r] - rhs[r] * by[q]) -
                             rhs[p] * (as[q] * by[r] - as[r] * by[q]) +
                             by[p] * (as[q] * rhs[r] - as[r] * rhs[q])) /
                            det;
                double ty = (as[p] * (bx[q] * rhs[r] - bx[r] * rhs[q]) -
                             bx[p] * (as[q] * rhs[r] - as[r] * rhs[q]) +
                             rhs[p] * (as[q] * bx[r] - as[r] * bx[q])) /
                            det;
                bool feasible = true;
                for (int k = 0; k < 9 && feasible; ++k) {
                    feasible = as[k] * s + bx[k] * tx + by[k] * ty <=
                               rhs[k] + feas_eps;
                }
                if (feasible) {
                    best_s = s;
                    best_tr = {tx, ty};
                }
            }
        }
    }
    if (best_s <= 0.0) {
        throw InvalidPose("embedded placement LP found no positive scale");
    }
    Triangle placed(best_s * u[0] + best_tr, best_s * u[1] + best_tr,
                    best_s * u[2] + best_tr);
    return {best_s, placed};
}

OracleResult oracle_solve(const Triangle& t, Problem problem,
                          const OracleConfig& cfg) {
    const bool minimize = is_container_problem(problem);
    const Metric metric = is_area_problem(problem) ? Metric::Area
                                                   : Metric::Perimeter;
    HalfPlanes hp = input_half_planes(t);

    // objective as a minimization everywhere
    auto eval = [&](double gamma, double theta) {
        gamma = std::clamp(gamma, 1e-9, kPi - 1e-9);
        if (minimize) {
            auto raw = enclosing_at_pose_raw(t, gamma, theta);
            if (!raw.ok) return std::numeric_limits<double>::infinity();
            return raw_metric(raw.v, metric);
        }
        auto u = rotated_shape(gamma, theta);
        double s;
        Point tr;
        if (!embedded_scale_fast(hp, u, s, tr)) {
            return std::numeric_limits<double>::infinity();
        }
        double shape_metric = metric == Metric::Area
                                  ? 0.5 * std::sin(gamma)
                                  : 2.0 + 2.0 * std::sin(0.5 * gamma);
        return -(metric == Metric::Area ? s * s * shape_metric
                                        : s * shape_metric);
    };

    const int gg = cfg.grid_gamma, gt = cfg.grid_theta;
    const double dgamma = kPi / gg, dtheta = 2.0 * kPi / gt;
    auto cell_gamma = [&](int i) { return dgamma * (i + 0.5); };
    auto cell_theta = [&](int j) { return dtheta * j; };

    int nthreads = cfg.threads > 0
                       ? cfg.threads
                       : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min(nthreads, gg);
    const int keep = std::max(cfg.refine_starts * 6, 8);

    std::vector<std::vector<GridCell>> tops(static_cast<size_t>(nthreads));
    std::vector<long long> evals(static_cast<size_t>(nthreads), 0);

    auto run_rows = [&](int tid, int row_begin, int row_end) {
        auto& top = tops[static_cast<size_t>(tid)];
        double cutoff = std::numeric_limits<double>::infinity();
        for (int i = row_begin; i < row_end; ++i) {
            double gamma = cell_gamma(i);
            for (int j = 0; j < gt; ++j) {
                double v = eval(gamma, cell_theta(j));
                ++evals[static_cast<size_t>(tid)];
                if (v < cutoff || top.size() < static_cast<size_t>(keep)) {
                    top.push_back({v, i, j});
                    std::sort(top.begin(), top.end(),
                              [](const GridCell& a, const GridCell& b) {
                                  if (a.value != b.value) return a.value < b.value;
                                  if (a.gi != b.gi) return a.gi < b.gi;
                                  return a.ti < b.ti;
                              });
                    if (top.size() > static_cast<size_t>(keep)) top.resize(keep);
                    cutoff = top.back().value;
                }
            }
        }
    };

    if (nthreads == 1) {
        run_rows(0, 0, gg);
    } else {
        std::vector<std::thread> pool;
        int chunk = (gg + nthreads - 1) / nthreads;
        for (int tn = 0; tn < nthreads; ++tn) {
            int lo = tn * chunk, hi = std::min(gg, lo + chunk);
            pool.emplace_back(run_rows, tn, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // deterministic merge, then keep starts separated on the grid
    std::vector<GridCell> merged;
    for (const auto& top : tops) merged.insert(merged.end(), top.begin(), top.end());
    std::sort(merged.begin(), merged.end(),
              [](const GridCell& a, const GridCell& b) {
                  if (a.value != b.value) return a.value < b.value;
                  if (a.gi != b.gi) return a.gi < b.gi;
                  return a.ti < b.ti;
              });
    std::vector<GridCell> starts;
    for (const GridCell& c : merged) {
        bool near = false;
        for (const GridCell& s : starts) {
            int dth = std::abs(c.ti - s.ti);
            dth = std::min(dth, gt - dth);
            if (std::abs(c.gi - s.gi) <= 4 && dth <= 4) {
                near = true;
                break;
            }
        }
        if (!near) starts.push_back(c);
        if (starts.size() >= static_cast<size_t>(cfg.refine_starts)) break;
    }

    // the optimum can hide in a basin narrower than a grid cell against the
    // gamma boundary (needle-like inputs), so always start from the best cell
    // of the first and last rows as well
    for (int i : {0, gg - 1}) {
        GridCell edge{std::numeric_limits<double>::infinity(), i, 0};
        for (int j = 0; j < gt; ++j) {
            double v = eval(cell_gamma(i), cell_theta(j));
            if (v < edge.value) edge = {v, i, j};
        }
        bool have = false;
        for (const GridCell& s : starts) {
            if (s.gi == edge.gi && s.ti == edge.ti) have = true;
        }
        if (!have && std::isfinite(edge.value)) starts.push_back(edge);
    }

    long long refine_evals = 0;
    auto counted = [&](std::array<double, 2> x) {
        ++refine_evals;
        return eval(x[0], x[1]);
    };

    double best_value = std::numeric_limits<double>::infinity();
    std::array<double, 2> best_pose{cell_gamma(0), cell_theta(0)};
    bool converged = false;
    for (const GridCell& c : starts) {
        // nelder-mead speeds up smooth basins but can leave a narrow ridge,
        // so also run the pattern search from the raw cell and keep the better
        std::array<double, 2> x{cell_gamma(c.gi), cell_theta(c.ti)};
        std::array<double, 2> xp = x;
        nelder_mead(counted, x, 0.5 * dgamma, 0.5 * dtheta, cfg.refine_iters,
                    1e-7);
        bool ok = pattern_refine(counted, x, 0.5 * dgamma, 0.5 * dtheta,
                                 cfg.param_tol, 50000);
        bool okp = pattern_refine(counted, xp, 0.5 * dgamma, 0.5 * dtheta,
                                  cfg.param_tol, 50000);
        if (counted(xp) < counted(x)) {
            x = xp;
            ok = okp;
        }
        double v = counted(x);
        converged = converged || ok;
        if (v < best_value) {
            best_value = v;
            best_pose = x;
        }
    }

    OracleResult res;
    res.pose.gamma = std::clamp(best_pose[0], 1e-9, kPi - 1e-9);
    res.pose.theta = std::fmod(std::fmod(best_pose[1], 2.0 * kPi) + 2.0 * kPi,
                               2.0 * kPi);
    res.converged = converged;
    res.method = "grid + nelder-mead + compass pattern search";
    for (long long e : evals) res.evaluations += e;
    res.evaluations += refine_evals;

    if (minimize) {
        auto [value, witness] = min_enclosing_at_pose(t, res.pose, metric);
        res.value = value;
        res.witness = witness;
    } else {
        auto u = rotated_shape(res.pose.gamma, res.pose.theta);
        double s;
        Point tr;
        if (!embedded_scale_fast(hp, u, s, tr)) {
            throw InvalidPose("refined pose lost feasibility");
        }
        res.witness = Triangle(s * u[0] + tr, s * u[1] + tr, s * u[2] + tr);
        res.value = metric == Metric::Area ? area(res.witness)
                                           : perimeter(res.witness);
    }
    return res;
}

}  // namespace isotri
