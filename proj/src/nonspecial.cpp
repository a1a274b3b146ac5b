#include "isotri/nonspecial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace isotri {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kGoldenRatio = 0.6180339887498949;  // (sqrt(5)-1)/2
}  // namespace

namespace {

// equally spaced parabolic vertex fit around x; spacing large enough that
// function differences stay above rounding noise
double parabolic_vertex(const std::function<double(double)>& f, double x,
                        double h, double lo, double hi) {
    h = std::min({h, x - lo, hi - x});
    if (!(h > 0.0)) return x;
    double f0 = f(x - h), f1 = f(x), f2 = f(x + h);
    double denom = f0 - 2.0 * f1 + f2;
    if (!(denom > 0.0)) return x;
    return std::clamp(x + 0.5 * h * (f0 - f2) / denom, lo, hi);
}

}  // namespace

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  int iters) {
    double a = lo, b = hi;
    double c = b - kGoldenRatio * (b - a);
    double d = a + kGoldenRatio * (b - a);
    double fc = f(c), fd = f(d);
    // stop while interval function differences still dominate rounding noise
    double stop = 1e-5 * std::max({1.0, std::abs(lo), std::abs(hi)});
    for (int i = 0; i < iters && b - a > stop; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGoldenRatio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGoldenRatio * (b - a);
            fd = f(d);
        }
    }
    double x = 0.5 * (a + b);
    double h = b - a;
    x = parabolic_vertex(f, x, h, lo, hi);
    x = parabolic_vertex(f, x, h / 64.0, lo, hi);
    return x;
}

double gamma_star() {
    static const double value =
        4.0 * std::atan(0.5 * (1.0 + std::sqrt(5.0) -
                               std::sqrt(2.0 * (1.0 + std::sqrt(5.0)))));
    return value;
}

double apex_perimeter_factor(double gamma) {
    return 2.0 / std::sin(gamma) + 1.0 / std::cos(0.5 * gamma);
}

Triangle ApexFamily::build(double foot_sign) const {
    Point dir = normalized(line_b - line_a);
    Point n = perp(dir);
    double side = dot(p - line_a, n) >= 0.0 ? 1.0 : -1.0;
    Point foot = p - (side * m) * n;
    // apex R at offset m/tan(gamma) from the foot; S on the far side of the
    // foot so that the perpendicular from P lands inside the base
    Point r = foot + (foot_sign * m / std::tan(gamma)) * dir;
    Point sp = r - (foot_sign * m / std::sin(gamma)) * dir;
    return Triangle(p, r, sp);
}

std::vector<Candidate> apex_candidates(const Triangle& t,
                                       const Tolerance& tol) {
    std::vector<Candidate> out;
    const double g = gamma_star();
    for (int i = 0; i < 3; ++i) {
        Point p = t[i];
        Point la = t[(i + 1) % 3], lb = t[(i + 2) % 3];
        Point dir = normalized(lb - la);
        double m = std::abs(dot(p - la, perp(dir)));
        ApexFamily fam{p, la, lb, m, g};
        for (double sign : {1.0, -1.0}) {
            Candidate c;
            c.kind = Kind(NonSpecialKind::Apex);
            c.exists = true;
            c.triangle = fam.build(sign);
            c.area = area(*c.triangle);
            c.perimeter = perimeter(*c.triangle);
            c.valid = contains_triangle(*c.triangle, t, tol);
            out.push_back(std::move(c));
        }
    }
    return out;
}

double f_v(double v, double x) {
    double t = 1.0 - x;
    return x * (1.0 + std::sqrt(1.0 + v * v / (t * t)));
}

double x_star_radical(double v) {
    DeltaV dv(v);
    double u = std::cbrt(2.0 * dv.delta / 9.0);
    double w = std::cbrt(32.0 * std::pow(v, 6) / (3.0 * dv.delta));
    double t1 = std::sqrt(1.0 + u - w);
    return 0.5 * (1.0 - t1 + std::sqrt(2.0 + w - u + 2.0 / t1));
}

XStarResult x_star(double v) {
    if (!(v > 0.0)) throw std::invalid_argument("x_star: v must be positive");
    // expanding scan for a bracket around the interior minimum
    double lo = 1.0 + 1e-9;
    double step = 0.25;
    double x_prev = lo, x_cur = lo + step;
    double f_prev = f_v(v, x_prev), f_cur = f_v(v, x_cur);
    double hi = 0.0;
    for (int i = 0; i < 200; ++i) {
        double x_next = x_cur + step;
        double f_next = f_v(v, x_next);
        if (f_next > f_cur && f_cur < f_prev) {
            hi = x_next;
            break;
        }
        if (f_next >= f_cur) {
            // still descending inside [x_prev, x_next]? narrow the step
            step *= 0.5;
            if (step < 1e-12) break;
            continue;
        }
        x_prev = x_cur;
        f_prev = f_cur;
        x_cur = x_next;
        f_cur = f_next;
        step *= 1.6;
    }
    if (hi == 0.0) {
        throw NoInteriorMinimum("f_v appears monotone on the scanned bracket");
    }
    XStarResult res;
    res.x = golden_min([&](double x) { return f_v(v, x); }, x_prev, hi, 200);
    if (v >= 0.56 && v < std::sqrt(3.0)) {
        res.radical_checked = true;
        res.radical_value = x_star_radical(v);
        if (std::abs(res.radical_value - res.x) > 1e-8) {
            throw std::logic_error("x_star: radical and numeric minimizer disagree");
        }
    }
    return res;
}

std::vector<Candidate> ex2_candidates(const Triangle& t, const Tolerance& tol) {
    std::vector<Candidate> out;
    for (int i = 0; i < 3; ++i) {
        for (int swap = 0; swap < 2; ++swap) {
            Point p = t[i];
            Point base = t[(i + 1 + swap) % 3];   // lands on segment PS
            Point third = t[(i + 2 - swap) % 3];  // lands on side RS
            Point xhat = normalized(base - p);
            Point yhat = perp(xhat);
            double cx = dot(third - p, xhat);
            double cy = dot(third - p, yhat);
            if (cx <= 0.0) continue;  // third vertex behind P in this frame
            if (cy < 0.0) yhat = -1.0 * yhat, cy = -cy;
            double scale = cx;  // third vertex maps to (1, v)
            double v = cy / cx;
            double x_b = dist(base, p) / scale;

            Candidate c;
            c.kind = Kind(NonSpecialKind::Ex2);
            double xs;
            try {
                xs = x_star(v).x;
            } catch (const NoInteriorMinimum&) {
                c.note = "no interior minimum of f_v";
                out.push_back(std::move(c));
                continue;
            }
            double x_eff = std::max(xs, x_b);  // constrained minimum
            if (x_eff <= 1.0) continue;
            // S=(x,0); R on ray S->(1,v) equidistant from P and S
            double tr = 0.5 * x_eff / (x_eff - 1.0);
            Point s_n{x_eff, 0.0};
            Point r_n{x_eff + tr * (1.0 - x_eff), tr * v};
            auto to_input = [&](Point q) {
                return p + (scale * q.x) * xhat + (scale * q.y) * yhat;
            };
            c.exists = true;
            c.triangle = Triangle(p, to_input(r_n), to_input(s_n));
            c.area = area(*c.triangle);
            c.perimeter = perimeter(*c.triangle);
            c.valid = contains_triangle(*c.triangle, t, tol);
            if (x_eff == x_b) c.note = "clamped to x_b; coincides with a special container";
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace isotri
