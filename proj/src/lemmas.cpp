#include "isotri/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "isotri/candidates.hpp"
#include "isotri/solver.hpp"

namespace isotri {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleMargin = 1e-3;
constexpr size_t kMaxDetails = 20;

std::string describe_shape(const TriangleShape& s) {
    std::ostringstream os;
    os << "a=" << s.a << " b=" << s.b << " c=" << s.c << " gamma=" << s.gamma;
    return os.str();
}

void record_failure(CheckReport& r, long long sample, const std::string& what) {
    ++r.failures;
    if (r.details.size() < kMaxDetails) {
        std::ostringstream os;
        os << "sample " << sample << ": " << what;
        r.details.push_back(os.str());
    }
}

// relative slack of a strict inequality lo < hi
void strict_less(CheckReport& r, long long sample, const char* label,
                 double lo, double hi) {
    double margin = (hi - lo) / std::max(std::abs(hi), 1e-300);
    r.worst_margin = std::min(r.worst_margin, margin);
    if (!(margin > 0.0)) {
        std::ostringstream os;
        os << label << ": " << lo << " !< " << hi;
        record_failure(r, sample, os.str());
    }
}

TriangleShape random_shape(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, kPi);
    for (;;) {
        double alpha = uni(rng), beta = uni(rng);
        double gamma = kPi - alpha - beta;
        if (alpha < kAngleMargin) continue;
        if (beta - alpha < kAngleMargin) continue;
        if (gamma - beta < kAngleMargin) continue;
        double sg = std::sin(gamma);
        TriangleShape s;
        s.a = std::sin(alpha) / sg;
        s.b = std::sin(beta) / sg;
        s.c = 1.0;
        s.alpha = alpha;
        s.beta = beta;
        s.gamma = gamma;
        return s;
    }
}

struct Poly {
    std::vector<Point> v;  // ccw
};

double poly_perimeter(const Poly& p) {
    double s = 0.0;
    for (size_t i = 0; i < p.v.size(); ++i) {
        s += dist(p.v[i], p.v[(i + 1) % p.v.size()]);
    }
    return s;
}

// index of the bottom-most vertex, rightmost on ties: edge angles walked
// ccw from here are ascending in (0, 2*pi]
size_t bottom_index(const Poly& p) {
    size_t best = 0;
    for (size_t i = 1; i < p.v.size(); ++i) {
        if (p.v[i].y < p.v[best].y ||
            (p.v[i].y == p.v[best].y && p.v[i].x > p.v[best].x)) {
            best = i;
        }
    }
    return best;
}

double edge_angle(Point e) {
    double a = std::atan2(e.y, e.x);
    return a <= 0.0 ? a + 2.0 * kPi : a;  // (0, 2*pi]
}

// vertex-wise Minkowski mean (K1 + K2)/2 by sorted merge of half-edges
Poly minkowski_mean(const Poly& k1, const Poly& k2) {
    struct Edge {
        Point d;
        double ang;
    };
    std::vector<Edge> edges;
    for (const Poly* k : {&k1, &k2}) {
        size_t n = k->v.size();
        for (size_t i = 0; i < n; ++i) {
            Point e = 0.5 * (k->v[(i + 1) % n] - k->v[i]);
            edges.push_back({e, edge_angle(e)});
        }
    }
    std::stable_sort(edges.begin(), edges.end(),
                     [](const Edge& a, const Edge& b) { return a.ang < b.ang; });
    std::vector<Point> merged;
    for (const Edge& e : edges) {
        if (!merged.empty() &&
            std::abs(e.ang - edge_angle(merged.back())) < 1e-7) {
            merged.back() = merged.back() + e.d;
        } else {
            merged.push_back(e.d);
        }
    }
    Poly out;
    Point cur = 0.5 * (k1.v[bottom_index(k1)] + k2.v[bottom_index(k2)]);
    for (const Point& e : merged) {
        out.v.push_back(cur);
        cur = cur + e;
    }
    return out;
}

Poly random_convex(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> ang;
    for (;;) {
        ang.clear();
        for (int i = 0; i < n; ++i) ang.push_back(2.0 * kPi * uni(rng));
        std::sort(ang.begin(), ang.end());
        double gap = ang.front() + 2.0 * kPi - ang.back();
        for (int i = 1; i < n; ++i) gap = std::min(gap, ang[i] - ang[i - 1]);
        if (gap > 0.1) break;
    }
    // affine image of a circle-inscribed polygon stays convex
    double m00, m01, m10, m11;
    do {
        m00 = 2.0 * uni(rng) - 1.0;
        m01 = 2.0 * uni(rng) - 1.0;
        m10 = 2.0 * uni(rng) - 1.0;
        m11 = 2.0 * uni(rng) - 1.0;
    } while (std::abs(m00 * m11 - m01 * m10) < 0.2);
    double tx = 4.0 * uni(rng) - 2.0, ty = 4.0 * uni(rng) - 2.0;
    Poly p;
    for (double a : ang) {
        double x = std::cos(a), y = std::sin(a);
        p.v.push_back({m00 * x + m01 * y + tx, m10 * x + m11 * y + ty});
    }
    double twice_area = 0.0;
    for (size_t i = 0; i < p.v.size(); ++i) {
        twice_area += cross(p.v[i], p.v[(i + 1) % p.v.size()]);
    }
    if (twice_area < 0.0) std::reverse(p.v.begin(), p.v.end());
    return p;
}

bool homothetic_triangles(const Poly& a, const Poly& b) {
    if (a.v.size() != 3 || b.v.size() != 3) return false;
    std::vector<double> aa, bb;
    for (int i = 0; i < 3; ++i) {
        aa.push_back(edge_angle(a.v[(i + 1) % 3] - a.v[i]));
        bb.push_back(edge_angle(b.v[(i + 1) % 3] - b.v[i]));
    }
    std::sort(aa.begin(), aa.end());
    std::sort(bb.begin(), bb.end());
    for (int i = 0; i < 3; ++i) {
        if (std::abs(aa[i] - bb[i]) > 1e-7) return false;
    }
    return true;
}

// arc-length parameter of p along the boundary of t, via the nearest edge
double boundary_param(const Triangle& t, Point p) {
    double best_d = std::numeric_limits<double>::infinity();
    double best_s = 0.0;
    double base = 0.0;
    for (int i = 0; i < 3; ++i) {
        Point a = t[i], b = t[(i + 1) % 3];
        double len = dist(a, b);
        double proj = std::clamp(dot(p - a, b - a) / (len * len), 0.0, 1.0);
        Point q = a + proj * (b - a);
        double d = dist(p, q);
        if (d < best_d) {
            best_d = d;
            best_s = base + proj * len;
        }
        base += len;
    }
    return best_s;
}

bool in_cyclic_arc(double s, double lo, double hi, double period, double tol) {
    double span = std::fmod(hi - lo + period, period);
    double d = std::fmod(s - lo + 2.0 * period, period);
    return d >= -tol && d <= span + tol;
}

bool midpoint_arc_condition(const Triangle& t, const Triangle& w, double tol) {
    double len[3], base[3], period = 0.0;
    for (int i = 0; i < 3; ++i) {
        base[i] = period;
        len[i] = dist(t[i], t[(i + 1) % 3]);
        period += len[i];
    }
    // arc k runs from the midpoint of side k through vertex k+1 to the
    // midpoint of side k+1
    double mid[3], sv[3];
    for (int i = 0; i < 3; ++i) mid[i] = base[i] + 0.5 * len[i];
    for (int i = 0; i < 3; ++i) sv[i] = boundary_param(t, w[i]);
    int perm[3] = {0, 1, 2};
    std::sort(perm, perm + 3);
    do {
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k) {
            ok = in_cyclic_arc(sv[perm[k]], mid[k], mid[(k + 1) % 3], period, tol);
        }
        if (ok) return true;
    } while (std::next_permutation(perm, perm + 3));
    return false;
}

}  // namespace

Triangle random_scalene(std::mt19937_64& rng) {
    TriangleShape s = random_shape(rng);
    Triangle t = triangle_from_sides(s.a, s.b, s.c);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double rot = 2.0 * kPi * uni(rng);
    double scale = 0.5 + 1.5 * uni(rng);
    Point shift{6.0 * uni(rng) - 3.0, 6.0 * uni(rng) - 3.0};
    return Triangle(scale * rotate(t[0], rot) + shift,
                    scale * rotate(t[1], rot) + shift,
                    scale * rotate(t[2], rot) + shift);
}

CheckReport check_embedded_inequalities(long long samples, std::uint64_t seed) {
    CheckReport r;
    r.check_id = "embedded-inequalities";
    r.samples = samples;
    r.seed = seed;
    r.worst_margin = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    auto ar = [](EmbeddedKind k, const TriangleShape& s) {
        return closed_form_area(k, s);
    };
    for (long long i = 0; i < samples; ++i) {
        TriangleShape s = random_shape(rng);
        long long before = r.failures;
        strict_less(r, i, "ar(A''BC) < ar(A'BC)",
                    ar(EmbeddedKind::ADPrimeBC, s), ar(EmbeddedKind::APrimeBC, s));
        strict_less(r, i, "ar(A1BC) < ar(AB'C)",
                    ar(EmbeddedKind::A1BC, s), ar(EmbeddedKind::ABPrimeC, s));
        strict_less(r, i, "ar(AB1C) < ar(ABC1)",
                    ar(EmbeddedKind::AB1C, s), ar(EmbeddedKind::ABC1, s));
        strict_less(r, i, "ar(AbarBC) < ar(ABC1)",
                    ar(EmbeddedKind::AbarBC, s), ar(EmbeddedKind::ABC1, s));
        if (s.gamma < kPi / 2.0 - 1e-6) {
            strict_less(r, i, "ar(AbbarBC) < ar(ABbarC)",
                        ar(EmbeddedKind::AbbarBC, s), ar(EmbeddedKind::ABbarC, s));
            strict_less(r, i, "ar(ABbarC) < ar(AB'C)",
                        ar(EmbeddedKind::ABbarC, s), ar(EmbeddedKind::ABPrimeC, s));
        }
        if (s.gamma > kPi / 2.0 + 1e-6) {
            strict_less(r, i, "ar(A'BC) < ar(ABC1)",
                        ar(EmbeddedKind::APrimeBC, s), ar(EmbeddedKind::ABC1, s));
        }
        if (r.failures > before && !r.details.empty()) {
            r.details.back() += " [" + describe_shape(s) + "]";
        }
    }
    return r;
}

CheckReport check_container_inequalities(long long samples, std::uint64_t seed) {
    CheckReport r;
    r.check_id = "container-inequalities";
    r.samples = samples;
    r.seed = seed;
    r.worst_margin = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    auto per = [](ContainerKind k, const TriangleShape& s) {
        return closed_form_perimeter(k, s);
    };
    for (long long i = 0; i < samples; ++i) {
        TriangleShape s = random_shape(rng);
        strict_less(r, i, "per(ABC') < per(ABC'')",
                    per(ContainerKind::ABCPrime, s), per(ContainerKind::ABCDPrime, s));
        strict_less(r, i, "per(AB'C) < per(AB1C)",
                    per(ContainerKind::ABPrimeC, s), per(ContainerKind::AB1C, s));
        strict_less(r, i, "per(ABC') < per(ABC2)",
                    per(ContainerKind::ABCPrime, s), per(ContainerKind::ABC2, s));
        strict_less(r, i, "per(ABC2) < per(ABC1)",
                    per(ContainerKind::ABC2, s), per(ContainerKind::ABC1, s));
        if (s.gamma < kPi / 2.0 - 1e-6) {
            strict_less(r, i, "per(ABC') < per(AbarBC)",
                        per(ContainerKind::ABCPrime, s), per(ContainerKind::AbarBC, s));
            strict_less(r, i, "per(AbarBC) < per(ABbarC)",
                        per(ContainerKind::AbarBC, s), per(ContainerKind::ABbarC, s));
        }
    }
    return r;
}

CheckReport check_minkowski_perimeter(long long samples, std::uint64_t seed) {
    CheckReport r;
    r.check_id = "minkowski-perimeter";
    r.samples = samples;
    r.seed = seed;
    r.worst_margin = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sides(3, 4);
    constexpr double kRelTol = 1e-9;
    for (long long i = 0; i < samples; ++i) {
        Poly k1 = random_convex(rng, i < 2 ? 3 : sides(rng));
        Poly k2;
        if (i == 0) {
            // homothetic pair: the mean stays a triangle
            for (Point p : k1.v) k2.v.push_back(0.7 * p + Point{1.3, -0.4});
        } else if (i == 1) {
            k2 = k1;
        } else {
            k2 = random_convex(rng, sides(rng));
        }
        Poly mean = minkowski_mean(k1, k2);
        double want = 0.5 * (poly_perimeter(k1) + poly_perimeter(k2));
        double got = poly_perimeter(mean);
        double rel_err = std::abs(got - want) / want;
        r.worst_margin = std::min(r.worst_margin, kRelTol - rel_err);
        if (rel_err > kRelTol) {
            record_failure(r, i, "perimeter mean identity violated");
        }
        if (i == 0 && mean.v.size() != 3) {
            record_failure(r, i, "homothetic mean is not a triangle");
        }
        if (i == 1) {
            bool same = mean.v.size() == k1.v.size();
            for (size_t j = 0; same && j < mean.v.size(); ++j) {
                size_t b1 = bottom_index(k1);
                same = dist(mean.v[j], k1.v[(b1 + j) % k1.v.size()]) < 1e-9;
            }
            if (!same) record_failure(r, i, "mean of K with itself is not K");
        }
        if (i >= 2 && k1.v.size() == 3 && k2.v.size() == 3 &&
            !homothetic_triangles(k1, k2) && mean.v.size() < 4) {
            record_failure(r, i, "non-homothetic triangle mean has < 4 edges");
        }
    }
    return r;
}

CheckReport check_hinge(long long samples, std::uint64_t seed) {
    CheckReport r;
    r.check_id = "hinge";
    r.samples = samples;
    r.seed = seed;
    r.worst_margin = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> len(0.3, 2.0);
    std::uniform_real_distribution<double> ang(1e-3, kPi - 1e-3);
    for (long long i = 0; i < samples; ++i) {
        double p = len(rng), q = len(rng);
        double w1 = ang(rng), w2 = ang(rng);
        if (w1 > w2) std::swap(w1, w2);
        if (w2 - w1 < 1e-12) continue;
        auto per = [&](double w) {
            return p + q + std::sqrt(p * p + q * q - 2.0 * p * q * std::cos(w));
        };
        strict_less(r, i, "per(smaller angle) < per(larger angle)", per(w1),
                    per(w2));
    }
    return r;
}

CheckReport check_structural(long long samples, std::uint64_t seed,
                             const OracleConfig& cfg) {
    CheckReport r;
    r.check_id = "structural";
    r.samples = samples;
    r.seed = seed;
    r.worst_margin = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    constexpr double kEps = 1e-5;  // relative to diameter
    Tolerance loose;
    loose.eps_rel = kEps;
    for (long long i = 0; i < samples; ++i) {
        Triangle t = random_scalene(rng);
        double diam = diameter(t);
        for (Problem prob :
             {Problem::MinAreaContainer, Problem::MinPerimContainer,
              Problem::MaxAreaEmbedded, Problem::MaxPerimEmbedded}) {
            OracleResult res;
            try {
                res = oracle_solve(t, prob, cfg);
            } catch (const std::exception& e) {
                record_failure(r, i, std::string(problem_name(prob)) +
                                         ": oracle failed: " + e.what());
                continue;
            }
            const Triangle& w = res.witness;
            const bool container = is_container_problem(prob);
            const Triangle& outer = container ? w : t;
            const Triangle& inner = container ? t : w;

            // shared vertex
            double dv = std::numeric_limits<double>::infinity();
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) dv = std::min(dv, dist(t[a], w[b]));
            }
            r.worst_margin = std::min(r.worst_margin, kEps - dv / diam);
            if (dv / diam > kEps) {
                record_failure(r, i, std::string(problem_name(prob)) +
                                         ": no shared vertex");
            }

            // every inner vertex on the outer boundary
            for (int a = 0; a < 3; ++a) {
                double d = boundary_distance(outer, inner[a]) / diam;
                r.worst_margin = std::min(r.worst_margin, kEps - d);
                if (d > kEps) {
                    record_failure(r, i, std::string(problem_name(prob)) +
                                             ": vertex off the boundary");
                    break;
                }
            }

            // some outer side contains two inner vertices (side-in-side
            // incidence when the inner pair spans a full side)
            bool flush = false;
            for (int e = 0; e < 3 && !flush; ++e) {
                int cnt = 0;
                for (int a = 0; a < 3; ++a) {
                    if (segment_distance(inner[a], outer[e],
                                         outer[(e + 1) % 3]) / diam <= kEps) {
                        ++cnt;
                    }
                }
                flush = cnt >= 2;
            }
            if (!flush) {
                record_failure(r, i, std::string(problem_name(prob)) +
                                         ": no side carries two vertices");
            }

            if (prob == Problem::MaxAreaEmbedded) {
                if (!shares_side_and_angle(t, w, loose)) {
                    record_failure(r, i,
                                   "max-area-embedded: witness does not share "
                                   "a side and an angle");
                }
                if (!midpoint_arc_condition(t, w, kEps * 3.0 * diam)) {
                    record_failure(r, i,
                                   "max-area-embedded: midpoint-arc condition "
                                   "violated");
                }
            }
        }
    }
    return r;
}

CheckReport check_container_types(long long samples, std::uint64_t seed) {
    CheckReport r;
    r.check_id = "container-types";
    r.samples = samples;
    r.seed = seed;
    r.worst_margin = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    const std::vector<std::string> allowed = {"cont:AB'C", "cont:ABC'",
                                              "cont:ABCbar", "apex", "ex2"};
    std::map<std::string, long long> tally;
    for (long long i = 0; i < samples; ++i) {
        Triangle t = random_scalene(rng);
        SolveResult res = solve(t, Problem::MinPerimContainer);
        std::string kind = res.winners.front().kind.name();
        ++tally[kind];
        if (std::find(allowed.begin(), allowed.end(), kind) == allowed.end()) {
            record_failure(r, i, "winner type " + kind + " not among the five");
        }
        // slack against the best candidate outside the five types
        double other = std::numeric_limits<double>::infinity();
        for (const Candidate& c : res.table) {
            if (c.exists && c.valid &&
                std::find(allowed.begin(), allowed.end(), c.kind.name()) ==
                    allowed.end()) {
                other = std::min(other, c.perimeter);
            }
        }
        if (std::isfinite(other)) {
            r.worst_margin = std::min(r.worst_margin,
                                      (other - res.optimum) / res.optimum);
        }
    }
    for (const auto& [kind, count] : tally) {
        std::ostringstream os;
        os << kind << ": " << count;
        r.notes.push_back(os.str());
    }
    return r;
}

std::vector<std::string> lemma_check_names() {
    return {"embedded-inequalities", "container-inequalities",
            "minkowski-perimeter",   "hinge",
            "structural",            "container-types"};
}

}  // namespace isotri
