#include "isotri/candidates.hpp"

#include <array>
#include <cmath>

namespace isotri {

namespace {

const std::array<const char*, 9> kEmbeddedNames = {
    "emb:A'BC", "emb:AB'C", "emb:A''BC", "emb:A1BC", "emb:AB1C",
    "emb:ABC1", "emb:AbarBC", "emb:AbbarBC", "emb:ABbarC"};

const std::array<const char*, 9> kContainerNames = {
    "cont:AB'C", "cont:ABC'", "cont:ABC''", "cont:AB1C", "cont:ABC1",
    "cont:ABC2", "cont:AbarBC", "cont:ABbarC", "cont:ABCbar"};

struct Labeled {
    Point A, B, C;
};

Labeled labeled_vertices(const TriangleShape& s, const Triangle& t) {
    return {t[s.vertex_map[0]], t[s.vertex_map[1]], t[s.vertex_map[2]]};
}

void require_scalene(const TriangleShape& s) {
    if (s.isosceles_input) {
        throw NotScalene("special catalogs require a strictly scalene shape");
    }
}

Candidate make_candidate(Kind kind, Point p0, Point p1, Point p2, bool valid_rel,
                         const Tolerance& tol) {
    Candidate c;
    c.kind = kind;
    c.exists = true;
    try {
        c.triangle = Triangle(p0, p1, p2, tol);
    } catch (const DegenerateTriangle&) {
        c.exists = false;
        c.note = "construction degenerates";
        return c;
    }
    c.area = area(*c.triangle);
    c.perimeter = perimeter(*c.triangle);
    c.valid = valid_rel;
    return c;
}

Candidate missing(Kind kind, std::string note) {
    Candidate c;
    c.kind = kind;
    c.note = std::move(note);
    return c;
}

}  // namespace

std::string Kind::name() const {
    switch (family) {
        case Family::Embedded:
            return kEmbeddedNames[static_cast<size_t>(index)];
        case Family::Container:
            return kContainerNames[static_cast<size_t>(index)];
        case Family::NonSpecial:
            return index == 0 ? "apex" : "ex2";
        case Family::Input:
            return "input";
    }
    return "?";
}

std::vector<Candidate> embedded_specials(const TriangleShape& s,
                                         const Triangle& t,
                                         const Tolerance& tol) {
    require_scalene(s);
    const auto [A, B, C] = labeled_vertices(s, t);
    const double a = s.a, b = s.b, c = s.c;
    const double ca = std::cos(s.alpha), cb = std::cos(s.beta),
                 cg = std::cos(s.gamma);

    std::vector<Candidate> out;
    out.reserve(9);
    auto emit = [&](EmbeddedKind k, Point p0, Point p1, Point p2) {
        Candidate cand = make_candidate(Kind(k), p0, p1, p2, false, tol);
        if (cand.exists) cand.valid = contains_triangle(t, *cand.triangle, tol);
        out.push_back(std::move(cand));
    };

    // first kind
    emit(EmbeddedKind::APrimeBC, C + (a / b) * (A - C), B, C);
    emit(EmbeddedKind::ABPrimeC, A, A + (b / c) * (B - A), C);
    emit(EmbeddedKind::ADPrimeBC, B + (a / c) * (A - B), B, C);

    // second kind: apex on the perpendicular bisector of the base
    {
        double len = 0.5 * a / cb;  // cos(beta) > 0 for any beta < gamma
        emit(EmbeddedKind::A1BC, B + (len / c) * (A - B), B, C);
    }
    {
        double len = 0.5 * b / ca;
        emit(EmbeddedKind::AB1C, A, A + (len / c) * (B - A), C);
    }
    {
        double len = 0.5 * c / ca;
        emit(EmbeddedKind::ABC1, A, B, A + (len / b) * (C - A));
    }

    // third kind: the defining point is the reflection of a vertex across
    // an altitude foot; Abbar and Bbar need an acute gamma
    {
        double len = 2.0 * a * cb;
        if (len > 0.0 && len <= c) {
            emit(EmbeddedKind::AbarBC, B + (len / c) * (A - B), B, C);
        } else {
            out.push_back(missing(Kind(EmbeddedKind::AbarBC),
                                  "Abar falls outside segment AB"));
        }
    }
    {
        double len = 2.0 * a * cg;
        if (cg > 0.0 && len <= b) {
            emit(EmbeddedKind::AbbarBC, C + (len / b) * (A - C), B, C);
        } else {
            out.push_back(missing(Kind(EmbeddedKind::AbbarBC),
                                  "requires an acute triangle"));
        }
    }
    {
        double len = 2.0 * b * cg;
        if (cg > 0.0 && len <= a) {
            emit(EmbeddedKind::ABbarC, A, C + (len / a) * (B - C), C);
        } else {
            out.push_back(missing(Kind(EmbeddedKind::ABbarC),
                                  "requires an acute triangle"));
        }
    }
    return out;
}

std::vector<Candidate> container_specials(const TriangleShape& s,
                                          const Triangle& t,
                                          const Tolerance& tol) {
    require_scalene(s);
    const auto [A, B, C] = labeled_vertices(s, t);
    const double a = s.a, b = s.b, c = s.c;
    const double ca = std::cos(s.alpha), cb = std::cos(s.beta),
                 cg = std::cos(s.gamma);

    std::vector<Candidate> out;
    out.reserve(9);
    auto emit = [&](ContainerKind k, Point p0, Point p1, Point p2) {
        Candidate cand = make_candidate(Kind(k), p0, p1, p2, false, tol);
        if (cand.exists) cand.valid = contains_triangle(*cand.triangle, t, tol);
        out.push_back(std::move(cand));
    };

    // first kind
    emit(ContainerKind::ABPrimeC, A, C + (b / a) * (B - C), C);
    emit(ContainerKind::ABCPrime, A, B, A + (c / b) * (C - A));
    emit(ContainerKind::ABCDPrime, A, B, B + (c / a) * (C - B));

    // second kind: second circle intersection along a side ray
    emit(ContainerKind::AB1C, A, A + (2.0 * b * ca / c) * (B - A), C);
    emit(ContainerKind::ABC1, A, B, A + (2.0 * c * ca / b) * (C - A));
    emit(ContainerKind::ABC2, A, B, B + (2.0 * c * cb / a) * (C - B));

    // third kind: perpendicular-bisector apex; Abar and Bbar only bound a
    // triangle on the containing side when gamma is acute
    if (cg > 0.0) {
        emit(ContainerKind::AbarBC, C + (0.5 * a / cg / b) * (A - C), B, C);
        emit(ContainerKind::ABbarC, A, C + (0.5 * b / cg / a) * (B - C), C);
    } else {
        out.push_back(missing(Kind(ContainerKind::AbarBC),
                              "requires an acute triangle"));
        out.push_back(missing(Kind(ContainerKind::ABbarC),
                              "requires an acute triangle"));
    }
    emit(ContainerKind::ABCbar, A, B, B + (0.5 * c / cb / a) * (C - B));
    return out;
}

double closed_form_area(EmbeddedKind kind, const TriangleShape& s) {
    switch (kind) {
        case EmbeddedKind::APrimeBC:
            return 0.5 * s.a * s.a * std::sin(s.gamma);
        case EmbeddedKind::ABPrimeC:
            return 0.5 * s.b * s.b * std::sin(s.alpha);
        case EmbeddedKind::ADPrimeBC:
            return 0.5 * s.a * s.a * std::sin(s.beta);
        case EmbeddedKind::A1BC:
            return 0.25 * s.a * s.a * std::tan(s.beta);
        case EmbeddedKind::AB1C:
            return 0.25 * s.b * s.b * std::tan(s.alpha);
        case EmbeddedKind::ABC1:
            return 0.25 * s.c * s.c * std::tan(s.alpha);
        case EmbeddedKind::AbarBC:
            return 0.5 * s.a * s.a * std::sin(2.0 * s.beta);
        case EmbeddedKind::AbbarBC:
            return 0.5 * s.a * s.a * std::sin(2.0 * s.gamma);
        case EmbeddedKind::ABbarC:
            return 0.5 * s.b * s.b * std::sin(2.0 * s.gamma);
    }
    return 0.0;
}

double closed_form_perimeter(EmbeddedKind kind, const TriangleShape& s) {
    // isosceles leg/base decomposition: legs l and apex angle w give
    // 2l(1+sin(w/2)); base d with base angle w gives d(1+1/cos w)
    switch (kind) {
        case EmbeddedKind::APrimeBC:
            return 2.0 * s.a * (1.0 + std::sin(0.5 * s.gamma));
        case EmbeddedKind::ABPrimeC:
            return 2.0 * s.b * (1.0 + std::sin(0.5 * s.alpha));
        case EmbeddedKind::ADPrimeBC:
            return 2.0 * s.a * (1.0 + std::sin(0.5 * s.beta));
        case EmbeddedKind::A1BC:
            return s.a * (1.0 + 1.0 / std::cos(s.beta));
        case EmbeddedKind::AB1C:
            return s.b * (1.0 + 1.0 / std::cos(s.alpha));
        case EmbeddedKind::ABC1:
            return s.c * (1.0 + 1.0 / std::cos(s.alpha));
        case EmbeddedKind::AbarBC:
            return 2.0 * s.a * (1.0 + std::cos(s.beta));
        case EmbeddedKind::AbbarBC:
            return 2.0 * s.a * (1.0 + std::cos(s.gamma));
        case EmbeddedKind::ABbarC:
            return 2.0 * s.b * (1.0 + std::cos(s.gamma));
    }
    return 0.0;
}

double closed_form_area(ContainerKind kind, const TriangleShape& s) {
    switch (kind) {
        case ContainerKind::ABPrimeC:
            return 0.5 * s.b * s.b * std::sin(s.gamma);
        case ContainerKind::ABCPrime:
            return 0.5 * s.c * s.c * std::sin(s.alpha);
        case ContainerKind::ABCDPrime:
            return 0.5 * s.c * s.c * std::sin(s.beta);
        case ContainerKind::AB1C:
            return 0.5 * s.b * s.b * std::sin(2.0 * s.alpha);
        case ContainerKind::ABC1:
            return 0.5 * s.c * s.c * std::sin(2.0 * s.alpha);
        case ContainerKind::ABC2:
            return 0.5 * s.c * s.c * std::sin(2.0 * s.beta);
        case ContainerKind::AbarBC:
            return 0.25 * s.a * s.a * std::tan(s.gamma);
        case ContainerKind::ABbarC:
            return 0.25 * s.b * s.b * std::tan(s.gamma);
        case ContainerKind::ABCbar:
            return 0.25 * s.c * s.c * std::tan(s.beta);
    }
    return 0.0;
}

double closed_form_perimeter(ContainerKind kind, const TriangleShape& s) {
    switch (kind) {
        case ContainerKind::ABPrimeC:
            return 2.0 * s.b * (1.0 + std::sin(0.5 * s.gamma));
        case ContainerKind::ABCPrime:
            return 2.0 * s.c * (1.0 + std::sin(0.5 * s.alpha));
        case ContainerKind::ABCDPrime:
            return 2.0 * s.c * (1.0 + std::sin(0.5 * s.beta));
        case ContainerKind::AB1C:
            return 2.0 * s.b * (1.0 + std::cos(s.alpha));
        case ContainerKind::ABC1:
            return 2.0 * s.c * (1.0 + std::cos(s.alpha));
        case ContainerKind::ABC2:
            return 2.0 * s.c * (1.0 + std::cos(s.beta));
        case ContainerKind::AbarBC:
            return s.a * (1.0 + 1.0 / std::cos(s.gamma));
        case ContainerKind::ABbarC:
            return s.b * (1.0 + 1.0 / std::cos(s.gamma));
        case ContainerKind::ABCbar:
            return s.c * (1.0 + 1.0 / std::cos(s.beta));
    }
    return 0.0;
}

}  // namespace isotri
