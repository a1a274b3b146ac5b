#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isotri/geometry.hpp"

namespace isotri {

// Nine isosceles triangles embedded in ABC that share a side and the angle
// at one of its endpoints, labeled by the defining point.
enum class EmbeddedKind {
    APrimeBC,   // A' on AC, |A'C| = a
    ABPrimeC,   // B' on AB, |AB'| = b
    ADPrimeBC,  // A'' on AB, |A''B| = a
    A1BC,       // A1 = perp. bisector of BC ∩ AB
    AB1C,       // B1 = perp. bisector of AC ∩ AB
    ABC1,       // C1 = perp. bisector of AB ∩ AC
    AbarBC,     // Abar on AB, |Abar C| = a
    AbbarBC,    // Abbar on AC, |Abbar B| = a
    ABbarC,     // Bbar on BC, |Bbar A| = b
};

// Nine isosceles containers of ABC with the same sharing property.
enum class ContainerKind {
    ABPrimeC,   // B' on ray CB, |B'C| = b
    ABCPrime,   // C' on ray AC, |AC'| = c
    ABCDPrime,  // C'' on ray BC, |BC''| = c
    AB1C,       // B1 on ray AB, |B1 C| = b
    ABC1,       // C1 on ray AC, |B C1| = c
    ABC2,       // C2 on ray BC, |A C2| = c
    AbarBC,     // Abar = perp. bisector of BC ∩ line AC
    ABbarC,     // Bbar = perp. bisector of AC ∩ line BC
    ABCbar,     // Cbar = perp. bisector of AB ∩ line BC
};

enum class NonSpecialKind { Apex, Ex2 };

// Tagged candidate identity; embedded and container tags that reuse letters
// live in disjoint namespaces ("emb:" / "cont:" serialized prefixes).
struct Kind {
    enum class Family { Embedded, Container, NonSpecial, Input };
    Family family = Family::Input;
    int index = 0;

    Kind() = default;
    Kind(EmbeddedKind k) : family(Family::Embedded), index(static_cast<int>(k)) {}
    Kind(ContainerKind k) : family(Family::Container), index(static_cast<int>(k)) {}
    Kind(NonSpecialKind k) : family(Family::NonSpecial), index(static_cast<int>(k)) {}

    bool operator==(const Kind&) const = default;
    std::string name() const;
};

struct Candidate {
    Kind kind;
    std::optional<Triangle> triangle;
    double area = 0.0;
    double perimeter = 0.0;
    bool exists = false;
    bool valid = false;  // containment / embedding verified numerically
    std::string note;
};

// All nine special embedded isosceles triangles of t in input coordinates.
// Requires a strictly scalene shape (throws NotScalene otherwise).
std::vector<Candidate> embedded_specials(const TriangleShape& shape,
                                         const Triangle& t,
                                         const Tolerance& tol = {});

// All nine special isosceles containers of t.
std::vector<Candidate> container_specials(const TriangleShape& shape,
                                          const Triangle& t,
                                          const Tolerance& tol = {});

// Coordinate-free metric evaluation from the shape's side lengths and
// angles; the cross-check oracle for the coordinate constructions.
double closed_form_area(EmbeddedKind kind, const TriangleShape& s);
double closed_form_perimeter(EmbeddedKind kind, const TriangleShape& s);
double closed_form_area(ContainerKind kind, const TriangleShape& s);
double closed_form_perimeter(ContainerKind kind, const TriangleShape& s);

}  // namespace isotri
