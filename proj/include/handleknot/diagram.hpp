#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "handleknot/presentation.hpp"

namespace handleknot {

enum class ArcLabel { K1, K2, Isthmus };
enum class DiagramKind { Handcuff, Link, Knot, Tangle };

// One end of an arc; arcs run head -> tail.
struct ArcEnd {
    std::string arc;
    bool head = true;
    auto operator<=>(const ArcEnd&) const = default;
};

// over stays whole; the under strand enters as under_in (its tail is
// consumed) and leaves as under_out (its head is consumed).
struct Crossing {
    std::string over, under_in, under_out;
    int sign = +1;
    bool operator==(const Crossing&) const = default;
};

struct SpineVertex {
    std::array<ArcEnd, 3> ends;  // cyclic order as listed
    int isthmus_slot = -1;       // index into ends, -1 if undesignated
    bool operator==(const SpineVertex&) const = default;
};

struct SpineDiagram {
    DiagramKind kind = DiagramKind::Knot;
    std::vector<std::string> arc_names;  // declaration order
    std::map<std::string, ArcLabel> labels;
    std::vector<Crossing> crossings;
    std::vector<SpineVertex> vertices;
    std::vector<ArcEnd> boundary;  // tangle kind only

    bool operator==(const SpineDiagram&) const = default;
};

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Values assigned to the two knot components mod k; the isthmus always
// carries 0.
struct CycleAssignment {
    int modulus = 2;
    int z1 = 0, z2 = 0;
    int value(ArcLabel l) const {
        if (l == ArcLabel::K1) return z1;
        if (l == ArcLabel::K2) return z2;
        return 0;
    }
    bool operator==(const CycleAssignment&) const = default;
};

// Line-oriented text format; throws DiagramError on syntax errors and on the
// first structural violation.
SpineDiagram parse_diagram(const std::string& text);
std::string format_diagram(const SpineDiagram& d);

// Structural checks; empty means well formed.
std::vector<std::string> validate(const SpineDiagram& d);

// One generator per arc, one relator per crossing and vertex, last relator
// dropped as redundant. Errors on tangles.
GroupPresentation wirtinger(const SpineDiagram& d);

// All k² component assignments, ordered by (z1, z2).
std::vector<CycleAssignment> enumerate_cycles(const SpineDiagram& d, int k);

// Removes the isthmus from a handcuff diagram: isthmus arcs and their
// under-crossings disappear, under-strands broken only by the isthmus are
// rejoined, and the two arcs meeting each vertex merge.
SpineDiagram delete_isthmus(const SpineDiagram& d);

}  // namespace handleknot
