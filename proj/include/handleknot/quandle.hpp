#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "handleknot/diagram.hpp"
#include "handleknot/laurent.hpp"

namespace handleknot {

class QuandleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite set with a binary operation satisfying the three quandle axioms:
// idempotence, right self-distributivity, and bijective right translations.
struct FiniteQuandle {
    int size = 0;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b
    // set for the dihedral construction; enables the linear coloring solver
    bool dihedral = false;
    int modulus = 0;

    int at(int a, int b) const { return table[a][b]; }
    bool operator==(const FiniteQuandle&) const = default;
};

// a*b = 2b-a on Z_m
FiniteQuandle make_dihedral(int m);

// a*b = u*a + (1-u)*b on Z_m[t]/(h), coefficients listed from degree 0 up.
// Requires unit leading and constant coefficients of h and invertible u.
FiniteQuandle make_alexander(int m, const std::vector<int>& h,
                             const std::vector<int>& u);

// the 4-element quandle Z_2[t]/(t^2+t+1) with u = t
FiniteQuandle make_tetrahedral();

// verifies the axioms, throws QuandleError naming the first failure
FiniteQuandle make_explicit(const std::vector<std::vector<int>>& table);

// least k >= 2 with a *^k b = a for all a, b (lcm of right-translation orders)
int quandle_type(const FiniteQuandle& q);

// Number of colorings of the diagram's arcs by q: at each crossing the
// outgoing under-arc color is the incoming one acted on by the over-arc color
// when the over-arc's component carries cycle value 1 (unchanged when 0); at
// each vertex all three incident colors agree.  Requires an involutory quandle
// and a mod-2 cycle.  Dihedral quandles of odd prime order use ranks over F_p;
// anything else enumerates, guarded by an arc limit (default 12, overridable
// via HANDLEKNOT_BRUTE_LIMIT).
Int count_colorings(const SpineDiagram& d, const FiniteQuandle& q,
                    const CycleAssignment& z);

// the enumerating solver regardless of quandle shape (same guard)
Int count_colorings_exhaustive(const SpineDiagram& d, const FiniteQuandle& q,
                               const CycleAssignment& z);

// Colorings of a tangle extending pinned boundary colors (keyed by arc-end;
// conflicting pins on one arc give 0).
Int count_tangle_colorings(const SpineDiagram& d, const FiniteQuandle& q,
                           const CycleAssignment& z,
                           const std::map<ArcEnd, int>& boundary_colors);

// Exponent multiset of the 4-term coloring polynomial: each mod-2 cycle
// contributes t^(e-1) where the coloring count is p^e.
struct PhiPolynomial {
    std::array<int, 4> exponents{};  // sorted ascending
    bool operator==(const PhiPolynomial&) const = default;
};

// counts in cycle order (0,0), (0,1), (1,0), (1,1)
std::array<Int, 4> phi_counts(const SpineDiagram& d, int p);

PhiPolynomial phi_p(const SpineDiagram& d, int p);

// "3+t", "1+2t^2+t^4", "4", ...
std::string format_phi(const PhiPolynomial& phi);

// "dihedral:5" | "tetrahedral" | "alexander:m:h:u" with single-variable
// polynomials like t^2+t+1
FiniteQuandle parse_quandle_spec(const std::string& spec);

}  // namespace handleknot
