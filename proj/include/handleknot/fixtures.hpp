#pragma once

#include <string>

#include "handleknot/diagram.hpp"
#include "handleknot/patterns.hpp"
#include "handleknot/presentation.hpp"

namespace handleknot {

// Reference tangles.  Boundary ends come in a documented order so callers
// can pin colors positionally:
//   E(q)    spiral clasp: T.h, T.t, B.h, B.t, s0.h, s<q>.t
//   O(q)    two-strand clasp ladder: left-strand entry/exit, then
//           right-strand exit/entry (a, b, a', b')
//   Obar(q) band double of O(q) with one curl added to each strand before
//           doubling, so each doubled band passes under itself as often as
//           under the other band; boundary is the right then left copy of
//           each O port, in O's port order
//   B       two bands clasped through four internal bands: the four corner
//           ports (a, b, c, d)
// E, O, Obar take odd q >= 1; B ignores the parameter.
enum class TangleName { E, O, Obar, B };

// Handcuff spines.  Gamma1..Gamma3 take an odd prime, Gamma4 any q >= 1.
enum class FamilyName { Gamma1, Gamma2, Gamma3, Gamma4 };

const char* to_string(TangleName n);
const char* to_string(FamilyName n);
TangleName parse_tangle_name(const std::string& s);
FamilyName parse_family_name(const std::string& s);

SpineDiagram build_tangle(TangleName name, int q);
SpineDiagram build_family(FamilyName name, int parameter);

// Replace every arc of a tangle by two parallel arcs (right copy K1, left
// copy K2) and every crossing by the four crossings of one band passing
// under another; under-arcs meet the right copy of the over-band first.
// Boundary ends double in place (right copy first).
SpineDiagram band_double(const SpineDiagram& tangle);

// The handcuff diagram whose Wirtinger presentation carries the arc scheme
// used by the Alexander-ideal tests; same spine as Gamma1(p).
SpineDiagram lambert_diagram(int p);

// 3-generator, 1-relator presentation of the knotted theta-curve complement
// used as the non-principality reference.
GroupPresentation kinoshita_presentation();

// (w0, w1, w2) = (1, t1 t2 t1^-1 t2^-1 t1, t2): the standard rigidly
// obstructed pattern.
HandlebodyPattern cochran_orr_pattern();

}  // namespace handleknot
