#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "handleknot/fixtures.hpp"
#include "handleknot/patterns.hpp"
#include "handleknot/presentation.hpp"
#include "handleknot/quandle.hpp"

using namespace handleknot;

namespace {

ArcEnd head(const std::string& a) { return {a, true}; }
ArcEnd tail(const std::string& a) { return {a, false}; }

int mod(long x, int p) { return (int)(((x % p) + p) % p); }

// boundary order (a, b, a', b'); z is one value shared by both strands
std::map<ArcEnd, int> o_pins(const SpineDiagram& o, int a, int b, int ap, int bp) {
    return {{o.boundary[0], a},
            {o.boundary[1], b},
            {o.boundary[2], ap},
            {o.boundary[3], bp}};
}

int o_table(int q, int p, int z, int a, int b, int ap, int bp) {
    if (z == 0) return (a == b && ap == bp) ? 1 : 0;
    if (p == q) return (a == ap && b == bp) ? p : 0;
    bool ok = mod(2 * ap, p) == mod((2 - q) * a + q * b, p) &&
              mod(2 * bp, p) == mod(-q * a + (q + 2) * b, p);
    return ok ? 1 : 0;
}

// Pairs of doubled ends in boundary order [Ar,Al | Br,Bl | Er,El | Bpr,Bpl].
// The corner colors sit so that each pair carries both values of {a,b} or
// {c,d}, right copy first: top pairs (b,a)/(a,b), bottom pairs (c,d)/(d,c).
std::map<ArcEnd, int> obar_pins(const SpineDiagram& ob, int a, int b, int c, int d) {
    return {{ob.boundary[0], b}, {ob.boundary[1], a}, {ob.boundary[2], c},
            {ob.boundary[3], d}, {ob.boundary[4], a}, {ob.boundary[5], b},
            {ob.boundary[6], d}, {ob.boundary[7], c}};
}

std::map<ArcEnd, int> b_pins(const SpineDiagram& bt, int a, int b, int c, int d) {
    return {{bt.boundary[0], a},
            {bt.boundary[1], b},
            {bt.boundary[2], c},
            {bt.boundary[3], d}};
}

}  // namespace

TEST_CASE("every fixture validates") {
    for (int q : {1, 3, 5}) {
        CHECK(validate(build_tangle(TangleName::E, q)).empty());
        CHECK(validate(build_tangle(TangleName::O, q)).empty());
        CHECK(validate(build_tangle(TangleName::Obar, q)).empty());
    }
    CHECK(validate(build_tangle(TangleName::B, 1)).empty());
    for (int p : {3, 5, 7}) {
        CHECK(validate(build_family(FamilyName::Gamma1, p)).empty());
        CHECK(validate(lambert_diagram(p)).empty());
    }
    for (int p : {3, 5}) {
        CHECK(validate(build_family(FamilyName::Gamma2, p)).empty());
        CHECK(validate(build_family(FamilyName::Gamma3, p)).empty());
    }
    for (int q : {1, 2, 3}) CHECK(validate(build_family(FamilyName::Gamma4, q)).empty());
}

TEST_CASE("fixture parameter guards") {
    CHECK_THROWS_AS(build_tangle(TangleName::E, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_tangle(TangleName::O, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_tangle(TangleName::Obar, -3), std::invalid_argument);
    CHECK_THROWS_AS(build_family(FamilyName::Gamma1, 9), std::invalid_argument);
    CHECK_THROWS_AS(build_family(FamilyName::Gamma2, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_family(FamilyName::Gamma3, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_family(FamilyName::Gamma4, 0), std::invalid_argument);
    CHECK_NOTHROW(build_family(FamilyName::Gamma4, 2));
    CHECK_THROWS_AS(lambert_diagram(15), std::invalid_argument);
}

TEST_CASE("tangle and family names round-trip") {
    for (TangleName n : {TangleName::E, TangleName::O, TangleName::Obar, TangleName::B})
        CHECK(parse_tangle_name(to_string(n)) == n);
    for (FamilyName n : {FamilyName::Gamma1, FamilyName::Gamma2, FamilyName::Gamma3,
                         FamilyName::Gamma4})
        CHECK(parse_family_name(to_string(n)) == n);
    CHECK(parse_family_name("Gamma2") == FamilyName::Gamma2);
    CHECK_THROWS_AS(parse_tangle_name("Q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_name("gamma5"), std::invalid_argument);
}

TEST_CASE("spiral tangle count table") {
    // count is 1 for every pinned pair when the spiral length equals the
    // prime at the (1,1) cycle, and otherwise exactly when the colors agree
    for (int q : {1, 3, 5}) {
        SpineDiagram e = build_tangle(TangleName::E, q);
        auto pins = [&](int a, int b) {
            return std::map<ArcEnd, int>{{e.boundary[0], a}, {e.boundary[1], a},
                                         {e.boundary[2], b}, {e.boundary[3], b},
                                         {e.boundary[4], a}, {e.boundary[5], b}};
        };
        for (int p : {3, 5}) {
            FiniteQuandle Q = make_dihedral(p);
            for (int z1 = 0; z1 < 2; ++z1)
                for (int z2 = 0; z2 < 2; ++z2)
                    for (int a = 0; a < p; ++a)
                        for (int b = 0; b < p; ++b) {
                            Int got =
                                count_tangle_colorings(e, Q, {2, z1, z2}, pins(a, b));
                            int want = (q == p && z1 == 1 && z2 == 1) ? 1
                                       : (a == b)                     ? 1
                                                                      : 0;
                            CHECK_MESSAGE(got == want, "E(", q, ") p=", p, " z=(", z1,
                                          ",", z2, ") a=", a, " b=", b);
                        }
        }
    }
}

TEST_CASE("clasp ladder count table") {
    for (int q : {1, 3, 5}) {
        SpineDiagram o = build_tangle(TangleName::O, q);
        for (int p : {3, 5}) {
            FiniteQuandle Q = make_dihedral(p);
            for (int z : {0, 1})
                for (int a = 0; a < p; ++a)
                    for (int b = 0; b < p; ++b)
                        for (int ap = 0; ap < p; ++ap)
                            for (int bp = 0; bp < p; ++bp) {
                                Int got = count_tangle_colorings(
                                    o, Q, {2, z, z}, o_pins(o, a, b, ap, bp));
                                int want = o_table(q, p, z, a, b, ap, bp);
                                CHECK_MESSAGE(got == want, "O(", q, ") p=", p, " z=", z,
                                              " (", a, ",", b, ",", ap, ",", bp, ")");
                            }
        }
    }
}

TEST_CASE("doubled ladder count table") {
    for (int q : {3, 5}) {
        SpineDiagram ob = build_tangle(TangleName::Obar, q);
        for (int p : {3, 5, 7}) {
            FiniteQuandle Q = make_dihedral(p);
            // both copies active: one extension exactly on matching corners
            for (int a = 0; a < p; ++a)
                for (int b = 0; b < p; ++b)
                    for (int c = 0; c < p; ++c)
                        for (int d = 0; d < p; ++d) {
                            Int got = count_tangle_colorings(ob, Q, {2, 1, 1},
                                                             obar_pins(ob, a, b, c, d));
                            int want = (a == d && b == c) ? 1 : 0;
                            CHECK_MESSAGE(got == want, "Obar(", q, ") p=", p, " (", a,
                                          ",", b, ",", c, ",", d, ")");
                        }
            // one copy active: equal top colors collapse to the plain ladder
            for (int z1 = 0; z1 < 2; ++z1)
                for (int a = 0; a < p; ++a)
                    for (int c = 0; c < p; ++c)
                        for (int d = 0; d < p; ++d) {
                            Int got = count_tangle_colorings(ob, Q, {2, z1, 1 - z1},
                                                             obar_pins(ob, a, a, c, d));
                            int want = q == p ? (c == d ? p : 0)
                                              : (a == c && c == d ? 1 : 0);
                            CHECK_MESSAGE(got == want, "Obar(", q, ") p=", p,
                                          " z1=", z1, " (", a, ",", c, ",", d, ")");
                        }
        }
    }
}

TEST_CASE("clasp box count table") {
    SpineDiagram bt = build_tangle(TangleName::B, 1);
    for (int p : {3, 5}) {
        FiniteQuandle Q = make_dihedral(p);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                for (int c = 0; c < p; ++c)
                    for (int d = 0; d < p; ++d) {
                        Int got = count_tangle_colorings(bt, Q, {2, 1, 1},
                                                         b_pins(bt, a, b, c, d));
                        int want =
                            (a == b && c == d) ? (p == 3 ? p * p : 1) : 0;
                        CHECK_MESSAGE(got == want, "B p=", p, " (", a, ",", b, ",", c,
                                      ",", d, ")");
                    }
    }
}

TEST_CASE("coloring polynomials of the spine families") {
    for (int p : {3, 5, 7})
        CHECK(format_phi(phi_p(build_family(FamilyName::Gamma1, p), p)) == "3+t");
    for (auto [p, other] : {std::pair{3, 5}, {5, 3}, {3, 7}})
        CHECK(format_phi(phi_p(build_family(FamilyName::Gamma1, p), other)) == "4");

    for (int p : {3, 5})
        CHECK(format_phi(phi_p(build_family(FamilyName::Gamma2, p), p)) ==
              "1+2t^2+t^4");
    for (auto [p, other] : {std::pair{3, 5}, {5, 3}})
        CHECK(format_phi(phi_p(build_family(FamilyName::Gamma2, p), other)) == "4");

    for (int p : {3, 5})
        CHECK(format_phi(phi_p(build_family(FamilyName::Gamma3, p), p)) == "1+t+2t^2");
    for (auto [p, other] : {std::pair{3, 5}, {5, 3}})
        CHECK(format_phi(phi_p(build_family(FamilyName::Gamma3, p), other)) == "4");

    for (int q : {1, 2, 3}) {
        SpineDiagram g4 = build_family(FamilyName::Gamma4, q);
        PhiPolynomial phi = phi_p(g4, 3);
        CHECK(phi == PhiPolynomial{{0, 0, 0, 2 * q}});
        CHECK(format_phi(phi_p(g4, 5)) == "4");
    }
}

TEST_CASE("band double structure") {
    SpineDiagram t = parse_diagram(
        "kind tangle\narc X K1\narc Y1 K2\narc Y2 K2\n"
        "X over=X under=Y1>Y2 sign=+\nboundary X.h,X.t,Y1.h,Y2.t\n");
    SpineDiagram d = band_double(t);
    CHECK(validate(d).empty());
    CHECK(d.arc_names.size() == 8);
    CHECK(d.crossings.size() == 4);
    CHECK(d.labels.at("Xr") == ArcLabel::K1);
    CHECK(d.labels.at("Xl") == ArcLabel::K2);
    // the under band passes under the right then the left copy, right copy of
    // the under band first
    std::vector<Crossing> want = {{"Xr", "Y1r", "m0r", +1},
                                  {"Xl", "m0r", "Y2r", +1},
                                  {"Xr", "Y1l", "m0l", +1},
                                  {"Xl", "m0l", "Y2l", +1}};
    CHECK(d.crossings == want);
    std::vector<ArcEnd> boundary = {head("Xr"),  head("Xl"),  tail("Xr"), tail("Xl"),
                                    head("Y1r"), head("Y1l"), tail("Y2r"), tail("Y2l")};
    CHECK(d.boundary == boundary);

    CHECK_THROWS_AS(band_double(parse_diagram("kind knot\narc A K1\n")),
                    std::invalid_argument);
}

TEST_CASE("named presentation and pattern fixtures") {
    SpineDiagram lam = lambert_diagram(3);
    CHECK(lam == build_family(FamilyName::Gamma1, 3));
    GroupPresentation wp = wirtinger(lam);
    CHECK(deficiency(wp) == 2);

    GroupPresentation kp = kinoshita_presentation();
    CHECK(kp.gens == 3);
    CHECK(deficiency(kp) == 2);
    REQUIRE(kp.relators.size() == 1);
    CHECK(kp.relators[0] == parse_word("x1 x2 x1^-1 x3 x1 x3^-1 x2 x3 x2^-1", 3));

    HandlebodyPattern co = cochran_orr_pattern();
    CHECK(co.w0.is_identity());
    CHECK(co.link.w1() == parse_word("t1 t2 t1^-1 t2^-1 t1"));
    CHECK(co.link.w2() == parse_word("t2"));
    CHECK(classify_link_pattern(co.link).tag == PatternTag::NonTrivial);
    CHECK(classify_handlebody_pattern(co).tag == PatternTag::NonTrivial);
    CHECK(rigid_obstruction(co.link.w1(), co.link.w2()).tag == PatternTag::Obstructed);
}
