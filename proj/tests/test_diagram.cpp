#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "handleknot/diagram.hpp"
#include "handleknot/ideals.hpp"

using namespace handleknot;

namespace {

// planar handcuff spine: two loops joined by a crossing-free isthmus
const char* kPlanarHandcuff = R"(kind handcuff
arc k1 K1
arc k2 K2
arc i1 isthmus
V ends=k1,k1,i1 isthmus=i1
V ends=k2,k2,i1 isthmus=i1
)";

// twisted handcuff spine with three half-twist clasps (the 3-stage family member)
const char* kTwisted3 = R"(kind handcuff
# isthmus path: a1 - b1 - a2
arc a1 isthmus
arc a2 isthmus
arc b1 isthmus
arc c1 K1
arc c2 K1
arc d1 K2
arc d2 K2
X over=c1 under=b1>a1 sign=+
X over=b1 under=c1>c2 sign=+
X over=b1 under=d1>d2 sign=+
X over=d2 under=a2>b1 sign=-
V ends=c1,c2,a2 isthmus=a2
V ends=d1,d2,a1 isthmus=a1
)";

// same family, stage parameter 5 (isthmus clasps both loops r-1 times, r = 3)
std::string twisted_text(int p) {
    int r = (p + 1) / 2;
    std::ostringstream t;
    t << "kind handcuff\n";
    for (int i = 1; i <= r; ++i) t << "arc a" << i << " isthmus\n";
    for (int i = 1; i < r; ++i) t << "arc b" << i << " isthmus\n";
    for (int i = 1; i <= r; ++i) t << "arc c" << i << " K1\n";
    for (int i = 1; i <= r; ++i) t << "arc d" << i << " K2\n";
    for (int i = 1; i < r; ++i) {
        t << "X over=c" << i << " under=b" << i << ">a" << i << " sign=+\n";
        t << "X over=b" << i << " under=c" << i << ">c" << i + 1 << " sign=+\n";
        t << "X over=b" << i << " under=d" << i << ">d" << i + 1 << " sign=+\n";
        t << "X over=d" << i + 1 << " under=a" << i + 1 << ">b" << i << " sign=-\n";
    }
    t << "V ends=c1,c" << r << ",a" << r << " isthmus=a" << r << "\n";
    t << "V ends=d1,d" << r << ",a1 isthmus=a1\n";
    return t.str();
}

const char* kUnknot = R"(kind knot
arc a K1
)";

const char* kTrefoil = R"(kind knot
arc A K1
arc B K1
arc C K1
X over=C under=A>B sign=+
X over=A under=B>C sign=+
X over=B under=C>A sign=+
)";

// one-strand clasp tangle: isthmus spirals under the two horizontal strands
const char* kSpiralTangle3 = R"(kind tangle
arc T K1
arc B K2
arc s0 isthmus
arc s1 isthmus
arc s2 isthmus
arc s3 isthmus
X over=B under=s0>s1 sign=+
X over=T under=s1>s2 sign=+
X over=B under=s2>s3 sign=+
boundary T.h,T.t,B.h,B.t,s0.h,s3.t
)";

FreeWord W(const std::string& s, int rank) { return parse_word(s, rank); }

std::string canon(const FreeWord& w) {
    return std::min(format_syllables(cyclic_normal_form(w)),
                    format_syllables(cyclic_normal_form(w.inverse())));
}

std::vector<std::string> canon_set(const std::vector<FreeWord>& rels) {
    std::vector<std::string> out;
    for (const FreeWord& r : rels) out.push_back(canon(r));
    std::sort(out.begin(), out.end());
    return out;
}

bool has_violation(const std::vector<std::string>& v, const std::string& needle) {
    return std::any_of(v.begin(), v.end(), [&](const std::string& s) {
        return s.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("parsing and round trips") {
    SpineDiagram h = parse_diagram(kPlanarHandcuff);
    CHECK(h.kind == DiagramKind::Handcuff);
    CHECK(h.arc_names == std::vector<std::string>{"k1", "k2", "i1"});
    CHECK(h.crossings.empty());
    REQUIRE(h.vertices.size() == 2);
    // bare names resolve head-first, then tail
    CHECK(h.vertices[0].ends[0] == ArcEnd{"k1", true});
    CHECK(h.vertices[0].ends[1] == ArcEnd{"k1", false});
    CHECK(h.vertices[0].ends[2] == ArcEnd{"i1", true});
    CHECK(h.vertices[0].isthmus_slot == 2);
    CHECK(h.vertices[1].ends[2] == ArcEnd{"i1", false});

    for (const char* txt : {kPlanarHandcuff, kTwisted3, kUnknot, kTrefoil, kSpiralTangle3}) {
        SpineDiagram d = parse_diagram(txt);
        CHECK(validate(d).empty());
        std::string fmt = format_diagram(d);
        CHECK(parse_diagram(fmt) == d);
        CHECK(format_diagram(parse_diagram(fmt)) == fmt);
    }

    SpineDiagram t = parse_diagram(kSpiralTangle3);
    REQUIRE(t.boundary.size() == 6);
    CHECK(t.boundary[0] == ArcEnd{"T", true});
    CHECK(t.boundary[5] == ArcEnd{"s3", false});
}

TEST_CASE("parse errors carry line positions") {
    CHECK_THROWS_WITH_AS(parse_diagram("arc a K1\n"), "missing kind line", DiagramError);
    CHECK_THROWS_WITH_AS(parse_diagram("kind widget\n"),
                         "line 1: unknown kind 'widget'", DiagramError);
    CHECK_THROWS_WITH_AS(parse_diagram("kind knot\narc a K1\narc a K2\n"),
                         "line 3: duplicate arc 'a'", DiagramError);
    CHECK_THROWS_WITH_AS(parse_diagram("kind knot\narc a K1\narc b purple\n"),
                         "line 3: unknown label 'purple'", DiagramError);
    CHECK_THROWS_WITH_AS(
        parse_diagram("kind knot\narc a K1\nX over=a under=a>z sign=+\n"),
        "line 3: unknown arc 'z'", DiagramError);
    CHECK_THROWS_WITH_AS(
        parse_diagram("kind knot\narc a K1\nX over=a under=a>a sign=*\n"),
        "line 3: sign must be + or -", DiagramError);
    CHECK_THROWS_AS(parse_diagram("kind knot\narc a K1\nX over=a under=aa sign=+\n"),
                    DiagramError);

    // the same under-end claimed by two crossings
    std::string dup = std::string(kTwisted3) + "X over=c1 under=b1>a1 sign=+\n";
    try {
        parse_diagram(dup);
        FAIL("expected a consumption error");
    } catch (const DiagramError& e) {
        CHECK(std::string(e.what()).find("arc-end multiply consumed") !=
              std::string::npos);
    }

    // a boundary end left over on a closed diagram counts as dangling
    CHECK_THROWS_WITH_AS(parse_diagram("kind tangle\narc w K1\nboundary w.h\n"),
                         "dangling arc-end (w)", DiagramError);
}

TEST_CASE("validate reports structural violations") {
    SpineDiagram d;
    d.kind = DiagramKind::Link;
    d.arc_names = {"x", "y"};
    d.labels = {{"x", ArcLabel::K1}, {"y", ArcLabel::K2}};
    CHECK(validate(d).empty());  // two disjoint circles

    SpineDiagram bd = d;
    bd.boundary = {{"x", true}, {"x", false}};
    CHECK(has_violation(validate(bd), "boundary ends on a non-tangle diagram"));

    SpineDiagram mis = d;
    mis.crossings = {{"x", "x", "y", +1}};
    CHECK(has_violation(validate(mis), "component label mismatch"));

    SpineDiagram isl = d;
    isl.arc_names.push_back("z");
    isl.labels["z"] = ArcLabel::Isthmus;
    CHECK(has_violation(validate(isl), "link kind forbids isthmus arcs"));

    SpineDiagram two = d;
    two.arc_names.push_back("p");
    two.labels["p"] = ArcLabel::K1;
    CHECK(has_violation(validate(two), "K1 arcs must form one closed cycle"));

    SpineDiagram onev = parse_diagram(kPlanarHandcuff);
    onev.vertices.pop_back();
    CHECK(has_violation(validate(onev), "handcuff kind requires exactly 2 vertices"));

    SpineDiagram wrongv = parse_diagram(kPlanarHandcuff);
    wrongv.vertices[1].isthmus_slot = 0;  // k2 end marked as the isthmus
    CHECK(has_violation(validate(wrongv), "vertex isthmus designation invalid"));

    SpineDiagram samev = parse_diagram(kPlanarHandcuff);
    samev.labels["k2"] = ArcLabel::K1;
    CHECK(has_violation(validate(samev), "vertices must attach K1 and K2"));
}

TEST_CASE("wirtinger presentations") {
    GroupPresentation un = wirtinger(parse_diagram(kUnknot));
    CHECK(un.gens == 1);
    CHECK(un.relators.empty());

    GroupPresentation ph = wirtinger(parse_diagram(kPlanarHandcuff));
    CHECK(ph.gens == 3);
    REQUIRE(ph.relators.size() == 1);  // the free k1-loop relator cancels to the isthmus
    CHECK(ph.relators[0] == W("x3", 3));
    CHECK(deficiency(ph) == 2);

    GroupPresentation tr = wirtinger(parse_diagram(kTrefoil));
    CHECK(tr.gens == 3);
    REQUIRE(tr.relators.size() == 2);
    CHECK(tr.relators[0] == W("x3 x1 x3^-1 x2^-1", 3));
    CHECK(tr.relators[1] == W("x1 x2 x1^-1 x3^-1", 3));
    CHECK(deficiency(tr) == 1);

    CHECK_THROWS_AS(wirtinger(parse_diagram(kSpiralTangle3)), DiagramError);
}

TEST_CASE("twisted handcuff diagrams reproduce the conjugation presentation") {
    // generators in declaration order: a1 a2 b1 c1 c2 d1 d2
    GroupPresentation g = wirtinger(parse_diagram(kTwisted3));
    CHECK(g.gens == 7);
    REQUIRE(g.relators.size() == 5);
    CHECK(g.relators[0] == W("x4 x3 x4^-1 x1^-1", 7));
    CHECK(g.relators[1] == W("x3 x4 x3^-1 x5^-1", 7));
    CHECK(g.relators[2] == W("x3 x6 x3^-1 x7^-1", 7));
    CHECK(g.relators[3] == W("x7^-1 x2 x7 x3^-1", 7));
    CHECK(g.relators[4] == W("x4 x5^-1 x2", 7));
    CHECK(deficiency(g) == 2);

    // negative-crossing relator is the conjugation form up to rotation+inversion
    CHECK(canon(g.relators[3]) == canon(W("x7 x3 x7^-1 x2^-1", 7)));

    // stage 5: same families with r = 3
    SpineDiagram d5 = parse_diagram(twisted_text(5));
    CHECK(validate(d5).empty());
    CHECK(d5.arc_names.size() == 11);
    CHECK(d5.crossings.size() == 8);
    GroupPresentation g5 = wirtinger(d5);
    CHECK(g5.gens == 11);
    CHECK(g5.relators.size() == 9);
    CHECK(deficiency(g5) == 2);
    // generators: a1..a3 = 1..3, b1 b2 = 4 5, c1..c3 = 6..8, d1..d3 = 9..11
    std::vector<FreeWord> expected;
    for (int i = 0; i < 2; ++i) {
        int a = 1 + i, b = 4 + i, c = 6 + i, dd = 9 + i;
        expected.push_back(FreeWord(11, {c, b, -c, -a}));
        expected.push_back(FreeWord(11, {b, c, -b, -(c + 1)}));
        expected.push_back(FreeWord(11, {b, dd, -b, -(dd + 1)}));
        expected.push_back(FreeWord(11, {dd + 1, b, -(dd + 1), -(a + 1)}));
    }
    expected.push_back(FreeWord(11, {6, -8, 3}));  // c1 c3^-1 a3
    CHECK(canon_set(g5.relators) == canon_set(expected));

    // order ideal data flows through unchanged from the presentation
    AlexanderReport rep = alexander_report(g);
    CHECK(rep.E0_is_zero);
    CHECK(rep.E1_is_zero);
    CHECK(rep.unitary);
    CHECK(rep.principal.kind == PrincipalityResult::Kind::Yes);
    CHECK(rep.symmetric == SymmetryVerdict::No);
}

TEST_CASE("cycle assignments") {
    SpineDiagram h = parse_diagram(kPlanarHandcuff);
    auto cs = enumerate_cycles(h, 2);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == CycleAssignment{2, 0, 0});
    CHECK(cs[1] == CycleAssignment{2, 0, 1});
    CHECK(cs[2] == CycleAssignment{2, 1, 0});
    CHECK(cs[3] == CycleAssignment{2, 1, 1});
    CHECK(enumerate_cycles(h, 3).size() == 9);
    CHECK(enumerate_cycles(parse_diagram(kTwisted3), 5).size() == 25);

    CycleAssignment z = cs[1];
    CHECK(z.value(ArcLabel::K1) == 0);
    CHECK(z.value(ArcLabel::K2) == 1);
    CHECK(z.value(ArcLabel::Isthmus) == 0);

    CHECK_THROWS_AS(enumerate_cycles(parse_diagram(kUnknot), 2), DiagramError);
    CHECK_THROWS_AS(enumerate_cycles(parse_diagram(kSpiralTangle3), 2), DiagramError);
    CHECK_THROWS_AS(enumerate_cycles(h, 1), DiagramError);
}

TEST_CASE("isthmus deletion yields the constituent link") {
    SpineDiagram ph = delete_isthmus(parse_diagram(kPlanarHandcuff));
    CHECK(ph.kind == DiagramKind::Link);
    CHECK(ph.arc_names == std::vector<std::string>{"k1", "k2"});
    CHECK(ph.crossings.empty());
    CHECK(validate(ph).empty());

    for (int p : {3, 5, 7}) {
        SpineDiagram d = parse_diagram(twisted_text(p));
        SpineDiagram L = delete_isthmus(d);
        CHECK(L.kind == DiagramKind::Link);
        CHECK(validate(L).empty());
        // both loops collapse to disjoint circles: a 2-component unlink
        CHECK(L.arc_names == std::vector<std::string>{"c1", "d1"});
        CHECK(L.crossings.empty());
        CHECK(L.labels.at("c1") == ArcLabel::K1);
        CHECK(L.labels.at("d1") == ArcLabel::K2);
        int isthmus_count = 0;
        for (const auto& [a, l] : d.labels)
            if (l == ArcLabel::Isthmus) ++isthmus_count;
        // each loop loses one arc per merge; at stage p that is (r-1) merges + the
        // vertex merge, leaving one arc per loop
        CHECK(L.arc_names.size() == 2);
        CHECK(d.arc_names.size() == static_cast<size_t>(isthmus_count) + 2 * ((p + 1) / 2));
    }

    CHECK_THROWS_AS(delete_isthmus(parse_diagram(kUnknot)), DiagramError);
}
