#include "handleknot/fixtures.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace handleknot {
namespace {

bool odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void need(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// ---- E(q): isthmus spiral clasping two parallel strands ----

std::string spiral_text(int q) {
    std::ostringstream t;
    t << "kind tangle\narc T K1\narc B K2\n";
    for (int i = 0; i <= q; ++i) t << "arc s" << i << " isthmus\n";
    for (int i = 0; i < q; ++i)
        t << "X over=" << (i % 2 == 0 ? "B" : "T") << " under=s" << i << ">s"
          << i + 1 << " sign=+\n";
    t << "boundary T.h,T.t,B.h,B.t,s0.h,s" << q << ".t\n";
    return t.str();
}

// ---- O(q): the two strands clasp through an alternating ladder ----
//
// Left strand (K1):  A, D1, Dp1, D2, ..., DF, N(k-1), F(k-1), ..., N1, B
// Right strand (K2): Bp, Ck, Cp(k-1), ..., Cp1, CE, M1, E2, ..., Ek
// with k = (q+1)/2 and the aliases C1 = E1 = CE, D(k) = F(k) = DF, F1 = B.
//
// With curled=true each strand opens with a curl (a crossing where the strand
// passes under its own entry arc).  A curl never changes colorings of a plain
// diagram, but after band doubling it gives each doubled band one extra pass
// under itself, so that every band passes under itself exactly as often as
// under the other band.  That balance makes the parallel-copy offsets cancel
// around each band, which the doubled-tangle coloring counts rely on.

std::string o_text(int q, bool curled) {
    std::string curls;
    if (curled)
        curls =
            "arc Ak K1\narc Bpk K2\n"
            "X over=A under=A>Ak sign=+\n"
            "X over=Bp under=Bp>Bpk sign=+\n";
    std::string a0 = curled ? "Ak" : "A", bp0 = curled ? "Bpk" : "Bp";
    if (q == 1)
        return "kind tangle\narc A K1\narc A2 K1\narc CE K2\narc Bp K2\n" + curls +
               "X over=CE under=" + a0 + ">A2 sign=+\n"
               "X over=A2 under=" + bp0 + ">CE sign=+\n"
               "boundary A.h,A2.t,CE.t,Bp.h\n";
    int k = (q + 1) / 2;
    auto C = [&](int i) { return i == 1 ? std::string("CE") : "C" + std::to_string(i); };
    auto E = [&](int i) { return i == 1 ? std::string("CE") : "E" + std::to_string(i); };
    auto D = [&](int i) { return i == k ? std::string("DF") : "D" + std::to_string(i); };
    auto F = [&](int i) {
        if (i == 1) return std::string("B");
        return i == k ? std::string("DF") : "F" + std::to_string(i);
    };
    std::ostringstream t;
    t << "kind tangle\n";
    t << "arc A K1\narc B K1\narc DF K1\n";
    for (int i = 1; i < k; ++i)
        t << "arc D" << i << " K1\narc Dp" << i << " K1\narc N" << i << " K1\n";
    for (int i = 2; i < k; ++i) t << "arc F" << i << " K1\n";
    t << "arc CE K2\narc Bp K2\n";
    for (int i = 2; i <= k; ++i) t << "arc C" << i << " K2\narc E" << i << " K2\n";
    for (int i = 1; i < k; ++i) t << "arc Cp" << i << " K2\narc M" << i << " K2\n";
    t << curls;
    t << "X over=CE under=" << a0 << ">" << D(1) << " sign=+\n";
    for (int i = 1; i < k; ++i) {
        t << "X over=" << F(i) << " under=Cp" << i << ">" << C(i) << " sign=+\n";
        t << "X over=" << F(i) << " under=" << D(i) << ">Dp" << i << " sign=+\n";
        t << "X over=Dp" << i << " under=" << E(i) << ">M" << i << " sign=+\n";
        t << "X over=Cp" << i << " under=M" << i << ">" << E(i + 1) << " sign=+\n";
        t << "X over=Dp" << i << " under=N" << i << ">" << F(i) << " sign=+\n";
        t << "X over=Cp" << i << " under=" << F(i + 1) << ">N" << i << " sign=+\n";
        t << "X over=" << E(i + 1) << " under=" << C(i + 1) << ">Cp" << i << " sign=+\n";
        t << "X over=" << E(i + 1) << " under=Dp" << i << ">" << D(i + 1) << " sign=+\n";
    }
    t << "X over=DF under=" << bp0 << ">" << C(k) << " sign=+\n";
    t << "boundary A.h,B.t," << E(k) << ".t,Bp.h\n";
    return t.str();
}

std::string o_exit_arc(int q) {  // arc carrying the right strand's exit port
    return q == 1 ? "CE" : "E" + std::to_string((q + 1) / 2);
}

// ---- B: two strands, each threading four internal clasp bands ----

void emit_b_box(std::ostream& t, const std::string& pre, const std::string& r1,
                const std::string& r2, const std::string& r3,
                const std::string& r4, const char* top_label,
                const char* bottom_label) {
    static const char* top_arcs[] = {"s1", "L2", "s2", "s3", "s4",
                                     "w2", "w1", "L1", "p2", "p1"};
    static const char* bot_arcs[] = {"S1", "L3", "S2", "S3", "S4",
                                     "W2", "W1", "L4", "P2", "P1"};
    for (const char* a : top_arcs) t << "arc " << pre << a << " " << top_label << "\n";
    for (const char* a : bot_arcs) t << "arc " << pre << a << " " << bottom_label << "\n";
    auto P = [&](const char* a) { return pre + a; };
    struct Row { std::string over, in, out; };
    const Row rows[] = {
        {r3, r1, P("s1")},          {P("L3"), P("s1"), P("L2")},
        {P("L4"), P("L2"), P("s2")}, {r4, P("s2"), P("s3")},
        {r1, P("s3"), P("s4")},      {P("L1"), P("s4"), P("w2")},
        {P("L3"), P("w2"), P("w1")}, {r3, P("w1"), P("L1")},
        {r1, P("L1"), P("p2")},      {r4, P("p2"), P("p1")},
        {P("L4"), P("p1"), r2},
        {r2, r4, P("S1")},           {P("L2"), P("S1"), P("L3")},
        {P("L1"), P("L3"), P("S2")}, {r1, P("S2"), P("S3")},
        {r4, P("S3"), P("S4")},      {P("L4"), P("S4"), P("W2")},
        {P("L2"), P("W2"), P("W1")}, {r2, P("W1"), P("L4")},
        {r4, P("L4"), P("P2")},      {r1, P("P2"), P("P1")},
        {P("L1"), P("P1"), r3},
    };
    for (const Row& r : rows)
        t << "X over=" << r.over << " under=" << r.in << ">" << r.out << " sign=+\n";
}

std::string b_text() {
    std::ostringstream t;
    t << "kind tangle\narc R1 K1\narc R2 K1\narc R3 K2\narc R4 K2\n";
    emit_b_box(t, "", "R1", "R2", "R3", "R4", "K1", "K2");
    t << "boundary R1.h,R2.t,R3.t,R4.h\n";
    return t.str();
}

// ---- structural edits used by the family assemblies ----

void add_prefix(SpineDiagram& d, const std::string& pre) {
    std::map<std::string, ArcLabel> labels;
    for (auto& n : d.arc_names) n = pre + n;
    for (auto& [n, l] : d.labels) labels[pre + n] = l;
    d.labels = std::move(labels);
    for (auto& c : d.crossings) {
        c.over = pre + c.over;
        c.under_in = pre + c.under_in;
        c.under_out = pre + c.under_out;
    }
    for (auto& v : d.vertices)
        for (auto& e : v.ends) e.arc = pre + e.arc;
    for (auto& e : d.boundary) e.arc = pre + e.arc;
}

// Joins x's free tail to y's free head; the combined arc keeps the name x.
void splice(SpineDiagram& d, const std::string& x, const std::string& y) {
    std::erase(d.boundary, ArcEnd{x, false});
    std::erase(d.boundary, ArcEnd{y, true});
    std::erase(d.arc_names, y);
    d.labels.erase(y);
    for (auto& c : d.crossings) {
        if (c.over == y) c.over = x;
        if (c.under_in == y) c.under_in = x;
        if (c.under_out == y) c.under_out = x;
    }
    for (auto& e : d.boundary)
        if (e.arc == y) e.arc = x;
}

// Relabels a closed-up diagram: the loop reached from start_arc (following
// under-strand continuations) becomes K1, the isthmus arcs Isthmus, and the
// rest K2.
void relabel_loops(SpineDiagram& d, const std::string& start_arc,
                   const std::set<std::string>& isthmus_arcs) {
    std::map<std::string, std::string> next;
    for (const auto& c : d.crossings) next[c.under_in] = c.under_out;
    std::set<std::string> loop;
    std::string cur = start_arc;
    while (loop.insert(cur).second) {
        auto it = next.find(cur);
        if (it == next.end()) break;
        cur = it->second;
    }
    for (const auto& n : d.arc_names) {
        if (isthmus_arcs.count(n))
            d.labels[n] = ArcLabel::Isthmus;
        else
            d.labels[n] = loop.count(n) ? ArcLabel::K1 : ArcLabel::K2;
    }
}

// ---- families ----

std::string gamma1_text(int p) {
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

// Two closed-up copies of O(p) joined by a bare isthmus.
SpineDiagram gamma2(int p) {
    SpineDiagram out;
    out.kind = DiagramKind::Handcuff;
    std::string exit = o_exit_arc(p);
    for (const char* pre : {"x", "y"}) {
        SpineDiagram copy = parse_diagram(o_text(p, false));
        add_prefix(copy, pre);
        splice(copy, pre + std::string("B"), pre + std::string("Bp"));
        ArcLabel lab = *pre == 'x' ? ArcLabel::K1 : ArcLabel::K2;
        for (const auto& n : copy.arc_names) {
            out.arc_names.push_back(n);
            out.labels[n] = lab;
        }
        out.crossings.insert(out.crossings.end(), copy.crossings.begin(),
                             copy.crossings.end());
    }
    out.arc_names.push_back("i1");
    out.labels["i1"] = ArcLabel::Isthmus;
    out.vertices.push_back(
        {{ArcEnd{"xA", true}, ArcEnd{"x" + exit, false}, ArcEnd{"i1", true}}, 2});
    out.vertices.push_back(
        {{ArcEnd{"yA", true}, ArcEnd{"y" + exit, false}, ArcEnd{"i1", false}}, 2});
    return out;
}

// Doubled O(p) closed into two parallel circles (each boundary curve of the
// band follows its own side through the lower closure), with the isthmus
// spiralling under the lower closure arcs and joining the circles at the top.
SpineDiagram gamma3(int p) {
    SpineDiagram d = band_double(parse_diagram(o_text(p, true)));
    std::string exit = o_exit_arc(p);
    splice(d, "Br", "Bpr");
    splice(d, "Bl", "Bpl");
    d.kind = DiagramKind::Handcuff;
    d.boundary.clear();
    std::set<std::string> spiral;
    for (int i = 0; i <= p; ++i) {
        std::string s = "s" + std::to_string(i);
        spiral.insert(s);
        d.arc_names.push_back(s);
    }
    for (int i = 0; i < p; ++i)
        d.crossings.push_back({i % 2 == 0 ? "Bl" : "Br", "s" + std::to_string(i),
                               "s" + std::to_string(i + 1), +1});
    d.vertices.push_back(
        {{ArcEnd{"Ar", true}, ArcEnd{exit + "r", false}, ArcEnd{"s0", true}}, 2});
    d.vertices.push_back({{ArcEnd{"Al", true}, ArcEnd{exit + "l", false},
                           ArcEnd{"s" + std::to_string(p), false}},
                          2});
    relabel_loops(d, "Ar", spiral);
    return d;
}

// Chain of q clasp boxes closed into two parallel circles.
std::string gamma4_text(int q) {
    std::ostringstream t;
    t << "kind handcuff\narc i0 isthmus\n";
    for (int i = 0; i <= q; ++i) t << "arc t" << i << " K1\narc u" << i << " K2\n";
    for (int k = 1; k <= q; ++k) {
        auto conn = [](const char* base, int i) {
            return std::string(base) + std::to_string(i);
        };
        emit_b_box(t, "b" + std::to_string(k), conn("t", k - 1), conn("t", k),
                   conn("u", k), conn("u", k - 1), "K1", "K2");
    }
    t << "V ends=t0.h,t" << q << ".t,i0.h isthmus=i0\n";
    t << "V ends=u0.h,u" << q << ".t,i0.t isthmus=i0\n";
    return t.str();
}

}  // namespace

const char* to_string(TangleName n) {
    switch (n) {
        case TangleName::E: return "E";
        case TangleName::O: return "O";
        case TangleName::Obar: return "Obar";
        case TangleName::B: return "B";
    }
    return "?";
}

const char* to_string(FamilyName n) {
    switch (n) {
        case FamilyName::Gamma1: return "gamma1";
        case FamilyName::Gamma2: return "gamma2";
        case FamilyName::Gamma3: return "gamma3";
        case FamilyName::Gamma4: return "gamma4";
    }
    return "?";
}

TangleName parse_tangle_name(const std::string& s) {
    if (s == "E") return TangleName::E;
    if (s == "O") return TangleName::O;
    if (s == "Obar") return TangleName::Obar;
    if (s == "B") return TangleName::B;
    throw std::invalid_argument("unknown tangle name: " + s);
}

FamilyName parse_family_name(const std::string& s) {
    if (s == "gamma1" || s == "Gamma1") return FamilyName::Gamma1;
    if (s == "gamma2" || s == "Gamma2") return FamilyName::Gamma2;
    if (s == "gamma3" || s == "Gamma3") return FamilyName::Gamma3;
    if (s == "gamma4" || s == "Gamma4") return FamilyName::Gamma4;
    throw std::invalid_argument("unknown family name: " + s);
}

SpineDiagram build_tangle(TangleName name, int q) {
    if (name != TangleName::B)
        need(q >= 1 && q % 2 == 1, "tangle parameter must be odd and >= 1");
    switch (name) {
        case TangleName::E: return parse_diagram(spiral_text(q));
        case TangleName::O: return parse_diagram(o_text(q, false));
        case TangleName::Obar: return band_double(parse_diagram(o_text(q, true)));
        case TangleName::B: return parse_diagram(b_text());
    }
    throw std::invalid_argument("unknown tangle");
}

SpineDiagram build_family(FamilyName name, int parameter) {
    if (name == FamilyName::Gamma4)
        need(parameter >= 1, "gamma4 takes any q >= 1");
    else
        need(odd_prime(parameter), "family parameter must be an odd prime");
    switch (name) {
        case FamilyName::Gamma1: return parse_diagram(gamma1_text(parameter));
        case FamilyName::Gamma2: return gamma2(parameter);
        case FamilyName::Gamma3: return gamma3(parameter);
        case FamilyName::Gamma4: return parse_diagram(gamma4_text(parameter));
    }
    throw std::invalid_argument("unknown family");
}

SpineDiagram band_double(const SpineDiagram& t) {
    need(t.kind == DiagramKind::Tangle, "band_double needs a tangle");
    need(t.vertices.empty(), "band_double does not support vertices");
    SpineDiagram out;
    out.kind = DiagramKind::Tangle;
    for (const auto& n : t.arc_names) {
        out.arc_names.push_back(n + "r");
        out.labels[n + "r"] = ArcLabel::K1;
        out.arc_names.push_back(n + "l");
        out.labels[n + "l"] = ArcLabel::K2;
    }
    int j = 0;
    for (const auto& c : t.crossings) {
        std::string mr = "m" + std::to_string(j) + "r";
        std::string ml = "m" + std::to_string(j) + "l";
        ++j;
        out.arc_names.push_back(mr);
        out.labels[mr] = ArcLabel::K1;
        out.arc_names.push_back(ml);
        out.labels[ml] = ArcLabel::K2;
        out.crossings.push_back({c.over + "r", c.under_in + "r", mr, c.sign});
        out.crossings.push_back({c.over + "l", mr, c.under_out + "r", c.sign});
        out.crossings.push_back({c.over + "r", c.under_in + "l", ml, c.sign});
        out.crossings.push_back({c.over + "l", ml, c.under_out + "l", c.sign});
    }
    for (const auto& e : t.boundary) {
        out.boundary.push_back({e.arc + "r", e.head});
        out.boundary.push_back({e.arc + "l", e.head});
    }
    return out;
}

SpineDiagram lambert_diagram(int p) {
    need(odd_prime(p), "lambert_diagram takes an odd prime");
    return parse_diagram(gamma1_text(p));
}

GroupPresentation kinoshita_presentation() {
    return {3, {parse_word("x1 x2 x1^-1 x3 x1 x3^-1 x2 x3 x2^-1", 3)}};
}

HandlebodyPattern cochran_orr_pattern() {
    return HandlebodyPattern{
        FreeWord::identity(2),
        LinkPattern(parse_word("t1 t2 t1^-1 t2^-1 t1"), parse_word("t2"))};
}

}  // namespace handleknot
