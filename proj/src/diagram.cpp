#include "handleknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace handleknot {

namespace {

std::string kind_word(DiagramKind k) {
    switch (k) {
        case DiagramKind::Handcuff: return "handcuff";
        case DiagramKind::Link: return "link";
        case DiagramKind::Knot: return "knot";
        default: return "tangle";
    }
}

std::string label_word(ArcLabel l) {
    switch (l) {
        case ArcLabel::K1: return "K1";
        case ArcLabel::K2: return "K2";
        default: return "isthmus";
    }
}

std::string end_word(const ArcEnd& e) { return e.arc + (e.head ? ".h" : ".t"); }

[[noreturn]] void fail(int line, const std::string& msg) {
    throw DiagramError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

// key=value field out of a whitespace token
std::string field(const std::string& tok, const std::string& key, int line) {
    if (tok.rfind(key + "=", 0) != 0) fail(line, "expected " + key + "=...");
    return tok.substr(key.size() + 1);
}

struct RawVertex {
    std::vector<std::string> end_tokens;
    std::string isthmus_arc;  // empty if absent
    int line;
};

// Tracks which arc-ends have been used while resolving a file.
class EndUse {
public:
    bool used(const ArcEnd& e) const { return used_.count(e) > 0; }
    void consume(const ArcEnd& e, int line) {
        if (!used_.insert(e).second)
            fail(line, "arc-end multiply consumed (" + end_word(e) + ")");
    }

private:
    std::set<ArcEnd> used_;
};

}  // namespace

SpineDiagram parse_diagram(const std::string& text) {
    SpineDiagram d;
    bool saw_kind = false;
    std::vector<RawVertex> raw_vertices;
    std::vector<std::pair<std::string, int>> raw_boundary;  // token, line
    std::vector<int> crossing_lines;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        const std::string& head = tok[0];
        if (head == "kind") {
            if (tok.size() != 2) fail(lineno, "kind needs one value");
            if (tok[1] == "handcuff")
                d.kind = DiagramKind::Handcuff;
            else if (tok[1] == "link")
                d.kind = DiagramKind::Link;
            else if (tok[1] == "knot")
                d.kind = DiagramKind::Knot;
            else if (tok[1] == "tangle")
                d.kind = DiagramKind::Tangle;
            else
                fail(lineno, "unknown kind '" + tok[1] + "'");
            saw_kind = true;
        } else if (head == "arc") {
            if (tok.size() != 3) fail(lineno, "arc needs a name and a label");
            if (!valid_name(tok[1])) fail(lineno, "bad arc name '" + tok[1] + "'");
            if (d.labels.count(tok[1])) fail(lineno, "duplicate arc '" + tok[1] + "'");
            ArcLabel l;
            if (tok[2] == "K1")
                l = ArcLabel::K1;
            else if (tok[2] == "K2")
                l = ArcLabel::K2;
            else if (tok[2] == "isthmus")
                l = ArcLabel::Isthmus;
            else
                fail(lineno, "unknown label '" + tok[2] + "'");
            d.arc_names.push_back(tok[1]);
            d.labels[tok[1]] = l;
        } else if (head == "X") {
            if (tok.size() != 4) fail(lineno, "X needs over=, under=, sign=");
            Crossing c;
            c.over = field(tok[1], "over", lineno);
            std::string und = field(tok[2], "under", lineno);
            auto gt = und.find('>');
            if (gt == std::string::npos) fail(lineno, "under needs the form a>b");
            c.under_in = und.substr(0, gt);
            c.under_out = und.substr(gt + 1);
            std::string sg = field(tok[3], "sign", lineno);
            if (sg == "+")
                c.sign = +1;
            else if (sg == "-")
                c.sign = -1;
            else
                fail(lineno, "sign must be + or -");
            for (const std::string* a : {&c.over, &c.under_in, &c.under_out})
                if (!d.labels.count(*a)) fail(lineno, "unknown arc '" + *a + "'");
            d.crossings.push_back(c);
            crossing_lines.push_back(lineno);
        } else if (head == "V") {
            if (tok.size() < 2 || tok.size() > 3) fail(lineno, "V needs ends= [isthmus=]");
            RawVertex rv;
            rv.end_tokens = split_list(field(tok[1], "ends", lineno));
            if (rv.end_tokens.size() != 3) fail(lineno, "vertex needs three ends");
            if (tok.size() == 3) rv.isthmus_arc = field(tok[2], "isthmus", lineno);
            rv.line = lineno;
            raw_vertices.push_back(rv);
        } else if (head == "boundary") {
            if (tok.size() != 2) fail(lineno, "boundary needs a comma list");
            for (const std::string& t : split_list(tok[1]))
                raw_boundary.emplace_back(t, lineno);
        } else {
            fail(lineno, "unknown directive '" + head + "'");
        }
    }
    if (!saw_kind) throw DiagramError("missing kind line");

    // Resolve arc-end usage: crossings first, then vertex and boundary tokens
    // in file order. A bare arc name takes its free head, else its free tail.
    EndUse use;
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        use.consume({d.crossings[i].under_in, false}, crossing_lines[i]);
        use.consume({d.crossings[i].under_out, true}, crossing_lines[i]);
    }
    auto resolve = [&](const std::string& t, int line) -> ArcEnd {
        std::string name = t;
        int which = -1;  // -1 bare, 0 head, 1 tail
        if (t.size() > 2 && t[t.size() - 2] == '.') {
            char c = t.back();
            if (c != 'h' && c != 't') fail(line, "bad end token '" + t + "'");
            which = (c == 'h') ? 0 : 1;
            name = t.substr(0, t.size() - 2);
        }
        if (!d.labels.count(name)) fail(line, "unknown arc '" + name + "'");
        ArcEnd e{name, true};
        if (which == -1) {
            if (use.used(e)) e.head = false;
        } else {
            e.head = (which == 0);
        }
        use.consume(e, line);
        return e;
    };
    for (const RawVertex& rv : raw_vertices) {
        SpineVertex v;
        for (int i = 0; i < 3; ++i) v.ends[i] = resolve(rv.end_tokens[i], rv.line);
        if (!rv.isthmus_arc.empty()) {
            for (int i = 0; i < 3; ++i)
                if (v.ends[i].arc == rv.isthmus_arc) v.isthmus_slot = i;
            if (v.isthmus_slot < 0)
                fail(rv.line, "isthmus arc '" + rv.isthmus_arc + "' not among the ends");
        }
        d.vertices.push_back(v);
    }
    for (const auto& [t, ln] : raw_boundary) d.boundary.push_back(resolve(t, ln));

    std::vector<std::string> bad = validate(d);
    if (!bad.empty()) throw DiagramError(bad.front());
    return d;
}

std::string format_diagram(const SpineDiagram& d) {
    std::ostringstream out;
    out << "kind " << kind_word(d.kind) << "\n";
    for (const std::string& a : d.arc_names)
        out << "arc " << a << " " << label_word(d.labels.at(a)) << "\n";
    for (const Crossing& c : d.crossings)
        out << "X over=" << c.over << " under=" << c.under_in << ">" << c.under_out
            << " sign=" << (c.sign > 0 ? "+" : "-") << "\n";
    for (const SpineVertex& v : d.vertices) {
        out << "V ends=" << end_word(v.ends[0]) << "," << end_word(v.ends[1]) << ","
            << end_word(v.ends[2]);
        if (v.isthmus_slot >= 0) out << " isthmus=" << v.ends[v.isthmus_slot].arc;
        out << "\n";
    }
    if (!d.boundary.empty()) {
        out << "boundary ";
        for (size_t i = 0; i < d.boundary.size(); ++i)
            out << (i ? "," : "") << end_word(d.boundary[i]);
        out << "\n";
    }
    return out.str();
}

namespace {

// Union-find over arc names with lexicographically least representatives.
class ArcUnion {
public:
    std::string find(const std::string& a) {
        auto it = parent_.find(a);
        if (it == parent_.end() || it->second == a) return a;
        std::string r = find(it->second);
        parent_[a] = r;
        return r;
    }
    void unite(const std::string& a, const std::string& b) {
        std::string ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (rb < ra) std::swap(ra, rb);
        parent_[rb] = ra;
    }

private:
    std::map<std::string, std::string> parent_;
};

}  // namespace

std::vector<std::string> validate(const SpineDiagram& d) {
    std::vector<std::string> out;
    auto known = [&](const std::string& a) { return d.labels.count(a) > 0; };
    for (const Crossing& c : d.crossings)
        for (const std::string* a : {&c.over, &c.under_in, &c.under_out})
            if (!known(*a)) out.push_back("unknown arc '" + *a + "'");
    for (const SpineVertex& v : d.vertices)
        for (const ArcEnd& e : v.ends)
            if (!known(e.arc)) out.push_back("unknown arc '" + e.arc + "'");
    for (const ArcEnd& e : d.boundary)
        if (!known(e.arc)) out.push_back("unknown arc '" + e.arc + "'");
    if (!out.empty()) return out;

    std::map<ArcEnd, int> uses;
    for (const Crossing& c : d.crossings) {
        ++uses[{c.under_in, false}];
        ++uses[{c.under_out, true}];
    }
    for (const SpineVertex& v : d.vertices)
        for (const ArcEnd& e : v.ends) ++uses[e];
    for (const ArcEnd& e : d.boundary) ++uses[e];
    for (const auto& [e, n] : uses)
        if (n > 1) out.push_back("arc-end multiply consumed (" + end_word(e) + ")");
    for (const std::string& a : d.arc_names) {
        int n = uses.count({a, true}) + uses.count({a, false});
        if (n == 1) out.push_back("dangling arc-end (" + a + ")");
    }

    for (const Crossing& c : d.crossings)
        if (d.labels.at(c.under_in) != d.labels.at(c.under_out))
            out.push_back("component label mismatch at crossing under " + c.under_in +
                          ">" + c.under_out);

    if (d.kind != DiagramKind::Tangle && !d.boundary.empty())
        out.push_back("boundary ends on a non-tangle diagram");
    if (d.kind == DiagramKind::Knot || d.kind == DiagramKind::Link)
        if (!d.vertices.empty()) out.push_back(kind_word(d.kind) + " kind forbids vertices");
    if (d.kind == DiagramKind::Link)
        for (const std::string& a : d.arc_names)
            if (d.labels.at(a) == ArcLabel::Isthmus) {
                out.push_back("link kind forbids isthmus arcs");
                break;
            }
    if (d.kind == DiagramKind::Knot) {
        for (const std::string& a : d.arc_names)
            if (d.labels.at(a) != d.labels.at(d.arc_names.front())) {
                out.push_back("knot arcs must share one label");
                break;
            }
    }

    if (d.kind == DiagramKind::Handcuff) {
        if (d.vertices.size() != 2) {
            out.push_back("handcuff kind requires exactly 2 vertices");
            return out;
        }
        std::vector<ArcLabel> vlabel;
        for (const SpineVertex& v : d.vertices) {
            if (v.isthmus_slot < 0 || v.isthmus_slot > 2 ||
                d.labels.at(v.ends[v.isthmus_slot].arc) != ArcLabel::Isthmus) {
                out.push_back("vertex isthmus designation invalid");
                continue;
            }
            std::vector<ArcLabel> other;
            for (int i = 0; i < 3; ++i)
                if (i != v.isthmus_slot) other.push_back(d.labels.at(v.ends[i].arc));
            if (other[0] != other[1] || other[0] == ArcLabel::Isthmus)
                out.push_back("vertex knot ends must share a component");
            else
                vlabel.push_back(other[0]);
        }
        if (vlabel.size() == 2 && vlabel[0] == vlabel[1])
            out.push_back("vertices must attach K1 and K2");
    }

    // component cycle structure (closed kinds only)
    if (out.empty() && d.kind != DiagramKind::Tangle) {
        auto check_component = [&](ArcLabel want, const std::string& what) {
            std::vector<std::string> arcs;
            for (const std::string& a : d.arc_names)
                if (d.labels.at(a) == want) arcs.push_back(a);
            if (arcs.empty()) {
                out.push_back("missing " + what + " arcs");
                return;
            }
            ArcUnion u;
            for (const Crossing& c : d.crossings)
                if (d.labels.at(c.under_in) == want) u.unite(c.under_in, c.under_out);
            for (const SpineVertex& v : d.vertices) {
                std::vector<std::string> pair;
                for (int i = 0; i < 3; ++i)
                    if (i != v.isthmus_slot && d.labels.at(v.ends[i].arc) == want)
                        pair.push_back(v.ends[i].arc);
                if (pair.size() == 2) u.unite(pair[0], pair[1]);
            }
            std::set<std::string> roots;
            for (const std::string& a : arcs) roots.insert(u.find(a));
            if (roots.size() != 1)
                out.push_back(what + " arcs must form one " +
                              (want == ArcLabel::Isthmus ? "path" : "closed cycle"));
        };
        if (d.kind == DiagramKind::Handcuff) {
            check_component(ArcLabel::K1, "K1");
            check_component(ArcLabel::K2, "K2");
            check_component(ArcLabel::Isthmus, "isthmus");
        } else if (d.kind == DiagramKind::Link) {
            check_component(ArcLabel::K1, "K1");
            check_component(ArcLabel::K2, "K2");
        } else {
            check_component(d.labels.at(d.arc_names.front()), "knot");
        }
    }
    return out;
}

GroupPresentation wirtinger(const SpineDiagram& d) {
    if (d.kind == DiagramKind::Tangle)
        throw DiagramError("wirtinger: tangle diagrams have no closed-up group");
    int n = static_cast<int>(d.arc_names.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[d.arc_names[i]] = i + 1;
    std::vector<FreeWord> rel;
    for (const Crossing& c : d.crossings) {
        int b = idx.at(c.over), a = idx.at(c.under_in), o = idx.at(c.under_out);
        if (c.sign > 0)
            rel.push_back(FreeWord(n, {b, a, -b, -o}));
        else
            rel.push_back(FreeWord(n, {-b, a, b, -o}));
    }
    for (const SpineVertex& v : d.vertices) {
        int g0 = idx.at(v.ends[0].arc), g1 = idx.at(v.ends[1].arc),
            g2 = idx.at(v.ends[2].arc);
        rel.push_back(FreeWord(n, {g0, -g1, g2}));
    }
    if (!rel.empty()) rel.pop_back();  // Wirtinger redundancy
    return {n, rel};
}

std::vector<CycleAssignment> enumerate_cycles(const SpineDiagram& d, int k) {
    if (d.kind != DiagramKind::Handcuff && d.kind != DiagramKind::Link)
        throw DiagramError("enumerate_cycles: handcuff or link diagram required");
    if (k < 2) throw DiagramError("enumerate_cycles: modulus must be at least 2");
    std::vector<CycleAssignment> out;
    out.reserve(static_cast<size_t>(k) * k);
    for (int z1 = 0; z1 < k; ++z1)
        for (int z2 = 0; z2 < k; ++z2) out.push_back({k, z1, z2});
    return out;
}

SpineDiagram delete_isthmus(const SpineDiagram& d) {
    if (d.kind != DiagramKind::Handcuff)
        throw DiagramError("delete_isthmus: handcuff diagram required");
    std::vector<std::string> bad = validate(d);
    if (!bad.empty()) throw DiagramError("delete_isthmus: " + bad.front());
    auto isth = [&](const std::string& a) {
        return d.labels.at(a) == ArcLabel::Isthmus;
    };
    ArcUnion u;
    for (const Crossing& c : d.crossings)
        if (isth(c.over) && !isth(c.under_in)) u.unite(c.under_in, c.under_out);
    for (const SpineVertex& v : d.vertices) {
        std::vector<std::string> pair;
        for (int i = 0; i < 3; ++i)
            if (i != v.isthmus_slot) pair.push_back(v.ends[i].arc);
        u.unite(pair[0], pair[1]);
    }
    SpineDiagram out;
    out.kind = DiagramKind::Link;
    for (const std::string& a : d.arc_names) {
        if (isth(a) || u.find(a) != a) continue;
        out.arc_names.push_back(a);
        out.labels[a] = d.labels.at(a);
    }
    for (const Crossing& c : d.crossings) {
        if (isth(c.over) || isth(c.under_in)) continue;
        out.crossings.push_back(
            {u.find(c.over), u.find(c.under_in), u.find(c.under_out), c.sign});
    }
    return out;
}

}  // namespace handleknot
