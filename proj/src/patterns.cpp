#include "handleknot/patterns.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

namespace handleknot {
namespace {

long det2(const FreeWord& w1, const FreeWord& w2) {
    auto a = abelianize(w1);
    auto b = abelianize(w2);
    return a[0] * b[1] - a[1] * b[0];
}

void require_rank2(const FreeWord& w, const char* name) {
    if (w.rank() != 2)
        throw PatternError(std::string(name) + ": pattern words live in rank 2");
}

}  // namespace

LinkPattern::LinkPattern(FreeWord w1, FreeWord w2)
    : w1_(std::move(w1)), w2_(std::move(w2)) {
    require_rank2(w1_, "w1");
    require_rank2(w2_, "w2");
    long d = det2(w1_, w2_);
    if (d != 1 && d != -1) {
        std::ostringstream os;
        os << "exponent-sum matrix of (" << format_word(w1_) << ", "
           << format_word(w2_) << ") has determinant " << d << ", need +-1";
        throw PatternError(os.str());
    }
}

const char* to_string(PatternTag tag) {
    switch (tag) {
        case PatternTag::Trivial: return "Trivial";
        case PatternTag::NonTrivial: return "NonTrivial";
        case PatternTag::Obstructed: return "Obstructed";
        case PatternTag::Inconclusive: return "Inconclusive";
    }
    return "?";
}

PatternVerdict classify_link_pattern(const LinkPattern& lp) {
    bool p1 = is_primitive(lp.w1());
    bool p2 = is_primitive(lp.w2());
    if (p1 && p2)
        return {PatternTag::Trivial, "both component words are primitive"};
    std::string which = !p1 ? "w1" : "w2";
    return {PatternTag::NonTrivial,
            which + " = " + format_word(!p1 ? lp.w1() : lp.w2()) +
                " is not primitive"};
}

PatternVerdict classify_handlebody_pattern(const HandlebodyPattern& hp) {
    FreeWord moved = hp.link.w2().conjugated_by(hp.w0);
    if (is_base_pair(hp.link.w1(), moved))
        return {PatternTag::Trivial,
                "(w1, w0 w2 w0^-1) = (" + format_word(hp.link.w1()) + ", " +
                    format_word(moved) + ") is a base pair"};
    return {PatternTag::NonTrivial,
            "(w1, w0 w2 w0^-1) = (" + format_word(hp.link.w1()) + ", " +
                format_word(moved) + ") is not a base pair"};
}

bool isthmus_word_test(const FreeWord& w0) {
    auto syl = syllables(w0);
    if (syl.size() > 2) return false;
    if (syl.size() == 2) return syl[0].gen == 1 && syl[1].gen == 2;
    return true;  // a pure power or the identity
}

namespace {

// t_g^n w t_g^-n reduced to t_g^head core t_g^-tail with head, tail >= 1
// and core starting/ending in the other generator.  Exists iff w uses the
// other generator at all; n is the least witness.
struct Sandwich {
    long n, head, tail;
    FreeWord core;
};

std::optional<Sandwich> sandwich_form(const FreeWord& w, int g) {
    auto syl = syllables(w);
    std::size_t lo = 0, hi = syl.size();
    long alpha = 0, beta = 0;
    if (lo < hi && syl[lo].gen == g) alpha = syl[lo++].exp;
    if (lo < hi && syl[hi - 1].gen == g) beta = syl[--hi].exp;
    if (lo >= hi) return std::nullopt;  // pure power of t_g (or identity)
    std::vector<int> core_letters;
    for (std::size_t i = lo; i < hi; ++i)
        for (long k = 0; k < std::labs(syl[i].exp); ++k)
            core_letters.push_back(syl[i].exp > 0 ? syl[i].gen : -syl[i].gen);
    long n = std::max({1 - alpha, beta + 1, long{1}});
    return Sandwich{n, n + alpha, n - beta, FreeWord(w.rank(), core_letters)};
}

bool pure_power_of(const FreeWord& w, int g) {
    auto syl = syllables(w);
    return syl.empty() || (syl.size() == 1 && syl[0].gen == g);
}

// Shape legs (a)+(b) for one orientation: active word conjugated by powers
// of t_act, partner by powers of the other generator.
std::optional<std::string> shape_evidence(const FreeWord& active,
                                          const FreeWord& partner, int act) {
    auto s = sandwich_form(active, act);
    if (!s) return std::nullopt;
    int part = 3 - act;
    std::ostringstream os;
    os << "t" << act << "^" << s->n << " (" << format_word(active) << ") t"
       << act << "^-" << s->n << " = t" << act << "^" << s->head << " ("
       << format_word(s->core) << ") t" << act << "^-" << s->tail << "; ";
    if (pure_power_of(partner, part)) {
        os << "partner is the pure power " << format_word(partner);
    } else {
        auto sp = sandwich_form(partner, part);
        os << "partner sandwiches as t" << part << "^" << sp->head << " ("
           << format_word(sp->core) << ") t" << part << "^-" << sp->tail
           << " under t" << part << "^" << sp->n;
    }
    return os.str();
}

}  // namespace

PatternVerdict rigid_obstruction(const FreeWord& w1, const FreeWord& w2) {
    require_rank2(w1, "w1");
    require_rank2(w2, "w2");
    auto shape = shape_evidence(w1, w2, 1);
    if (!shape) shape = shape_evidence(w2, w1, 2);
    if (!shape)
        return {PatternTag::Inconclusive,
                "both words are pure powers; no sandwiched form exists"};
    bool p1 = is_primitive(w1);
    bool p2 = is_primitive(w2);
    if (p1 && p2)
        return {PatternTag::Inconclusive,
                "pair is trivial (both words primitive); the sandwiched form "
                "alone proves nothing"};
    return {PatternTag::Obstructed,
            *shape + "; " + (!p1 ? "w1" : "w2") + " is not primitive"};
}

HandlebodyPattern parse_pattern(const std::string& text) {
    std::optional<FreeWord> w[3];
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t colon = line.find(':', start);
        std::string key = colon == std::string::npos
                              ? ""
                              : line.substr(start, colon - start);
        int idx = key == "w0" ? 0 : key == "w1" ? 1 : key == "w2" ? 2 : -1;
        if (idx < 0)
            throw PatternError("line " + std::to_string(lineno) +
                               ": expected \"w0:\", \"w1:\" or \"w2:\"");
        if (w[idx])
            throw PatternError("line " + std::to_string(lineno) +
                               ": duplicate " + key);
        try {
            w[idx] = parse_word(line.substr(colon + 1), 2);
        } catch (const std::exception& e) {
            throw PatternError("line " + std::to_string(lineno) + ": " +
                               e.what());
        }
    }
    if (!w[1] || !w[2]) throw PatternError("pattern needs w1: and w2: lines");
    return HandlebodyPattern{w[0] ? *w[0] : FreeWord::identity(2),
                             LinkPattern(*w[1], *w[2])};
}

std::string format_pattern(const HandlebodyPattern& hp) {
    std::string out;
    if (!hp.w0.is_identity()) out += "w0: " + format_word(hp.w0) + "\n";
    out += "w1: " + format_word(hp.link.w1()) + "\n";
    out += "w2: " + format_word(hp.link.w2()) + "\n";
    return out;
}

}  // namespace handleknot
