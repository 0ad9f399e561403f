#pragma once

#include <stdexcept>
#include <string>

#include "handleknot/freegroup.hpp"

namespace handleknot {

struct PatternError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// How a 2-component link sits inside a genus-2 handlebody, one conjugacy
// word per component in the handlebody's free group F(t1,t2).  The
// exponent-sum matrix of (w1,w2) must be unimodular; that is a necessary
// condition for the pair to come from a spine, and it is all the
// constructor checks.
class LinkPattern {
public:
    LinkPattern(FreeWord w1, FreeWord w2);

    const FreeWord& w1() const { return w1_; }
    const FreeWord& w2() const { return w2_; }

    bool operator==(const LinkPattern&) const = default;

private:
    FreeWord w1_;
    FreeWord w2_;
};

// Link pattern plus the word w0 traced by the isthmus between the two
// component circles.
struct HandlebodyPattern {
    FreeWord w0;
    LinkPattern link;

    bool operator==(const HandlebodyPattern&) const = default;
};

enum class PatternTag { Trivial, NonTrivial, Obstructed, Inconclusive };

const char* to_string(PatternTag tag);

struct PatternVerdict {
    PatternTag tag;
    std::string evidence;
};

// Trivial exactly when both component words are primitive.
PatternVerdict classify_link_pattern(const LinkPattern& lp);

// Trivial exactly when (w1, w0*w2*w0^-1) is a base pair of F(t1,t2).
PatternVerdict classify_handlebody_pattern(const HandlebodyPattern& hp);

// True when the reduced isthmus word is t1^n t2^m (n, m may be zero).
bool isthmus_word_test(const FreeWord& w0);

// Conjugation-rigidity certificate for a link pattern.  Obstructed when a
// power-conjugation t_i^n w_i t_i^-n of one component reduces to
// t_i^k z t_i^-h with k,h >= 1 and z bracketed by the other generator, the
// partner component reduces (under the same treatment with the roles of the
// generators exchanged) to a pure power or to such a sandwich, and the pair
// is non-trivial.  Sound but not complete: Inconclusive proves nothing.
// Takes raw words rather than a LinkPattern because the shape analysis does
// not need the unimodularity invariant.
PatternVerdict rigid_obstruction(const FreeWord& w1, const FreeWord& w2);

// File format: one "wK: <word>" line per word, K in {0,1,2}; blank lines
// and '#' comments ignored; the w0 line may be omitted (identity).
HandlebodyPattern parse_pattern(const std::string& text);
std::string format_pattern(const HandlebodyPattern& hp);

}  // namespace handleknot
