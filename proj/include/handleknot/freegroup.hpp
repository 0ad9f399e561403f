#pragma once

#include <compare>
#include <string>
#include <vector>

namespace handleknot {

// Words in a finitely generated free group, stored freely reduced.
// A letter is +g for the g-th generator (1-based) or -g for its inverse.
class FreeWord {
public:
    FreeWord() = default;
    FreeWord(int rank, std::vector<int> letters);

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    FreeWord operator*(const FreeWord& rhs) const;
    FreeWord inverse() const;
    // w * this * w^{-1}
    FreeWord conjugated_by(const FreeWord& w) const;

    bool operator==(const FreeWord&) const = default;
    auto operator<=>(const FreeWord&) const = default;

    static FreeWord identity(int rank) { return FreeWord(rank, {}); }
    static FreeWord generator(int rank, int g, int exp = 1);
    static FreeWord power(int rank, int g, long e);

private:
    int rank_ = 2;
    std::vector<int> letters_;
};

FreeWord reduce(int rank, const std::vector<int>& letters);

struct Syllable {
    int gen;
    long exp;
    bool operator==(const Syllable&) const = default;
};

// Run-length view t_{g1}^{e1} t_{g2}^{e2} ... of the reduced word.
std::vector<Syllable> syllables(const FreeWord& w);

// Strips matching first/last letters; if conj is non-null it receives c with
// w == c * result * c^{-1}.
FreeWord cyclically_reduce(const FreeWord& w, FreeWord* conj = nullptr);

// Canonical representative of the conjugacy class: cyclically reduce, then
// take the lexicographically least rotation of the letter sequence, letters
// ordered by generator index with the positive letter before the inverse.
std::vector<Syllable> cyclic_normal_form(const FreeWord& w);

std::string format_syllables(const std::vector<Syllable>& s);

// Exponent-sum vector, one entry per generator.
std::vector<long> abelianize(const FreeWord& w);

enum class SignFilter { PassesNecessaryCondition, NotPrimitive };

// Quick necessary condition for primitivity in rank 2.  NotPrimitive when the
// cyclic normal form alternates between both generators and either
// generator's exponents carry mixed signs, or when the exponent sums have a
// common divisor > 1 (or are both zero).
SignFilter nielsen_sign_filter(const FreeWord& w);

// Whitehead reduction; exact for rank 2.
bool is_primitive(const FreeWord& w);

// Does {u, v} generate the rank-2 free group?  Decided by Nielsen
// transformations on the pair.
bool is_base_pair(const FreeWord& u, const FreeWord& v);

// Text form: whitespace-separated tokens "t3", "t1^-2"; "x" is accepted as a
// synonym prefix for "t".  The empty string is the identity.
FreeWord parse_word(const std::string& text, int rank = 2);
std::string format_word(const FreeWord& w);

}  // namespace handleknot
