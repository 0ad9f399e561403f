#include "handleknot/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace handleknot {

namespace {

void append_reduced(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter)
        out.pop_back();
    else
        out.push_back(letter);
}

void check_rank(int rank, const std::vector<int>& letters) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    for (int l : letters) {
        int g = std::abs(l);
        if (g < 1 || g > rank)
            throw std::invalid_argument("generator index out of range");
    }
}

}  // namespace

FreeWord::FreeWord(int rank, std::vector<int> letters) : rank_(rank) {
    check_rank(rank, letters);
    letters_.reserve(letters.size());
    for (int l : letters) append_reduced(letters_, l);
}

FreeWord reduce(int rank, const std::vector<int>& letters) {
    return FreeWord(rank, letters);
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    std::vector<int> out = letters_;
    out.reserve(out.size() + rhs.letters_.size());
    for (int l : rhs.letters_) append_reduced(out, l);
    FreeWord w;
    w.rank_ = std::max(rank_, rhs.rank_);
    w.letters_ = std::move(out);
    return w;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.rank_ = rank_;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(-*it);
    return w;
}

FreeWord FreeWord::conjugated_by(const FreeWord& w) const {
    return w * (*this) * w.inverse();
}

FreeWord FreeWord::generator(int rank, int g, int exp) {
    if (exp != 1 && exp != -1) throw std::invalid_argument("exponent must be +-1");
    return FreeWord(rank, {exp > 0 ? g : -g});
}

FreeWord FreeWord::power(int rank, int g, long e) {
    std::vector<int> ls(static_cast<std::size_t>(e < 0 ? -e : e), e < 0 ? -g : g);
    return FreeWord(rank, std::move(ls));
}

std::vector<Syllable> syllables(const FreeWord& w) {
    std::vector<Syllable> out;
    for (int l : w.letters()) {
        int g = std::abs(l);
        long e = l > 0 ? 1 : -1;
        if (!out.empty() && out.back().gen == g)
            out.back().exp += e;
        else
            out.push_back({g, e});
    }
    return out;
}

FreeWord cyclically_reduce(const FreeWord& w, FreeWord* conj) {
    std::vector<int> ls = w.letters();
    std::vector<int> pre;
    while (ls.size() >= 2 && ls.front() == -ls.back()) {
        pre.push_back(ls.front());
        ls.erase(ls.begin());
        ls.pop_back();
    }
    if (conj) *conj = FreeWord(w.rank(), pre);
    return FreeWord(w.rank(), std::move(ls));
}

namespace {

// Order used for canonical rotations: t1 < t1^-1 < t2 < t2^-1 < ...
int letter_key(int l) { return 2 * std::abs(l) + (l < 0 ? 1 : 0); }

}  // namespace

std::vector<Syllable> cyclic_normal_form(const FreeWord& w) {
    const std::vector<int> ls = cyclically_reduce(w).letters();
    const std::size_t n = ls.size();
    if (n == 0) return {};
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            int a = letter_key(ls[(r + i) % n]);
            int b = letter_key(ls[(best + i) % n]);
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }
    std::vector<int> rot(n);
    for (std::size_t i = 0; i < n; ++i) rot[i] = ls[(best + i) % n];
    return syllables(FreeWord(w.rank(), std::move(rot)));
}

std::string format_syllables(const std::vector<Syllable>& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& syl : s) {
        if (!first) os << ' ';
        first = false;
        os << 't' << syl.gen;
        if (syl.exp != 1) os << '^' << syl.exp;
    }
    return os.str();
}

std::vector<long> abelianize(const FreeWord& w) {
    std::vector<long> sums(static_cast<std::size_t>(w.rank()), 0);
    for (int l : w.letters()) sums[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
    return sums;
}

SignFilter nielsen_sign_filter(const FreeWord& w) {
    auto ab = abelianize(w);
    long g = 0;
    for (long v : ab) g = std::gcd(g, v);
    if (g != 1) return SignFilter::NotPrimitive;

    auto cnf = cyclic_normal_form(w);
    bool uses1 = false, uses2 = false;
    for (const auto& s : cnf) (s.gen == 1 ? uses1 : uses2) = true;
    if (uses1 && uses2) {
        for (int gen : {1, 2}) {
            bool pos = false, neg = false;
            for (const auto& s : cnf)
                if (s.gen == gen) (s.exp > 0 ? pos : neg) = true;
            if (pos && neg) return SignFilter::NotPrimitive;
        }
    }
    return SignFilter::PassesNecessaryCondition;
}

namespace {

// Elementary Whitehead automorphisms of the rank-2 free group, given by the
// images of (t1, t2).
struct Auto {
    FreeWord img1, img2;
};

FreeWord apply_auto(const Auto& a, const FreeWord& w) {
    FreeWord out = FreeWord::identity(2);
    for (int l : w.letters()) {
        const FreeWord& img = std::abs(l) == 1 ? a.img1 : a.img2;
        out = out * (l > 0 ? img : img.inverse());
    }
    return out;
}

const std::vector<Auto>& whitehead_autos() {
    static const std::vector<Auto> autos = [] {
        auto W = [](const char* u, const char* v) {
            return Auto{parse_word(u), parse_word(v)};
        };
        std::vector<Auto> as;
        as.push_back(W("t1^-1", "t2"));
        as.push_back(W("t1", "t2^-1"));
        as.push_back(W("t2", "t1"));
        for (const char* m : {"t1", "t1^-1"}) {
            FreeWord a = parse_word(m);
            as.push_back(Auto{parse_word("t1"), parse_word("t2") * a});
            as.push_back(Auto{parse_word("t1"), a.inverse() * parse_word("t2")});
            as.push_back(Auto{parse_word("t1"), a.inverse() * parse_word("t2") * a});
        }
        for (const char* m : {"t2", "t2^-1"}) {
            FreeWord a = parse_word(m);
            as.push_back(Auto{parse_word("t1") * a, parse_word("t2")});
            as.push_back(Auto{a.inverse() * parse_word("t1"), parse_word("t2")});
            as.push_back(Auto{a.inverse() * parse_word("t1") * a, parse_word("t2")});
        }
        return as;
    }();
    return autos;
}

std::size_t cyclic_length(const FreeWord& w) {
    return cyclically_reduce(w).length();
}

}  // namespace

bool is_primitive(const FreeWord& w) {
    if (w.rank() != 2) throw std::invalid_argument("is_primitive requires rank 2");
    FreeWord cur = cyclically_reduce(w);
    for (;;) {
        if (cur.length() == 1) return true;
        if (cur.length() == 0) return false;
        bool improved = false;
        for (const Auto& a : whitehead_autos()) {
            FreeWord img = cyclically_reduce(apply_auto(a, cur));
            if (img.length() < cur.length()) {
                cur = img;
                improved = true;
                break;
            }
        }
        if (!improved) return false;
    }
}

namespace {

using Pair = std::pair<std::vector<int>, std::vector<int>>;

Pair key_of(const FreeWord& u, const FreeWord& v) { return {u.letters(), v.letters()}; }

bool is_basis_form(const FreeWord& u, const FreeWord& v) {
    return u.length() == 1 && v.length() == 1 &&
           std::abs(u.letters()[0]) != std::abs(v.letters()[0]);
}

}  // namespace

bool is_base_pair(const FreeWord& u0, const FreeWord& v0) {
    if (u0.rank() != 2 || v0.rank() != 2)
        throw std::invalid_argument("is_base_pair requires rank 2");

    // Nielsen reduction: strict length drops via products, with free
    // swaps/inversions in between.  Same-length variants are explored as one
    // bounded frontier so ties cannot stall the reduction.
    Pair cur = key_of(u0, v0);
    const std::size_t kCap = 50000;
    for (;;) {
        std::size_t total = cur.first.size() + cur.second.size();
        if (total <= 2) {
            return is_basis_form(FreeWord(2, cur.first), FreeWord(2, cur.second));
        }
        std::set<Pair> seen = {cur};
        std::vector<Pair> queue = {cur};
        bool dropped = false;
        for (std::size_t qi = 0; qi < queue.size() && !dropped; ++qi) {
            const FreeWord a(2, queue[qi].first), b(2, queue[qi].second);
            for (int side = 0; side < 2 && !dropped; ++side) {
                const FreeWord& x = side == 0 ? a : b;  // component being replaced
                const FreeWord& y = side == 0 ? b : a;
                const FreeWord variants[] = {
                    x * y, x * y.inverse(), y * x, y.inverse() * x, x.inverse()};
                for (const FreeWord& w : variants) {
                    const FreeWord& na = side == 0 ? w : a;
                    const FreeWord& nb = side == 0 ? b : w;
                    std::size_t t = na.length() + nb.length();
                    if (t < total) {
                        cur = key_of(na, nb);
                        dropped = true;
                        break;
                    }
                    if (t == total && seen.size() < kCap) {
                        Pair k = key_of(na, nb);
                        if (seen.insert(k).second) queue.push_back(k);
                    }
                }
            }
            if (!dropped) {
                Pair k = key_of(b, a);
                if (seen.insert(k).second && seen.size() < kCap) queue.push_back(k);
            }
        }
        if (!dropped) {
            for (const Pair& p : seen)
                if (is_basis_form(FreeWord(2, p.first), FreeWord(2, p.second))) return true;
            return false;
        }
    }
}

FreeWord parse_word(const std::string& text, int rank) {
    std::vector<int> letters;
    std::istringstream is(text);
    std::string tok;
    int max_gen = 0;
    while (is >> tok) {
        std::size_t i = 0;
        if (tok[i] != 't' && tok[i] != 'x')
            throw std::invalid_argument("bad word token: " + tok);
        ++i;
        std::size_t j = i;
        while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad word token: " + tok);
        int gen = std::stoi(tok.substr(i, j - i));
        long exp = 1;
        if (j < tok.size()) {
            if (tok[j] != '^') throw std::invalid_argument("bad word token: " + tok);
            std::size_t k = j + 1;
            if (k >= tok.size()) throw std::invalid_argument("bad word token: " + tok);
            exp = std::stol(tok.substr(k));
            if (exp == 0) continue;
        }
        if (gen < 1) throw std::invalid_argument("bad generator in token: " + tok);
        max_gen = std::max(max_gen, gen);
        for (long e = 0; e < (exp < 0 ? -exp : exp); ++e)
            letters.push_back(exp > 0 ? gen : -gen);
    }
    return FreeWord(std::max(rank, max_gen), std::move(letters));
}

std::string format_word(const FreeWord& w) { return format_syllables(syllables(w)); }

}  // namespace handleknot
