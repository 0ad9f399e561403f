#include "handleknot/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace handleknot {

LaurentPoly2 LaurentPoly2::constant(Int c) { return monomial(std::move(c), 0, 0); }

LaurentPoly2 LaurentPoly2::monomial(Int c, long a, long b) {
    LaurentPoly2 f;
    if (c != 0) f.terms_[{a, b}] = std::move(c);
    return f;
}

Int LaurentPoly2::coeff(long a, long b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly2::set(long a, long b, Int c) {
    if (c == 0)
        terms_.erase({a, b});
    else
        terms_[{a, b}] = std::move(c);
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& g) const {
    LaurentPoly2 out = *this;
    for (const auto& [e, c] : g.terms_) {
        Int v = out.coeff(e.a, e.b) + c;
        out.set(e.a, e.b, v);
    }
    return out;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& g) const { return *this + (-g); }

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& g) const {
    LaurentPoly2 out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : g.terms_) {
            ExpPair e{e1.a + e2.a, e1.b + e2.b};
            Int v = out.coeff(e.a, e.b) + c1 * c2;
            out.set(e.a, e.b, v);
        }
    return out;
}

LaurentPoly2 LaurentPoly2::operator*(const Int& c) const {
    LaurentPoly2 out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

LaurentPoly2 involution_sigma(const LaurentPoly2& f) {
    LaurentPoly2 out;
    for (const auto& [e, c] : f.terms()) out.set(-e.a, -e.b, c);
    return out;
}

Int augmentation_eval(const LaurentPoly2& f) {
    Int s = 0;
    for (const auto& [e, c] : f.terms()) s += c;
    return s;
}

LaurentPoly2 preferred_generator(const LaurentPoly2& f) {
    if (f.is_zero()) throw std::invalid_argument("preferred_generator of zero");
    long mina = 0, minb = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (first) {
            mina = e.a;
            minb = e.b;
            first = false;
        } else {
            mina = std::min(mina, e.a);
            minb = std::min(minb, e.b);
        }
    }
    LaurentPoly2 out;
    for (const auto& [e, c] : f.terms()) out.set(e.a - mina, e.b - minb, c);
    // sign: coefficient of the lex-greatest exponent pair must be positive
    const auto& top = *out.terms().rbegin();
    if (top.second < 0) out = -out;
    return out;
}

LaurentPoly2 sl2_substitute(const LaurentPoly2& f,
                            const std::array<std::array<long, 2>, 2>& m) {
    long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det != 1 && det != -1) throw std::invalid_argument("matrix not unimodular");
    LaurentPoly2 out;
    for (const auto& [e, c] : f.terms()) {
        long a = m[0][0] * e.a + m[0][1] * e.b;
        long b = m[1][0] * e.a + m[1][1] * e.b;
        Int v = out.coeff(a, b) + c;
        out.set(a, b, v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// GCD machinery: dense polynomials over Z in one and two variables.

namespace {

using UniPoly = std::vector<Int>;  // coefficient of x^i at index i

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Int uni_content(const UniPoly& p) {
    Int g = 0;
    for (const Int& c : p) g = int_gcd(g, c);
    return g;
}

UniPoly uni_scale_div(const UniPoly& p, const Int& d) {
    UniPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] / d;
    return out;
}

UniPoly uni_mul(const UniPoly& p, const UniPoly& q) {
    if (p.empty() || q.empty()) return {};
    UniPoly out(p.size() + q.size() - 1, Int(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    uni_trim(out);
    return out;
}

UniPoly uni_scale(const UniPoly& p, const Int& c) {
    UniPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] * c;
    uni_trim(out);
    return out;
}

UniPoly uni_sub(UniPoly p, const UniPoly& q) {
    if (p.size() < q.size()) p.resize(q.size(), Int(0));
    for (std::size_t i = 0; i < q.size(); ++i) p[i] -= q[i];
    uni_trim(p);
    return p;
}

// pseudo-remainder of a by b (b nonzero)
UniPoly uni_prem(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    if (b.empty()) throw std::logic_error("uni_prem by zero");
    while (a.size() >= b.size()) {
        std::size_t old = a.size();
        std::size_t shift = a.size() - b.size();
        Int la = a.back();
        a = uni_scale(a, b.back());
        UniPoly s = uni_scale(b, la);
        s.insert(s.begin(), shift, Int(0));
        a = uni_sub(a, s);
        if (a.size() >= old) throw std::logic_error("uni_prem stalled");
    }
    return a;
}

UniPoly uni_primitive(const UniPoly& p) {
    if (p.empty()) return p;
    Int c = uni_content(p);
    UniPoly out = uni_scale_div(p, c);
    if (out.back() < 0)
        for (Int& v : out) v = -v;
    return out;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    Int cg = int_gcd(uni_content(a), uni_content(b));
    UniPoly pa = uni_primitive(a), pb = uni_primitive(b);
    while (!pb.empty()) {
        UniPoly r = uni_prem(pa, pb);
        if (!r.empty()) r = uni_primitive(r);
        pa = pb;
        pb = r;
    }
    return uni_scale(pa, cg);
}

// Bivariate: dense in t2, coefficients in Z[t1].
using BiPoly = std::vector<UniPoly>;

void bi_trim(BiPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

UniPoly bi_content(const BiPoly& p) {
    UniPoly g;
    for (const UniPoly& c : p) g = uni_gcd(g, c);
    return g;
}

bool uni_divides(const UniPoly& d, const UniPoly& p, UniPoly* quot = nullptr) {
    UniPoly r = p;
    uni_trim(r);
    if (d.empty()) return r.empty();
    UniPoly q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, Int(0));
    while (r.size() >= d.size()) {
        if (r.back() % d.back() != 0) return false;
        Int c = r.back() / d.back();
        std::size_t shift = r.size() - d.size();
        UniPoly s = uni_scale(d, c);
        s.insert(s.begin(), shift, Int(0));
        std::size_t old = r.size();
        r = uni_sub(r, s);
        if (r.size() >= old) return false;
        q[shift] = c;
    }
    if (!r.empty()) return false;
    if (quot) {
        uni_trim(q);
        *quot = q;
    }
    return true;
}

BiPoly bi_div_exact_uni(const BiPoly& p, const UniPoly& d) {
    BiPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!uni_divides(d, p[i], &out[i]))
            throw std::logic_error("inexact content division");
    }
    bi_trim(out);
    return out;
}

BiPoly bi_mul_uni(const BiPoly& p, const UniPoly& c) {
    BiPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = uni_mul(p[i], c);
    bi_trim(out);
    return out;
}

BiPoly bi_sub(BiPoly p, const BiPoly& q) {
    if (p.size() < q.size()) p.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) p[i] = uni_sub(p[i], q[i]);
    bi_trim(p);
    return p;
}

BiPoly bi_shift(BiPoly p, std::size_t k) {
    p.insert(p.begin(), k, UniPoly{});
    return p;
}

// pseudo-remainder in t2 over Z[t1]
BiPoly bi_prem(BiPoly a, const BiPoly& b) {
    bi_trim(a);
    if (b.empty()) throw std::logic_error("bi_prem by zero");
    const UniPoly& lb = b.back();
    while (a.size() >= b.size()) {
        std::size_t old = a.size();
        UniPoly la = a.back();
        a = bi_mul_uni(a, lb);
        BiPoly s = bi_shift(bi_mul_uni(b, la), old - b.size());
        a = bi_sub(a, s);
        if (a.size() >= old) throw std::logic_error("bi_prem stalled");
    }
    return a;
}

BiPoly bi_primitive(const BiPoly& p) {
    if (p.empty()) return p;
    UniPoly c = bi_content(p);
    BiPoly out = bi_div_exact_uni(p, c);
    return out;
}

BiPoly bi_gcd(BiPoly a, BiPoly b) {
    bi_trim(a);
    bi_trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    UniPoly cg = uni_gcd(bi_content(a), bi_content(b));
    BiPoly pa = bi_primitive(a), pb = bi_primitive(b);
    while (!pb.empty()) {
        BiPoly r = bi_prem(pa, pb);
        if (!r.empty()) r = bi_primitive(r);
        pa = pb;
        pb = r;
    }
    return bi_mul_uni(pa, cg);
}

BiPoly to_bi(const LaurentPoly2& f) {
    // assumes nonnegative exponents
    BiPoly out;
    for (const auto& [e, c] : f.terms()) {
        if (out.size() <= static_cast<std::size_t>(e.b)) out.resize(e.b + 1);
        UniPoly& row = out[e.b];
        if (row.size() <= static_cast<std::size_t>(e.a)) row.resize(e.a + 1, Int(0));
        row[e.a] = c;
    }
    for (UniPoly& row : out) uni_trim(row);
    bi_trim(out);
    return out;
}

LaurentPoly2 from_bi(const BiPoly& p) {
    LaurentPoly2 out;
    for (std::size_t b = 0; b < p.size(); ++b)
        for (std::size_t a = 0; a < p[b].size(); ++a)
            if (p[b][a] != 0) out.set(static_cast<long>(a), static_cast<long>(b), p[b][a]);
    return out;
}

bool bi_divides(const BiPoly& d, const BiPoly& p) {
    BiPoly r = p;
    bi_trim(r);
    if (d.empty()) return r.empty();
    while (!r.empty() && r.size() >= d.size()) {
        UniPoly q;
        if (!uni_divides(d.back(), r.back(), &q)) return false;
        std::size_t shift = r.size() - d.size();
        std::size_t old = r.size();
        r = bi_sub(r, bi_shift(bi_mul_uni(d, q), shift));
        if (r.size() >= old) return false;
    }
    return r.empty();
}

}  // namespace

LaurentPoly2 gcd_lambda(const LaurentPoly2& f, const LaurentPoly2& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zeros");
    if (f.is_zero()) return preferred_generator(g);
    if (g.is_zero()) return preferred_generator(f);
    BiPoly a = to_bi(preferred_generator(f));
    BiPoly b = to_bi(preferred_generator(g));
    return preferred_generator(from_bi(bi_gcd(a, b)));
}

bool divides_lambda(const LaurentPoly2& d, const LaurentPoly2& f) {
    if (d.is_zero()) throw std::invalid_argument("division by zero");
    if (f.is_zero()) return true;
    return bi_divides(to_bi(preferred_generator(d)), to_bi(preferred_generator(f)));
}

bool associates(const LaurentPoly2& f, const LaurentPoly2& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return preferred_generator(f) == preferred_generator(g);
}

// ---------------------------------------------------------------------------

LaurentPoly2 parse_poly(const std::string& text) {
    // strip whitespace
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    LaurentPoly2 out;
    if (s.empty()) return out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("dangling sign in polynomial");
        Int coeff = 1;
        long ea = 0, eb = 0;
        bool any = false;
        bool expect_factor = true;
        while (expect_factor) {
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                coeff *= Int(s.substr(i, j - i));
                i = j;
                any = true;
            } else if (i < s.size() && (s[i] == 't' || s[i] == 's' || s[i] == 'x')) {
                int var;
                if (s[i] == 's') {
                    var = 1;
                    ++i;
                } else if (s[i] == 't' &&
                           (i + 1 >= s.size() ||
                            !std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
                    var = 2;  // bare "t" aliases t2
                    ++i;
                } else {
                    char v = s[i];
                    ++i;
                    std::size_t j = i;
                    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                    if (j == i) throw std::invalid_argument("bad variable in polynomial");
                    var = std::stoi(s.substr(i, j - i));
                    (void)v;
                    if (var != 1 && var != 2)
                        throw std::invalid_argument("variable index must be 1 or 2");
                    i = j;
                }
                long e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::size_t j = i;
                    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
                    std::size_t k = j;
                    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                    if (k == j) throw std::invalid_argument("bad exponent in polynomial");
                    e = std::stol(s.substr(i, k - i));
                    i = k;
                }
                (var == 1 ? ea : eb) += e;
                any = true;
            } else {
                throw std::invalid_argument("bad term in polynomial: " + s.substr(i));
            }
            if (i < s.size() && s[i] == '*') {
                ++i;
            } else {
                expect_factor = false;
            }
        }
        if (!any) throw std::invalid_argument("empty term in polynomial");
        LaurentPoly2 term = LaurentPoly2::monomial(coeff * sign, ea, eb);
        out = out + term;
    }
    return out;
}

std::string format_poly(const LaurentPoly2& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // lex-descending exponent order for a stable, readable form
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Int v = c;
        if (v < 0) {
            os << '-';
            v = -v;
        } else if (!first) {
            os << '+';
        }
        first = false;
        bool printed = false;
        if (v != 1 || (e.a == 0 && e.b == 0)) {
            os << v;
            printed = true;
        }
        if (e.a != 0) {
            if (printed) os << '*';
            os << "t1";
            if (e.a != 1) os << '^' << e.a;
            printed = true;
        }
        if (e.b != 0) {
            if (printed) os << '*';
            os << "t2";
            if (e.b != 1) os << '^' << e.b;
        }
    }
    return os.str();
}

}  // namespace handleknot
