#include "handleknot/quandle.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace handleknot {

namespace {

constexpr int kMaxQuandleSize = 256;

void verify_axioms(const std::vector<std::vector<int>>& t) {
    int n = static_cast<int>(t.size());
    if (n == 0) throw QuandleError("empty operation table");
    if (n > kMaxQuandleSize) throw QuandleError("operation table too large");
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n)
            throw QuandleError("operation table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw QuandleError("operation table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (t[a][a] != a) throw QuandleError("axiom Q1 fails");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[t[a][c]][t[b][c]])
                    throw QuandleError("axiom Q2 fails");
    std::vector<char> seen(n);
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) seen[t[a][b]] = 1;
        for (int a = 0; a < n; ++a)
            if (!seen[a]) throw QuandleError("axiom Q3 fails");
    }
}

int mod_pos(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

int inverse_mod(int a, int m) {
    int t = 0, nt = 1, r = m, nr = mod_pos(a, m);
    while (nr != 0) {
        int q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw QuandleError("invalid Alexander parameters: non-unit coefficient");
    return mod_pos(t, m);
}

// Z_m[t]/(h) with h monic; elements are coefficient vectors of length deg h
struct QuotientRing {
    int m;
    std::vector<int> h;  // monic, degree = h.size()-1 >= 1

    int deg() const { return static_cast<int>(h.size()) - 1; }

    std::vector<int> reduce(std::vector<int> f) const {
        for (int& c : f) c = mod_pos(c, m);
        int d = deg();
        for (int i = static_cast<int>(f.size()) - 1; i >= d; --i) {
            int c = f[i];
            if (c == 0) continue;
            for (int j = 0; j <= d; ++j)
                f[i - d + j] = mod_pos(f[i - d + j] - static_cast<long long>(c) * h[j], m);
        }
        f.resize(d);
        return f;
    }

    std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> f(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                f[i + j] = mod_pos(f[i + j] + static_cast<long long>(a[i]) * b[j], m);
        return reduce(f);
    }

    std::vector<int> sub(std::vector<int> a, const std::vector<int>& b) const {
        a.resize(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < b.size(); ++i) a[i] = mod_pos(a[i] - b[i], m);
        return reduce(a);
    }

    long long index_of(const std::vector<int>& e) const {
        long long ix = 0;
        for (int i = deg() - 1; i >= 0; --i) ix = ix * m + e[i];
        return ix;
    }

    std::vector<int> element(long long ix) const {
        std::vector<int> e(deg());
        for (int i = 0; i < deg(); ++i) {
            e[i] = static_cast<int>(ix % m);
            ix /= m;
        }
        return e;
    }
};

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

int brute_limit() {
    if (const char* s = std::getenv("HANDLEKNOT_BRUTE_LIMIT")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 12;
}

Int int_pow(int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void check_coloring_inputs(const FiniteQuandle& q, const CycleAssignment& z) {
    if (quandle_type(q) != 2) throw QuandleError("non-involutory quandle");
    if (z.modulus != 2) throw QuandleError("cycle modulus must be 2");
}

struct Pins {
    std::map<std::string, int> color;  // per arc
    bool conflict = false;
};

Pins normalize_pins(const SpineDiagram& d, const FiniteQuandle& q,
                    const std::map<ArcEnd, int>& ends) {
    Pins p;
    for (const auto& [e, c] : ends) {
        if (!d.labels.count(e.arc)) throw QuandleError("pinned unknown arc '" + e.arc + "'");
        if (c < 0 || c >= q.size) throw QuandleError("pinned color out of range");
        auto [it, fresh] = p.color.emplace(e.arc, c);
        if (!fresh && it->second != c) p.conflict = true;
    }
    return p;
}

// rank of the mod-p system; returns -1 on an inconsistent affine row
Int count_linear(const SpineDiagram& d, int p, const CycleAssignment& z,
                 const std::map<std::string, int>& pins) {
    int n = static_cast<int>(d.arc_names.size());
    std::map<std::string, int> ix;
    for (int i = 0; i < n; ++i) ix[d.arc_names[i]] = i;

    std::vector<std::vector<int>> rows;
    auto blank = [&] { return std::vector<int>(n + 1, 0); };
    auto add = [&](std::vector<int>& r, const std::string& arc, int c) {
        r[ix.at(arc)] = mod_pos(r[ix.at(arc)] + c, p);
    };
    for (const Crossing& c : d.crossings) {
        auto r = blank();
        if (z.value(d.labels.at(c.over)) % 2 != 0) {
            add(r, c.under_in, 1);
            add(r, c.under_out, 1);
            add(r, c.over, -2);
        } else {
            add(r, c.under_in, 1);
            add(r, c.under_out, -1);
        }
        rows.push_back(r);
    }
    for (const SpineVertex& v : d.vertices) {
        for (int k = 0; k < 2; ++k) {
            auto r = blank();
            add(r, v.ends[k].arc, 1);
            add(r, v.ends[k + 1].arc, -1);
            rows.push_back(r);
        }
    }
    for (const auto& [arc, col] : pins) {
        auto r = blank();
        add(r, arc, 1);
        r[n] = mod_pos(col, p);
        rows.push_back(r);
    }

    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        int inv = inverse_mod(rows[rank][col], p);
        for (int j = col; j <= n; ++j)
            rows[rank][j] = mod_pos(static_cast<long long>(rows[rank][j]) * inv, p);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            int f = rows[i][col];
            for (int j = col; j <= n; ++j)
                rows[i][j] = mod_pos(rows[i][j] - static_cast<long long>(f) * rows[rank][j], p);
        }
        ++rank;
    }
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
        if (rows[i][n] != 0) return 0;
    return int_pow(p, n - rank);
}

Int count_exhaustive(const SpineDiagram& d, const FiniteQuandle& q,
                     const CycleAssignment& z, const std::map<std::string, int>& pins) {
    int n = static_cast<int>(d.arc_names.size());
    int limit = brute_limit();
    if (n > limit)
        throw QuandleError("arc-count limit exceeded for exhaustive coloring (" +
                           std::to_string(n) + " > " + std::to_string(limit) + ")");
    std::map<std::string, int> ix;
    for (int i = 0; i < n; ++i) ix[d.arc_names[i]] = i;

    // constraint = (arcs..., check); evaluated once its last arc is colored
    struct Cons {
        std::array<int, 3> arc;  // in, over, out  (over = -1 for equality)
        int flip;                // 1: out = in*over, 0: out = in
    };
    std::vector<std::vector<Cons>> at(n);
    auto push = [&](Cons c) {
        int last = std::max({c.arc[0], c.arc[1], c.arc[2]});
        at[last].push_back(c);
    };
    for (const Crossing& c : d.crossings) {
        int zv = z.value(d.labels.at(c.over)) % 2;
        push({{ix.at(c.under_in), zv ? ix.at(c.over) : -1, ix.at(c.under_out)}, zv});
    }
    for (const SpineVertex& v : d.vertices)
        for (int k = 0; k < 2; ++k)
            push({{ix.at(v.ends[k].arc), -1, ix.at(v.ends[k + 1].arc)}, 0});

    std::vector<int> color(n, -1);
    Int total = 0;
    auto ok = [&](const Cons& c) {
        int in = color[c.arc[0]], out = color[c.arc[2]];
        int want = c.flip ? q.at(in, color[c.arc[1]]) : in;
        return out == want;
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            ++total;
            return;
        }
        auto pin = pins.find(d.arc_names[i]);
        int lo = 0, hi = q.size;
        if (pin != pins.end()) {
            lo = pin->second;
            hi = lo + 1;
        }
        for (int col = lo; col < hi; ++col) {
            color[i] = col;
            bool good = true;
            for (const Cons& c : at[i])
                if (!ok(c)) {
                    good = false;
                    break;
                }
            if (good) self(self, i + 1);
        }
        color[i] = -1;
    };
    rec(rec, 0);
    return total;
}

Int solve(const SpineDiagram& d, const FiniteQuandle& q, const CycleAssignment& z,
          const std::map<std::string, int>& pins) {
    if (q.dihedral && is_odd_prime(q.modulus)) return count_linear(d, q.modulus, z, pins);
    return count_exhaustive(d, q, z, pins);
}

std::vector<int> parse_poly_1var(const std::string& text, const std::string& what) {
    std::vector<int> coeffs;
    auto bump = [&](int e, int c) {
        if (e < 0) throw QuandleError("invalid " + what + ": negative exponent");
        if (e > 32) throw QuandleError("invalid " + what + ": exponent too large");
        if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, 0);
        coeffs[e] += c;
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw QuandleError("invalid " + what + ": empty polynomial");
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        bool have_num = false;
        long num = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            num = num * 10 + (s[i] - '0');
            have_num = true;
            ++i;
        }
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 't') {
            ++i;
            int e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int es = 1;
                if (i < s.size() && s[i] == '-') {
                    es = -1;
                    ++i;
                }
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw QuandleError("invalid " + what + ": bad exponent");
                long ev = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ev = ev * 10 + (s[i++] - '0');
                e = static_cast<int>(es * ev);
            }
            bump(e, sign * static_cast<int>(have_num ? num : 1));
        } else if (have_num) {
            bump(0, sign * static_cast<int>(num));
        } else {
            throw QuandleError("invalid " + what + ": unexpected character");
        }
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

}  // namespace

FiniteQuandle make_dihedral(int m) {
    if (m < 2) throw QuandleError("dihedral quandle needs m >= 2");
    if (m > kMaxQuandleSize) throw QuandleError("operation table too large");
    FiniteQuandle q;
    q.size = m;
    q.table.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) q.table[a][b] = mod_pos(2LL * b - a, m);
    verify_axioms(q.table);
    q.dihedral = true;
    q.modulus = m;
    return q;
}

FiniteQuandle make_alexander(int m, const std::vector<int>& h_in,
                             const std::vector<int>& u_in) {
    if (m < 2) throw QuandleError("invalid Alexander parameters: modulus < 2");
    std::vector<int> h = h_in;
    for (int& c : h) c = mod_pos(c, m);
    while (!h.empty() && h.back() == 0) h.pop_back();
    if (h.size() < 2)
        throw QuandleError("invalid Alexander parameters: h must have degree >= 1");
    // leading and constant coefficients must be units so t is invertible
    int lead_inv = inverse_mod(h.back(), m);
    inverse_mod(h.front(), m);
    for (int& c : h) c = mod_pos(static_cast<long long>(c) * lead_inv, m);

    QuotientRing ring{m, h};
    double sz = 1;
    for (int i = 0; i < ring.deg(); ++i) sz *= m;
    if (sz > kMaxQuandleSize)
        throw QuandleError("invalid Alexander parameters: quandle too large");
    int n = static_cast<int>(sz);

    std::vector<int> u = ring.reduce(u_in);
    std::vector<int> one(ring.deg(), 0);
    one[0] = 1;
    std::vector<int> one_minus_u = ring.sub(one, u);

    // u must act invertibly for columns to be bijections
    std::vector<char> hit(n, 0);
    for (int i = 0; i < n; ++i) hit[ring.index_of(ring.mul(u, ring.element(i)))] = 1;
    for (int i = 0; i < n; ++i)
        if (!hit[i]) throw QuandleError("invalid Alexander parameters: u is not a unit");

    FiniteQuandle q;
    q.size = n;
    q.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        std::vector<int> ua = ring.mul(u, ring.element(a));
        for (int b = 0; b < n; ++b) {
            std::vector<int> v = ua;
            std::vector<int> wb = ring.mul(one_minus_u, ring.element(b));
            for (int i = 0; i < ring.deg(); ++i) v[i] = mod_pos(v[i] + wb[i], m);
            q.table[a][b] = static_cast<int>(ring.index_of(v));
        }
    }
    verify_axioms(q.table);
    return q;
}

FiniteQuandle make_tetrahedral() { return make_alexander(2, {1, 1, 1}, {0, 1}); }

FiniteQuandle make_explicit(const std::vector<std::vector<int>>& table) {
    verify_axioms(table);
    FiniteQuandle q;
    q.size = static_cast<int>(table.size());
    q.table = table;
    return q;
}

int quandle_type(const FiniteQuandle& q) {
    long long k = 1;
    for (int b = 0; b < q.size; ++b) {
        std::vector<char> done(q.size, 0);
        for (int a = 0; a < q.size; ++a) {
            if (done[a]) continue;
            int len = 0, c = a;
            do {
                done[c] = 1;
                c = q.at(c, b);
                ++len;
            } while (c != a);
            k = std::lcm(k, static_cast<long long>(len));
            if (k > 1'000'000) throw QuandleError("quandle type too large");
        }
    }
    return static_cast<int>(std::max(2LL, k));
}

Int count_colorings(const SpineDiagram& d, const FiniteQuandle& q,
                    const CycleAssignment& z) {
    check_coloring_inputs(q, z);
    return solve(d, q, z, {});
}

Int count_colorings_exhaustive(const SpineDiagram& d, const FiniteQuandle& q,
                               const CycleAssignment& z) {
    check_coloring_inputs(q, z);
    return count_exhaustive(d, q, z, {});
}

Int count_tangle_colorings(const SpineDiagram& d, const FiniteQuandle& q,
                           const CycleAssignment& z,
                           const std::map<ArcEnd, int>& boundary_colors) {
    if (d.kind != DiagramKind::Tangle)
        throw QuandleError("count_tangle_colorings needs a tangle diagram");
    check_coloring_inputs(q, z);
    Pins pins = normalize_pins(d, q, boundary_colors);
    if (pins.conflict) return 0;
    return solve(d, q, z, pins.color);
}

std::array<Int, 4> phi_counts(const SpineDiagram& d, int p) {
    if (!is_odd_prime(p)) throw QuandleError("phi needs an odd prime");
    FiniteQuandle q = make_dihedral(p);
    std::array<Int, 4> out;
    int i = 0;
    for (const CycleAssignment& z : enumerate_cycles(d, 2))
        out[i++] = count_colorings(d, q, z);
    return out;
}

PhiPolynomial phi_p(const SpineDiagram& d, int p) {
    std::array<Int, 4> counts = phi_counts(d, p);
    PhiPolynomial phi;
    for (int i = 0; i < 4; ++i) {
        Int c = counts[i];
        int e = 0;
        while (c > 1 && c % p == 0) {
            c /= p;
            ++e;
        }
        if (c != 1 || e < 1) throw QuandleError("coloring count is not a power >= p");
        phi.exponents[i] = e - 1;
    }
    std::sort(phi.exponents.begin(), phi.exponents.end());
    return phi;
}

std::string format_phi(const PhiPolynomial& phi) {
    std::ostringstream out;
    bool first = true;
    size_t i = 0;
    while (i < phi.exponents.size()) {
        size_t j = i;
        while (j < phi.exponents.size() && phi.exponents[j] == phi.exponents[i]) ++j;
        int count = static_cast<int>(j - i), e = phi.exponents[i];
        if (!first) out << "+";
        if (e == 0) {
            out << count;
        } else {
            if (count > 1) out << count;
            out << "t";
            if (e > 1) out << "^" << e;
        }
        first = false;
        i = j;
    }
    return out.str();
}

FiniteQuandle parse_quandle_spec(const std::string& spec) {
    std::vector<std::string> part;
    std::string cur;
    for (char c : spec) {
        if (c == ':') {
            part.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    part.push_back(cur);
    if (part[0] == "dihedral" && part.size() == 2) {
        try {
            return make_dihedral(std::stoi(part[1]));
        } catch (const std::invalid_argument&) {
            throw QuandleError("bad quandle spec '" + spec + "'");
        }
    }
    if (part[0] == "tetrahedral" && part.size() == 1) return make_tetrahedral();
    if (part[0] == "alexander" && part.size() == 4) {
        int m;
        try {
            m = std::stoi(part[1]);
        } catch (const std::invalid_argument&) {
            throw QuandleError("bad quandle spec '" + spec + "'");
        }
        return make_alexander(m, parse_poly_1var(part[2], "Alexander parameters"),
                              parse_poly_1var(part[3], "Alexander parameters"));
    }
    throw QuandleError("bad quandle spec '" + spec + "'");
}

}  // namespace handleknot
