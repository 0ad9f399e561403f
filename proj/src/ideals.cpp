#include "handleknot/ideals.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace handleknot {

namespace {

bool poly_less(const LaurentPoly2& f, const LaurentPoly2& g) {
    const auto& a = f.terms();
    const auto& b = g.terms();
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return a.size() < b.size();
}

bool is_unit_entry(const LaurentPoly2& f) {
    if (!f.is_monomial()) return false;
    const Int& c = f.terms().begin()->second;
    return c == 1 || c == -1;
}

LaurentPoly2 unit_inverse(const LaurentPoly2& u) {
    auto t = *u.terms().begin();
    return LaurentPoly2::monomial(t.second, -t.first.a, -t.first.b);
}

// Minor determinants of a fixed matrix, memoized on (row mask, column mask)
// so overlapping submatrices across different minors are shared.
class MinorCalc {
public:
    explicit MinorCalc(const LambdaMatrix& B) : B_(B) {}

    LaurentPoly2 det(uint64_t rmask, uint64_t cmask) {
        if (rmask == 0) return LaurentPoly2::constant(1);
        auto key = std::make_pair(rmask, cmask);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        int r0 = std::countr_zero(rmask);
        LaurentPoly2 acc;
        int pos = 0;
        for (int j = 0; j < 64; ++j) {
            if (!(cmask & (uint64_t{1} << j))) continue;
            const LaurentPoly2& e = B_[r0][j];
            if (!e.is_zero()) {
                LaurentPoly2 sub =
                    det(rmask & ~(uint64_t{1} << r0), cmask & ~(uint64_t{1} << j));
                LaurentPoly2 term = e * sub;
                acc = (pos % 2 == 0) ? acc + term : acc - term;
            }
            ++pos;
        }
        memo_.emplace(key, acc);
        return acc;
    }

private:
    const LambdaMatrix& B_;
    std::map<std::pair<uint64_t, uint64_t>, LaurentPoly2> memo_;
};

uint64_t indices_to_mask(const std::vector<int>& idx) {
    uint64_t m = 0;
    for (int i : idx) m |= uint64_t{1} << i;
    return m;
}

// Advance idx to the next size-|idx| subset of {0..limit-1}; false when done.
bool next_combination(std::vector<int>& idx, int limit) {
    int m = static_cast<int>(idx.size());
    for (int i = m - 1; i >= 0; --i) {
        if (idx[i] < limit - (m - i)) {
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

const int kWitnessPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

int mod_inv(int a, int p) {
    int t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return ((t % p) + p) % p;
}

int total_deg(const Exp3& e) { return e[0] + e[1] + e[2]; }

bool exp_divides(const Exp3& d, const Exp3& e) {
    return d[0] <= e[0] && d[1] <= e[1] && d[2] <= e[2];
}

Exp3 exp_sub(const Exp3& a, const Exp3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Exp3 exp_lcm(const Exp3& a, const Exp3& b) {
    return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

FpPoly::const_iterator leading(const FpPoly& f) {
    auto best = f.begin();
    for (auto it = std::next(f.begin()); it != f.end(); ++it)
        if (grlex_less(best->first, it->first)) best = it;
    return best;
}

// f += c * x^shift * g  (mod p)
void fp_axpy(FpPoly& f, int c, const Exp3& shift, const FpPoly& g, int p) {
    for (const auto& [e, gc] : g) {
        Exp3 ne = {e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]};
        int v = (f.count(ne) ? f[ne] : 0) + c * gc % p;
        v %= p;
        if (v < 0) v += p;
        if (v == 0)
            f.erase(ne);
        else
            f[ne] = v;
    }
}

FpPoly fp_clean(const FpPoly& f, int p) {
    FpPoly out;
    for (const auto& [e, c] : f) {
        int v = ((c % p) + p) % p;
        if (v != 0) out[e] = v;
    }
    return out;
}

FpPoly fp_monic(FpPoly f, int p) {
    if (f.empty()) return f;
    int inv = mod_inv(leading(f)->second, p);
    if (inv != 1)
        for (auto& [e, c] : f) c = c * inv % p;
    return f;
}

bool grlex_poly_less(const FpPoly& f, const FpPoly& g) {
    return grlex_less(leading(f)->first, leading(g)->first);
}

std::vector<FpPoly> embed_ideal_saturated(const IdealGens& I, int p) {
    std::vector<FpPoly> gens;
    if (I.full_ring) {
        gens.push_back(FpPoly{{{0, 0, 0}, 1}});
        return gens;
    }
    for (const auto& g : I.gens) {
        FpPoly e = embed_mod_p(g, p);
        if (!e.empty()) gens.push_back(std::move(e));
    }
    gens.push_back(FpPoly{{{1, 1, 1}, 1}, {{0, 0, 0}, p - 1}});
    return gens;
}

}  // namespace

IdealGens make_ideal(std::vector<LaurentPoly2> gens) {
    IdealGens I;
    std::vector<LaurentPoly2> norm;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        LaurentPoly2 pg = preferred_generator(g);
        if (pg == LaurentPoly2::constant(1)) {
            I.full_ring = true;
            return I;
        }
        norm.push_back(std::move(pg));
    }
    std::sort(norm.begin(), norm.end(), poly_less);
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    I.gens = std::move(norm);
    return I;
}

IdealGens elementary_ideal(const LambdaMatrix& B, int d) {
    int s = static_cast<int>(B.size());
    int n = B.empty() ? 0 : static_cast<int>(B[0].size());
    int m = n - d;
    if (m <= 0) return IdealGens{true, {}};
    if (m > s || m > n) return IdealGens{false, {}};  // no minors of that size
    if (s > 60 || n > 60)
        throw std::runtime_error("elementary_ideal: matrix too large; simplify first");
    MinorCalc calc(B);
    std::vector<LaurentPoly2> minors;
    std::vector<int> rows(m), cols0(m);
    std::iota(rows.begin(), rows.end(), 0);
    do {
        std::iota(cols0.begin(), cols0.end(), 0);
        std::vector<int> cols = cols0;
        uint64_t rmask = indices_to_mask(rows);
        do {
            minors.push_back(calc.det(rmask, indices_to_mask(cols)));
        } while (next_combination(cols, n));
    } while (next_combination(rows, s));
    return make_ideal(std::move(minors));
}

LambdaMatrix simplify_matrix(const LambdaMatrix& B0) {
    LambdaMatrix B = B0;
    for (;;) {
        int s = static_cast<int>(B.size());
        int n = B.empty() ? 0 : static_cast<int>(B[0].size());
        int pi = -1, pj = -1;
        for (int i = 0; i < s && pi < 0; ++i)
            for (int j = 0; j < n; ++j)
                if (is_unit_entry(B[i][j])) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        LaurentPoly2 uinv = unit_inverse(B[pi][pj]);
        for (int r = 0; r < s; ++r) {
            if (r == pi || B[r][pj].is_zero()) continue;
            LaurentPoly2 fac = B[r][pj] * uinv;
            for (int c = 0; c < n; ++c) B[r][c] = B[r][c] - fac * B[pi][c];
        }
        for (int c = 0; c < n; ++c) {
            if (c == pj || B[pi][c].is_zero()) continue;
            LaurentPoly2 fac = B[pi][c] * uinv;
            for (int r = 0; r < s; ++r) B[r][c] = B[r][c] - B[r][pj] * fac;
        }
        B.erase(B.begin() + pi);
        for (auto& row : B) row.erase(row.begin() + pj);
        if (B.empty()) B.emplace_back(n - 1);  // keep the column count visible
    }
    return B;
}

LaurentPoly2 det_lambda(const LambdaMatrix& M) {
    int s = static_cast<int>(M.size());
    if (s == 0) return LaurentPoly2::constant(1);
    if (static_cast<int>(M[0].size()) != s)
        throw std::invalid_argument("det_lambda: matrix not square");
    if (s > 60) throw std::runtime_error("det_lambda: matrix too large");
    MinorCalc calc(M);
    uint64_t full = (s == 64) ? ~uint64_t{0} : ((uint64_t{1} << s) - 1);
    return calc.det(full, full);
}

LaurentPoly2 delta(const IdealGens& I) {
    if (I.full_ring) return LaurentPoly2::constant(1);
    if (I.gens.empty()) throw std::invalid_argument("delta: zero ideal");
    LaurentPoly2 g = preferred_generator(I.gens[0]);
    for (size_t i = 1; i < I.gens.size() && g != LaurentPoly2::constant(1); ++i)
        g = gcd_lambda(g, I.gens[i]);
    return g;
}

bool unitary_test(const IdealGens& I) {
    if (I.full_ring) return true;
    Int g = 0;
    for (const auto& f : I.gens) {
        g = boost::multiprecision::gcd(g, augmentation_eval(f));
        if (g == 1) return true;
    }
    return g == 1;
}

bool symmetry_test(const LaurentPoly2& f) {
    if (f.is_zero()) throw std::invalid_argument("symmetry_test: zero polynomial");
    return preferred_generator(f) == preferred_generator(involution_sigma(f));
}

bool grlex_less(const Exp3& a, const Exp3& b) {
    if (total_deg(a) != total_deg(b)) return total_deg(a) < total_deg(b);
    return a < b;
}

FpPoly normal_form(const FpPoly& f, const std::vector<FpPoly>& basis, int p) {
    FpPoly work = fp_clean(f, p);
    FpPoly rem;
    while (!work.empty()) {
        auto lt = leading(work);
        const FpPoly* red = nullptr;
        for (const auto& b : basis) {
            if (b.empty()) continue;
            if (exp_divides(leading(b)->first, lt->first)) {
                red = &b;
                break;
            }
        }
        if (red == nullptr) {
            Exp3 key = lt->first;
            rem[key] = lt->second;
            work.erase(key);
        } else {
            auto blt = leading(*red);
            int fac = lt->second * mod_inv(blt->second, p) % p;
            fp_axpy(work, p - fac, exp_sub(lt->first, blt->first), *red, p);
        }
    }
    return rem;
}

std::vector<FpPoly> groebner_mod_p(std::vector<FpPoly> gens, int p) {
    std::vector<FpPoly> basis;
    for (auto& g : gens) {
        FpPoly c = fp_clean(g, p);
        if (!c.empty()) basis.push_back(std::move(c));
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        Exp3 li = leading(basis[i])->first, lj = leading(basis[j])->first;
        Exp3 l = exp_lcm(li, lj);
        if (l == Exp3{li[0] + lj[0], li[1] + lj[1], li[2] + lj[2]}) continue;
        FpPoly s;
        fp_axpy(s, mod_inv(leading(basis[i])->second, p), exp_sub(l, li), basis[i], p);
        fp_axpy(s, p - mod_inv(leading(basis[j])->second, p), exp_sub(l, lj),
                basis[j], p);
        FpPoly r = normal_form(s, basis, p);
        if (!r.empty()) {
            basis.push_back(std::move(r));
            for (size_t k = 0; k + 1 < basis.size(); ++k)
                pairs.emplace_back(k, basis.size() - 1);
        }
    }
    // minimalize, then tail-reduce into the unique reduced basis
    std::vector<FpPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        Exp3 li = leading(basis[i])->first;
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            Exp3 lj = leading(basis[j])->first;
            if (exp_divides(lj, li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(fp_monic(basis[i], p));
    }
    std::vector<FpPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<FpPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        FpPoly r = normal_form(minimal[i], others, p);
        if (!r.empty()) reduced.push_back(fp_monic(std::move(r), p));
    }
    std::sort(reduced.begin(), reduced.end(), grlex_poly_less);
    return reduced;
}

FpPoly embed_mod_p(const LaurentPoly2& f, int p) {
    std::vector<std::pair<ExpPair, int>> kept;
    long amin = 0, bmin = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Int r = c % p;
        int v = static_cast<int>(r);
        v = ((v % p) + p) % p;
        if (v == 0) continue;
        if (first || e.a < amin) amin = e.a;
        if (first || e.b < bmin) bmin = e.b;
        first = false;
        kept.emplace_back(e, v);
    }
    FpPoly out;
    for (const auto& [e, v] : kept)
        out[{static_cast<int>(e.a - amin), static_cast<int>(e.b - bmin), 0}] = v;
    return out;
}

std::vector<FpPoly> saturated_basis_mod_p(const IdealGens& I, int p) {
    return groebner_mod_p(embed_ideal_saturated(I, p), p);
}

bool ideal_contains_mod_p(const IdealGens& I, const LaurentPoly2& f, int p) {
    if (I.full_ring) return true;
    auto basis = saturated_basis_mod_p(I, p);
    return normal_form(embed_mod_p(f, p), basis, p).empty();
}

bool is_unit_ideal_laurent_mod_p(const IdealGens& I, int p) {
    if (I.full_ring) return true;
    auto basis = saturated_basis_mod_p(I, p);
    return basis.size() == 1 && basis[0] == FpPoly{{{0, 0, 0}, 1}};
}

PrincipalityResult principality_check(const IdealGens& I) {
    if (I.full_ring || I.is_zero())
        throw std::invalid_argument("principality_check: ideal must be proper and nonzero");
    LaurentPoly2 d = delta(I);
    for (const auto& g : I.gens)
        if (associates(g, d)) return {PrincipalityResult::Kind::Yes, d, 0};
    for (int p : kWitnessPrimes)
        if (!ideal_contains_mod_p(I, d, p))
            return {PrincipalityResult::Kind::No, LaurentPoly2{}, p};
    // Membership certificate d = sum c_i g_i with small cofactors, as an
    // integer linear system on the cofactor coefficients.
    const long box = 2;
    std::map<ExpPair, int> row_of;
    auto row_index = [&](const ExpPair& e) {
        auto it = row_of.find(e);
        if (it != row_of.end()) return it->second;
        int idx = static_cast<int>(row_of.size());
        row_of.emplace(e, idx);
        return idx;
    };
    for (const auto& [e, c] : d.terms()) row_index(e);
    std::vector<std::tuple<int, int, Int>> entries;  // (row, col, value)
    int col = 0;
    for (const auto& g : I.gens) {
        for (long a = -box; a <= box; ++a)
            for (long b = -box; b <= box; ++b) {
                for (const auto& [e, c] : g.terms())
                    entries.emplace_back(row_index({e.a + a, e.b + b}), col, c);
                ++col;
            }
    }
    int rows = static_cast<int>(row_of.size());
    IntMatrix A(rows, std::vector<Int>(col, 0));
    for (const auto& [r, c, v] : entries) A[r][c] += v;
    std::vector<Int> rhs(rows, 0);
    for (const auto& [e, c] : d.terms()) rhs[row_of[e]] = c;
    SNFResult snf = smith_normal_form(A);
    std::vector<Int> ub(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) ub[i] += snf.U[i][j] * rhs[j];
    bool ok = true;
    for (int i = 0; i < rows && ok; ++i) {
        Int diag = (i < col) ? snf.D[i][i] : Int(0);
        if (diag == 0)
            ok = (ub[i] == 0);
        else
            ok = (ub[i] % diag == 0);
    }
    if (ok) return {PrincipalityResult::Kind::Yes, d, 0};
    return {PrincipalityResult::Kind::Unknown, LaurentPoly2{}, 0};
}

AlexanderReport alexander_report(const GroupPresentation& P) {
    LambdaMatrix B = alexander_matrix(P);
    if (B.empty()) B.emplace_back(P.gens);  // zero row, same module
    B = simplify_matrix(B);
    AlexanderReport R;
    R.E0_is_zero = elementary_ideal(B, 0).is_zero();
    R.E1_is_zero = elementary_ideal(B, 1).is_zero();
    R.E2 = elementary_ideal(B, 2);
    if (R.E2.is_zero()) {
        R.delta2 = LaurentPoly2{};
        R.unitary = false;
        R.principal = {PrincipalityResult::Kind::Unknown, LaurentPoly2{}, 0};
        R.symmetric = SymmetryVerdict::NotApplicable;
        return R;
    }
    R.delta2 = delta(R.E2);
    R.unitary = unitary_test(R.E2);
    if (R.E2.full_ring)
        R.principal = {PrincipalityResult::Kind::Yes, LaurentPoly2::constant(1), 0};
    else
        R.principal = principality_check(R.E2);
    if (R.principal.kind == PrincipalityResult::Kind::Yes)
        R.symmetric = symmetry_test(R.principal.generator) ? SymmetryVerdict::Yes
                                                           : SymmetryVerdict::No;
    else
        R.symmetric = SymmetryVerdict::NotApplicable;
    return R;
}

LambdaMatrix seifert_presentation(const IntMatrix& A11, const IntMatrix& A12,
                                  const IntMatrix& A22) {
    int n1 = static_cast<int>(A11.size());
    int n2 = static_cast<int>(A22.size());
    auto check_dims = [](const IntMatrix& M, int r, int c, const char* name) {
        if (static_cast<int>(M.size()) != r)
            throw std::invalid_argument(std::string("seifert_presentation: bad rows in ") + name);
        for (const auto& row : M)
            if (static_cast<int>(row.size()) != c)
                throw std::invalid_argument(std::string("seifert_presentation: bad cols in ") + name);
    };
    if (n1 % 2 != 0 || n2 % 2 != 0)
        throw std::invalid_argument("seifert_presentation: sizes must be even");
    check_dims(A11, n1, n1, "A11");
    check_dims(A22, n2, n2, "A22");
    check_dims(A12, n1, n2, "A12");
    LambdaMatrix B(n1 + n2, std::vector<LaurentPoly2>(n1 + n2));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            B[i][j] = LaurentPoly2::constant(A11[j][i]) +
                      LaurentPoly2::monomial(-A11[i][j], 1, 0);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            B[i][n1 + j] = LaurentPoly2::constant(A12[i][j]) +
                           LaurentPoly2::monomial(-A12[i][j], 1, 0);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n1; ++j)
            B[n1 + i][j] = LaurentPoly2::constant(A12[j][i]) +
                           LaurentPoly2::monomial(-A12[j][i], 0, 1);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j)
            B[n1 + i][n1 + j] = LaurentPoly2::constant(A22[j][i]) +
                                LaurentPoly2::monomial(-A22[i][j], 0, 1);
    return B;
}

}  // namespace handleknot
