#include "handleknot/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace handleknot {

GroupRingElement GroupRingElement::of_word(const FreeWord& w, Int c) {
    GroupRingElement e;
    e.add(w, c);
    return e;
}

void GroupRingElement::add(const FreeWord& w, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& g) const {
    GroupRingElement out = *this;
    for (const auto& [w, c] : g.terms_) out.add(w, c);
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out;
    for (const auto& [w, c] : terms_) out.terms_[w] = -c;
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& g) const {
    return *this + (-g);
}

GroupRingElement GroupRingElement::times_word_left(const FreeWord& w) const {
    GroupRingElement out;
    for (const auto& [u, c] : terms_) out.add(w * u, c);
    return out;
}

GroupRingElement GroupRingElement::times_word_right(const FreeWord& w) const {
    GroupRingElement out;
    for (const auto& [u, c] : terms_) out.add(u * w, c);
    return out;
}

GroupRingElement fox_derivative(const FreeWord& r, int j) {
    if (j < 1 || j > r.rank()) throw std::invalid_argument("fox index out of range");
    GroupRingElement out;
    FreeWord prefix = FreeWord::identity(r.rank());
    for (int l : r.letters()) {
        if (std::abs(l) == j) {
            if (l > 0) {
                out.add(prefix, 1);
            } else {
                out.add(prefix * FreeWord::generator(r.rank(), j, -1), -1);
            }
        }
        prefix = prefix * FreeWord::generator(r.rank(), std::abs(l), l > 0 ? 1 : -1);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

Int int_abs(const Int& x) { return x < 0 ? -x : x; }

void add_row(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < M[dst].size(); ++j) M[dst][j] += q * M[src][j];
}

void add_col(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < M.size(); ++i) M[i][dst] += q * M[i][src];
}

void swap_rows(IntMatrix& M, std::size_t a, std::size_t b) { std::swap(M[a], M[b]); }

void swap_cols(IntMatrix& M, std::size_t a, std::size_t b) {
    for (auto& row : M) std::swap(row[a], row[b]);
}

void negate_row(IntMatrix& M, std::size_t i) {
    for (auto& v : M[i]) v = -v;
}

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix I(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& A) {
    std::size_t s = A.size();
    std::size_t n = s == 0 ? 0 : A[0].size();
    SNFResult r{A, identity_matrix(s), identity_matrix(n)};
    IntMatrix& D = r.D;

    std::size_t k = 0;
    while (k < s && k < n) {
        // pivot: least nonzero absolute value in the trailing block
        std::size_t pi = k, pj = k;
        bool found = false;
        for (std::size_t i = k; i < s; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (D[i][j] != 0 &&
                    (!found || int_abs(D[i][j]) < int_abs(D[pi][pj]))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != k) {
            swap_rows(D, k, pi);
            swap_rows(r.U, k, pi);
        }
        if (pj != k) {
            swap_cols(D, k, pj);
            swap_cols(r.V, k, pj);
        }
        bool clean = true;
        for (std::size_t i = k + 1; i < s; ++i) {
            if (D[i][k] == 0) continue;
            Int q = D[i][k] / D[k][k];
            if (q != 0) {
                add_row(D, i, k, -q);
                add_row(r.U, i, k, -q);
            }
            if (D[i][k] != 0) clean = false;
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            if (D[k][j] == 0) continue;
            Int q = D[k][j] / D[k][k];
            if (q != 0) {
                add_col(D, j, k, -q);
                add_col(r.V, j, k, -q);
            }
            if (D[k][j] != 0) clean = false;
        }
        if (!clean) continue;  // re-pivot on the smaller residues
        // divisibility: fold in any entry the pivot does not divide
        bool refold = false;
        for (std::size_t i = k + 1; i < s && !refold; ++i)
            for (std::size_t j = k + 1; j < n && !refold; ++j)
                if (D[i][j] % D[k][k] != 0) {
                    add_row(D, k, i, 1);
                    add_row(r.U, k, i, 1);
                    refold = true;
                }
        if (refold) continue;
        if (D[k][k] < 0) {
            negate_row(D, k);
            negate_row(r.U, k);
        }
        ++k;
    }
    return r;
}

AbelianizationError::AbelianizationError(std::vector<Int> factors)
    : std::runtime_error([&factors] {
          std::ostringstream os;
          os << "abelianization is not free of rank 2; invariant factors:";
          for (const Int& f : factors) os << ' ' << f;
          return os.str();
      }()),
      factors_(std::move(factors)) {}

AbelianizationMap abelianization_map(const GroupPresentation& P) {
    std::size_t n = static_cast<std::size_t>(P.gens);
    // keep at least one (zero) row so the column count survives into the SNF
    IntMatrix R(std::max<std::size_t>(P.relators.size(), 1),
                std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < P.relators.size(); ++i) {
        auto ab = abelianize(P.relators[i]);
        for (std::size_t j = 0; j < n && j < ab.size(); ++j) R[i][j] = ab[j];
    }
    SNFResult snf = smith_normal_form(R);
    // quotient Z^n / rowspan(R): invariant factors from D, free rank = n - #nonzero
    std::vector<Int> nontrivial;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < std::min(snf.D.size(), n); ++k) {
        if (snf.D[k][k] == 0) continue;
        ++rank;
        if (snf.D[k][k] != 1) nontrivial.push_back(snf.D[k][k]);
    }
    std::size_t free_rank = n - rank;
    if (!nontrivial.empty() || free_rank != 2) {
        std::vector<Int> factors = nontrivial;
        for (std::size_t i = 0; i < free_rank; ++i) factors.push_back(0);
        throw AbelianizationError(std::move(factors));
    }
    // x_i maps to coset of row i of V in Z^n/rowspan(D); free coordinates are
    // the columns past the nonzero diagonal.  Nonzero diagonal entries are all
    // 1, so those coordinates die in the quotient.
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j) {
        bool pivot = j < snf.D.size() && j < rank;
        if (!pivot) free_cols.push_back(j);
    }
    AbelianizationMap k;
    k.images.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        k.images[i] = {static_cast<long>(snf.V[i][free_cols[0]]),
                       static_cast<long>(snf.V[i][free_cols[1]])};
    }
    return k;
}

LaurentPoly2 abelianized(const AbelianizationMap& k, const FreeWord& w) {
    long a = 0, b = 0;
    for (int l : w.letters()) {
        const ExpPair& e = k.images[static_cast<std::size_t>(std::abs(l) - 1)];
        int s = l > 0 ? 1 : -1;
        a += s * e.a;
        b += s * e.b;
    }
    return LaurentPoly2::monomial(1, a, b);
}

LaurentPoly2 abelianized(const AbelianizationMap& k, const GroupRingElement& e) {
    LaurentPoly2 out;
    for (const auto& [w, c] : e.terms()) out = out + abelianized(k, w) * c;
    return out;
}

LambdaMatrix alexander_matrix(const GroupPresentation& P) {
    AbelianizationMap k = abelianization_map(P);
    LambdaMatrix B(P.relators.size(), std::vector<LaurentPoly2>(P.gens));
    for (std::size_t i = 0; i < P.relators.size(); ++i)
        for (int l = 1; l <= P.gens; ++l)
            B[i][static_cast<std::size_t>(l - 1)] =
                abelianized(k, fox_derivative(P.relators[i], l));
    return B;
}

int deficiency(const GroupPresentation& P) {
    return P.gens - static_cast<int>(P.relators.size());
}

GroupPresentation parse_presentation(const std::string& text) {
    GroupPresentation P;
    std::istringstream is(text);
    std::string line;
    bool have_gens = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "gens:") {
            if (!(ls >> P.gens) || P.gens < 1)
                throw std::invalid_argument("bad gens: line");
            have_gens = true;
        } else if (key == "rel:") {
            if (!have_gens) throw std::invalid_argument("rel: before gens:");
            std::string rest;
            std::getline(ls, rest);
            FreeWord w = parse_word(rest, P.gens);
            if (w.rank() > P.gens)
                throw std::invalid_argument("relator uses generator out of range");
            P.relators.push_back(w);
        } else {
            throw std::invalid_argument("unknown line in presentation: " + key);
        }
    }
    if (!have_gens) throw std::invalid_argument("missing gens: line");
    return P;
}

std::string format_presentation(const GroupPresentation& P) {
    std::ostringstream os;
    os << "gens: " << P.gens << '\n';
    for (const FreeWord& r : P.relators) {
        std::string w = format_word(r);
        // presentation relators use x-names
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == 't' && (i == 0 || w[i - 1] == ' ')) w[i] = 'x';
        os << "rel: " << w << '\n';
    }
    return os.str();
}

}  // namespace handleknot
