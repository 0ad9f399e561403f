#pragma once

#include <array>
#include <map>
#include <vector>

#include "handleknot/laurent.hpp"
#include "handleknot/presentation.hpp"

namespace handleknot {

// Finitely generated ideal of Λ = Z[t1^{±1}, t2^{±1}]. Either the whole
// ring, or a list of nonzero generators in preferred form (sorted, unique).
// full_ring == false with no generators is the zero ideal.
struct IdealGens {
    bool full_ring = false;
    std::vector<LaurentPoly2> gens;

    bool is_zero() const { return !full_ring && gens.empty(); }
    bool operator==(const IdealGens&) const = default;
};

IdealGens make_ideal(std::vector<LaurentPoly2> gens);

// d-th elementary ideal of an s×n presentation matrix: zero if n-d > s,
// generated by the (n-d)-minors if 0 < n-d <= s, the full ring if n-d <= 0.
IdealGens elementary_ideal(const LambdaMatrix& B, int d);

// Repeatedly eliminates the row and column of a unit entry. The result
// presents the same module, so every elementary ideal is unchanged.
LambdaMatrix simplify_matrix(const LambdaMatrix& B);

// Determinant of a square matrix over Λ (cofactor expansion, memoized).
LaurentPoly2 det_lambda(const LambdaMatrix& M);

// GCD of the generators, in preferred form. Errors on the zero ideal.
LaurentPoly2 delta(const IdealGens& I);

// GCD over Z of the generators' augmentations is ±1?
bool unitary_test(const IdealGens& I);

// f and σf agree up to units? Errors on zero.
bool symmetry_test(const LaurentPoly2& f);

// --- mod-p Gröbner layer (used for ideal membership refutations) ---

// Polynomial over F_p in up to three variables, exponents -> coefficient in
// (0, p). Term order used by the algorithms is graded lex.
using Exp3 = std::array<int, 3>;
using FpPoly = std::map<Exp3, int>;

bool grlex_less(const Exp3& a, const Exp3& b);

FpPoly normal_form(const FpPoly& f, const std::vector<FpPoly>& basis, int p);

// Reduced Gröbner basis (monic, autoreduced, sorted by leading term).
std::vector<FpPoly> groebner_mod_p(std::vector<FpPoly> gens, int p);

// Image of a Laurent polynomial in F_p[t1,t2], exponents shifted to be
// nonnegative (a unit multiple, harmless for ideal membership).
FpPoly embed_mod_p(const LaurentPoly2& f, int p);

// Gröbner basis of the image of I in F_p[t1,t2,y] with y·t1·t2 = 1, so
// membership against it answers questions in the Laurent ring mod p.
std::vector<FpPoly> saturated_basis_mod_p(const IdealGens& I, int p);

// Does f lie in the image of I in F_p[t1^{±1}, t2^{±1}]? A "no" is sound
// over Λ. Builds the basis each call; reuse saturated_basis_mod_p in loops.
bool ideal_contains_mod_p(const IdealGens& I, const LaurentPoly2& f, int p);

// Is the image of I in F_p[t1^{±1}, t2^{±1}] the unit ideal?
bool is_unit_ideal_laurent_mod_p(const IdealGens& I, int p);

// --- principality ---

struct PrincipalityResult {
    enum class Kind { Yes, No, Unknown };
    Kind kind = Kind::Unknown;
    LaurentPoly2 generator;   // set when kind == Yes
    int witness_prime = 0;    // set when kind == No

    bool operator==(const PrincipalityResult&) const = default;
};

// Decides whether I is principal. I must be neither zero nor the full ring.
// Yes: I = (delta(I)). No: a prime p <= 97 witnesses delta(I) ∉ I mod p.
// Unknown: neither a certificate nor a refutation was found.
PrincipalityResult principality_check(const IdealGens& I);

// --- reports ---

enum class SymmetryVerdict { Yes, No, NotApplicable };

struct AlexanderReport {
    bool E0_is_zero = false;
    bool E1_is_zero = false;
    IdealGens E2;
    LaurentPoly2 delta2;
    bool unitary = false;
    PrincipalityResult principal;
    SymmetryVerdict symmetric = SymmetryVerdict::NotApplicable;
};

AlexanderReport alexander_report(const GroupPresentation& P);

// Presentation matrix of the torsion module built from Seifert data: A11 is
// 2g1-square, A22 is 2g2-square, A12 is 2g1×2g2, and A21 = ᵗA12:
//   [ ᵗA11 - t1·A11    (1-t1)·A12   ]
//   [ (1-t2)·A21       ᵗA22 - t2·A22 ]
LambdaMatrix seifert_presentation(const IntMatrix& A11, const IntMatrix& A12,
                                  const IntMatrix& A22);

}  // namespace handleknot
