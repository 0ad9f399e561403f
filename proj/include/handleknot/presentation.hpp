#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "handleknot/freegroup.hpp"
#include "handleknot/laurent.hpp"

namespace handleknot {

struct GroupPresentation {
    int gens = 0;
    std::vector<FreeWord> relators;  // rank == gens each
};

// Finite Z-linear combinations of group elements.
class GroupRingElement {
public:
    GroupRingElement() = default;
    static GroupRingElement of_word(const FreeWord& w, Int c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<FreeWord, Int>& terms() const { return terms_; }

    GroupRingElement operator+(const GroupRingElement&) const;
    GroupRingElement operator-(const GroupRingElement&) const;
    GroupRingElement operator-() const;
    GroupRingElement times_word_left(const FreeWord& w) const;
    GroupRingElement times_word_right(const FreeWord& w) const;

    bool operator==(const GroupRingElement&) const = default;

    void add(const FreeWord& w, const Int& c);

private:
    std::map<FreeWord, Int> terms_;
};

// ∂_j with ∂_j x_j = 1, ∂_j x_j^{-1} = -x_j^{-1}, ∂_j(uv) = ∂_j u + u·∂_j v.
GroupRingElement fox_derivative(const FreeWord& r, int j);

using IntMatrix = std::vector<std::vector<Int>>;

struct SNFResult {
    IntMatrix D, U, V;  // U*A*V = D, U and V unimodular, diagonal divisibility
};

SNFResult smith_normal_form(const IntMatrix& A);

struct AbelianizationMap {
    std::vector<ExpPair> images;  // generator i-1 -> t1^a t2^b
};

class AbelianizationError : public std::runtime_error {
public:
    explicit AbelianizationError(std::vector<Int> factors);
    const std::vector<Int>& invariant_factors() const { return factors_; }

private:
    std::vector<Int> factors_;
};

// Requires the abelianization of P to be free of rank 2.
AbelianizationMap abelianization_map(const GroupPresentation& P);

LaurentPoly2 abelianized(const AbelianizationMap& k, const FreeWord& w);
LaurentPoly2 abelianized(const AbelianizationMap& k, const GroupRingElement& e);

using LambdaMatrix = std::vector<std::vector<LaurentPoly2>>;

// s×n matrix of abelianized Fox derivatives, rows indexed by relators.
LambdaMatrix alexander_matrix(const GroupPresentation& P);

int deficiency(const GroupPresentation& P);

// File format: "gens: n" then one "rel: <word>" line per relator (x1..xn).
GroupPresentation parse_presentation(const std::string& text);
std::string format_presentation(const GroupPresentation& P);

}  // namespace handleknot
