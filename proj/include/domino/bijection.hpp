#pragma once

#include <utility>
#include <vector>

#include "domino/bigint.hpp"
#include "domino/combinatorics.hpp"
#include "domino/partition.hpp"
#include "domino/tableaux.hpp"

namespace domino {

// Image of Phi: a floor(n/2)-element subset of [n] together with its split
// into bottom-horizontal labels H and vertical labels V.
struct SubsetState {
    int n = 0;
    std::vector<int> subset;      // S, ascending
    std::vector<int> horizontal;  // H, ascending
    std::vector<int> vertical;    // V, ascending
    auto operator<=>(const SubsetState&) const = default;
};

// Filling of a partition shape with distinct entries that increase along rows
// and down columns.
struct IncreasingTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
    auto operator<=>(const IncreasingTableau&) const = default;
};

// Empty result means valid.
std::vector<std::string> validate(const IncreasingTableau& tableau);

enum class DominoType { TypeI, TypeII };

struct TypedDomino {
    Domino domino;
    DominoType dtype = DominoType::TypeI;
    int even_cell_content = 0;  // content of the even-content cell, always even
    auto operator<=>(const TypedDomino&) const = default;
};

// Bottom-horizontal labels, padded with the smallest vertical labels up to
// floor(n/2) elements. Shape must be 2xn.
SubsetState phi(const DominoTableau& tableau);

// Rebuilds the unique 2xn tableau from a floor(n/2)-subset of [n]: each
// s in S with x_s = s - (2|H_s| + |V_s|) equal to 1 is vertical, larger is a
// bottom horizontal.
DominoTableau phi_inverse(int n, const std::vector<int>& subset);

// The H/V classification used by phi_inverse, as (H, V).
std::pair<std::vector<int>, std::vector<int>> hv_split(int n, const std::vector<int>& subset);

// The H part of phi(tableau).
std::vector<int> reduced_subset(const DominoTableau& tableau);

// Letter i is 0 exactly when i lies in phi(tableau).
BinaryWord to_word(const DominoTableau& tableau);
DominoTableau from_word(const BinaryWord& word);

// 2-quotient of an even-weight shape via beta-numbers; the pair is unordered
// (first component derived from the odd beta-numbers).
std::pair<Partition, Partition> two_quotient(const Partition& shape);

// Diagonal classification: a vertical domino is Type I when its top cell has
// even content; a horizontal domino is Type I when its right cell has even
// content.
std::vector<TypedDomino> classify_types(const DominoTableau& tableau);

// Carre-Leclerc map: splits the tableau by type and slides each class up its
// diagonals; returns the (Type I, Type II) pair of increasing tableaux.
std::pair<IncreasingTableau, IncreasingTableau> gamma(const DominoTableau& tableau);

// Hook lengths of each cell, arranged like the shape's rows.
std::vector<std::vector<int>> hook_lengths(const Partition& shape);
// Number of standard Young tableaux via the hook length formula.
BigInt num_syt(const Partition& shape);

// #DT(n^{2k}) = f^mu f^nu binom(kn, k floor(n/2)) for the rectangle quotient
// shapes mu = k x ceil(n/2), nu = k x floor(n/2).
BigInt count_rectangular(int k, int n);

// #DT(n, 1^m) for n+m even, by the hook length formula on the quotient hook
// (ceil(n/2), 1^{floor(m/2)}).
BigInt count_hook(int n, int m);

// Sum over all compositions alpha of j with l parts, 2j + l - 1 <= n, of
// binom(n-2j+1, l) C_{alpha_1} ... C_{alpha_l}; the empty composition
// contributes binom(n+1, 0) = 1. Equals binom(n, floor(n/2)).
BigInt catalan_composition_count(int n);
// Same sum without the Catalan factors; equals F_n.
BigInt fibonacci_composition_count(int n);

}  // namespace domino
