#pragma once

#include <compare>
#include <string>
#include <vector>

#include "domino/partition.hpp"
#include "domino/qpolynomial.hpp"

namespace domino {

// 1-indexed cell, row 1 at top.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Diagonal index of a cell.
inline int content(Cell c) { return c.col - c.row; }

enum class Orientation { Horizontal, Vertical };

// Unlabeled domino placement: the anchor is the top-left covered cell.
struct Placement {
    Cell anchor;
    Orientation orient = Orientation::Horizontal;

    Cell second() const {
        return orient == Orientation::Horizontal ? Cell{anchor.row, anchor.col + 1}
                                                 : Cell{anchor.row + 1, anchor.col};
    }
    auto operator<=>(const Placement&) const = default;
};

struct Domino {
    int label = 0;
    Cell anchor;
    Orientation orient = Orientation::Horizontal;

    Cell second() const { return Placement{anchor, orient}.second(); }
    Cell northeast() const {
        return orient == Orientation::Horizontal ? second() : anchor;
    }
    Placement placement() const { return {anchor, orient}; }
    auto operator<=>(const Domino&) const = default;
};

struct DominoTiling {
    Partition shape;
    std::vector<Placement> dominoes;  // in generation order (lexicographic anchors)
    auto operator<=>(const DominoTiling&) const = default;
};

// Candidate domino tableau; validity is checked by validate(), not enforced
// on construction.
struct DominoTableau {
    Partition shape;
    std::vector<Domino> dominoes;  // sorted by label for tableaux we produce

    int num_dominoes() const { return static_cast<int>(dominoes.size()); }
    // Domino with the given label; throws if absent.
    const Domino& domino(int label) const;
    auto operator<=>(const DominoTableau&) const = default;
};

// Maximal run of consecutive horizontal stacks in a 2xn tableau; occupies
// columns [start_col, start_col + 2*width).
struct Stacking {
    int start_col = 0;
    int width = 0;
    auto operator<=>(const Stacking&) const = default;
};

// Empty result means valid; otherwise one message per violation found
// (coverage, overlap, label set, row/column increase).
std::vector<std::string> validate(const DominoTableau& tableau);

// All domino tilings of the shape by backtracking that always covers the
// first uncovered cell in row-major order, horizontal placement tried before
// vertical. Empty when |shape| is odd.
std::vector<DominoTiling> enumerate_tilings(const Partition& shape);

// All labelings of a fixed tiling: linear extensions of the precedence
// relation u < v whenever a cell of u is immediately left of or immediately
// above a cell of v. Sorted by the label sequence in domino-generation order.
std::vector<DominoTableau> linear_extensions(const DominoTiling& tiling);

// Concatenation of linear_extensions over enumerate_tilings.
std::vector<DominoTableau> enumerate_tableaux(const Partition& shape);

// Left-to-right stackings of a 2xn tableau; throws for other shapes.
std::vector<Stacking> stackings(const DominoTableau& tableau);

// i is a descent when the northeast-most cell of domino i+1 lies in a row
// strictly below the northeast-most cell of domino i.
std::vector<int> descent_set(const DominoTableau& tableau);
long maj(const DominoTableau& tableau);

// Sum of q^maj over all domino tableaux of the shape.
QPolynomial maj_polynomial(const Partition& shape);

}  // namespace domino
