#include "domino/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace domino {

const Domino& DominoTableau::domino(int label) const {
    for (const Domino& d : dominoes)
        if (d.label == label) return d;
    throw std::out_of_range("DominoTableau::domino: no domino labeled " + std::to_string(label));
}

namespace {

std::string cell_str(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

std::vector<std::string> validate(const DominoTableau& tableau) {
    std::vector<std::string> violations;
    const Partition& shape = tableau.shape;

    if (shape.weight() % 2 != 0) violations.push_back("shape has odd weight");
    if (tableau.num_dominoes() != shape.weight() / 2)
        violations.push_back("expected " + std::to_string(shape.weight() / 2) + " dominoes, got " +
                             std::to_string(tableau.num_dominoes()));

    // Coverage map; also catches out-of-shape cells and overlaps.
    std::map<Cell, int> cover;
    for (const Domino& d : tableau.dominoes) {
        for (Cell c : {d.anchor, d.second()}) {
            if (!shape.contains(c.row, c.col)) {
                violations.push_back("domino " + std::to_string(d.label) + " covers cell " +
                                     cell_str(c) + " outside the shape");
                continue;
            }
            auto [it, inserted] = cover.emplace(c, d.label);
            if (!inserted)
                violations.push_back("cell " + cell_str(c) + " covered by dominoes " +
                                     std::to_string(it->second) + " and " + std::to_string(d.label));
        }
    }
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.part(r); ++c)
            if (!cover.contains({r, c}))
                violations.push_back("cell " + cell_str({r, c}) + " is uncovered");

    std::set<int> labels;
    for (const Domino& d : tableau.dominoes) {
        if (d.label < 1 || d.label > tableau.num_dominoes())
            violations.push_back("label " + std::to_string(d.label) + " outside [n]");
        else if (!labels.insert(d.label).second)
            violations.push_back("duplicate label " + std::to_string(d.label));
    }

    // Strict increase across domino boundaries, along rows and down columns.
    for (const auto& [cell, label] : cover) {
        for (Cell next : {Cell{cell.row, cell.col + 1}, Cell{cell.row + 1, cell.col}}) {
            auto it = cover.find(next);
            if (it == cover.end() || it->second == label) continue;
            if (it->second < label)
                violations.push_back("labels do not increase from " + cell_str(cell) + " to " +
                                     cell_str(next) + ": " + std::to_string(label) + " then " +
                                     std::to_string(it->second));
        }
    }
    return violations;
}

namespace {

class TilingEnumerator {
public:
    explicit TilingEnumerator(const Partition& shape) : shape_(shape) {
        covered_.resize(static_cast<std::size_t>(shape.length()));
        for (int r = 1; r <= shape.length(); ++r)
            covered_[static_cast<std::size_t>(r - 1)].assign(
                static_cast<std::size_t>(shape.part(r)), false);
    }

    std::vector<DominoTiling> run() {
        if (shape_.weight() % 2 != 0) return {};
        extend();
        return std::move(results_);
    }

private:
    bool is_free(Cell c) const {
        return shape_.contains(c.row, c.col) &&
               !covered_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    }

    void set_covered(Cell c, bool value) {
        covered_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = value;
    }

    bool first_uncovered(Cell& out) const {
        for (int r = 1; r <= shape_.length(); ++r)
            for (int c = 1; c <= shape_.part(r); ++c)
                if (!covered_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]) {
                    out = {r, c};
                    return true;
                }
        return false;
    }

    void extend() {
        Cell cell;
        if (!first_uncovered(cell)) {
            results_.push_back({shape_, current_});
            return;
        }
        for (Orientation orient : {Orientation::Horizontal, Orientation::Vertical}) {
            Placement p{cell, orient};
            if (!is_free(p.second())) continue;
            set_covered(cell, true);
            set_covered(p.second(), true);
            current_.push_back(p);
            extend();
            current_.pop_back();
            set_covered(cell, false);
            set_covered(p.second(), false);
        }
    }

    const Partition& shape_;
    std::vector<std::vector<bool>> covered_;
    std::vector<Placement> current_;
    std::vector<DominoTiling> results_;
};

}  // namespace

std::vector<DominoTiling> enumerate_tilings(const Partition& shape) {
    return TilingEnumerator(shape).run();
}

namespace {

// Enumerates all topological orders of the precedence relation; order[i] is
// the 1-based label given to domino i (generation order).
class ExtensionEnumerator {
public:
    explicit ExtensionEnumerator(const DominoTiling& tiling) : n_(tiling.dominoes.size()) {
        std::map<Cell, int> owner;
        for (std::size_t i = 0; i < n_; ++i) {
            const Placement& p = tiling.dominoes[i];
            owner[p.anchor] = static_cast<int>(i);
            owner[p.second()] = static_cast<int>(i);
        }
        succ_.resize(n_);
        indegree_.assign(n_, 0);
        std::set<std::pair<int, int>> edges;
        for (const auto& [cell, i] : owner) {
            for (Cell next : {Cell{cell.row, cell.col + 1}, Cell{cell.row + 1, cell.col}}) {
                auto it = owner.find(next);
                if (it == owner.end() || it->second == i) continue;
                if (edges.emplace(i, it->second).second) {
                    succ_[static_cast<std::size_t>(i)].push_back(it->second);
                    ++indegree_[static_cast<std::size_t>(it->second)];
                }
            }
        }
    }

    std::vector<std::vector<int>> run() {
        labels_.assign(n_, 0);
        extend(1);
        return std::move(results_);
    }

private:
    void extend(int next_label) {
        if (next_label > static_cast<int>(n_)) {
            results_.push_back(labels_);
            return;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (labels_[i] != 0 || indegree_[i] != 0) continue;
            labels_[i] = next_label;
            for (int s : succ_[i]) --indegree_[static_cast<std::size_t>(s)];
            extend(next_label + 1);
            for (int s : succ_[i]) ++indegree_[static_cast<std::size_t>(s)];
            labels_[i] = 0;
        }
    }

    std::size_t n_;
    std::vector<std::vector<int>> succ_;
    std::vector<int> indegree_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> results_;
};

}  // namespace

std::vector<DominoTableau> linear_extensions(const DominoTiling& tiling) {
    auto labelings = ExtensionEnumerator(tiling).run();
    // Canonical order: lexicographic in the label sequence read in
    // domino-generation order.
    std::sort(labelings.begin(), labelings.end());
    std::vector<DominoTableau> out;
    out.reserve(labelings.size());
    for (const auto& labels : labelings) {
        DominoTableau t{tiling.shape, {}};
        t.dominoes.reserve(tiling.dominoes.size());
        for (std::size_t i = 0; i < tiling.dominoes.size(); ++i)
            t.dominoes.push_back({labels[i], tiling.dominoes[i].anchor, tiling.dominoes[i].orient});
        std::sort(t.dominoes.begin(), t.dominoes.end(),
                  [](const Domino& a, const Domino& b) { return a.label < b.label; });
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<DominoTableau> enumerate_tableaux(const Partition& shape) {
    std::vector<DominoTableau> out;
    for (const DominoTiling& tiling : enumerate_tilings(shape)) {
        auto labeled = linear_extensions(tiling);
        out.insert(out.end(), std::make_move_iterator(labeled.begin()),
                   std::make_move_iterator(labeled.end()));
    }
    return out;
}

std::vector<Stacking> stackings(const DominoTableau& tableau) {
    if (tableau.shape.length() != 2 || !tableau.shape.is_rectangle())
        throw std::invalid_argument("stackings: shape must be 2xn");
    std::vector<int> stack_cols;
    for (const Domino& d : tableau.dominoes)
        if (d.orient == Orientation::Horizontal && d.anchor.row == 1)
            stack_cols.push_back(d.anchor.col);
    std::sort(stack_cols.begin(), stack_cols.end());
    std::vector<Stacking> out;
    for (std::size_t i = 0; i < stack_cols.size(); ++i) {
        if (!out.empty() && out.back().start_col + 2 * out.back().width == stack_cols[i])
            ++out.back().width;
        else
            out.push_back({stack_cols[i], 1});
    }
    return out;
}

std::vector<int> descent_set(const DominoTableau& tableau) {
    const int n = tableau.num_dominoes();
    std::vector<Cell> northeast(static_cast<std::size_t>(n) + 1);
    for (const Domino& d : tableau.dominoes) {
        if (d.label < 1 || d.label > n)
            throw std::invalid_argument("descent_set: labels must lie in [n]");
        northeast[static_cast<std::size_t>(d.label)] = d.northeast();
    }
    std::vector<int> out;
    for (int i = 1; i < n; ++i)
        if (northeast[static_cast<std::size_t>(i + 1)].row > northeast[static_cast<std::size_t>(i)].row)
            out.push_back(i);
    return out;
}

long maj(const DominoTableau& tableau) {
    long sum = 0;
    for (int i : descent_set(tableau)) sum += i;
    return sum;
}

QPolynomial maj_polynomial(const Partition& shape) {
    std::vector<BigInt> coeffs;
    for (const DominoTableau& t : enumerate_tableaux(shape)) {
        const auto m = static_cast<std::size_t>(maj(t));
        if (coeffs.size() <= m) coeffs.resize(m + 1, BigInt{0});
        ++coeffs[m];
    }
    return QPolynomial{std::move(coeffs)};
}

}  // namespace domino
