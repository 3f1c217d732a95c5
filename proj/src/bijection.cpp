#include "domino/bijection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace domino {

std::vector<std::string> validate(const IncreasingTableau& tableau) {
    std::vector<std::string> violations;
    if (static_cast<int>(tableau.rows.size()) != tableau.shape.length())
        violations.push_back("row count does not match shape");
    std::set<int> seen;
    for (std::size_t r = 0; r < tableau.rows.size(); ++r) {
        const auto& row = tableau.rows[r];
        if (static_cast<int>(row.size()) != tableau.shape.part(static_cast<int>(r) + 1))
            violations.push_back("row " + std::to_string(r + 1) + " has wrong length");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!seen.insert(row[c]).second)
                violations.push_back("duplicate entry " + std::to_string(row[c]));
            if (c > 0 && row[c] <= row[c - 1])
                violations.push_back("row " + std::to_string(r + 1) + " not increasing at column " +
                                     std::to_string(c + 1));
            if (r > 0 && c < tableau.rows[r - 1].size() && row[c] <= tableau.rows[r - 1][c])
                violations.push_back("column " + std::to_string(c + 1) +
                                     " not increasing at row " + std::to_string(r + 1));
        }
    }
    return violations;
}

namespace {

void require_two_by_n(const Partition& shape, const char* who) {
    if (shape.length() != 2 || !shape.is_rectangle())
        throw std::invalid_argument(std::string(who) + ": shape must be 2xn");
}

}  // namespace

SubsetState phi(const DominoTableau& tableau) {
    require_two_by_n(tableau.shape, "phi");
    const int n = tableau.shape.part(1);
    SubsetState state;
    state.n = n;
    std::vector<int> verticals;
    for (const Domino& d : tableau.dominoes) {
        if (d.orient == Orientation::Vertical)
            verticals.push_back(d.label);
        else if (d.anchor.row == 2)
            state.horizontal.push_back(d.label);
    }
    std::sort(state.horizontal.begin(), state.horizontal.end());
    std::sort(verticals.begin(), verticals.end());
    const std::size_t target = static_cast<std::size_t>(n / 2);
    for (std::size_t i = 0; state.horizontal.size() + state.vertical.size() < target; ++i)
        state.vertical.push_back(verticals.at(i));
    state.subset = state.horizontal;
    state.subset.insert(state.subset.end(), state.vertical.begin(), state.vertical.end());
    std::sort(state.subset.begin(), state.subset.end());
    return state;
}

std::pair<std::vector<int>, std::vector<int>> hv_split(int n, const std::vector<int>& subset) {
    if (n < 1) throw std::invalid_argument("hv_split: n must be positive");
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (static_cast<int>(sorted.size()) != n / 2)
        throw std::invalid_argument("hv_split: subset must have floor(n/2) elements");
    if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > n))
        throw std::invalid_argument("hv_split: subset elements must lie in [n]");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("hv_split: subset has repeated elements");

    std::vector<int> horizontal, vertical;
    for (int s : sorted) {
        const int placed = 2 * static_cast<int>(horizontal.size()) +
                           static_cast<int>(vertical.size());
        const int x = s - placed;
        if (x == 1)
            vertical.push_back(s);
        else if (x > 1)
            horizontal.push_back(s);
        else
            throw std::logic_error("hv_split: x_s < 1, input is internally inconsistent");
    }
    return {std::move(horizontal), std::move(vertical)};
}

namespace {

// The unique 2xn tableau whose bottom horizontal dominoes carry exactly the
// given labels. Row-1 dominoes take the remaining labels in increasing order
// left to right; scanning those labels downward, one becomes a stack top
// whenever more bottom labels exceed it than tops have been chosen.
DominoTableau build_from_bottom_labels(int n, const std::vector<int>& bottoms) {
    std::vector<bool> is_bottom(static_cast<std::size_t>(n) + 1, false);
    for (int b : bottoms) is_bottom[static_cast<std::size_t>(b)] = true;

    std::vector<int> row1_labels;
    for (int v = 1; v <= n; ++v)
        if (!is_bottom[static_cast<std::size_t>(v)]) row1_labels.push_back(v);

    std::set<int> tops;
    {
        std::size_t bi = bottoms.size();
        int larger_bottoms = 0;
        int chosen = 0;
        for (auto it = row1_labels.rbegin(); it != row1_labels.rend(); ++it) {
            while (bi > 0 && bottoms[bi - 1] > *it) {
                --bi;
                ++larger_bottoms;
            }
            if (larger_bottoms > chosen) {
                tops.insert(*it);
                ++chosen;
            }
        }
        if (chosen != static_cast<int>(bottoms.size()))
            throw std::logic_error("phi_inverse: bottom labels admit no tableau");
    }

    // Stack tops and bottoms pair up in ascending order.
    DominoTableau tableau{Partition::rectangle(2, n), {}};
    int col = 1;
    std::size_t next_stack = 0;
    for (int label : row1_labels) {
        if (tops.contains(label)) {
            const int bottom = bottoms[next_stack];
            if (label >= bottom)
                throw std::logic_error("phi_inverse: stack top not below its bottom label");
            tableau.dominoes.push_back({label, {1, col}, Orientation::Horizontal});
            tableau.dominoes.push_back({bottom, {2, col}, Orientation::Horizontal});
            ++next_stack;
            col += 2;
        } else {
            tableau.dominoes.push_back({label, {1, col}, Orientation::Vertical});
            col += 1;
        }
    }
    std::sort(tableau.dominoes.begin(), tableau.dominoes.end(),
              [](const Domino& a, const Domino& b) { return a.label < b.label; });
    return tableau;
}

}  // namespace

DominoTableau phi_inverse(int n, const std::vector<int>& subset) {
    auto [horizontal, vertical] = hv_split(n, subset);
    return build_from_bottom_labels(n, horizontal);
}

std::vector<int> reduced_subset(const DominoTableau& tableau) {
    return phi(tableau).horizontal;
}

BinaryWord to_word(const DominoTableau& tableau) {
    const SubsetState state = phi(tableau);
    std::string bits(static_cast<std::size_t>(state.n), '1');
    for (int s : state.subset) bits[static_cast<std::size_t>(s - 1)] = '0';
    return BinaryWord{bits};
}

DominoTableau from_word(const BinaryWord& word) {
    const int n = word.length();
    if (word.zeros() != n / 2)
        throw std::invalid_argument("from_word: word must have floor(n/2) zeros");
    std::vector<int> subset;
    for (int i = 1; i <= n; ++i)
        if (word.letter(i) == '0') subset.push_back(i);
    return phi_inverse(n, subset);
}

std::pair<Partition, Partition> two_quotient(const Partition& shape) {
    if (shape.weight() % 2 != 0) throw std::invalid_argument("two_quotient: |shape| must be even");
    const int len = shape.length();
    std::vector<long> beta(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i)
        beta[static_cast<std::size_t>(i - 1)] = shape.part(i) + len - i;

    // Replace, right to left, the even beta-numbers with 0,2,4,... and the
    // odd ones with 1,3,5,...
    std::vector<long> replaced(static_cast<std::size_t>(len));
    long next_even = 0, next_odd = 1;
    for (int i = len - 1; i >= 0; --i) {
        if (beta[static_cast<std::size_t>(i)] % 2 == 0) {
            replaced[static_cast<std::size_t>(i)] = next_even;
            next_even += 2;
        } else {
            replaced[static_cast<std::size_t>(i)] = next_odd;
            next_odd += 2;
        }
    }

    auto extract = [&](long parity) {
        std::vector<int> parts;
        for (int i = 0; i < len; ++i) {
            if (beta[static_cast<std::size_t>(i)] % 2 != parity) continue;
            const long part = (beta[static_cast<std::size_t>(i)] -
                               replaced[static_cast<std::size_t>(i)]) / 2;
            if (part > 0) parts.push_back(static_cast<int>(part));
        }
        std::sort(parts.rbegin(), parts.rend());
        return Partition{std::move(parts)};
    };
    return {extract(1), extract(0)};
}

std::vector<TypedDomino> classify_types(const DominoTableau& tableau) {
    std::vector<TypedDomino> out;
    out.reserve(tableau.dominoes.size());
    for (const Domino& d : tableau.dominoes) {
        const Cell even_cell = content(d.anchor) % 2 == 0 ? d.anchor : d.second();
        const Cell marker = d.orient == Orientation::Vertical ? d.anchor : d.second();
        const DominoType dtype =
            content(marker) % 2 == 0 ? DominoType::TypeI : DominoType::TypeII;
        out.push_back({d, dtype, content(even_cell)});
    }
    return out;
}

namespace {

IncreasingTableau slide_to_tableau(const std::vector<TypedDomino>& dominoes) {
    // Bucket by target diagonal = even_cell_content / 2, then place top-down
    // by the even cell's source row.
    std::map<int, std::vector<std::pair<int, int>>> diagonals;  // diag -> (source row, label)
    for (const TypedDomino& td : dominoes) {
        const Cell even_cell =
            content(td.domino.anchor) % 2 == 0 ? td.domino.anchor : td.domino.second();
        diagonals[td.even_cell_content / 2].push_back({even_cell.row, td.domino.label});
    }
    std::map<Cell, int> entries;
    for (auto& [diag, group] : diagonals) {
        std::sort(group.begin(), group.end());
        for (std::size_t j = 0; j < group.size(); ++j) {
            const int row = static_cast<int>(j) + 1 + std::max(0, -diag);
            const int col = static_cast<int>(j) + 1 + std::max(0, diag);
            entries[{row, col}] = group[j].second;
        }
    }

    IncreasingTableau result;
    std::vector<int> parts;
    for (const auto& [cell, label] : entries) {
        if (cell.row > static_cast<int>(result.rows.size())) {
            if (cell.row != static_cast<int>(result.rows.size()) + 1 || cell.col != 1)
                throw std::logic_error("gamma: slide produced a non-partition filling");
            result.rows.emplace_back();
        }
        auto& row = result.rows.back();
        if (cell.col != static_cast<int>(row.size()) + 1)
            throw std::logic_error("gamma: slide produced a non-partition filling");
        row.push_back(label);
    }
    for (const auto& row : result.rows) parts.push_back(static_cast<int>(row.size()));
    try {
        result.shape = Partition{std::move(parts)};
    } catch (const std::invalid_argument&) {
        throw std::logic_error("gamma: slide produced a non-partition filling");
    }
    if (!validate(result).empty())
        throw std::logic_error("gamma: slide produced a non-increasing filling");
    return result;
}

}  // namespace

std::pair<IncreasingTableau, IncreasingTableau> gamma(const DominoTableau& tableau) {
    std::vector<TypedDomino> type1, type2;
    for (const TypedDomino& td : classify_types(tableau))
        (td.dtype == DominoType::TypeI ? type1 : type2).push_back(td);
    return {slide_to_tableau(type1), slide_to_tableau(type2)};
}

std::vector<std::vector<int>> hook_lengths(const Partition& shape) {
    const Partition conj = shape.conjugate();
    std::vector<std::vector<int>> out;
    for (int r = 1; r <= shape.length(); ++r) {
        std::vector<int> row;
        for (int c = 1; c <= shape.part(r); ++c)
            row.push_back(shape.part(r) - c + conj.part(c) - r + 1);
        out.push_back(std::move(row));
    }
    return out;
}

BigInt num_syt(const Partition& shape) {
    BigInt result = factorial(static_cast<unsigned long>(shape.weight()));
    for (const auto& row : hook_lengths(shape))
        for (int h : row) result /= h;
    return result;
}

BigInt count_rectangular(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("count_rectangular: k, n must be positive");
    const int half_up = (n + 1) / 2;
    const int half_down = n / 2;
    const BigInt f_mu = num_syt(Partition::rectangle(k, half_up));
    const BigInt f_nu = half_down == 0 ? BigInt{1} : num_syt(Partition::rectangle(k, half_down));
    return f_mu * f_nu * binomial(static_cast<long>(k) * n, static_cast<long>(k) * half_down);
}

BigInt count_hook(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("count_hook: n, m must be positive");
    if ((n + m) % 2 != 0) throw std::invalid_argument("count_hook: n + m must be even");
    return num_syt(Partition::hook((n + 1) / 2, m / 2));
}

namespace {

BigInt composition_sum(int n, bool with_catalan) {
    BigInt total = 1;  // empty composition: binom(n+1, 0)
    for (int j = 1; 2 * j <= n; ++j) {
        for (const Composition& alpha : compositions(j)) {
            const int l = alpha.length();
            if (2 * j + l - 1 > n) continue;
            BigInt term = binomial(n - 2 * j + 1, l);
            if (with_catalan)
                for (int part : alpha.parts) term *= catalan(part);
            total += term;
        }
    }
    return total;
}

}  // namespace

BigInt catalan_composition_count(int n) {
    if (n < 1) throw std::invalid_argument("catalan_composition_count: n must be positive");
    return composition_sum(n, true);
}

BigInt fibonacci_composition_count(int n) {
    if (n < 1) throw std::invalid_argument("fibonacci_composition_count: n must be positive");
    return composition_sum(n, false);
}

}  // namespace domino
