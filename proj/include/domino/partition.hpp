#pragma once

#include <compare>
#include <string>
#include <vector>

namespace domino {

// Integer partition in English notation: weakly decreasing positive parts,
// row 1 on top. The default-constructed partition is the empty shape.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition rectangle(int rows, int cols);
    // (arm, 1^leg); leg = 0 gives a single row.
    static Partition hook(int arm, int leg);
    // Comma-separated parts, e.g. "5,5,3,3,2"; "" parses to the empty shape.
    static Partition parse(const std::string& text);

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int row) const;  // 1-indexed; 0 beyond the last row
    bool empty() const { return parts_.empty(); }
    bool contains(int row, int col) const { return row >= 1 && col >= 1 && col <= part(row); }

    Partition conjugate() const;
    bool is_rectangle() const;
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

}  // namespace domino
