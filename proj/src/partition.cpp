#include "domino/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace domino {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::rectangle(int rows, int cols) {
    if (rows < 0 || (rows > 0 && cols < 1))
        throw std::invalid_argument("Partition::rectangle: bad dimensions");
    return Partition{std::vector<int>(static_cast<std::size_t>(rows), cols)};
}

Partition Partition::hook(int arm, int leg) {
    if (arm < 1 || leg < 0) throw std::invalid_argument("Partition::hook: bad dimensions");
    std::vector<int> parts{arm};
    parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
    return Partition{std::move(parts)};
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw std::invalid_argument("Partition::parse: empty part");
        std::size_t used = 0;
        int value = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("Partition::parse: bad part '" + item + "'");
        parts.push_back(value);
    }
    return Partition{std::move(parts)};
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int row) const {
    if (row < 1 || row > length()) return 0;
    return parts_[static_cast<std::size_t>(row - 1)];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition{std::move(out)};
}

bool Partition::is_rectangle() const {
    return parts_.empty() || parts_.front() == parts_.back();
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

}  // namespace domino
