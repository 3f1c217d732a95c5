#include "domino/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace domino {

using nlohmann::json;

namespace {

json shape_to_json(const Partition& shape) { return json(shape.parts()); }

std::string failure_name(RealizabilityFailure failure) {
    switch (failure) {
        case RealizabilityFailure::None: return "realizable";
        case RealizabilityFailure::NonIntegerValue: return "non-integer value";
        case RealizabilityFailure::NegativeOrbitCount: return "negative orbit count";
        case RealizabilityFailure::NonIntegerOrbitCount: return "non-integer orbit count";
    }
    return "unknown";
}

}  // namespace

json to_json(const DominoTableau& tableau) {
    json dominoes = json::array();
    auto sorted = tableau.dominoes;
    std::sort(sorted.begin(), sorted.end(),
              [](const Domino& a, const Domino& b) { return a.label < b.label; });
    for (const Domino& d : sorted) {
        dominoes.push_back({{"label", d.label},
                            {"row", d.anchor.row},
                            {"col", d.anchor.col},
                            {"orient", d.orient == Orientation::Horizontal ? "H" : "V"}});
    }
    return json{{"shape", shape_to_json(tableau.shape)}, {"dominoes", std::move(dominoes)}};
}

DominoTableau tableau_from_json(const json& j) {
    DominoTableau tableau;
    tableau.shape = Partition{j.at("shape").get<std::vector<int>>()};
    for (const json& dj : j.at("dominoes")) {
        Domino d;
        d.label = dj.at("label").get<int>();
        d.anchor = {dj.at("row").get<int>(), dj.at("col").get<int>()};
        const std::string orient = dj.at("orient").get<std::string>();
        if (orient == "H")
            d.orient = Orientation::Horizontal;
        else if (orient == "V")
            d.orient = Orientation::Vertical;
        else
            throw std::invalid_argument("tableau_from_json: orient must be \"H\" or \"V\"");
        tableau.dominoes.push_back(d);
    }
    return tableau;
}

json to_json(const IncreasingTableau& tableau) {
    return json{{"shape", shape_to_json(tableau.shape)}, {"rows", tableau.rows}};
}

json to_json(const SubsetState& state) {
    return json{{"n", state.n},
                {"S", state.subset},
                {"H", state.horizontal},
                {"V", state.vertical}};
}

json to_json(const CspReport& report) {
    json rows = json::array();
    for (const CspRow& row : report.rows) {
        rows.push_back({{"k", row.k},
                        {"fixed", to_decimal(row.fixed)},
                        {"poly", row.poly ? to_decimal(*row.poly) : "non-integer"},
                        {"closed", to_decimal(row.closed)},
                        {"match", row.match}});
    }
    return json{{"n", report.n},
                {"rows", std::move(rows)},
                {"verdict", report.pass ? "pass" : "fail"}};
}

json to_json(const OrbitReport& report) {
    json orbits = json::array();
    for (const Orbit& orbit : report.orbits) {
        std::string word(static_cast<std::size_t>(report.n), '1');
        for (int s : orbit.representative) word[static_cast<std::size_t>(s - 1)] = '0';
        orbits.push_back({{"size", orbit.size},
                          {"subset", orbit.representative},
                          {"word", std::move(word)}});
    }
    return json{{"n", report.n},
                {"total", to_decimal(report.total)},
                {"orbits", std::move(orbits)}};
}

json to_json(const RealizabilityReport& report) {
    json fixed = json::array();
    for (const auto& [d, count] : report.fixed_by_divisor)
        fixed.push_back({{"d", d}, {"fixed", to_decimal(count)}});
    json counts = json::array();
    for (const auto& [d, count] : report.orbit_counts)
        counts.push_back({{"d", d}, {"orbits", count.get_str()}});
    return json{{"order", report.order},
                {"fixed", std::move(fixed)},
                {"orbit_counts", std::move(counts)},
                {"verdict", failure_name(report.failure)}};
}

json to_json(const ConjectureProbe& probe) {
    return json{{"k", probe.k},
                {"n", probe.n},
                {"order", probe.order},
                {"f", probe.f.to_string()},
                {"f_at_1", to_decimal(probe.f.value_at_one())},
                {"count", to_decimal(probe.count)},
                {"division_exact", probe.division_exact},
                {"nonnegative_coeffs", probe.nonnegative_coeffs},
                {"count_matches", probe.count_matches},
                {"realizability", to_json(probe.report)},
                {"verdict", probe.pass() ? "pass" : "fail"}};
}

}  // namespace domino
