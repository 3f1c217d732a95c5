#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "domino/bigint.hpp"
#include "domino/bijection.hpp"
#include "domino/qpolynomial.hpp"
#include "domino/tableaux.hpp"

namespace domino {

// Elementwise shift s -> s + t with representatives in {1, ..., n}.
std::vector<int> shift_subset(const std::vector<int>& subset, int t, int n);

// The cyclic action on DT(n^2) conjugated through phi.
DominoTableau act(const DominoTableau& tableau, int t);

struct Orbit {
    int size = 0;
    std::vector<int> representative;  // lexicographically smallest subset in the orbit
    auto operator<=>(const Orbit&) const = default;
};

struct OrbitReport {
    int n = 0;
    std::vector<Orbit> orbits;  // ordered by representative
    BigInt total;               // = binom(n, floor(n/2))
};

// Full orbit decomposition of DT(n^2) under the shift action.
OrbitReport orbits(int n);

// #{D in DT(n^2) : g^k(D) = D} by exhaustive action over all subsets.
BigInt fixed_point_count_exhaustive(int n, int k);
// The closed form from the cyclic sieving proof: with k' = gcd(n, k), odd n
// gives 0 unless k = n; even n gives binom(k', k'/2) for even k', else 0.
BigInt fixed_point_count_closed(int n, int k);
// Exhaustive when n <= exhaustive_cap, closed form beyond.
BigInt fixed_point_count(int n, int k, int exhaustive_cap = 16);

struct CspRow {
    int k = 0;
    BigInt fixed;                  // fixed-point count (see CspReport.exhaustive)
    std::optional<BigInt> poly;    // exact evaluation of the maj polynomial
    BigInt closed;                 // closed-form root-of-unity value
    bool match = false;
};

struct CspReport {
    int n = 0;
    std::vector<CspRow> rows;
    bool exhaustive = true;  // false when n exceeded the cap and closed forms were used
    bool pass = false;
};

// Compares, for each k in [1, n], the exhaustive fixed-point count, the exact
// evaluation of sum q^maj(D) at e^{2 pi i k / n}, and the closed form.
CspReport verify_csp(int n, int exhaustive_cap = 16);

enum class RealizabilityFailure {
    None,
    NonIntegerValue,      // some evaluation F(d) is not a rational integer
    NegativeOrbitCount,   // Moebius inversion gives a negative orbit count
    NonIntegerOrbitCount  // Moebius inversion gives a fractional orbit count
};

struct RealizabilityReport {
    long order = 0;  // N
    // d -> F(d) = f at a root of unity of order N/d (fixed points of g^d).
    std::vector<std::pair<long, BigInt>> fixed_by_divisor;
    // d -> o_d = (1/d) sum_{e|d} mu(d/e) F(e).
    std::vector<std::pair<long, Rational>> orbit_counts;
    RealizabilityFailure failure = RealizabilityFailure::None;

    bool realizable() const { return failure == RealizabilityFailure::None; }
};

// Necessary-and-sufficient test for the existence of a cyclic action of order
// N whose fixed-point profile matches f at roots of unity: all Moebius-
// inverted orbit counts must be nonnegative integers.
RealizabilityReport realizability(const QPolynomial& f, long order);

struct ConjectureProbe {
    int k = 0;
    int n = 0;
    long order = 0;
    QPolynomial f;
    bool division_exact = false;
    bool nonnegative_coeffs = false;
    bool count_matches = false;  // f(1) == count_rectangular(k, n)
    BigInt count;
    RealizabilityReport report;

    bool pass() const {
        return division_exact && nonnegative_coeffs && count_matches && report.realizable();
    }
};

// Builds the conjectured sieving polynomial for DT(n^{2k}) -- the q-analogue
// hook products for both quotient rectangles times qbin(kn, k floor(n/2)) --
// and checks every necessary condition at the given order (default kn).
ConjectureProbe conjecture_probe(int k, int n, std::optional<long> order = std::nullopt);

}  // namespace domino
