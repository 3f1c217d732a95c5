#include "domino/sieving.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace domino {

std::vector<int> shift_subset(const std::vector<int>& subset, int t, int n) {
    if (n < 1) throw std::invalid_argument("shift_subset: n must be positive");
    std::vector<int> out;
    out.reserve(subset.size());
    for (int s : subset) {
        if (s < 1 || s > n) throw std::invalid_argument("shift_subset: element outside [n]");
        out.push_back((s - 1 + (t % n) + n) % n + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DominoTableau act(const DominoTableau& tableau, int t) {
    const SubsetState state = phi(tableau);
    return phi_inverse(state.n, shift_subset(state.subset, t, state.n));
}

namespace {

// Visits all floor(n/2)-subsets of [n] in lexicographic order.
template <typename Fn>
void for_each_subset(int n, Fn&& fn) {
    const int k = n / 2;
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), 1);
    while (true) {
        fn(subset);
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

OrbitReport orbits(int n) {
    if (n < 1) throw std::invalid_argument("orbits: n must be positive");
    OrbitReport report;
    report.n = n;
    report.total = binomial(n, n / 2);
    std::set<std::vector<int>> seen;
    for_each_subset(n, [&](const std::vector<int>& subset) {
        if (seen.contains(subset)) return;
        // Lexicographic subset enumeration makes the first-seen member the
        // canonical representative.
        Orbit orbit{0, subset};
        std::vector<int> current = subset;
        do {
            seen.insert(current);
            ++orbit.size;
            current = shift_subset(current, 1, n);
        } while (current != subset);
        report.orbits.push_back(std::move(orbit));
    });
    return report;
}

BigInt fixed_point_count_exhaustive(int n, int k) {
    if (n < 1) throw std::invalid_argument("fixed_point_count: n must be positive");
    if (k < 1 || k > n) throw std::invalid_argument("fixed_point_count: k outside [1,n]");
    BigInt count = 0;
    for_each_subset(n, [&](const std::vector<int>& subset) {
        if (shift_subset(subset, k, n) == subset) ++count;
    });
    return count;
}

BigInt fixed_point_count_closed(int n, int k) {
    if (n < 1) throw std::invalid_argument("fixed_point_count: n must be positive");
    if (k < 1 || k > n) throw std::invalid_argument("fixed_point_count: k outside [1,n]");
    const int g = std::gcd(n, k);
    if (n % 2 != 0) return g == n ? binomial(n, n / 2) : BigInt{0};
    if (g % 2 != 0) return 0;
    return binomial(g, g / 2);
}

BigInt fixed_point_count(int n, int k, int exhaustive_cap) {
    return n <= exhaustive_cap ? fixed_point_count_exhaustive(n, k)
                               : fixed_point_count_closed(n, k);
}

CspReport verify_csp(int n, int exhaustive_cap) {
    if (n < 1) throw std::invalid_argument("verify_csp: n must be positive");
    CspReport report;
    report.n = n;
    report.exhaustive = n <= exhaustive_cap;
    const QPolynomial f = maj_polynomial(Partition::rectangle(2, n));
    report.pass = true;
    for (int k = 1; k <= n; ++k) {
        CspRow row;
        row.k = k;
        row.fixed = report.exhaustive ? fixed_point_count_exhaustive(n, k)
                                      : fixed_point_count_closed(n, k);
        row.poly = eval_at_root_exact(f, n / std::gcd(n, k));
        row.closed = eval_qbin_central_closed(n, k);
        row.match = row.poly.has_value() && *row.poly == row.fixed && row.closed == row.fixed;
        report.pass = report.pass && row.match;
        report.rows.push_back(std::move(row));
    }
    return report;
}

RealizabilityReport realizability(const QPolynomial& f, long order) {
    if (order < 1) throw std::invalid_argument("realizability: order must be positive");
    RealizabilityReport report;
    report.order = order;
    const std::vector<long> divs = divisors(order);
    std::map<long, BigInt> fixed;
    for (long d : divs) {
        const auto value = eval_at_root_exact(f, static_cast<int>(order / d));
        if (!value) {
            report.failure = RealizabilityFailure::NonIntegerValue;
            return report;
        }
        fixed[d] = *value;
        report.fixed_by_divisor.emplace_back(d, *value);
    }
    for (long m : divs) {
        BigInt numerator = 0;
        for (long d : divisors(m)) numerator += mobius(m / d) * fixed[d];
        Rational count{numerator, m};
        count.canonicalize();
        report.orbit_counts.emplace_back(m, count);
        if (report.failure == RealizabilityFailure::None) {
            if (count < 0)
                report.failure = RealizabilityFailure::NegativeOrbitCount;
            else if (count.get_den() != 1)
                report.failure = RealizabilityFailure::NonIntegerOrbitCount;
        }
    }
    return report;
}

ConjectureProbe conjecture_probe(int k, int n, std::optional<long> order) {
    if (k < 1 || n < 1) throw std::invalid_argument("conjecture_probe: k, n must be positive");
    ConjectureProbe probe;
    probe.k = k;
    probe.n = n;
    probe.order = order.value_or(static_cast<long>(k) * n);
    const int half_up = (n + 1) / 2;
    const int half_down = n / 2;

    QPolynomial numerator = QPolynomial::q_factorial(k * half_up) *
                            QPolynomial::q_factorial(k * half_down) *
                            q_binomial(k * n, k * half_down);
    QPolynomial denominator = QPolynomial::one();
    for (int i = 1; i <= k; ++i) {
        for (int j = 0; j < half_up; ++j) denominator *= QPolynomial::q_integer(i + j);
        for (int j = 0; j < half_down; ++j) denominator *= QPolynomial::q_integer(i + j);
    }
    const auto dm = numerator.divmod(denominator);
    probe.division_exact = dm.remainder.is_zero();
    probe.f = dm.quotient;
    probe.nonnegative_coeffs = probe.f.has_nonnegative_coeffs();
    probe.count = count_rectangular(k, n);
    probe.count_matches = probe.f.value_at_one() == probe.count;
    probe.report = realizability(probe.f, probe.order);
    return probe;
}

}  // namespace domino
