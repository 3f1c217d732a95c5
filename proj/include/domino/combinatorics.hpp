#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domino/bigint.hpp"
#include "domino/qpolynomial.hpp"

namespace domino {

// A composition of j: an ordered sequence of positive parts.
struct Composition {
    std::vector<int> parts;

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Composition&) const = default;
};

// Binary word over {0,1}; the 1-indexed letter i is bits()[i-1].
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::string bits);

    int length() const { return static_cast<int>(bits_.size()); }
    int zeros() const;
    char letter(int i) const { return bits_.at(static_cast<std::size_t>(i - 1)); }
    const std::string& bits() const { return bits_; }

    // Left rotation by t: the first t letters move to the end.
    BinaryWord rotated(int t) const;
    bool aperiodic() const;

    auto operator<=>(const BinaryWord&) const = default;

private:
    std::string bits_;
};

BigInt binomial(long n, long k);
BigInt catalan(int k);
// Indexing convention F_0 = F_1 = 1.
BigInt fibonacci(int n);

// All 2^{j-1} compositions of j in lexicographic order of their part
// sequences; empty for j = 0.
std::vector<Composition> compositions(int j);

// Gaussian binomial coefficient as a polynomial in q; requires 0 <= k <= n.
QPolynomial q_binomial(int n, int k);

// d-th cyclotomic polynomial via Phi_d(q) = prod_{e|d} (q^e - 1)^{mu(d/e)}.
QPolynomial cyclotomic(int d);

// Exact value of f at a primitive d-th root of unity: reduce f mod Phi_d; a
// constant remainder is the value, anything else means the value is not a
// rational integer (nullopt).
std::optional<BigInt> eval_at_root_exact(const QPolynomial& f, int d);

// Closed-form value of qbin(n, floor(n/2)) at e^{2 pi i k / n}: with
// d = n/gcd(n,k) this is binom(n/d, floor(n/2)/d), taken as 0 when d does not
// divide floor(n/2). Requires 1 <= k <= n.
BigInt eval_qbin_central_closed(int n, int k);

int mobius(long n);
std::vector<long> divisors(long n);

// All aperiodic words of length n with k zeros that are strictly smaller than
// every nontrivial rotation, in lexicographic order (Duval's generation).
std::vector<BinaryWord> lyndon_words(int n, int k);
// Lexicographically smallest rotation of w.
BinaryWord necklace_canonical(const BinaryWord& w);

// 1-indexed positions i with letter i = 1 and letter i+1 = 0.
std::vector<int> word_descents(const BinaryWord& w);
long word_maj(const BinaryWord& w);

}  // namespace domino
