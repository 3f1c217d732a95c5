#include "domino/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace domino {

int Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
        if (c != '0' && c != '1') throw std::invalid_argument("BinaryWord: letters must be 0 or 1");
}

int BinaryWord::zeros() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), '0'));
}

BinaryWord BinaryWord::rotated(int t) const {
    const int n = length();
    if (n == 0) return *this;
    t = ((t % n) + n) % n;
    return BinaryWord{bits_.substr(static_cast<std::size_t>(t)) +
                      bits_.substr(0, static_cast<std::size_t>(t))};
}

bool BinaryWord::aperiodic() const {
    const int n = length();
    for (int p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (int i = p; i < n && periodic; ++i) periodic = bits_[i] == bits_[i - p];
        if (periodic) return false;
    }
    return true;
}

BigInt binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt catalan(int k) {
    if (k < 0) throw std::invalid_argument("catalan: negative k");
    return binomial(2L * k, k) / (k + 1);
}

BigInt fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("fibonacci: negative n");
    BigInt a = 1, b = 1;  // F_0 = F_1 = 1
    for (int i = 2; i <= n; ++i) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return n == 0 ? a : b;
}

namespace {

void emit_compositions(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back({prefix});
        return;
    }
    for (int first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        emit_compositions(remaining - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions(int j) {
    if (j < 0) throw std::invalid_argument("compositions: negative j");
    std::vector<Composition> out;
    if (j == 0) return out;
    std::vector<int> prefix;
    emit_compositions(j, prefix, out);
    return out;
}

QPolynomial q_binomial(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("q_binomial: negative argument");
    if (k > n) throw std::invalid_argument("q_binomial: k > n");
    // Pascal recurrence qbin(n,k) = qbin(n-1,k-1) + q^k qbin(n-1,k), row by row.
    std::vector<QPolynomial> row(static_cast<std::size_t>(k) + 1);
    row[0] = QPolynomial::one();
    for (int m = 1; m <= n; ++m) {
        for (int i = std::min(m, k); i >= 1; --i) {
            row[static_cast<std::size_t>(i)] =
                row[static_cast<std::size_t>(i - 1)] +
                row[static_cast<std::size_t>(i)].shifted(static_cast<std::size_t>(i));
        }
    }
    return row[static_cast<std::size_t>(k)];
}

QPolynomial cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
    QPolynomial num = QPolynomial::one();
    QPolynomial den = QPolynomial::one();
    for (long e : divisors(d)) {
        // q^e - 1
        QPolynomial factor = QPolynomial::monomial(1, static_cast<std::size_t>(e)) -
                             QPolynomial::one();
        switch (mobius(d / e)) {
            case 1: num *= factor; break;
            case -1: den *= factor; break;
            default: break;
        }
    }
    auto dm = num.divmod(den);
    if (!dm.remainder.is_zero()) throw std::logic_error("cyclotomic: inexact division");
    return dm.quotient;
}

std::optional<BigInt> eval_at_root_exact(const QPolynomial& f, int d) {
    const QPolynomial rem = f.divmod(cyclotomic(d)).remainder;
    if (rem.is_zero()) return BigInt{0};
    if (rem.degree() == 0) return rem.coeff(0);
    return std::nullopt;
}

BigInt eval_qbin_central_closed(int n, int k) {
    if (n < 1) throw std::invalid_argument("eval_qbin_central_closed: n must be positive");
    if (k < 1 || k > n) throw std::invalid_argument("eval_qbin_central_closed: k outside [1,n]");
    const long d = n / std::gcd(n, k);
    const long half = n / 2;
    if (half % d != 0) return 0;
    return binomial(n / d, half / d);
}

int mobius(long n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int primes = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++primes;
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<BinaryWord> lyndon_words(int n, int k) {
    if (n < 1) throw std::invalid_argument("lyndon_words: n must be positive");
    if (k < 0 || k > n) throw std::invalid_argument("lyndon_words: k outside [0,n]");
    std::vector<BinaryWord> out;
    std::string w = "0";
    while (true) {
        if (static_cast<int>(w.size()) == n &&
            std::count(w.begin(), w.end(), '0') == k) {
            out.emplace_back(w);
        }
        // Duval step: extend periodically to length n, then increment the
        // last non-maximal letter.
        std::string t = w;
        while (static_cast<int>(t.size()) < n) t.push_back(t[t.size() % w.size()]);
        while (!t.empty() && t.back() == '1') t.pop_back();
        if (t.empty()) break;
        t.back() = '1';
        w = std::move(t);
    }
    return out;
}

BinaryWord necklace_canonical(const BinaryWord& w) {
    BinaryWord best = w;
    for (int t = 1; t < w.length(); ++t) best = std::min(best, w.rotated(t));
    return best;
}

std::vector<int> word_descents(const BinaryWord& w) {
    std::vector<int> out;
    for (int i = 1; i < w.length(); ++i)
        if (w.letter(i) == '1' && w.letter(i + 1) == '0') out.push_back(i);
    return out;
}

long word_maj(const BinaryWord& w) {
    long sum = 0;
    for (int i : word_descents(w)) sum += i;
    return sum;
}

}  // namespace domino
