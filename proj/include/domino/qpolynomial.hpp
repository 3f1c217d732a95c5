#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "domino/bigint.hpp"

namespace domino {

struct QPolyDivMod;

// Dense integer-coefficient polynomial in q. coeff(i) is the coefficient of
// q^i; trailing zeros are never stored, so the zero polynomial has empty
// support and degree -1. All arithmetic is exact.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs);

    static QPolynomial zero() { return QPolynomial{}; }
    static QPolynomial one() { return constant(1); }
    static QPolynomial constant(BigInt c);
    static QPolynomial monomial(BigInt c, std::size_t power);
    // [m]_q = 1 + q + ... + q^{m-1}
    static QPolynomial q_integer(int m);
    // [m]!_q = [1]_q [2]_q ... [m]_q
    static QPolynomial q_factorial(int m);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(std::size_t i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;
    BigInt value_at_one() const { return evaluate(1); }
    bool has_nonnegative_coeffs() const;

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    bool operator==(const QPolynomial& rhs) const = default;

    // Shift by q^k.
    QPolynomial shifted(std::size_t power) const;

    // Long division over Z. Every divisor used in this project is monic, so
    // quotient and remainder stay integral; throws std::domain_error if a
    // leading-coefficient division would leave the integers.
    QPolyDivMod divmod(const QPolynomial& divisor) const;

    // "1 + q + 2q^2 - q^4" style rendering; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

struct QPolyDivMod {
    QPolynomial quotient;
    QPolynomial remainder;
};

}  // namespace domino
