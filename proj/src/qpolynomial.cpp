#include "domino/qpolynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace domino {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::constant(BigInt c) {
    std::vector<BigInt> v;
    if (c != 0) v.push_back(std::move(c));
    return QPolynomial{std::move(v)};
}

QPolynomial QPolynomial::monomial(BigInt c, std::size_t power) {
    if (c == 0) return {};
    std::vector<BigInt> v(power + 1, BigInt{0});
    v[power] = std::move(c);
    return QPolynomial{std::move(v)};
}

QPolynomial QPolynomial::q_integer(int m) {
    if (m < 0) throw std::invalid_argument("q_integer: negative m");
    return QPolynomial{std::vector<BigInt>(static_cast<std::size_t>(m), BigInt{1})};
}

QPolynomial QPolynomial::q_factorial(int m) {
    if (m < 0) throw std::invalid_argument("q_factorial: negative m");
    QPolynomial r = one();
    for (int i = 1; i <= m; ++i) r *= q_integer(i);
    return r;
}

const BigInt& QPolynomial::coeff(std::size_t i) const {
    static const BigInt kZero{0};
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

BigInt QPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool QPolynomial::has_nonnegative_coeffs() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt{0});
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt{0});
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt{0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

QPolynomial QPolynomial::shifted(std::size_t power) const {
    if (is_zero() || power == 0) return power == 0 ? *this : QPolynomial{};
    std::vector<BigInt> v(coeffs_.size() + power, BigInt{0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + power] = coeffs_[i];
    return QPolynomial{std::move(v)};
}

QPolyDivMod QPolynomial::divmod(const QPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    QPolyDivMod result;
    result.remainder = *this;
    const int dd = divisor.degree();
    const BigInt& lead = divisor.coeffs_.back();
    std::vector<BigInt> quo;
    if (degree() >= dd) quo.assign(static_cast<std::size_t>(degree() - dd) + 1, BigInt{0});
    while (result.remainder.degree() >= dd) {
        const int shift = result.remainder.degree() - dd;
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), result.remainder.coeffs_.back().get_mpz_t(),
                    lead.get_mpz_t());
        if (r != 0) throw std::domain_error("divmod: non-integral quotient step");
        quo[static_cast<std::size_t>(shift)] = q;
        result.remainder -= divisor.shifted(static_cast<std::size_t>(shift)) * constant(q);
    }
    result.quotient = QPolynomial{std::move(quo)};
    return result;
}

std::string QPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) out << mag.get_str();
        if (i == 1) out << "q";
        if (i > 1) out << "q^" << i;
    }
    return out.str();
}

}  // namespace domino
