#pragma once

#include <string>
#include <vector>

#include "parkideal/numeric.hpp"

namespace parkideal {

/**
 * Univariate polynomial in q with arbitrary-precision integer coefficients,
 * stored lowest degree first with no trailing zeros.
 */
class QPolynomial {
  public:
    QPolynomial() = default;  // the zero polynomial
    explicit QPolynomial(std::vector<Int> coefficients);

    static QPolynomial term(Int coefficient, int power);

    const std::vector<Int>& coefficients() const { return coefficients_; }
    /** -1 for the zero polynomial. */
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    Int coefficient(int power) const;
    bool is_zero() const { return coefficients_.empty(); }

    Int evaluate(const Int& x) const;

    /**
     * q^shift * p(1/q), a polynomial again when shift >= degree.
     * Throws InputError otherwise.
     */
    QPolynomial reversed(int shift) const;

    QPolynomial operator+(const QPolynomial& other) const;
    QPolynomial operator-(const QPolynomial& other) const;
    QPolynomial operator*(const QPolynomial& other) const;
    bool operator==(const QPolynomial& other) const = default;

    /** "3q^4 + 7q^3 + 6q^2 + 3q + 1" */
    std::string to_string() const;
    /** Coefficient list lowest degree first: "1,3,6,3". */
    std::string to_coefficient_list() const;

  private:
    std::vector<Int> coefficients_;

    void trim();
};

}  // namespace parkideal
