#include "parkideal/qpolynomial.hpp"

#include <sstream>

#include "parkideal/errors.hpp"

namespace parkideal {

QPolynomial::QPolynomial(std::vector<Int> coefficients) : coefficients_(std::move(coefficients))
{
    trim();
}

void QPolynomial::trim()
{
    while (!coefficients_.empty() && coefficients_.back() == 0)
        coefficients_.pop_back();
}

QPolynomial QPolynomial::term(Int coefficient, int power)
{
    if (power < 0)
        throw InputError("polynomial powers must be nonnegative");
    std::vector<Int> coefficients(power + 1, 0);
    coefficients[power] = std::move(coefficient);
    return QPolynomial(std::move(coefficients));
}

Int QPolynomial::coefficient(int power) const
{
    if (power < 0 || power >= static_cast<int>(coefficients_.size()))
        return 0;
    return coefficients_[power];
}

Int QPolynomial::evaluate(const Int& x) const
{
    Int value = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        value = value * x + *it;
    return value;
}

QPolynomial QPolynomial::reversed(int shift) const
{
    if (shift < degree())
        throw InputError("reversal shift smaller than the degree");
    std::vector<Int> result(shift + 1, 0);
    for (int i = 0; i <= degree(); ++i)
        result[shift - i] = coefficients_[i];
    return QPolynomial(std::move(result));
}

QPolynomial QPolynomial::operator+(const QPolynomial& other) const
{
    std::vector<Int> result(std::max(coefficients_.size(), other.coefficients_.size()), 0);
    for (size_t i = 0; i < coefficients_.size(); ++i)
        result[i] += coefficients_[i];
    for (size_t i = 0; i < other.coefficients_.size(); ++i)
        result[i] += other.coefficients_[i];
    return QPolynomial(std::move(result));
}

QPolynomial QPolynomial::operator-(const QPolynomial& other) const
{
    std::vector<Int> result(std::max(coefficients_.size(), other.coefficients_.size()), 0);
    for (size_t i = 0; i < coefficients_.size(); ++i)
        result[i] += coefficients_[i];
    for (size_t i = 0; i < other.coefficients_.size(); ++i)
        result[i] -= other.coefficients_[i];
    return QPolynomial(std::move(result));
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const
{
    if (is_zero() || other.is_zero())
        return QPolynomial();
    std::vector<Int> result(coefficients_.size() + other.coefficients_.size() - 1, 0);
    for (size_t i = 0; i < coefficients_.size(); ++i)
        for (size_t j = 0; j < other.coefficients_.size(); ++j)
            result[i + j] += coefficients_[i] * other.coefficients_[j];
    return QPolynomial(std::move(result));
}

std::string QPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int p = degree(); p >= 0; --p)
    {
        const Int& c = coefficients_[p];
        if (c == 0)
            continue;
        if (first)
        {
            if (c < 0)
                out << "-";
            first = false;
        }
        else
        {
            out << (c < 0 ? " - " : " + ");
        }
        Int magnitude = abs(c);
        if (magnitude != 1 || p == 0)
            out << magnitude;
        if (p >= 1)
        {
            out << "q";
            if (p > 1)
                out << "^" << p;
        }
    }
    return out.str();
}

std::string QPolynomial::to_coefficient_list() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    for (size_t i = 0; i < coefficients_.size(); ++i)
    {
        if (i > 0)
            out << ",";
        out << coefficients_[i];
    }
    return out.str();
}

}  // namespace parkideal
