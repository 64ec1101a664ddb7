#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfchi/rational.hpp"

namespace hopfchi {

// Dense exact-rational polynomial, coefficients in ascending degree.
class RationalPolynomial {
public:
    RationalPolynomial() = default;  // the zero polynomial
    explicit RationalPolynomial(std::vector<Rational> coefficients);
    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial monomial(int degree, const Rational& c);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    Rational coefficient(int k) const;

    Rational operator()(const Rational& x) const;
    Rational at(const Integer& x) const { return (*this)(Rational(x)); }

    RationalPolynomial operator+(const RationalPolynomial& other) const;
    RationalPolynomial operator-(const RationalPolynomial& other) const;
    RationalPolynomial operator*(const RationalPolynomial& other) const;
    RationalPolynomial operator-() const;
    RationalPolynomial scaled(const Rational& c) const;

    // p(-x); flips the sign of odd coefficients.
    RationalPolynomial negated_argument() const;

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    std::string to_string(const std::string& variable = "n") const;

private:
    std::vector<Rational> coefficients_;  // empty means zero; otherwise leading != 0
};

// Unique polynomial of degree < points.size() through the given points.
// Throws ValidationError on duplicate abscissae.
RationalPolynomial lagrange_interpolate(const std::vector<std::pair<Integer, Rational>>& points);

}  // namespace hopfchi
