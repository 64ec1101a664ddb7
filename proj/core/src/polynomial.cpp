#include "hopfchi/polynomial.hpp"

#include "hopfchi/errors.hpp"

namespace hopfchi {

namespace {

void trim(std::vector<Rational>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim(coefficients_);
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
    return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(int degree, const Rational& c) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
    coeffs.back() = c;
    return RationalPolynomial(std::move(coeffs));
}

Rational RationalPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coefficients_.size())) return 0;
    return coefficients_[static_cast<std::size_t>(k)];
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& other) const {
    std::vector<Rational> coeffs(std::max(coefficients_.size(), other.coefficients_.size()), Rational(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coeffs[i] += coefficients_[i];
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coeffs[i] += other.coefficients_[i];
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& other) const {
    return *this + (-other);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<Rational> coeffs(coefficients_.size() + other.coefficients_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            coeffs[i + j] += coefficients_[i] * other.coefficients_[j];
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial RationalPolynomial::operator-() const { return scaled(Rational(-1)); }

RationalPolynomial RationalPolynomial::scaled(const Rational& c) const {
    std::vector<Rational> coeffs = coefficients_;
    for (auto& v : coeffs) v *= c;
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial RationalPolynomial::negated_argument() const {
    std::vector<Rational> coeffs = coefficients_;
    for (std::size_t i = 1; i < coeffs.size(); i += 2) coeffs[i] = -coeffs[i];
    return RationalPolynomial(std::move(coeffs));
}

std::string RationalPolynomial::to_string(const std::string& variable) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coefficient(k);
        if (c == 0) continue;
        if (!out.empty()) {
            out += (c > 0) ? " + " : " - ";
            if (c < 0) c = -c;
        } else if (c < 0) {
            out += "-";
            c = -c;
        }
        bool unit = (c == 1 && k > 0);
        if (!unit) out += rational_to_string(c);
        if (k > 0) {
            if (!unit) out += "*";
            out += variable;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

RationalPolynomial lagrange_interpolate(const std::vector<std::pair<Integer, Rational>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw ValidationError("lagrange_interpolate: duplicate abscissa " + points[i].first.str());

    RationalPolynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPolynomial basis = RationalPolynomial::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RationalPolynomial({Rational(-points[j].first), Rational(1)});
            denom *= Rational(points[i].first - points[j].first);
        }
        result = result + basis.scaled(points[i].second / denom);
    }
    return result;
}

}  // namespace hopfchi
