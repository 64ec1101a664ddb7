#include "hopfchi/rational.hpp"

#include "hopfchi/errors.hpp"

namespace hopfchi {

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational binomial(const Integer& n, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= Rational(n - i);
    return r / Rational(factorial(k));
}

Integer binomial_uint(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step along a Pascal row
    }
    return r;
}

Integer int_pow(const Integer& base, unsigned exp) {
    Integer r = 1;
    Integer b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

std::string rational_to_string(const Rational& value) {
    std::string s = numerator(value).str();
    if (denominator(value) != 1) {
        s += "/";
        s += denominator(value).str();
    }
    return s;
}

Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw ValidationError("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError("not a rational: '" + text + "'");
    }
}

}  // namespace hopfchi
