#pragma once

#include <vector>

#include "hopfchi/polynomial.hpp"
#include "hopfchi/rational.hpp"

namespace hopfchi {

// j-th Bernoulli number under the B_1 = -1/2 convention. Memoized; the table
// is safe for concurrent reads after first use on a given index.
Rational bernoulli(int j);

// Index p = (p_1,...,p_t) of a generalized Faulhaber polynomial
// F_p(n) = sum over 0 <= k_1 < ... < k_t <= n-1 of k_1^{p_1} ... k_t^{p_t},
// together with the derived degrees d_k = p_1 + ... + p_k + k.
class FaulhaberIndex {
public:
    explicit FaulhaberIndex(std::vector<int> p);  // all entries must be >= 1

    const std::vector<int>& p() const { return p_; }
    int length() const { return static_cast<int>(p_.size()); }
    int degree() const { return d_.back(); }  // d_t
    int d(int k) const { return d_[static_cast<std::size_t>(k) - 1]; }  // 1-based

    friend bool operator==(const FaulhaberIndex&, const FaulhaberIndex&) = default;

private:
    std::vector<int> p_;
    std::vector<int> d_;
};

// Sum of k_1^{e_1} ... k_t^{e_t} over lo <= k_1 < ... < k_t <= hi, with the
// convention k^0 = 1 (including 0^0 = 1). Zero exponents are allowed; the
// orientation coloring-count formulas need them.
Integer strict_power_sum(const std::vector<int>& exponents, long long lo, long long hi);

// For n >= 0 the direct nested sum (0 when t > n); for n < 0 the evaluation
// of the interpolating polynomial, which is what the reciprocity lemma uses.
Rational faulhaber_value(const FaulhaberIndex& p, const Integer& n);

// Closed coefficient formula: degree d_t, zero constant term, coefficients
// built from nested Bernoulli-binomial sums. Cross-checked against
// interpolation of faulhaber_value in the tests.
RationalPolynomial faulhaber_poly(const FaulhaberIndex& p);

// (-1)^{d_t} * sum over coarsenings q of p of F_q(n+1); equals F_p(-n).
Rational faulhaber_reciprocity_rhs(const FaulhaberIndex& p, const Integer& n);

// Unsigned Stirling numbers of the first kind by the standard recurrence
// s(n, k) = s(n-1, k-1) + (n-1) s(n-1, k). Test oracle for F_{1^k}(n) = s(n, k).
Integer stirling_first_unsigned(int n, int k);

}  // namespace hopfchi
