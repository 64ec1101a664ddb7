#include <functional>
#include <random>

#include "doctest.h"
#include "hopfchi/errors.hpp"
#include "hopfchi/faulhaber.hpp"
#include "hopfchi/polynomial.hpp"

using namespace hopfchi;

namespace {

// independent oracle: the literal nested sum, written as explicit loops
Integer nested_sum_oracle(const std::vector<int>& p, int n) {
    std::vector<int> k(p.size());
    Integer total = 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int lo) {
        if (idx == p.size()) {
            Integer term = 1;
            for (std::size_t i = 0; i < p.size(); ++i) term *= int_pow(Integer(k[i]), static_cast<unsigned>(p[i]));
            total += term;
            return;
        }
        for (int v = lo; v <= n - 1; ++v) {
            k[idx] = v;
            rec(idx + 1, v + 1);
        }
    };
    rec(0, 0);
    return total;
}

std::vector<std::vector<int>> indices_with_degree_at_most(int max_degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int budget) {
        if (!current.empty()) out.push_back(current);
        for (int next = 1; next + 1 <= budget; ++next) {
            current.push_back(next);
            rec(budget - next - 1);
            current.pop_back();
        }
    };
    rec(max_degree);
    return out;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(8) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("faulhaber_value direct sums") {
    CHECK(faulhaber_value(FaulhaberIndex({1}), 4) == Rational(6));  // 0+1+2+3
    CHECK(faulhaber_value(FaulhaberIndex({1, 1}), 4) == Rational(11));
    CHECK(Integer(11) == nested_sum_oracle({1, 1}, 4));
    CHECK(faulhaber_value(FaulhaberIndex({2, 1}), 1) == Rational(0));  // t > n
    CHECK(faulhaber_value(FaulhaberIndex({3, 2, 4}), 2) == Rational(0));

    for (const auto& p : indices_with_degree_at_most(7))
        for (int n = 0; n <= 6; ++n)
            CHECK(faulhaber_value(FaulhaberIndex(p), n) == Rational(nested_sum_oracle(p, n)));
}

TEST_CASE("faulhaber_poly closed formula") {
    auto p1 = faulhaber_poly(FaulhaberIndex({1}));
    CHECK(p1.coefficients() == std::vector<Rational>{Rational(0), Rational(-1, 2), Rational(1, 2)});

    CHECK(faulhaber_poly(FaulhaberIndex({2, 3})).degree() == 7);

    for (const auto& p : indices_with_degree_at_most(8)) {
        FaulhaberIndex idx(p);
        auto closed = faulhaber_poly(idx);
        CHECK(closed.coefficient(0) == Rational(0));
        CHECK(closed.degree() == idx.degree());

        // second entry of the double bookkeeping: interpolation of direct sums
        std::vector<std::pair<Integer, Rational>> points;
        for (int n = 0; n <= idx.degree(); ++n) points.push_back({Integer(n), Rational(nested_sum_oracle(p, n))});
        CHECK(closed == lagrange_interpolate(points));
    }
}

TEST_CASE("faulhaber reciprocity lemma") {
    // F_(1)(-2) = (-2)(-3)/2 = 3 and the coarsening sum gives the same
    CHECK(faulhaber_value(FaulhaberIndex({1}), -2) == Rational(3));
    CHECK(faulhaber_reciprocity_rhs(FaulhaberIndex({1}), 2) == Rational(3));

    CHECK(faulhaber_reciprocity_rhs(FaulhaberIndex({1, 1}), 0) == Rational(0));
    CHECK(faulhaber_value(FaulhaberIndex({1, 1}), 0) == Rational(0));

    CHECK(faulhaber_reciprocity_rhs(FaulhaberIndex({2}), 1) == Rational(-1));
    CHECK(faulhaber_value(FaulhaberIndex({2}), -1) == Rational(-1));

    for (const auto& p : indices_with_degree_at_most(8)) {
        FaulhaberIndex idx(p);
        auto poly = faulhaber_poly(idx);
        for (int n = 0; n <= 6; ++n)
            CHECK(poly(Rational(-n)) == faulhaber_reciprocity_rhs(idx, n));
    }
}

TEST_CASE("F_{1^k} matches unsigned Stirling numbers") {
    // F_{1^k}(n) is the absolute coefficient of x^{n-k} in x(x-1)...(x-n+1),
    // i.e. s(n, n-k) in the standard indexing of the recurrence
    for (int k = 1; k <= 5; ++k) {
        FaulhaberIndex idx(std::vector<int>(static_cast<std::size_t>(k), 1));
        for (int n = 0; n <= 8; ++n) {
            Integer expected = (n - k >= 0) ? stirling_first_unsigned(n, n - k) : Integer(0);
            CHECK(faulhaber_value(idx, n) == Rational(expected));
        }
    }
    CHECK(faulhaber_value(FaulhaberIndex({1, 1}), 4) == Rational(stirling_first_unsigned(4, 2)));
}

TEST_CASE("strict_power_sum with zero exponents") {
    CHECK(strict_power_sum({0}, 0, 1) == 2);   // 0^0 + 1^0
    CHECK(strict_power_sum({0}, 1, 2) == 2);   // 1^0 + 2^0
    CHECK(strict_power_sum({}, 0, -1) == 1);   // empty product
    CHECK(strict_power_sum({1}, 0, -1) == 0);  // empty range
    CHECK(strict_power_sum({0, 2}, 0, 2) == 1 * 1 + 1 * 4 + 1 * 4);  // (0,1),(0,2),(1,2)
}

TEST_CASE("lagrange interpolation") {
    auto sq = lagrange_interpolate({{0, Rational(0)}, {1, Rational(1)}, {2, Rational(4)}});
    CHECK(sq.coefficients() == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});

    auto c5 = lagrange_interpolate({{1, Rational(5)}});
    CHECK(c5.coefficients() == std::vector<Rational>{Rational(5)});

    auto nn = lagrange_interpolate({{0, Rational(0)}, {1, Rational(0)}, {2, Rational(2)}, {3, Rational(6)}});
    CHECK(nn.coefficients() == std::vector<Rational>{Rational(0), Rational(-1), Rational(1)});  // n^2 - n

    CHECK_THROWS_AS(lagrange_interpolate({{1, Rational(0)}, {1, Rational(1)}}), ValidationError);
}

TEST_CASE("interpolation round trip on random polynomials") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int degree = static_cast<int>(rng() % 7);
        std::vector<Rational> coeffs;
        for (int i = 0; i <= degree; ++i) {
            long num = static_cast<long>(rng() % 21) - 10;
            long den = 1 + static_cast<long>(rng() % 6);
            coeffs.push_back(Rational(num, den));
        }
        RationalPolynomial original(coeffs);
        std::vector<std::pair<Integer, Rational>> points;
        for (int x = 0; x <= original.degree(); ++x) points.push_back({Integer(x), original(Rational(x))});
        if (original.is_zero()) points.push_back({0, Rational(0)});
        CHECK(lagrange_interpolate(points) == original);
    }
}

TEST_CASE("polynomial arithmetic basics") {
    RationalPolynomial a({Rational(1), Rational(2)});        // 1 + 2n
    RationalPolynomial b({Rational(0), Rational(0), Rational(3)});  // 3n^2
    CHECK((a + b).degree() == 2);
    CHECK((a * b).coefficients() == std::vector<Rational>{0, 0, Rational(3), Rational(6)});
    CHECK((a - a).is_zero());
    CHECK(a.negated_argument()(Rational(2)) == a(Rational(-2)));
    CHECK(RationalPolynomial({Rational(0), Rational(-5, 6), Rational(5, 2)}).to_string() ==
          "5/2*n^2 - 5/6*n");
}
