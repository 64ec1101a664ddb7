#include "hopfchi/faulhaber.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "hopfchi/errors.hpp"
#include "hopfchi/setcomb.hpp"

namespace hopfchi {

Rational bernoulli(int j) {
    if (j < 0) throw ValidationError("bernoulli: negative index");
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};  // B_0
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(table.size()) <= j) {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0, solved for B_m; yields B_1 = -1/2
        unsigned m = static_cast<unsigned>(table.size());
        Rational sum = 0;
        for (unsigned k = 0; k < m; ++k) sum += Rational(binomial_uint(m + 1, k)) * table[k];
        table.push_back(-sum / Rational(m + 1));
    }
    return table[static_cast<std::size_t>(j)];
}

FaulhaberIndex::FaulhaberIndex(std::vector<int> p) : p_(std::move(p)) {
    if (p_.empty()) throw ValidationError("empty Faulhaber index");
    int acc = 0;
    for (std::size_t k = 0; k < p_.size(); ++k) {
        if (p_[k] < 1) throw ValidationError("Faulhaber index entries must be positive");
        acc += p_[k];
        d_.push_back(acc + static_cast<int>(k) + 1);
    }
}

Integer strict_power_sum(const std::vector<int>& exponents, long long lo, long long hi) {
    for (int e : exponents)
        if (e < 0) throw ValidationError("strict_power_sum: negative exponent");
    std::size_t t = exponents.size();
    if (t == 0) return 1;
    if (hi < lo) return 0;
    std::size_t width = static_cast<std::size_t>(hi - lo + 1);

    // next[k - lo] = sum over chains starting strictly above k; filled from
    // the last exponent inwards, O(t * width)
    std::vector<Integer> next(width + 1, Integer(1));
    std::vector<Integer> current(width + 1);
    for (std::size_t idx = t; idx-- > 0;) {
        current[width] = 0;
        for (std::size_t w = width; w-- > 0;) {
            long long k = lo + static_cast<long long>(w);
            current[w] = current[w + 1] + int_pow(Integer(k), static_cast<unsigned>(exponents[idx])) * next[w + 1];
        }
        std::swap(next, current);
    }
    return next[0];
}

Rational faulhaber_value(const FaulhaberIndex& p, const Integer& n) {
    if (n < 0) return faulhaber_poly(p)(Rational(n));
    long long hi = n.convert_to<long long>() - 1;
    return Rational(strict_power_sum(p.p(), 0, hi));
}

RationalPolynomial faulhaber_poly(const FaulhaberIndex& p) {
    int t = p.length();
    int dt = p.degree();
    std::vector<Rational> coeffs(static_cast<std::size_t>(dt) + 1, Rational(0));

    // coefficient of x^{d_t - i}: nested Bernoulli-binomial sum over
    // 0 <= j_k <= min(j_{k+1}, d_k - 1), with j_0 = 0 and j_t = i
    std::vector<int> j(static_cast<std::size_t>(t) + 1, 0);
    for (int i = 0; i < dt; ++i) {
        j[static_cast<std::size_t>(t)] = i;
        Rational acc = 0;
        std::function<void(int)> choose = [&](int k) {
            if (k == 0) {
                Rational term = 1;
                for (int m = 1; m <= t; ++m) {
                    int dm = p.d(m);
                    int prev = j[static_cast<std::size_t>(m - 1)];
                    int step = j[static_cast<std::size_t>(m)] - prev;
                    if (step < 0) return;
                    term *= Rational(binomial_uint(static_cast<unsigned>(dm - prev), static_cast<unsigned>(step)));
                    term *= bernoulli(step);
                    term /= Rational(dm - prev);
                }
                acc += term;
                return;
            }
            int hi = std::min(j[static_cast<std::size_t>(k) + 1], p.d(k) - 1);
            for (int v = 0; v <= hi; ++v) {
                j[static_cast<std::size_t>(k)] = v;
                choose(k - 1);
            }
        };
        choose(t - 1);
        coeffs[static_cast<std::size_t>(dt - i)] = acc;
    }
    return RationalPolynomial(std::move(coeffs));
}

Rational faulhaber_reciprocity_rhs(const FaulhaberIndex& p, const Integer& n) {
    if (n < 0) throw ValidationError("faulhaber_reciprocity_rhs: n must be nonnegative");
    Rational sum = 0;
    for (const auto& q : integer_composition_coarsenings(p.p()))
        sum += faulhaber_value(FaulhaberIndex(q), n + 1);
    return (p.degree() % 2 == 0) ? sum : -sum;
}

Integer stirling_first_unsigned(int n, int k) {
    if (n < 0 || k < 0) throw ValidationError("stirling_first_unsigned: negative argument");
    if (k > n) return 0;
    std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n) + 1,
                                        std::vector<Integer>(static_cast<std::size_t>(n) + 1, Integer(0)));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int m = 0; m <= i; ++m) {
            Integer v = (m > 0) ? s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m - 1)] : Integer(0);
            v += Integer(i - 1) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m)];
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] = v;
        }
    return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace hopfchi
