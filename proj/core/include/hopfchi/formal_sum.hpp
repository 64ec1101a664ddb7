#pragma once

#include <map>
#include <vector>

#include "hopfchi/hypergraph.hpp"
#include "hopfchi/rational.hpp"

namespace hopfchi {

// Orders canonical edge multisets lexicographically (edge lists are already
// sorted inside each Hypergraph).
struct EdgeListLess {
    bool operator()(const std::vector<Subset>& a, const std::vector<Subset>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
    }
};

// Finite linear combination of hypergraphs sharing one ground set, keyed by
// canonical edge multiset. Zero coefficients are dropped on the fly.
class FormalSum {
public:
    explicit FormalSum(GroundSet ground) : ground_(std::move(ground)) {}

    const GroundSet& ground() const { return ground_; }
    const std::map<std::vector<Subset>, Rational, EdgeListLess>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add(const Hypergraph& term, const Rational& coefficient);
    void add_edges(const std::vector<Subset>& edges, const Rational& coefficient);
    Rational coefficient(const Hypergraph& term) const;
    Hypergraph term_hypergraph(const std::vector<Subset>& edges) const;

    // Merge another sum in; when `detect_collision` is set, a key present on
    // both sides raises DisagreementError (used by the cancellation-free
    // antipode accumulation).
    void merge(const FormalSum& other, bool detect_collision = false);

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

private:
    GroundSet ground_;
    std::map<std::vector<Subset>, Rational, EdgeListLess> terms_;
};

}  // namespace hopfchi
