#include "hopfchi/formal_sum.hpp"

#include "hopfchi/errors.hpp"

namespace hopfchi {

void FormalSum::add(const Hypergraph& term, const Rational& coefficient) {
    if (term.ground() != ground_) throw ValidationError("formal sum terms must share one ground set");
    add_edges(term.edges(), coefficient);
}

void FormalSum::add_edges(const std::vector<Subset>& edges, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(edges, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational FormalSum::coefficient(const Hypergraph& term) const {
    auto it = terms_.find(term.edges());
    return it == terms_.end() ? Rational(0) : it->second;
}

Hypergraph FormalSum::term_hypergraph(const std::vector<Subset>& edges) const {
    return Hypergraph(ground_, edges);
}

void FormalSum::merge(const FormalSum& other, bool detect_collision) {
    if (other.ground_ != ground_) throw ValidationError("formal sum merge across ground sets");
    for (const auto& [edges, coeff] : other.terms_) {
        if (detect_collision && terms_.contains(edges))
            throw DisagreementError("formal sum collision: two sources produced the same term");
        add_edges(edges, coeff);
    }
}

}  // namespace hopfchi
