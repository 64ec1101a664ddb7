#include "hopfchi/antipode.hpp"

#include "hopfchi/parallel.hpp"
#include "hopfchi/setcomb.hpp"

namespace hopfchi {

namespace {

void accumulate_term(FormalSum& sum, const Hypergraph& h, const std::vector<Subset>& parts) {
    Decomposition d(h.ground(), parts);
    Rational sign = (parts.size() % 2 == 0) ? 1 : -1;
    sum.add(mu_delta(h, d), sign);
}

}  // namespace

FormalSum takeuchi_antipode(const Hypergraph& h, Budget budget, int jobs) {
    FormalSum sum(h.ground());
    if (h.ground().empty()) {
        sum.add(h, 1);  // the antipode is the identity on the unit
        return sum;
    }

    StepCounter steps(budget);
    if (jobs <= 1) {
        for_each_composition(h.ground().full_mask(),
                             [&](const std::vector<Subset>& parts) { accumulate_term(sum, h, parts); }, &steps);
        return sum;
    }

    std::vector<std::vector<Subset>> compositions;
    for_each_composition(h.ground().full_mask(),
                         [&](const std::vector<Subset>& parts) { compositions.push_back(parts); }, &steps);
    parallel_chunks(
        compositions.size(), jobs,
        [&](std::size_t begin, std::size_t end) {
            FormalSum partial(h.ground());
            for (std::size_t i = begin; i < end; ++i) accumulate_term(partial, h, compositions[i]);
            return partial;
        },
        [&](FormalSum&& partial) { sum.merge(partial); });
    return sum;
}

}  // namespace hopfchi
