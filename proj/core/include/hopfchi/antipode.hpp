#pragma once

#include "hopfchi/budget.hpp"
#include "hopfchi/formal_sum.hpp"
#include "hopfchi/hypergraph.hpp"

namespace hopfchi {

// Takeuchi's alternating sum over set compositions of the ground set:
// S(h) = sum over compositions C of (-1)^{l(C)} mu_C(Delta_C(h)), grouped by
// canonical hypergraph equality. The empty ground set yields +1 * (unit).
// Compositions are streamed, never materialized; `jobs` > 1 splits the stream
// across workers, with a merge that is independent of the partitioning.
FormalSum takeuchi_antipode(const Hypergraph& h, Budget budget = {}, int jobs = 1);

}  // namespace hopfchi
