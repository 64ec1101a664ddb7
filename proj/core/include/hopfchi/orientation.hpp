#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hopfchi/budget.hpp"
#include "hopfchi/formal_sum.hpp"
#include "hopfchi/hypergraph.hpp"
#include "hopfchi/setcomb.hpp"

namespace hopfchi {

// Admissible orientation of a hypergraph: a nonempty head subset f(e) ⊆ e per
// edge instance. The tail is e \ f(e).
class Orientation {
public:
    Orientation(Hypergraph host, std::vector<Subset> images);

    const Hypergraph& host() const { return host_; }
    const std::vector<Subset>& images() const { return images_; }
    Subset image(int edge) const { return images_[static_cast<std::size_t>(edge)]; }
    Subset tail(int edge) const { return host_.edge(edge) & ~image(edge); }
    bool is_discrete() const;  // every image a single vertex

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    Hypergraph host_;
    std::vector<Subset> images_;
};

// Arcs between edge instances: a strict arc (e, e') when f(e) meets the tail
// of e'; a weak arc when f(e) ∩ e' is a nonempty proper subset of f(e').
// An orientation is cyclic exactly when some strict arc lies on a directed
// cycle of the union digraph.
struct OrientationConstraintDigraph {
    std::vector<std::pair<int, int>> strict_arcs;
    std::vector<std::pair<int, int>> weak_arcs;
};

OrientationConstraintDigraph constraint_digraph(const Hypergraph& h, const std::vector<Subset>& images);

bool is_acyclic(const Hypergraph& h, const std::vector<Subset>& images);
bool is_acyclic(const Orientation& f);

// All acyclic orientations in deterministic (lexicographic image) order. The
// admissible-orientation count prod_e (2^{|e|} - 1) is checked against the
// budget up front; the search itself prunes on partial cycles.
std::vector<Orientation> enumerate_acyclic(const Hypergraph& h, Budget budget = {});
void for_each_acyclic(const Hypergraph& h, const std::function<void(const std::vector<Subset>&)>& visit,
                      Budget budget = {});
Integer count_admissible(const Hypergraph& h);

// The unique orientation strictly compatible with a coloring: every edge is
// sent to its subset of maximal-color vertices. Always acyclic.
Orientation max_orientation(const Hypergraph& h, const Coloring& c);

// f(h): the image multiset as a hypergraph over the same ground set.
Hypergraph image_hypergraph(const Orientation& f);

// Coloring counts by direct enumeration over all n^{|V|} colorings.
Integer count_strict_colorings(const Orientation& f, int n, Budget budget = {});
Integer count_compatible_colorings(const Orientation& f, int n, Budget budget = {});

// The same counts through the generalized-Faulhaber formula: group image
// edges that share vertices, order the groups subject to the strict-arc
// constraints, and sum nested power sums. Cost is independent of n.
Integer count_strict_colorings_faulhaber(const Orientation& f, int n);
Integer count_compatible_colorings_faulhaber(const Orientation& f, int n);

// S(h) = sum over acyclic f of (-1)^{cc(f(h))} f(h). Each image hypergraph
// must arise from at most one orientation; a collision raises
// DisagreementError (it would signal an implementation bug).
FormalSum cancellation_free_antipode(const Hypergraph& h, Budget budget = {}, int jobs = 1);

}  // namespace hopfchi
