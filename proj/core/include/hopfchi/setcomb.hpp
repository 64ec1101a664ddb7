#pragma once

#include <functional>
#include <iterator>
#include <utility>
#include <vector>

#include "hopfchi/budget.hpp"
#include "hopfchi/ground_set.hpp"
#include "hopfchi/rational.hpp"

namespace hopfchi {

// Ordered sequence of pairwise disjoint subsets covering the ground set;
// empty parts allowed.
class Decomposition {
public:
    Decomposition(GroundSet ground, std::vector<Subset> parts);

    const GroundSet& ground() const { return ground_; }
    const std::vector<Subset>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    Subset part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    int part_of(int vertex) const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;

private:
    GroundSet ground_;
    std::vector<Subset> parts_;
};

// Decomposition with every part nonempty.
class Composition {
public:
    Composition(GroundSet ground, std::vector<Subset> parts);

    const GroundSet& ground() const { return decomposition_.ground(); }
    const std::vector<Subset>& parts() const { return decomposition_.parts(); }
    int length() const { return decomposition_.length(); }
    Subset part(int i) const { return decomposition_.part(i); }
    int part_of(int vertex) const { return decomposition_.part_of(vertex); }
    const Decomposition& as_decomposition() const { return decomposition_; }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    Decomposition decomposition_;
};

// Map from ground-set elements to colors in 1..palette_size.
class Coloring {
public:
    Coloring(GroundSet ground, std::vector<int> assignment, int palette_size);

    const GroundSet& ground() const { return ground_; }
    const std::vector<int>& assignment() const { return assignment_; }
    int color(int vertex) const { return assignment_[static_cast<std::size_t>(vertex)]; }
    int palette_size() const { return palette_size_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    GroundSet ground_;
    std::vector<int> assignment_;
    int palette_size_;
};

// Unordered partition into nonempty blocks; blocks kept in canonical order.
class SetPartition {
public:
    SetPartition(GroundSet ground, std::vector<Subset> blocks);

    const GroundSet& ground() const { return ground_; }
    const std::vector<Subset>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    GroundSet ground_;
    std::vector<Subset> blocks_;
};

Decomposition coloring_to_decomposition(const Coloring& c);
Coloring decomposition_to_coloring(const Decomposition& d);

// Restartable stream over all n^|V| colorings, ascending lexicographic in the
// assignment vector. n = 0 with a nonempty ground set yields nothing.
class ColoringRange {
public:
    ColoringRange(GroundSet ground, int palette_size);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using difference_type = std::ptrdiff_t;
        using value_type = Coloring;
        using pointer = void;
        using reference = Coloring;

        iterator() = default;
        iterator(const ColoringRange* range, bool at_end);

        Coloring operator*() const;
        iterator& operator++();
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.assignment_ == b.assignment_);
        }

    private:
        const ColoringRange* range_ = nullptr;
        std::vector<int> assignment_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(this, false); }
    iterator end() const { return iterator(this, true); }
    Integer count() const;  // n^|V|

private:
    friend class iterator;
    GroundSet ground_;
    int palette_size_;
};

// True iff every part of `coarse` is the union of a consecutive run of
// `fine`'s parts, runs taken in order. Parts inside a run may appear in any
// order; only consecutive merging matters.
bool refines(const Composition& fine, const Composition& coarse);

// All 2^{t-1} coarsenings of an integer composition by merging consecutive
// entries, in a deterministic order.
std::vector<std::vector<int>> integer_composition_coarsenings(const std::vector<int>& p);

// Visit all compositions (ordered set partitions) of `mask`. The callback
// receives the parts; enumeration is deterministic and lazily generated.
// The empty mask yields exactly one (empty) composition.
void for_each_composition(Subset mask, const std::function<void(const std::vector<Subset>&)>& visit,
                          StepCounter* steps = nullptr);
Integer count_compositions(int set_size);  // ordered Bell number

// Visit all set partitions of `mask` (unordered blocks, canonical block order).
void for_each_set_partition(Subset mask, const std::function<void(const std::vector<Subset>&)>& visit);

// Sum of (-1)^{l(Q)} over refinements Q of the composition `parts` of the
// atom set {0..m-1} that place atom u strictly before atom v for every arc
// (u,v). Throws ValidationError on a cyclic arc relation.
Integer constrained_sign_sum(const std::vector<std::vector<int>>& parts,
                             const std::vector<std::pair<int, int>>& arcs);

// Interleavings of two compositions over disjoint ground sets (test utility).
std::vector<Composition> shuffle_product(const Composition& p, const Composition& q);

}  // namespace hopfchi
