#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hopfchi {

// Subset of a ground set as a bitmask; bit i stands for the i-th label in
// canonical order. Ground sets are capped at 64 elements.
using Subset = std::uint64_t;

// Finite set of distinct atom labels, iterated in lexicographic label order.
// All enumerations in the library inherit their determinism from this order.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);  // sorts; rejects duplicates

    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(const std::string& label) const;  // throws ValidationError if absent
    bool contains(const std::string& label) const;

    Subset full_mask() const;
    Subset mask_of(const std::vector<std::string>& members) const;
    std::vector<std::string> labels_of(Subset s) const;

    // Ground set on the labels selected by `s`, plus the index remap old->new.
    GroundSet sub_ground(Subset s) const;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;
    friend bool operator<(const GroundSet& a, const GroundSet& b) { return a.labels_ < b.labels_; }

private:
    std::vector<std::string> labels_;
};

GroundSet merge_disjoint(const GroundSet& a, const GroundSet& b);  // throws on overlap

// Translate a subset between ground sets sharing the relevant labels.
Subset remap(const GroundSet& from, Subset s, const GroundSet& to);

int popcount(Subset s);
bool subset_of(Subset a, Subset b);
std::vector<int> bits_of(Subset s);
int lowest_bit(Subset s);   // -1 for empty
int highest_bit(Subset s);  // -1 for empty

// Order subsets as ascending index sequences ({0,2} before {1}); this is the
// lexicographic order on sorted label lists.
bool lex_less(Subset a, Subset b);

// All submasks of `mask` (optionally without the empty one), in lex_less order.
std::vector<Subset> submasks(Subset mask, bool include_empty);

}  // namespace hopfchi
