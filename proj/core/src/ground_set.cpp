#include "hopfchi/ground_set.hpp"

#include <algorithm>
#include <bit>

#include "hopfchi/errors.hpp"

namespace hopfchi {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    auto dup = std::adjacent_find(labels_.begin(), labels_.end());
    if (dup != labels_.end()) throw ValidationError("duplicate label '" + *dup + "' in ground set");
    if (labels_.size() > 64) throw ValidationError("ground sets are limited to 64 elements");
}

int GroundSet::index_of(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw ValidationError("unknown label '" + label + "'");
    return static_cast<int>(it - labels_.begin());
}

bool GroundSet::contains(const std::string& label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

Subset GroundSet::full_mask() const {
    return labels_.empty() ? 0 : (~Subset{0} >> (64 - labels_.size()));
}

Subset GroundSet::mask_of(const std::vector<std::string>& members) const {
    Subset s = 0;
    for (const auto& m : members) s |= Subset{1} << index_of(m);
    return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
    std::vector<std::string> out;
    for (int i : bits_of(s)) out.push_back(label(i));
    return out;
}

GroundSet GroundSet::sub_ground(Subset s) const {
    return GroundSet(labels_of(s));  // already sorted, so indices stay order-compatible
}

GroundSet merge_disjoint(const GroundSet& a, const GroundSet& b) {
    std::vector<std::string> all = a.labels();
    for (const auto& l : b.labels()) {
        if (a.contains(l)) throw ValidationError("ground sets overlap on '" + l + "'");
        all.push_back(l);
    }
    return GroundSet(std::move(all));
}

Subset remap(const GroundSet& from, Subset s, const GroundSet& to) {
    Subset out = 0;
    for (int i : bits_of(s)) out |= Subset{1} << to.index_of(from.label(i));
    return out;
}

int popcount(Subset s) { return std::popcount(s); }

bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

std::vector<int> bits_of(Subset s) {
    std::vector<int> out;
    while (s != 0) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

int lowest_bit(Subset s) { return s == 0 ? -1 : std::countr_zero(s); }

int highest_bit(Subset s) { return s == 0 ? -1 : 63 - std::countl_zero(s); }

bool lex_less(Subset a, Subset b) {
    while (a != 0 && b != 0) {
        int la = std::countr_zero(a);
        int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;  // proper prefix
}

std::vector<Subset> submasks(Subset mask, bool include_empty) {
    std::vector<Subset> out;
    Subset s = mask;
    while (true) {
        if (s != 0 || include_empty) out.push_back(s);
        if (s == 0) break;
        s = (s - 1) & mask;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace hopfchi
