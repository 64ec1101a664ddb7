#include "hopfchi/setcomb.hpp"

#include <algorithm>

#include "hopfchi/errors.hpp"

namespace hopfchi {

Decomposition::Decomposition(GroundSet ground, std::vector<Subset> parts)
    : ground_(std::move(ground)), parts_(std::move(parts)) {
    Subset seen = 0;
    for (Subset p : parts_) {
        if (!subset_of(p, ground_.full_mask())) throw ValidationError("decomposition part exceeds ground set");
        if ((p & seen) != 0) throw ValidationError("decomposition parts overlap");
        seen |= p;
    }
    if (seen != ground_.full_mask()) throw ValidationError("decomposition parts do not cover the ground set");
}

int Decomposition::part_of(int vertex) const {
    Subset bit = Subset{1} << vertex;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if ((parts_[i] & bit) != 0) return static_cast<int>(i);
    throw ValidationError("vertex outside decomposition");
}

Composition::Composition(GroundSet ground, std::vector<Subset> parts)
    : decomposition_(std::move(ground), std::move(parts)) {
    for (Subset p : decomposition_.parts())
        if (p == 0) throw ValidationError("composition with empty part");
}

Coloring::Coloring(GroundSet ground, std::vector<int> assignment, int palette_size)
    : ground_(std::move(ground)), assignment_(std::move(assignment)), palette_size_(palette_size) {
    if (palette_size_ < 0) throw ValidationError("negative palette size");
    if (assignment_.size() != static_cast<std::size_t>(ground_.size()))
        throw ValidationError("coloring assignment length mismatch");
    for (int c : assignment_)
        if (c < 1 || c > palette_size_) throw ValidationError("color outside palette");
}

SetPartition::SetPartition(GroundSet ground, std::vector<Subset> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
    Subset seen = 0;
    for (Subset b : blocks_) {
        if (b == 0) throw ValidationError("set partition with empty block");
        if (!subset_of(b, ground_.full_mask())) throw ValidationError("partition block exceeds ground set");
        if ((b & seen) != 0) throw ValidationError("partition blocks overlap");
        seen |= b;
    }
    if (seen != ground_.full_mask()) throw ValidationError("partition blocks do not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(), lex_less);
}

Decomposition coloring_to_decomposition(const Coloring& c) {
    std::vector<Subset> parts(static_cast<std::size_t>(c.palette_size()), 0);
    for (int v = 0; v < c.ground().size(); ++v)
        parts[static_cast<std::size_t>(c.color(v) - 1)] |= Subset{1} << v;
    return Decomposition(c.ground(), std::move(parts));
}

Coloring decomposition_to_coloring(const Decomposition& d) {
    std::vector<int> assignment(static_cast<std::size_t>(d.ground().size()), 0);
    for (int i = 0; i < d.length(); ++i)
        for (int v : bits_of(d.part(i))) assignment[static_cast<std::size_t>(v)] = i + 1;
    return Coloring(d.ground(), std::move(assignment), d.length());
}

ColoringRange::ColoringRange(GroundSet ground, int palette_size)
    : ground_(std::move(ground)), palette_size_(palette_size) {
    if (palette_size_ < 0) throw ValidationError("negative palette size");
}

ColoringRange::iterator::iterator(const ColoringRange* range, bool at_end) : range_(range), done_(at_end) {
    if (done_) return;
    if (range_->palette_size_ == 0 && range_->ground_.size() > 0) {
        done_ = true;  // no colorings, not an error
        return;
    }
    assignment_.assign(static_cast<std::size_t>(range_->ground_.size()), 1);
}

Coloring ColoringRange::iterator::operator*() const {
    return Coloring(range_->ground_, assignment_, range_->palette_size_);
}

ColoringRange::iterator& ColoringRange::iterator::operator++() {
    // odometer with the last coordinate fastest: ascending lexicographic order
    for (auto it = assignment_.rbegin(); it != assignment_.rend(); ++it) {
        if (*it < range_->palette_size_) {
            ++*it;
            return *this;
        }
        *it = 1;
    }
    done_ = true;
    return *this;
}

Integer ColoringRange::count() const {
    return int_pow(Integer(palette_size_), static_cast<unsigned>(ground_.size()));
}

bool refines(const Composition& fine, const Composition& coarse) {
    if (fine.ground() != coarse.ground()) throw ValidationError("refines: mismatched ground sets");
    int expected = 0;
    for (int j = 0; j < fine.length(); ++j) {
        int host = -1;
        for (int i = 0; i < coarse.length(); ++i) {
            if (subset_of(fine.part(j), coarse.part(i))) {
                host = i;
                break;
            }
        }
        if (host == -1) return false;  // a fine part straddles coarse parts
        if (host == expected + 1) ++expected;
        else if (host != expected) return false;  // runs out of order or split
    }
    return true;
}

std::vector<std::vector<int>> integer_composition_coarsenings(const std::vector<int>& p) {
    if (p.empty()) throw ValidationError("empty integer composition");
    std::size_t t = p.size();
    std::vector<std::vector<int>> out;
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (t - 1)); ++cuts) {
        std::vector<int> q;
        int acc = p[0];
        for (std::size_t i = 1; i < t; ++i) {
            if (cuts & (std::uint64_t{1} << (i - 1))) {
                q.push_back(acc);
                acc = p[i];
            } else {
                acc += p[i];
            }
        }
        q.push_back(acc);
        out.push_back(std::move(q));
    }
    return out;
}

namespace {

void compositions_rec(Subset remaining, std::vector<Subset>& acc,
                      const std::function<void(const std::vector<Subset>&)>& visit, StepCounter* steps) {
    if (remaining == 0) {
        visit(acc);
        return;
    }
    for (Subset part : submasks(remaining, false)) {
        if (steps != nullptr) steps->charge();
        acc.push_back(part);
        compositions_rec(remaining & ~part, acc, visit, steps);
        acc.pop_back();
    }
}

}  // namespace

void for_each_composition(Subset mask, const std::function<void(const std::vector<Subset>&)>& visit,
                          StepCounter* steps) {
    std::vector<Subset> acc;
    compositions_rec(mask, acc, visit, steps);
}

Integer count_compositions(int set_size) {
    std::vector<Integer> a(static_cast<std::size_t>(set_size) + 1);
    a[0] = 1;
    for (int n = 1; n <= set_size; ++n) {
        Integer sum = 0;
        for (int j = 1; j <= n; ++j)
            sum += binomial_uint(static_cast<unsigned>(n), static_cast<unsigned>(j)) * a[static_cast<std::size_t>(n - j)];
        a[static_cast<std::size_t>(n)] = sum;
    }
    return a[static_cast<std::size_t>(set_size)];
}

namespace {

void partitions_rec(Subset remaining, std::vector<Subset>& acc,
                    const std::function<void(const std::vector<Subset>&)>& visit) {
    if (remaining == 0) {
        visit(acc);
        return;
    }
    Subset low = Subset{1} << lowest_bit(remaining);
    Subset rest = remaining & ~low;
    for (Subset extra : submasks(rest, true)) {
        acc.push_back(low | extra);
        partitions_rec(rest & ~extra, acc, visit);
        acc.pop_back();
    }
}

}  // namespace

void for_each_set_partition(Subset mask, const std::function<void(const std::vector<Subset>&)>& visit) {
    std::vector<Subset> acc;
    partitions_rec(mask, acc, visit);
}

namespace {

bool arcs_acyclic(int atom_count, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<int>> next(static_cast<std::size_t>(atom_count));
    std::vector<int> indegree(static_cast<std::size_t>(atom_count), 0);
    for (auto [u, v] : arcs) {
        next[static_cast<std::size_t>(u)].push_back(v);
        ++indegree[static_cast<std::size_t>(v)];
    }
    std::vector<int> queue;
    for (int i = 0; i < atom_count; ++i)
        if (indegree[static_cast<std::size_t>(i)] == 0) queue.push_back(i);
    int seen = 0;
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        ++seen;
        for (int v : next[static_cast<std::size_t>(u)])
            if (--indegree[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    }
    return seen == atom_count;
}

}  // namespace

Integer constrained_sign_sum(const std::vector<std::vector<int>>& parts,
                             const std::vector<std::pair<int, int>>& arcs) {
    int atom_count = 0;
    for (const auto& part : parts) atom_count += static_cast<int>(part.size());
    for (auto [u, v] : arcs)
        if (u < 0 || v < 0 || u >= atom_count || v >= atom_count)
            throw ValidationError("constrained_sign_sum: arc endpoint outside the atom range");
    if (!arcs_acyclic(atom_count, arcs)) throw ValidationError("constrained_sign_sum: cyclic constraint relation");

    // Q refines P part by part; enumerate compositions of each part and track
    // every atom's global block index in Q.
    std::vector<int> block_of(static_cast<std::size_t>(atom_count), -1);
    Integer total = 0;

    std::function<void(std::size_t, int)> rec = [&](std::size_t part_index, int blocks_so_far) {
        if (part_index == parts.size()) {
            for (auto [u, v] : arcs)
                if (block_of[static_cast<std::size_t>(u)] >= block_of[static_cast<std::size_t>(v)]) return;
            total += (blocks_so_far % 2 == 0) ? 1 : -1;
            return;
        }
        const auto& atoms = parts[part_index];
        Subset local_full = atoms.empty() ? 0 : (~Subset{0} >> (64 - atoms.size()));
        for_each_composition(local_full, [&](const std::vector<Subset>& local_parts) {
            for (std::size_t b = 0; b < local_parts.size(); ++b)
                for (int bit : bits_of(local_parts[b]))
                    block_of[static_cast<std::size_t>(atoms[static_cast<std::size_t>(bit)])] =
                        blocks_so_far + static_cast<int>(b);
            rec(part_index + 1, blocks_so_far + static_cast<int>(local_parts.size()));
        });
    };
    rec(0, 0);
    return total;
}

namespace {

void shuffle_rec(const Composition& p, const Composition& q, const GroundSet& merged, std::size_t i, std::size_t j,
                 std::vector<Subset>& acc, std::vector<Composition>& out) {
    if (i == p.parts().size() && j == q.parts().size()) {
        out.emplace_back(merged, acc);
        return;
    }
    if (i < p.parts().size()) {
        acc.push_back(remap(p.ground(), p.part(static_cast<int>(i)), merged));
        shuffle_rec(p, q, merged, i + 1, j, acc, out);
        acc.pop_back();
    }
    if (j < q.parts().size()) {
        acc.push_back(remap(q.ground(), q.part(static_cast<int>(j)), merged));
        shuffle_rec(p, q, merged, i, j + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Composition> shuffle_product(const Composition& p, const Composition& q) {
    GroundSet merged = merge_disjoint(p.ground(), q.ground());
    std::vector<Composition> out;
    std::vector<Subset> acc;
    shuffle_rec(p, q, merged, 0, 0, acc, out);
    return out;
}

}  // namespace hopfchi
