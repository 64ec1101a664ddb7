#include "hopfchi/building_set.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hopfchi {

BuildingSet::BuildingSet(GroundSet ground, std::vector<Subset> connected_sets)
    : ground_(std::move(ground)), sets_(std::move(connected_sets)) {
    std::sort(sets_.begin(), sets_.end(), lex_less);
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    for (Subset s : sets_) {
        if (s == 0) throw ValidationError("building set member is empty");
        if (!subset_of(s, ground_.full_mask())) throw ValidationError("building set member exceeds ground set");
    }
    for (int v = 0; v < ground_.size(); ++v)
        if (!std::binary_search(sets_.begin(), sets_.end(), Subset{1} << v, lex_less))
            throw ValidationError("building set misses the singleton {" + ground_.label(v) + "}");
    for (Subset a : sets_)
        for (Subset b : sets_)
            if ((a & b) != 0 && !std::binary_search(sets_.begin(), sets_.end(), a | b, lex_less))
                throw ValidationError("building set is not closed under unions of intersecting members");
}

std::vector<Subset> BuildingSet::components_within(Subset within) const {
    // union-find over the vertices of `within` via the members inside it
    std::vector<int> verts = bits_of(within);
    std::map<int, int> parent;
    for (int v : verts) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Subset s : sets_) {
        if (!subset_of(s, within)) continue;
        auto vs = bits_of(s);
        for (std::size_t i = 1; i < vs.size(); ++i) {
            int a = find(vs[0]);
            int b = find(vs[i]);
            if (a != b) parent[b] = a;
        }
    }
    std::map<int, Subset> groups;
    for (int v : verts) groups[find(v)] |= Subset{1} << v;
    std::vector<Subset> out;
    for (const auto& [root, mask] : groups) out.push_back(mask);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

BForest::BForest(GroundSet ground, std::vector<std::pair<Subset, Subset>> nodes)
    : ground_(std::move(ground)), nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    Subset seen = 0;
    for (const auto& [block, parent] : nodes_) {
        if (block == 0) throw ValidationError("B-forest node with empty block");
        if ((block & seen) != 0) throw ValidationError("B-forest blocks overlap");
        seen |= block;
    }
    if (seen != ground_.full_mask()) throw ValidationError("B-forest blocks do not cover the ground set");
    for (const auto& [block, parent] : nodes_) {
        if (parent == 0) continue;
        bool found = false;
        for (const auto& [other, ignored] : nodes_) found = found || other == parent;
        if (!found) throw ValidationError("B-forest parent block missing");
    }
}

std::vector<int> BForest::parents() const {
    std::vector<int> out(nodes_.size(), -1);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].second == 0) continue;
        for (std::size_t j = 0; j < nodes_.size(); ++j)
            if (nodes_[j].first == nodes_[i].second) out[i] = static_cast<int>(j);
    }
    return out;
}

std::vector<int> BForest::depths() const {
    std::vector<int> parent = parents();
    std::vector<int> depth(nodes_.size(), -1);
    std::function<int(std::size_t)> rec = [&](std::size_t i) {
        if (depth[i] == -2) throw ValidationError("B-forest parent relation has a cycle");
        if (depth[i] >= 0) return depth[i];
        depth[i] = -2;
        depth[i] = (parent[i] < 0) ? 0 : rec(static_cast<std::size_t>(parent[i])) + 1;
        return depth[i];
    };
    for (std::size_t i = 0; i < nodes_.size(); ++i) rec(i);
    return depth;
}

std::vector<Subset> BForest::blocks() const {
    std::vector<Subset> out;
    for (const auto& [block, parent] : nodes_) out.push_back(block);
    return out;
}

namespace {

using Node = std::pair<Subset, Subset>;

void trees_of_component(const BuildingSet& b, Subset component, Subset parent_block,
                        const std::function<void(std::vector<Node>&)>& emit, std::vector<Node>& acc,
                        StepCounter& steps);

// expand a list of components one after the other, all combinations
void forests_of_components(const BuildingSet& b, const std::vector<Subset>& components, std::size_t at,
                           Subset parent_block, const std::function<void(std::vector<Node>&)>& emit,
                           std::vector<Node>& acc, StepCounter& steps) {
    if (at == components.size()) {
        emit(acc);
        return;
    }
    trees_of_component(
        b, components[at], parent_block,
        [&](std::vector<Node>& inner) { forests_of_components(b, components, at + 1, parent_block, emit, inner, steps); },
        acc, steps);
}

void trees_of_component(const BuildingSet& b, Subset component, Subset parent_block,
                        const std::function<void(std::vector<Node>&)>& emit, std::vector<Node>& acc,
                        StepCounter& steps) {
    // root block: any nonempty subset of the component; children are the
    // maximal connected sets avoiding it
    for (Subset root : submasks(component, false)) {
        steps.charge();
        acc.push_back({root, parent_block});
        std::vector<Subset> children = b.components_within(component & ~root);
        forests_of_components(b, children, 0, root, emit, acc, steps);
        acc.pop_back();
    }
}

}  // namespace

std::vector<BForest> enumerate_bforests(const BuildingSet& b, Budget budget) {
    StepCounter steps(budget);
    std::vector<Subset> components = b.components_within(b.ground().full_mask());
    std::vector<BForest> out;
    std::vector<Node> acc;
    if (b.ground().empty()) {
        out.emplace_back(b.ground(), std::vector<Node>{});
        return out;
    }
    forests_of_components(b, components, 0, 0,
                          [&](std::vector<Node>& nodes) { out.emplace_back(b.ground(), nodes); }, acc, steps);
    return out;
}

Orientation bforest_to_orientation(const BuildingSet& b, const BForest& forest) {
    Hypergraph host = b.as_hypergraph();
    std::vector<int> depth = forest.depths();
    std::vector<Subset> blocks = forest.blocks();

    std::vector<Subset> images;
    images.reserve(host.edges().size());
    for (Subset e : host.edges()) {
        // the highest (closest to a root) node meeting e is unique
        int best = -1;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if ((e & blocks[i]) == 0) continue;
            if (best < 0 || depth[i] < depth[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
        }
        images.push_back(e & blocks[static_cast<std::size_t>(best)]);
    }
    return Orientation(std::move(host), std::move(images));
}

BForest orientation_to_bforest(const BuildingSet& b, const Orientation& f) {
    if (f.host() != b.as_hypergraph()) throw ValidationError("orientation_to_bforest: wrong host");

    auto image_of = [&](Subset e) {
        for (int i = 0; i < f.host().edge_count(); ++i)
            if (f.host().edge(i) == e) return f.image(i);
        throw ValidationError("orientation_to_bforest: not a building-set member");
    };

    std::vector<Node> nodes;
    std::function<void(Subset, Subset)> build = [&](Subset component, Subset parent_block) {
        // the component itself is a connected set; its image is the root block
        Subset root = image_of(component);
        nodes.push_back({root, parent_block});
        for (Subset child : b.components_within(component & ~root)) build(child, root);
    };
    for (Subset component : b.components_within(b.ground().full_mask())) build(component, 0);
    return BForest(b.ground(), std::move(nodes));
}

SimpleHypergraph induced_building_set(const BuildingSet& b, const BForest& forest) {
    Orientation f = bforest_to_orientation(b, forest);
    return SimpleHypergraph(b.ground(), f.images());
}

namespace {

Integer forest_coloring_count(const BForest& forest, int n, bool strict) {
    if (n <= 0) return forest.node_count() == 0 ? Integer(1) : Integer(0);
    std::vector<int> parent = forest.parents();
    int m = forest.node_count();

    // children adjacency
    std::vector<std::vector<int>> children(static_cast<std::size_t>(m));
    std::vector<int> roots;
    for (int i = 0; i < m; ++i) {
        if (parent[static_cast<std::size_t>(i)] < 0) roots.push_back(i);
        else children[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])].push_back(i);
    }

    // count[i][c] = colorings of the subtree at i with block i colored c
    std::vector<std::vector<Integer>> count(static_cast<std::size_t>(m),
                                            std::vector<Integer>(static_cast<std::size_t>(n) + 1, Integer(0)));
    std::function<void(int)> fill = [&](int i) {
        for (int child : children[static_cast<std::size_t>(i)]) fill(child);
        for (int c = 1; c <= n; ++c) {
            Integer total = 1;
            for (int child : children[static_cast<std::size_t>(i)]) {
                Integer child_sum = 0;
                int hi = strict ? c - 1 : c;
                for (int d = 1; d <= hi; ++d) child_sum += count[static_cast<std::size_t>(child)][static_cast<std::size_t>(d)];
                total *= child_sum;
                if (total == 0) break;
            }
            count[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = total;
        }
    };
    Integer result = 1;
    for (int r : roots) {
        fill(r);
        Integer root_sum = 0;
        for (int c = 1; c <= n; ++c) root_sum += count[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        result *= root_sum;
    }
    return result;
}

}  // namespace

Integer forest_strict_colorings(const BForest& forest, int n) { return forest_coloring_count(forest, n, true); }

Integer forest_compatible_colorings(const BForest& forest, int n) {
    return forest_coloring_count(forest, n, false);
}

Rational bs_chi(const BuildingSet& b, const Character& zeta, const Integer& n, Budget budget) {
    bool negative = n < 0;
    int m = negative ? (-n).convert_to<int>() : n.convert_to<int>();
    Rational total = 0;
    for (const BForest& forest : enumerate_bforests(b, budget)) {
        Hypergraph induced = induced_building_set(b, forest).as_hypergraph();
        Rational zeta_value = evaluate_character(zeta, induced);
        if (zeta_value == 0) continue;
        if (negative) {
            Rational sign = (component_count(induced) % 2 == 0) ? 1 : -1;
            total += sign * zeta_value * Rational(forest_compatible_colorings(forest, m));
        } else {
            total += zeta_value * Rational(forest_strict_colorings(forest, m));
        }
    }
    return total;
}

RationalPolynomial bs_chi_polynomial(const BuildingSet& b, const Character& zeta, Budget budget) {
    int v = b.ground().size();
    std::vector<std::pair<Integer, Rational>> points;
    for (int n = 0; n <= v; ++n) points.push_back({Integer(n), bs_chi(b, zeta, Integer(n), budget)});
    return lagrange_interpolate(points);
}

}  // namespace hopfchi
