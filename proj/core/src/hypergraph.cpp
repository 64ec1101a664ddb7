#include "hopfchi/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hopfchi/errors.hpp"

namespace hopfchi {

Hypergraph::Hypergraph(GroundSet ground, std::vector<Subset> edges)
    : ground_(std::move(ground)), edges_(std::move(edges)) {
    for (Subset e : edges_) {
        if (e == 0) throw ValidationError("hypergraph edge is empty");
        if (!subset_of(e, ground_.full_mask())) throw ValidationError("hypergraph edge exceeds ground set");
    }
    std::sort(edges_.begin(), edges_.end(), lex_less);
}

Subset Hypergraph::non_isolated() const {
    Subset covered = 0;
    for (Subset e : edges_) covered |= e;
    return covered;
}

Hypergraph make_hypergraph(const std::vector<std::string>& vertices,
                           const std::vector<std::vector<std::string>>& edges) {
    GroundSet ground(vertices);
    std::vector<Subset> masks;
    masks.reserve(edges.size());
    for (const auto& e : edges) masks.push_back(ground.mask_of(e));
    return Hypergraph(std::move(ground), std::move(masks));
}

Hypergraph restrict_to(const Hypergraph& h, Subset w) {
    if (!subset_of(w, h.ground().full_mask())) throw ValidationError("restrict_to: subset exceeds ground set");
    GroundSet sub = h.ground().sub_ground(w);
    std::vector<Subset> edges;
    for (Subset e : h.edges())
        if (subset_of(e, w)) edges.push_back(remap(h.ground(), e, sub));
    return Hypergraph(std::move(sub), std::move(edges));
}

Hypergraph contract(const Hypergraph& h, Subset w) {
    if (!subset_of(w, h.ground().full_mask())) throw ValidationError("contract: subset exceeds ground set");
    Subset rest = h.ground().full_mask() & ~w;
    GroundSet sub = h.ground().sub_ground(rest);
    std::vector<Subset> edges;
    for (Subset e : h.edges())
        if (!subset_of(e, w)) edges.push_back(remap(h.ground(), e & rest, sub));
    return Hypergraph(std::move(sub), std::move(edges));
}

Hypergraph product(const Hypergraph& a, const Hypergraph& b) {
    GroundSet merged = merge_disjoint(a.ground(), b.ground());
    std::vector<Subset> edges;
    edges.reserve(a.edges().size() + b.edges().size());
    for (Subset e : a.edges()) edges.push_back(remap(a.ground(), e, merged));
    for (Subset e : b.edges()) edges.push_back(remap(b.ground(), e, merged));
    return Hypergraph(std::move(merged), std::move(edges));
}

Hypergraph mu_delta(const Hypergraph& h, const Decomposition& d) {
    if (d.ground() != h.ground()) throw ValidationError("mu_delta: decomposition over a different ground set");
    std::vector<Subset> edges;
    edges.reserve(h.edges().size());
    for (Subset e : h.edges()) {
        int max_part = -1;
        for (int v : bits_of(e)) max_part = std::max(max_part, d.part_of(v));
        edges.push_back(e & d.part(max_part));
    }
    return Hypergraph(h.ground(), std::move(edges));
}

Hypergraph mu_delta_iterated(const Hypergraph& h, const Decomposition& d) {
    if (d.ground() != h.ground()) throw ValidationError("mu_delta: decomposition over a different ground set");
    Hypergraph remaining = h;
    Hypergraph merged;  // empty hypergraph, the unit
    for (int i = 0; i < d.length(); ++i) {
        Subset part_in_remaining = remaining.ground().mask_of(h.ground().labels_of(d.part(i)));
        merged = product(merged, restrict_to(remaining, part_in_remaining));
        remaining = contract(remaining, part_in_remaining);
    }
    return merged;
}

ConnectedComponentSplit connected_components(const Hypergraph& h) {
    int n = h.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (Subset e : h.edges()) {
        auto vs = bits_of(e);
        for (std::size_t i = 1; i < vs.size(); ++i) {
            int a = find(vs[0]);
            int b = find(vs[i]);
            if (a != b) parent[static_cast<std::size_t>(b)] = a;
        }
    }
    std::vector<Subset> masks(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) masks[static_cast<std::size_t>(find(v))] |= Subset{1} << v;

    ConnectedComponentSplit split;
    split.isolated = h.isolated();
    for (Subset m : masks)
        if (m != 0) split.components.push_back(m);
    std::sort(split.components.begin(), split.components.end(), lex_less);
    return split;
}

int component_count(const Hypergraph& h) {
    return static_cast<int>(connected_components(h).components.size());
}

Hypergraph component_hypergraph(const Hypergraph& h, Subset component) {
    return restrict_to(h, component);  // component edges lie inside the component
}

}  // namespace hopfchi
