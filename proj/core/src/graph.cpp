#include "hopfchi/graph.hpp"

#include <algorithm>

namespace hopfchi {

Graph::Graph(GroundSet ground, std::vector<Subset> edges) : ground_(std::move(ground)), edges_(std::move(edges)) {
    for (Subset e : edges_) {
        if (popcount(e) != 2) throw ValidationError("graph edge must have exactly two vertices");
        if (!subset_of(e, ground_.full_mask())) throw ValidationError("graph edge exceeds ground set");
    }
    std::sort(edges_.begin(), edges_.end(), lex_less);
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(Subset e) const { return std::binary_search(edges_.begin(), edges_.end(), e, lex_less); }

Orientation kappa(const PartialOrientation& f) {
    std::vector<Subset> images;
    images.reserve(f.host.edges().size());
    for (int i = 0; i < f.host.edge_count(); ++i) {
        int head = f.head[static_cast<std::size_t>(i)];
        images.push_back(head < 0 ? f.host.edge(i) : (Subset{1} << head));
    }
    return Orientation(f.host.as_hypergraph(), std::move(images));
}

PartialOrientation kappa_inverse(const Graph& g, const Orientation& f) {
    if (f.host() != g.as_hypergraph()) throw ValidationError("kappa_inverse: orientation of a different graph");
    PartialOrientation out{g, {}};
    for (int i = 0; i < g.edge_count(); ++i) {
        Subset img = f.image(i);
        if (img == g.edge(i)) out.head.push_back(-1);
        else out.head.push_back(lowest_bit(img));
    }
    return out;
}

bool is_acyclic(const PartialOrientation& f) { return is_acyclic(kappa(f)); }

namespace {

std::vector<Subset> undirected_blocks(const PartialOrientation& f) {
    // components of the undirected part, singletons included
    std::vector<Subset> undirected;
    for (int i = 0; i < f.host.edge_count(); ++i)
        if (f.head[static_cast<std::size_t>(i)] < 0) undirected.push_back(f.host.edge(i));
    return connected_components(Hypergraph(f.host.ground(), undirected)).components;
}

}  // namespace

FlatDecomposition flat_decomposition(const PartialOrientation& f) {
    const Graph& g = f.host;
    FlatDecomposition out;
    out.blocks = undirected_blocks(f);

    std::vector<int> block_of(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (int v : bits_of(out.blocks[b])) block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);

    std::vector<Subset> flat_edges;
    for (Subset e : g.edges())
        for (Subset block : out.blocks)
            if (subset_of(e, block)) flat_edges.push_back(e);
    out.flat = Graph(g.ground(), flat_edges);

    // acyclicity forces the undirected part to be exactly its flat closure
    std::size_t undirected_count = 0;
    for (int h : f.head)
        if (h < 0) ++undirected_count;
    if (out.flat.edges().size() != undirected_count)
        throw DisagreementError("flat_decomposition: undirected part is not a flat (orientation is cyclic)");

    // quotient on block representatives
    std::vector<std::string> labels;
    for (Subset block : out.blocks) labels.push_back(g.ground().label(lowest_bit(block)));
    GroundSet qground(labels);
    std::vector<Subset> qedges;
    std::vector<std::pair<Subset, int>> qheads;  // edge -> head block
    for (int i = 0; i < g.edge_count(); ++i) {
        auto vs = bits_of(g.edge(i));
        int b0 = block_of[static_cast<std::size_t>(vs[0])];
        int b1 = block_of[static_cast<std::size_t>(vs[1])];
        if (b0 == b1) continue;
        Subset qe = qground.mask_of({g.ground().label(lowest_bit(out.blocks[static_cast<std::size_t>(b0)])),
                                     g.ground().label(lowest_bit(out.blocks[static_cast<std::size_t>(b1)]))});
        int head = f.head[static_cast<std::size_t>(i)];
        int head_block = block_of[static_cast<std::size_t>(head)];
        for (auto& [seen, hb] : qheads)
            if (seen == qe && hb != head_block)
                throw DisagreementError("flat_decomposition: inconsistent quotient orientation");
        qedges.push_back(qe);
        qheads.push_back({qe, head_block});
    }
    out.quotient = Graph(qground, qedges);
    out.quotient_head.assign(out.quotient.edges().size(), -1);
    for (int i = 0; i < out.quotient.edge_count(); ++i)
        for (const auto& [qe, hb] : qheads)
            if (qe == out.quotient.edge(i))
                out.quotient_head[static_cast<std::size_t>(i)] =
                    qground.index_of(g.ground().label(lowest_bit(out.blocks[static_cast<std::size_t>(hb)])));
    return out;
}

PartialOrientation from_flat(const Graph& g, const std::vector<Subset>& blocks,
                             const std::vector<int>& quotient_head) {
    std::vector<int> block_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int v : bits_of(blocks[b])) block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);

    // rebuild the quotient exactly as flat_decomposition does, to look up heads
    std::vector<std::string> labels;
    for (Subset block : blocks) labels.push_back(g.ground().label(lowest_bit(block)));
    GroundSet qground(labels);
    std::vector<Subset> qedges;
    for (Subset e : g.edges()) {
        auto vs = bits_of(e);
        int b0 = block_of[static_cast<std::size_t>(vs[0])];
        int b1 = block_of[static_cast<std::size_t>(vs[1])];
        if (b0 != b1)
            qedges.push_back(qground.mask_of({labels[static_cast<std::size_t>(b0)], labels[static_cast<std::size_t>(b1)]}));
    }
    Graph quotient(qground, qedges);

    PartialOrientation out{g, std::vector<int>(static_cast<std::size_t>(g.edge_count()), -1)};
    for (int i = 0; i < g.edge_count(); ++i) {
        auto vs = bits_of(g.edge(i));
        int b0 = block_of[static_cast<std::size_t>(vs[0])];
        int b1 = block_of[static_cast<std::size_t>(vs[1])];
        if (b0 == b1) continue;
        Subset qe = qground.mask_of({labels[static_cast<std::size_t>(b0)], labels[static_cast<std::size_t>(b1)]});
        int qi = -1;
        for (int j = 0; j < quotient.edge_count(); ++j)
            if (quotient.edge(j) == qe) qi = j;
        int head_rep = quotient_head[static_cast<std::size_t>(qi)];
        const std::string& head_label = qground.label(head_rep);
        int head_block = -1;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (labels[b] == head_label) head_block = static_cast<int>(b);
        out.head[static_cast<std::size_t>(i)] =
            (block_of[static_cast<std::size_t>(vs[0])] == head_block) ? vs[0] : vs[1];
    }
    return out;
}

Character graph_character(const Character& zeta) {
    Character wrapped = zeta;
    wrapped.name = zeta.name + "(graph)";
    wrapped.connected_value = [inner = zeta.connected_value](const Hypergraph& comp) {
        std::vector<Subset> kept;  // the graph monoid forgets size-1 edges
        for (Subset e : comp.edges())
            if (popcount(e) >= 2) kept.push_back(e);
        return inner(Hypergraph(comp.ground(), kept));
    };
    return wrapped;
}

Rational graph_chi(const Graph& g, const Character& zeta, const Integer& n, Budget budget) {
    return chi_orientation(g.as_hypergraph(), graph_character(zeta), n, budget);
}

GraphInvariantResult graph_chi_polynomial(const Graph& g, const Character& zeta, Budget budget) {
    InvariantResult base = chi_polynomial(g.as_hypergraph(), graph_character(zeta), budget);
    GraphInvariantResult out;
    out.polynomial = std::move(base.polynomial);
    for (auto& row : base.breakdown) {
        PartialOrientation partial = kappa_inverse(g, row.orientation);
        FlatDecomposition flat = flat_decomposition(partial);
        out.breakdown.push_back({std::move(partial), row.zeta_value, std::move(row.strict_count_poly), std::move(flat)});
    }
    return out;
}

RationalPolynomial deletion_contraction_chromatic(const Graph& g) {
    if (g.edge_count() == 0)
        return RationalPolynomial::monomial(g.vertex_count(), 1);

    Subset e = g.edge(0);
    std::vector<Subset> rest(g.edges().begin() + 1, g.edges().end());
    Graph without(g.ground(), rest);

    auto vs = bits_of(e);
    int keep = vs[0];
    int drop = vs[1];
    std::vector<std::string> labels;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != drop) labels.push_back(g.ground().label(v));
    GroundSet merged_ground(labels);
    std::vector<Subset> merged_edges;
    for (Subset f : rest) {
        std::vector<std::string> ends;
        for (int v : bits_of(f)) ends.push_back(g.ground().label(v == drop ? keep : v));
        if (ends[0] == ends[1]) continue;  // loop created by the contraction
        merged_edges.push_back(merged_ground.mask_of(ends));
    }
    Graph contracted(merged_ground, merged_edges);

    return deletion_contraction_chromatic(without) - deletion_contraction_chromatic(contracted);
}

}  // namespace hopfchi
