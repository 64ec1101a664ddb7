#pragma once

#include <random>
#include <string>
#include <vector>

#include "hopfchi/hypergraph.hpp"

namespace hopfchi::testing {

// Ground set {"1", ..., "k"}; single-character labels keep the canonical
// order aligned with the numeric one.
inline GroundSet numbered_ground(int k) {
    std::vector<std::string> labels;
    for (int i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
    return GroundSet(labels);
}

inline Hypergraph hg(int vertices, const std::vector<std::vector<int>>& edges) {
    GroundSet ground = numbered_ground(vertices);
    std::vector<Subset> masks;
    for (const auto& e : edges) {
        Subset m = 0;
        for (int v : e) m |= Subset{1} << (v - 1);
        masks.push_back(m);
    }
    return Hypergraph(ground, masks);
}

// Fixed deterministic instance family: hypergraphs with <= max_vertices
// vertices and <= max_edges edges, reproducible across runs.
inline std::vector<Hypergraph> deterministic_hypergraphs(int max_vertices, int max_edges, int count,
                                                         unsigned seed = 20240901) {
    std::mt19937 rng(seed);
    std::vector<Hypergraph> out;
    while (static_cast<int>(out.size()) < count) {
        int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices));
        int e = static_cast<int>(rng() % static_cast<unsigned>(max_edges + 1));
        Subset full = (v == 0) ? 0 : (~Subset{0} >> (64 - v));
        std::vector<Subset> edges;
        for (int i = 0; i < e; ++i) {
            Subset edge = rng() & full;
            if (edge == 0) edge = Subset{1} << (rng() % static_cast<unsigned>(v));
            edges.push_back(edge);
        }
        out.push_back(Hypergraph(numbered_ground(v), edges));
    }
    return out;
}

}  // namespace hopfchi::testing
