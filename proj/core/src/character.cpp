#include "hopfchi/character.hpp"

namespace hopfchi {

Rational evaluate_character(const Character& zeta, const Hypergraph& h) {
    Rational value = 1;
    for (Subset component : connected_components(h).components) {
        value *= zeta.connected_value(component_hypergraph(h, component));
        if (value == 0) return 0;
    }
    return value;
}

namespace {

bool all_edges_of_size(const Hypergraph& h, int size) {
    for (Subset e : h.edges())
        if (popcount(e) != size) return false;
    return true;
}

bool is_isolated_vertex(const Hypergraph& h) { return h.vertex_count() == 1 && h.edge_count() == 0; }

}  // namespace

const Character& character_zeta1() {
    static const Character c{
        "zeta1",
        [](const Hypergraph& comp) -> Rational {
            // discrete = product of size-1 elements; for a connected piece that
            // means every edge is a singleton (so the piece is one vertex)
            return all_edges_of_size(comp, 1) ? 1 : 0;
        },
        /*declared_odd=*/true,
        /*declared_characteristic=*/true,
    };
    return c;
}

const Character& character_zeta_graphic() {
    static const Character c{
        "zeta_graphic",
        [](const Hypergraph& comp) -> Rational {
            if (is_isolated_vertex(comp)) return 1;
            return comp.edge_count() > 0 && all_edges_of_size(comp, 2) ? 1 : 0;
        },
        /*declared_odd=*/false,
        /*declared_characteristic=*/true,
    };
    return c;
}

const Character& character_zeta_e3() {
    static const Character c{
        "zeta_e3",
        [](const Hypergraph& comp) -> Rational {
            if (is_isolated_vertex(comp)) return 1;
            return comp.vertex_count() == 3 && comp.edge_count() == 1 &&
                           comp.edge(0) == comp.ground().full_mask()
                       ? 1
                       : 0;
        },
        /*declared_odd=*/true,
        /*declared_characteristic=*/true,
    };
    return c;
}

const Character& character_zeta_3() {
    static const Character c{
        "zeta_3",
        [](const Hypergraph& comp) -> Rational {
            if (is_isolated_vertex(comp)) return 1;
            return comp.vertex_count() == 3 ? 1 : 0;
        },
        /*declared_odd=*/true,
        /*declared_characteristic=*/true,
    };
    return c;
}

const std::vector<const Character*>& character_registry() {
    static const std::vector<const Character*> registry{
        &character_zeta1(),
        &character_zeta_graphic(),
        &character_zeta_e3(),
        &character_zeta_3(),
    };
    return registry;
}

const Character* find_character(const std::string& name) {
    for (const Character* c : character_registry())
        if (c->name == name) return c;
    return nullptr;
}

}  // namespace hopfchi
