#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfchi/hypergraph.hpp"
#include "hopfchi/rational.hpp"

namespace hopfchi {

// Multiplicative rational functional on hypergraphs: defined on connected
// hypergraphs, extended over connected components, 1 on the empty hypergraph.
struct Character {
    std::string name;
    std::function<Rational(const Hypergraph& connected)> connected_value;
    bool declared_odd = false;             // vanishes on components of even size
    bool declared_characteristic = false;  // takes values in {0, 1}
};

Rational evaluate_character(const Character& zeta, const Hypergraph& h);

// The built-in characters:
//   zeta1        — discrete hypergraphs (every edge a singleton)
//   zeta_graphic — components whose edges all have size exactly 2, and isolated vertices
//   zeta_e3      — components that are a single edge on three vertices, and isolated vertices
//   zeta_3       — connected components on three vertices, and isolated vertices
const Character& character_zeta1();
const Character& character_zeta_graphic();
const Character& character_zeta_e3();
const Character& character_zeta_3();

const std::vector<const Character*>& character_registry();
const Character* find_character(const std::string& name);  // nullptr when unknown

}  // namespace hopfchi
