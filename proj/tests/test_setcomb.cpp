#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hopfchi/errors.hpp"
#include "hopfchi/setcomb.hpp"
#include "test_support.hpp"

using namespace hopfchi;
using hopfchi::testing::numbered_ground;

namespace {

Composition comp(const GroundSet& g, const std::vector<std::vector<std::string>>& parts) {
    std::vector<Subset> masks;
    for (const auto& p : parts) masks.push_back(g.mask_of(p));
    return Composition(g, masks);
}

}  // namespace

TEST_CASE("coloring_to_decomposition preimages") {
    GroundSet g({"a", "b"});
    Coloring c1(g, {1, 1}, 2);
    auto d1 = coloring_to_decomposition(c1);
    CHECK(d1.parts() == std::vector<Subset>{0b11, 0b00});

    Coloring c2(g, {2, 1}, 2);
    auto d2 = coloring_to_decomposition(c2);
    CHECK(d2.parts() == std::vector<Subset>{0b10, 0b01});

    Coloring empty(numbered_ground(0), {}, 1);
    CHECK(coloring_to_decomposition(empty).parts() == std::vector<Subset>{0});
}

TEST_CASE("coloring/decomposition bijection round trips") {
    GroundSet g({"a", "b", "c"});
    for (const Coloring& c : ColoringRange(g, 3)) {
        CHECK(decomposition_to_coloring(coloring_to_decomposition(c)) == c);
    }
}

TEST_CASE("enumerate_colorings counts and determinism") {
    CHECK(std::distance(ColoringRange(numbered_ground(2), 3).begin(), ColoringRange(numbered_ground(2), 3).end()) == 9);
    CHECK(std::distance(ColoringRange(numbered_ground(0), 5).begin(), ColoringRange(numbered_ground(0), 5).end()) == 1);
    CHECK(std::distance(ColoringRange(numbered_ground(3), 2).begin(), ColoringRange(numbered_ground(3), 2).end()) == 8);

    // n = 0 over a nonempty set is an empty stream, not an error
    ColoringRange zero(numbered_ground(2), 0);
    CHECK(zero.begin() == zero.end());

    // distinct, lexicographically ascending, restartable
    ColoringRange r(numbered_ground(3), 2);
    std::vector<std::vector<int>> seen;
    for (const Coloring& c : r) seen.push_back(c.assignment());
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    std::vector<std::vector<int>> second;
    for (const Coloring& c : r) second.push_back(c.assignment());
    CHECK(seen == second);
}

TEST_CASE("refines convention") {
    GroundSet g({"a", "b", "c"});
    CHECK(refines(comp(g, {{"a"}, {"b"}, {"c"}}), comp(g, {{"a", "b"}, {"c"}})));
    // parts within a run may appear in any order covering the coarse part
    CHECK(refines(comp(g, {{"b"}, {"a"}, {"c"}}), comp(g, {{"a", "b"}, {"c"}})));
    CHECK(refines(comp(g, {{"a", "b"}, {"c"}}), comp(g, {{"a", "b"}, {"c"}})));  // reflexive

    CHECK_FALSE(refines(comp(g, {{"a"}, {"c"}, {"b"}}), comp(g, {{"a", "b"}, {"c"}})));
    CHECK_FALSE(refines(comp(g, {{"c"}, {"a", "b"}}), comp(g, {{"a", "b"}, {"c"}})));
}

TEST_CASE("refines is reflexive and transitive") {
    GroundSet g({"a", "b", "c", "d"});
    std::vector<Composition> all;
    for_each_composition(g.full_mask(), [&](const std::vector<Subset>& parts) { all.emplace_back(g, parts); });
    for (const auto& c : all) CHECK(refines(c, c));
    for (const auto& a : all)
        for (const auto& b : all) {
            if (!refines(a, b)) continue;
            for (const auto& c : all)
                if (refines(b, c)) CHECK(refines(a, c));
        }
}

TEST_CASE("integer composition coarsenings") {
    auto as_set = [](const std::vector<std::vector<int>>& v) {
        return std::set<std::vector<int>>(v.begin(), v.end());
    };
    CHECK(as_set(integer_composition_coarsenings({1, 1})) == std::set<std::vector<int>>{{1, 1}, {2}});
    CHECK(as_set(integer_composition_coarsenings({2, 3, 1})) ==
          std::set<std::vector<int>>{{2, 3, 1}, {5, 1}, {2, 4}, {6}});
    CHECK(as_set(integer_composition_coarsenings({7})) == std::set<std::vector<int>>{{7}});
    CHECK(integer_composition_coarsenings({1, 2, 1, 2}).size() == 8);
    CHECK_THROWS_AS(integer_composition_coarsenings({}), ValidationError);
}

TEST_CASE("composition counts are ordered Bell numbers") {
    for (int k = 0; k <= 5; ++k) {
        int seen = 0;
        Subset mask = (k == 0) ? 0 : (~Subset{0} >> (64 - k));
        for_each_composition(mask, [&](const std::vector<Subset>&) { ++seen; });
        CHECK(Integer(seen) == count_compositions(k));
    }
    CHECK(count_compositions(3) == 13);
}

TEST_CASE("constrained sign sum examples") {
    // two singleton blocks, no constraints
    CHECK(constrained_sign_sum({{0}, {1}}, {}) == 1);
    // one part holding both blocks, one arc: only ({x},{y}) survives
    CHECK(constrained_sign_sum({{0, 1}}, {{0, 1}}) == 1);
    // arc pointing against the part order kills every refinement
    CHECK(constrained_sign_sum({{0}, {1}}, {{1, 0}}) == 0);

    CHECK_THROWS_AS(constrained_sign_sum({{0, 1}}, {{0, 1}, {1, 0}}), ValidationError);
}

TEST_CASE("unconstrained sign sum identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int atoms = 1 + static_cast<int>(rng() % 5);
        // random composition of {0..atoms-1}
        std::vector<std::vector<int>> parts;
        std::vector<int> pool(static_cast<std::size_t>(atoms));
        for (int i = 0; i < atoms; ++i) pool[static_cast<std::size_t>(i)] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::size_t at = 0;
        while (at < pool.size()) {
            std::size_t len = 1 + rng() % (pool.size() - at);
            parts.emplace_back(pool.begin() + static_cast<long>(at), pool.begin() + static_cast<long>(at + len));
            at += len;
        }
        Integer expected = (atoms % 2 == 0) ? 1 : -1;
        CHECK(constrained_sign_sum(parts, {}) == expected);
    }
}

TEST_CASE("shuffle product counts") {
    GroundSet gv({"a", "b"});
    GroundSet gw({"x", "y", "z"});
    auto p = comp(gv, {{"a"}, {"b"}});
    auto q = comp(gw, {{"x", "y"}, {"z"}});
    auto sh = shuffle_product(p, q);
    CHECK(sh.size() == 6);  // C(4, 2)
    for (const auto& r : sh) CHECK(r.length() == 4);
    std::set<std::vector<Subset>> distinct;
    for (const auto& r : sh) distinct.insert(r.parts());
    CHECK(distinct.size() == 6);
}

TEST_CASE("set partition validation and canonical order") {
    GroundSet g({"a", "b", "c"});
    SetPartition p(g, {g.mask_of({"c"}), g.mask_of({"a", "b"})});
    CHECK(p.blocks() == std::vector<Subset>{0b011, 0b100});
    CHECK_THROWS_AS(SetPartition(g, {g.mask_of({"a"})}), ValidationError);
    CHECK_THROWS_AS(SetPartition(g, {g.mask_of({"a", "b"}), g.mask_of({"b", "c"})}), ValidationError);

    int bell = 0;
    for_each_set_partition(g.full_mask(), [&](const std::vector<Subset>&) { ++bell; });
    CHECK(bell == 5);
}
