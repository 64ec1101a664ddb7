#include "hopfchi/orientation.hpp"

#include <algorithm>

#include "hopfchi/faulhaber.hpp"
#include "hopfchi/parallel.hpp"

namespace hopfchi {

Orientation::Orientation(Hypergraph host, std::vector<Subset> images)
    : host_(std::move(host)), images_(std::move(images)) {
    if (images_.size() != static_cast<std::size_t>(host_.edge_count()))
        throw ValidationError("orientation image count differs from edge count");
    for (int i = 0; i < host_.edge_count(); ++i) {
        if (images_[static_cast<std::size_t>(i)] == 0) throw ValidationError("orientation image is empty");
        if (!subset_of(images_[static_cast<std::size_t>(i)], host_.edge(i)))
            throw ValidationError("orientation image exceeds its edge");
    }
}

bool Orientation::is_discrete() const {
    for (Subset img : images_)
        if (popcount(img) != 1) return false;
    return true;
}

namespace {

bool strict_arc(Subset img_from, Subset edge_to, Subset img_to) {
    return (img_from & (edge_to & ~img_to)) != 0;
}

bool weak_arc(Subset img_from, Subset edge_to, Subset img_to) {
    Subset meet = img_from & edge_to;
    return meet != 0 && meet != img_to && subset_of(meet, img_to);
}

// Incremental arc store with transitive closure over up to 64 edge nodes;
// reach[i] holds the vertices reachable from i in one or more steps.
class CycleTracker {
public:
    explicit CycleTracker(const Hypergraph& h) : host_(&h) {
        if (h.edge_count() > 64) throw ValidationError("orientation cycle tracking limited to 64 edges");
    }

    // Assign edge k (all edges < k already assigned). Returns false when a
    // strict arc now lies on a cycle. Always push/pop in LIFO order.
    bool push(int k, const std::vector<Subset>& images) {
        Undo undo;
        undo.node = k;
        undo.strict_before = strict_.size();
        Subset img_k = images[static_cast<std::size_t>(k)];
        Subset edge_k = host_->edge(k);

        std::uint64_t to_mask = 0;    // arcs k -> j
        std::uint64_t from_mask = 0;  // arcs j -> k
        for (int j = 0; j < k; ++j) {
            Subset img_j = images[static_cast<std::size_t>(j)];
            Subset edge_j = host_->edge(j);
            bool kj_strict = strict_arc(img_k, edge_j, img_j);
            bool jk_strict = strict_arc(img_j, edge_k, img_k);
            if (kj_strict || weak_arc(img_k, edge_j, img_j)) to_mask |= bit(j);
            if (jk_strict || weak_arc(img_j, edge_k, img_k)) from_mask |= bit(j);
            if (kj_strict) strict_.push_back({k, j});
            if (jk_strict) strict_.push_back({j, k});
        }

        std::uint64_t reach_k = 0;
        for (int j : bits_of(to_mask)) reach_k |= bit(j) | reach_[static_cast<std::size_t>(j)];
        reach_[static_cast<std::size_t>(k)] = reach_k;

        // rows that reach a predecessor of k gain k and everything behind it;
        // pre-push rows were already closed, so one pass suffices
        for (int i = 0; i < k; ++i) {
            std::uint64_t ri = reach_[static_cast<std::size_t>(i)];
            if (((ri | bit(i)) & from_mask) != 0) {
                undo.rows.push_back({i, ri});
                reach_[static_cast<std::size_t>(i)] = ri | bit(k) | reach_k;
            }
        }
        undos_.push_back(std::move(undo));

        for (auto [u, v] : strict_)
            if ((reach_[static_cast<std::size_t>(v)] & bit(u)) != 0) return false;
        return true;
    }

    void pop() {
        const Undo& undo = undos_.back();
        strict_.resize(undo.strict_before);
        for (auto [row, value] : undo.rows) reach_[static_cast<std::size_t>(row)] = value;
        reach_[static_cast<std::size_t>(undo.node)] = 0;
        undos_.pop_back();
    }

private:
    static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

    struct Undo {
        int node = 0;
        std::size_t strict_before = 0;  // strict_ size at entry, for rollback
        std::vector<std::pair<int, std::uint64_t>> rows;
    };

    const Hypergraph* host_;
    std::uint64_t reach_[64] = {};
    std::vector<std::pair<int, int>> strict_;
    std::vector<Undo> undos_;
};

}  // namespace

OrientationConstraintDigraph constraint_digraph(const Hypergraph& h, const std::vector<Subset>& images) {
    OrientationConstraintDigraph g;
    int m = h.edge_count();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            Subset img_a = images[static_cast<std::size_t>(a)];
            Subset img_b = images[static_cast<std::size_t>(b)];
            if (strict_arc(img_a, h.edge(b), img_b)) g.strict_arcs.push_back({a, b});
            else if (weak_arc(img_a, h.edge(b), img_b)) g.weak_arcs.push_back({a, b});
        }
    return g;
}

bool is_acyclic(const Hypergraph& h, const std::vector<Subset>& images) {
    int m = h.edge_count();
    if (m > 64) throw ValidationError("acyclicity check limited to 64 edges");
    OrientationConstraintDigraph g = constraint_digraph(h, images);

    std::uint64_t reach[64] = {};
    for (auto [a, b] : g.strict_arcs) reach[a] |= std::uint64_t{1} << b;
    for (auto [a, b] : g.weak_arcs) reach[a] |= std::uint64_t{1} << b;
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            if ((reach[i] >> k) & 1u) reach[i] |= reach[k];

    for (auto [a, b] : g.strict_arcs)
        if ((reach[b] >> a) & 1u) return false;  // the strict arc closes a cycle
    return true;
}

bool is_acyclic(const Orientation& f) { return is_acyclic(f.host(), f.images()); }

Integer count_admissible(const Hypergraph& h) {
    Integer product = 1;
    for (Subset e : h.edges()) product *= int_pow(Integer(2), static_cast<unsigned>(popcount(e))) - 1;
    return product;
}

void for_each_acyclic(const Hypergraph& h, const std::function<void(const std::vector<Subset>&)>& visit,
                      Budget budget) {
    if (count_admissible(h) > Integer(budget.steps))
        throw BudgetError("admissible orientation count exceeds the budget");

    int m = h.edge_count();
    std::vector<std::vector<Subset>> choices;
    choices.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) choices.push_back(submasks(h.edge(i), false));

    std::vector<Subset> images(static_cast<std::size_t>(m), 0);
    CycleTracker tracker(h);
    std::function<void(int)> rec = [&](int k) {
        if (k == m) {
            visit(images);
            return;
        }
        for (Subset img : choices[static_cast<std::size_t>(k)]) {
            images[static_cast<std::size_t>(k)] = img;
            if (tracker.push(k, images)) rec(k + 1);
            tracker.pop();
        }
    };
    rec(0);
}

std::vector<Orientation> enumerate_acyclic(const Hypergraph& h, Budget budget) {
    std::vector<Orientation> out;
    for_each_acyclic(h, [&](const std::vector<Subset>& images) { out.emplace_back(h, images); }, budget);
    return out;
}

Orientation max_orientation(const Hypergraph& h, const Coloring& c) {
    if (c.ground() != h.ground()) throw ValidationError("max_orientation: coloring over a different ground set");
    std::vector<Subset> images;
    images.reserve(h.edges().size());
    for (Subset e : h.edges()) {
        int max_color = 0;
        for (int v : bits_of(e)) max_color = std::max(max_color, c.color(v));
        Subset img = 0;
        for (int v : bits_of(e))
            if (c.color(v) == max_color) img |= Subset{1} << v;
        images.push_back(img);
    }
    return Orientation(h, std::move(images));
}

Hypergraph image_hypergraph(const Orientation& f) { return Hypergraph(f.host().ground(), f.images()); }

namespace {

void require_acyclic(const Orientation& f, const char* who) {
    if (!is_acyclic(f)) throw ValidationError(std::string(who) + ": orientation is cyclic");
}

}  // namespace

Integer count_strict_colorings(const Orientation& f, int n, Budget budget) {
    require_acyclic(f, "count_strict_colorings");
    if (n < 0) throw ValidationError("count_strict_colorings: negative n");
    const Hypergraph& h = f.host();
    StepCounter steps(budget);
    Integer count = 0;
    for (const Coloring& c : ColoringRange(h.ground(), n)) {
        steps.charge();
        if (max_orientation(h, c) == f) ++count;
    }
    return count;
}

Integer count_compatible_colorings(const Orientation& f, int n, Budget budget) {
    require_acyclic(f, "count_compatible_colorings");
    if (n < 0) throw ValidationError("count_compatible_colorings: negative n");
    const Hypergraph& h = f.host();
    StepCounter steps(budget);
    Integer count = 0;
    for (const Coloring& c : ColoringRange(h.ground(), n)) {
        steps.charge();
        bool ok = true;
        for (int i = 0; ok && i < h.edge_count(); ++i) {
            int max_color = 0;
            for (int v : bits_of(h.edge(i))) max_color = std::max(max_color, c.color(v));
            for (int v : bits_of(f.image(i)))
                if (c.color(v) != max_color) {
                    ok = false;
                    break;
                }
        }
        if (ok) ++count;
    }
    return count;
}

namespace {

// Image edges grouped by shared vertices, plus the strict order constraints
// between groups; this is the combinatorial core of the coloring-count
// formula.
struct CountStructure {
    int isolated_count = 0;
    Subset covered = 0;                           // vertices of the image hypergraph
    std::vector<Subset> group_sources;            // per group: union of source edges
    std::vector<std::pair<int, int>> group_arcs;  // group(u) before group(v)
    bool contradictory = false;                   // a strict arc inside one group
};

CountStructure build_count_structure(const Orientation& f) {
    const Hypergraph& h = f.host();
    int m = h.edge_count();

    std::vector<Subset> distinct;  // distinct image edge sets
    std::vector<int> image_group(static_cast<std::size_t>(m), -1);
    for (int i = 0; i < m; ++i) {
        Subset img = f.image(i);
        auto it = std::find(distinct.begin(), distinct.end(), img);
        if (it == distinct.end()) {
            distinct.push_back(img);
            image_group[static_cast<std::size_t>(i)] = static_cast<int>(distinct.size()) - 1;
        } else {
            image_group[static_cast<std::size_t>(i)] = static_cast<int>(it - distinct.begin());
        }
    }

    // union-find over distinct images: intersecting images share a block
    std::vector<int> parent(distinct.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] =
                                                             parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (std::size_t a = 0; a < distinct.size(); ++a)
        for (std::size_t b = a + 1; b < distinct.size(); ++b)
            if ((distinct[a] & distinct[b]) != 0) {
                int ra = find(static_cast<int>(a));
                int rb = find(static_cast<int>(b));
                if (ra != rb) parent[static_cast<std::size_t>(rb)] = ra;
            }

    std::vector<int> root_to_group;
    std::vector<int> group_of_distinct(distinct.size());
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto it = std::find(root_to_group.begin(), root_to_group.end(), r);
        if (it == root_to_group.end()) {
            root_to_group.push_back(r);
            group_of_distinct[i] = static_cast<int>(root_to_group.size()) - 1;
        } else {
            group_of_distinct[i] = static_cast<int>(it - root_to_group.begin());
        }
    }

    CountStructure s;
    s.isolated_count = popcount(f.host().isolated());
    s.group_sources.assign(root_to_group.size(), 0);
    for (int i = 0; i < m; ++i) {
        int g = group_of_distinct[static_cast<std::size_t>(image_group[static_cast<std::size_t>(i)])];
        s.group_sources[static_cast<std::size_t>(g)] |= h.edge(i);
        s.covered |= f.image(i);
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            if ((f.image(a) & f.image(b)) != 0) continue;  // same block, no order constraint
            if ((f.image(a) & f.tail(b)) != 0) {
                int ga = group_of_distinct[static_cast<std::size_t>(image_group[static_cast<std::size_t>(a)])];
                int gb = group_of_distinct[static_cast<std::size_t>(image_group[static_cast<std::size_t>(b)])];
                if (ga == gb) s.contradictory = true;
                else s.group_arcs.push_back({ga, gb});
            }
        }
    return s;
}

Integer count_by_formula(const Orientation& f, int n, bool strict_mode) {
    CountStructure s = build_count_structure(f);
    if (s.contradictory) return 0;

    int r = static_cast<int>(s.group_sources.size());
    Subset group_mask = (r == 0) ? 0 : (~Subset{0} >> (64 - r));

    Integer total = 0;
    std::vector<int> block_of(static_cast<std::size_t>(r));
    for_each_composition(group_mask, [&](const std::vector<Subset>& parts) {
        for (std::size_t b = 0; b < parts.size(); ++b)
            for (int g : bits_of(parts[b])) block_of[static_cast<std::size_t>(g)] = static_cast<int>(b);
        for (auto [u, v] : s.group_arcs) {
            if (strict_mode ? block_of[static_cast<std::size_t>(u)] >= block_of[static_cast<std::size_t>(v)]
                            : block_of[static_cast<std::size_t>(u)] > block_of[static_cast<std::size_t>(v)])
                return;
        }
        // exponents p_i: not-yet-used uncovered vertices incident to the part's sources
        std::vector<int> exponents;
        Subset used = 0;
        for (Subset part : parts) {
            Subset sources = 0;
            for (int g : bits_of(part)) sources |= s.group_sources[static_cast<std::size_t>(g)];
            Subset fresh = sources & ~s.covered & ~used;
            exponents.push_back(popcount(fresh));
            used |= fresh;
        }
        // strict counts shift part colors down by one (k_i = color - 1), so the
        // chains start at 0; compatible counts keep k_i = color in 1..n
        total += strict_mode ? strict_power_sum(exponents, 0, n - 1) : strict_power_sum(exponents, 1, n);
    });
    return int_pow(Integer(n), static_cast<unsigned>(s.isolated_count)) * total;
}

}  // namespace

Integer count_strict_colorings_faulhaber(const Orientation& f, int n) {
    require_acyclic(f, "count_strict_colorings_faulhaber");
    if (n < 0) throw ValidationError("count_strict_colorings_faulhaber: negative n");
    return count_by_formula(f, n, true);
}

Integer count_compatible_colorings_faulhaber(const Orientation& f, int n) {
    require_acyclic(f, "count_compatible_colorings_faulhaber");
    if (n < 0) throw ValidationError("count_compatible_colorings_faulhaber: negative n");
    return count_by_formula(f, n, false);
}

FormalSum cancellation_free_antipode(const Hypergraph& h, Budget budget, int jobs) {
    FormalSum sum(h.ground());
    if (jobs <= 1) {
        for_each_acyclic(h, [&](const std::vector<Subset>& images) {
            Hypergraph img(h.ground(), images);
            Rational sign = (component_count(img) % 2 == 0) ? 1 : -1;
            if (sum.coefficient(img) != 0)
                throw DisagreementError("cancellation-free antipode: image collision");
            sum.add(img, sign);
        }, budget);
        return sum;
    }

    std::vector<std::vector<Subset>> all;
    for_each_acyclic(h, [&](const std::vector<Subset>& images) { all.push_back(images); }, budget);
    parallel_chunks(
        all.size(), jobs,
        [&](std::size_t begin, std::size_t end) {
            FormalSum partial(h.ground());
            for (std::size_t i = begin; i < end; ++i) {
                Hypergraph img(h.ground(), all[i]);
                Rational sign = (component_count(img) % 2 == 0) ? 1 : -1;
                if (partial.coefficient(img) != 0)
                    throw DisagreementError("cancellation-free antipode: image collision");
                partial.add(img, sign);
            }
            return partial;
        },
        [&](FormalSum&& partial) { sum.merge(partial, /*detect_collision=*/true); });
    return sum;
}

}  // namespace hopfchi
