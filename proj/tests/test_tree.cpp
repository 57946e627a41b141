#include "doctest.h"

#include <set>

#include "trop/branch_tree.hpp"

using namespace trop;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
std::vector<Partition> four2() { return {P({2}), P({2}), P({2}), P({2})}; }
} // namespace

TEST_CASE("caterpillar and star construction") {
    BranchTree cat = caterpillar_tree(four2());
    CHECK(cat.degree == 2);
    CHECK(cat.curve.vertices().size() == 2);
    CHECK(cat.curve.edges().size() == 1);
    CHECK(is_binary(cat));
    CHECK(is_caterpillar(cat));

    BranchTree st = star_tree(four2());
    CHECK(st.curve.vertices().size() == 1);
    CHECK_FALSE(is_binary(st));
    CHECK(is_caterpillar(st));

    BranchTree tri = caterpillar_tree({P({2}), P({2}), P({1, 1})});
    CHECK(tri.curve.vertices().size() == 1);
    CHECK(is_binary(tri));
}

TEST_CASE("newick parsing") {
    BranchTree t = parse_newick("((0,1),(2,3));", four2());
    CHECK(t.curve.vertices().size() == 2);
    CHECK(t.curve.edges().size() == 1);
    CHECK(is_binary(t));
    // internal edge separates {0,1} from {2,3}
    int v01 = t.curve.puncture(0).at;
    CHECK(t.curve.puncture(1).at == v01);
    CHECK(t.curve.puncture(2).at != v01);

    BranchTree star = parse_newick("(0,1,2,3);", four2());
    CHECK(star.curve.vertices().size() == 1);

    BranchTree cat = parse_newick("(0,1,(2,3));", four2());
    CHECK(cat.curve.vertices().size() == 2);

    // nested rooted style smooths to the same caterpillar
    BranchTree nested = parse_newick("(0,(1,(2,3)));", four2());
    CHECK(to_newick(nested) == to_newick(cat));

    // lengths tolerated
    BranchTree lt = parse_newick("((0,1):3,(2,3):1/2);", four2());
    CHECK(lt.curve.edges().size() == 1);
}

TEST_CASE("newick errors") {
    CHECK_THROWS_AS(parse_newick("((0,1),(0,2));", four2()), Error);
    CHECK_THROWS_AS(parse_newick("((0,1),(2,", four2()), Error);
    CHECK_THROWS_AS(parse_newick("(0,1);", {P({2}), P({2})}), Error);
    CHECK_THROWS_AS(parse_newick("(0,1,2);", four2()), Error);          // leaf/profile mismatch
    CHECK_THROWS_AS(parse_newick("(0,1,2,4);", four2()), Error);        // labels must be 0..n+1
    try {
        parse_newick("((0,1),(0,2));", {P({2}), P({2}), P({2})});
        FAIL("expected DuplicateLeaf");
    } catch (const Error& e) {
        CHECK(e.kind() == errk::DuplicateLeaf);
    }
    CHECK_THROWS_AS(parse_newick("(0,1,2);", {P({2}), P({2}), P({3})}), Error); // unequal sums
}

TEST_CASE("newick round trip is identity on canonical forms") {
    for (const char* text : {"((0,1),(2,3));", "(0,1,2,3);", "(0,1,(2,3));", "(0,(1,2),(3,4));"}) {
        std::vector<Partition> profiles(text == std::string("(0,(1,2),(3,4));") ? 5 : 4, P({2}));
        BranchTree t = parse_newick(text, profiles);
        std::string canon = to_newick(t);
        BranchTree back = parse_newick(canon, profiles);
        CHECK(to_newick(back) == canon);
    }
}

TEST_CASE("rooted view") {
    BranchTree t = parse_newick("((0,1),(2,3));", four2());
    RootedView view = root_at_leaf0(t);
    CHECK(view.root_vertex == t.curve.puncture(0).at);
    CHECK(view.dfs_leaves == std::vector<int>{0, 1, 2, 3});
    CHECK(view.pre_order.size() == 2);
    // the internal edge spans leaf positions 2..3
    int internal_edge = t.curve.edges()[0].id;
    CHECK(view.edge_span.at(internal_edge) == std::pair<int, int>{2, 3});

    BranchTree cat5 = caterpillar_tree(std::vector<Partition>(5, P({2, 1})));
    RootedView v5 = root_at_leaf0(cat5);
    CHECK(v5.dfs_leaves == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("binary refinement of stars") {
    BranchTree star = star_tree(four2());
    Refinement r = binary_refinement(star);
    CHECK(is_binary(r.tree));
    CHECK(r.contracted.size() == 1);
    CHECK(r.tree.curve.vertices().size() == 2);

    BranchTree star5 = star_tree(std::vector<Partition>(5, P({2})));
    Refinement r5 = binary_refinement(star5);
    CHECK(is_binary(r5.tree));
    CHECK(r5.contracted.size() == 2);

    BranchTree bin = parse_newick("((0,1),(2,3));", four2());
    Refinement rb = binary_refinement(bin);
    CHECK(rb.contracted.empty());
    CHECK(to_newick(rb.tree) == to_newick(bin));
}

TEST_CASE("all binary refinements") {
    BranchTree star = star_tree(four2());
    auto refs = all_binary_refinements(star);
    CHECK(refs.size() == 3);
    std::set<std::string> shapes;
    for (const auto& r : refs) {
        CHECK(is_binary(r.tree));
        CHECK(r.contracted.size() == 1);
        shapes.insert(to_newick(r.tree));
    }
    CHECK(shapes.size() == 3);
    // canonical first
    CHECK(to_newick(refs.front().tree) == to_newick(binary_refinement(star).tree));

    BranchTree star5 = star_tree(std::vector<Partition>(5, P({2})));
    CHECK(all_binary_refinements(star5).size() == 15);

    BranchTree star6 = star_tree(std::vector<Partition>(6, P({2})));
    CHECK(all_binary_refinements(star6).size() == 105);

    // mixed-degree tree: one 4-valent vertex gives 3 refinements
    BranchTree mixed = parse_newick("(0,1,2,(3,4));", std::vector<Partition>(5, P({2})));
    CHECK(all_binary_refinements(mixed).size() == 3);
}

namespace {
// Leaf set on the far-from-leaf-0 side of every bounded edge; a tree is
// determined by its splits, so refinements can be checked structurally.
std::set<std::set<int>> edge_splits(const BranchTree& t, const std::vector<int>& only = {}) {
    RootedView view = root_at_leaf0(t);
    std::set<int> filter(only.begin(), only.end());
    std::set<std::set<int>> out;
    for (const auto& [eid, span] : view.edge_span) {
        if (!only.empty() && !filter.count(eid)) continue;
        std::set<int> side;
        for (int k = span.first; k <= span.second; ++k)
            side.insert(view.dfs_leaves[static_cast<size_t>(k)]);
        out.insert(std::move(side));
    }
    return out;
}
} // namespace

TEST_CASE("contracting the refinement's new edges recovers the input tree") {
    std::vector<Partition> p5(5, P({2}));
    std::vector<Partition> p6(6, P({2}));
    std::vector<BranchTree> inputs = {
        star_tree(four2()),
        star_tree(p5),
        star_tree(p6),
        parse_newick("(0,1,(2,3,4));", p5),
        parse_newick("((0,1),2,(3,4,5));", p6),
    };
    for (const auto& input : inputs) {
        for (const auto& r : all_binary_refinements(input, 40)) {
            auto input_splits = edge_splits(input);
            auto refined_splits = edge_splits(r.tree);
            auto new_splits = edge_splits(r.tree, r.contracted);
            // refined = input plus exactly the contracted edges' splits
            CHECK(refined_splits.size() == input_splits.size() + r.contracted.size());
            for (const auto& s : input_splits) CHECK(refined_splits.count(s) == 1);
            for (const auto& s : new_splits) CHECK(input_splits.count(s) == 0);
        }
    }
}

TEST_CASE("all binary tree shapes") {
    CHECK(all_binary_tree_shapes(std::vector<Partition>(3, P({2}))).size() == 1);
    CHECK(all_binary_tree_shapes(four2()).size() == 3);
    CHECK(all_binary_tree_shapes(std::vector<Partition>(5, P({2}))).size() == 15);
    std::set<std::string> forms;
    for (const auto& t : all_binary_tree_shapes(std::vector<Partition>(5, P({2})))) {
        CHECK(is_binary(t));
        forms.insert(to_newick(t));
    }
    CHECK(forms.size() == 15);
}
