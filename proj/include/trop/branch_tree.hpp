#ifndef TROP_BRANCH_TREE_HPP
#define TROP_BRANCH_TREE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trop/curve.hpp"
#include "trop/partition.hpp"

namespace trop {

// Branch tree: the tropicalized punctured line. Underlying curve is a tree
// (b1 = 0, all labels 0) whose punctures are the leaves; puncture id i is
// leaf i, carrying ramification profile i. Internal vertices have degree >= 3.
struct BranchTree {
    TropicalCurve curve;
    std::vector<Partition> profiles;
    int degree = 0;

    int leaf_count() const { return static_cast<int>(profiles.size()); }
    const Partition& profile(int leaf) const { return profiles.at(static_cast<size_t>(leaf)); }
};

// Validates shape and profiles and computes the degree.
BranchTree make_branch_tree(TropicalCurve curve, std::vector<Partition> profiles);

// Caterpillar in backbone order: internal vertices v_1..v_n, leaf 0 the left
// handle at v_1, leaf i the tooth at v_i, leaf n+1 the right handle at v_n.
BranchTree caterpillar_tree(std::vector<Partition> profiles);

// One internal vertex carrying every leaf.
BranchTree star_tree(std::vector<Partition> profiles);

bool is_binary(const BranchTree& tree);
bool is_caterpillar(const BranchTree& tree);

// Newick-like input: integer leaves, optional :length, e.g. "((0,1),(2,3));".
// Degree-2 internal vertices are smoothed away, so the usual rooted notation
// denotes the unrooted shape.
BranchTree parse_newick(const std::string& text, std::vector<Partition> profiles);

// Canonical serialization: rooted at leaf 0's vertex, children ordered by
// smallest descendant leaf. parse_newick(to_newick(t)) == t structurally.
std::string to_newick(const BranchTree& tree);

struct Refinement {
    BranchTree tree;                 // binary, same leaves and profiles
    std::vector<int> contracted;     // edge ids in `tree` whose contraction recovers the input
};

// Canonical refinement: each high-degree vertex resolved into a caterpillar
// ordered by smallest reachable leaf label.
Refinement binary_refinement(const BranchTree& tree);

// Every binary resolution (cartesian product over high-degree vertices),
// deterministic order, at most `limit` results. The canonical one comes first.
std::vector<Refinement> all_binary_refinements(const BranchTree& tree, size_t limit = 0);

// All unrooted binary tree shapes on the given leaf profiles, built by leaf
// insertion; 3 shapes on 4 leaves, 15 on 5, 105 on 6.
std::vector<BranchTree> all_binary_tree_shapes(const std::vector<Partition>& profiles);

// Rooted traversal data shared by the cover machinery: root at leaf 0's
// vertex, children ordered by smallest descendant leaf; every edge knows the
// contiguous block of DFS leaf positions below it.
struct RootedChild {
    bool is_leaf = false;
    int leaf_id = -1;     // when is_leaf
    int edge_id = -1;     // bounded edge toward the child vertex
    int vertex = -1;      // child vertex id
    int min_leaf = -1;
};

struct RootedView {
    int root_vertex = -1;
    std::vector<int> pre_order;                      // internal vertices, root first
    std::map<int, std::vector<RootedChild>> children;
    std::map<int, int> parent_edge;                  // vertex -> edge toward root
    std::vector<int> dfs_leaves;                     // leaf ids, position order; [0] == 0
    std::map<int, std::pair<int, int>> edge_span;    // edge id -> [first,last] leaf positions below
    std::map<int, int> leaf_position;                // leaf id -> DFS position
};

RootedView root_at_leaf0(const BranchTree& tree);

} // namespace trop

#endif
