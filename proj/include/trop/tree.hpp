#ifndef TROP_TREE_HPP
#define TROP_TREE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trop/rat.hpp"
#include "trop/subsets.hpp"

namespace trop {

// A symmetric nonnegative distance function on a set of integer labels.
class TreeMetric {
  public:
    explicit TreeMetric(std::vector<int> labels);

    const std::vector<int>& labels() const { return labels_; }
    const Rat& at(int a, int b) const;
    void set(int a, int b, Rat v);

    bool operator==(const TreeMetric& o) const = default;

  private:
    std::vector<int> labels_;
    RatMat dist_;
};

// Four-point condition: for every four labels the maximum of the three
// pair-sums is attained at least twice.
bool four_point_check(const TreeMetric& m);

// An unrooted tree with labeled leaves (degree 1) and unlabeled internal
// nodes of degree >= 3, optionally carrying nonnegative rational edge
// lengths. Internal edges of length zero are contracted on construction,
// so a metric tree's topology is its combinatorial type.
class LeafTree {
  public:
    struct Edge {
        int u = -1, v = -1;
        Rat len;
    };

    LeafTree() = default;
    // labels per node, 0 for internal nodes; lengths required iff metric.
    LeafTree(std::vector<int> node_labels, std::vector<Edge> edges, bool metric);

    static LeafTree star(const std::vector<int>& labels,
                         std::optional<Rat> length = std::nullopt);

    int node_count() const { return (int)labels_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool metric() const { return metric_; }
    int label(int node) const { return labels_[node]; }
    bool is_leaf(int node) const { return labels_[node] != 0; }
    int degree(int node) const { return (int)adj_[node].size(); }
    // (neighbor, edge index) pairs
    const std::vector<std::pair<int, int>>& neighbors(int node) const { return adj_[node]; }

    std::vector<int> leaf_labels() const;  // sorted
    Mask leaf_mask() const;
    int leaf_node(int label) const;  // -1 if absent
    std::vector<int> internal_nodes() const;
    bool is_internal_edge(int e) const;

    LeafTree attach_leaf_at_edge(int e, int lbl) const;
    LeafTree attach_leaf_at_node(int node, int lbl) const;
    LeafTree with_unit_lengths() const;
    LeafTree without_lengths() const;
    LeafTree relabel_leaves(const std::vector<int>& image) const;  // image[old-1] = new

    // Topology-and-labels canonical encoding; equal iff isomorphic as
    // leaf-labeled trees (lengths ignored).
    std::string canonical_key() const;

  private:
    void normalize();

    std::vector<int> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    bool metric_ = false;
};

// Path-length metric of a metric tree.
TreeMetric tree_metric(const LeafTree& t);

// The unique metric tree realizing m, via the split decomposition
// (isolation indices). Throws with a witnessing quadruple when m violates
// the four-point condition.
LeafTree tree_from_metric(const TreeMetric& m);

// Removes a leaf and its pendant edge, suppressing the degree-2 node this
// may create (lengths add up).
LeafTree delete_leaf(const LeafTree& t, int label);

// The induced split of four leaf labels: returns the 2-element sub-mask
// containing the smallest of the four, or 0 for a star quartet.
Mask quartet(const LeafTree& t, Mask four);

// Contracts an internal edge. Throws on pendant edges.
LeafTree contract_edge(const LeafTree& t, int e);

// Caterpillar C(g1, g2, g3): a spine whose ends hold the leaf groups g1
// and g3, with one spine node per middle leaf, in order.
LeafTree caterpillar(const std::vector<int>& end1, const std::vector<int>& middle,
                     const std::vector<int>& end2);
// Snowflake S(g1, g2, g3): a central degree-3 node joined to one node per
// leaf group.
LeafTree snowflake(const std::vector<std::vector<int>>& groups);

// Unrooted Newick, lengths included iff metric.
std::string to_newick(const LeafTree& t);
LeafTree from_newick(const std::string& s);

// The compact notations: "12 3 45" (spine groups, parenthesized when the
// group has 3+ leaves), "C(24,6598,37)", "S(12,34,56)"; Newick accepted
// as a fallback.
LeafTree tree_from_notation(const std::string& s);
// Spine-group notation when the tree is a caterpillar, Newick otherwise.
std::string notation_str(const LeafTree& t);

// All leaf-labeled trees (internal degrees >= 3) on the given labels,
// each exactly once.
std::vector<LeafTree> all_trees(std::vector<int> labels);
bool is_trivalent(const LeafTree& t);

}  // namespace trop

#endif
