#include "trop/tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace trop {

TreeMetric::TreeMetric(std::vector<int> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (labels_.empty() || labels_.front() < 1)
        throw std::invalid_argument("tree metric: labels must be positive");
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw std::invalid_argument("tree metric: duplicate label");
    int top = labels_.back();
    dist_.assign(top + 1, RatVec(top + 1, Rat(0)));
}

const Rat& TreeMetric::at(int a, int b) const {
    if (std::find(labels_.begin(), labels_.end(), a) == labels_.end() ||
        std::find(labels_.begin(), labels_.end(), b) == labels_.end())
        throw std::invalid_argument("tree metric: unknown label");
    return dist_[a][b];
}

void TreeMetric::set(int a, int b, Rat v) {
    at(a, b);  // label check
    if (v < 0) throw std::invalid_argument("tree metric: negative distance");
    dist_[a][b] = v;
    dist_[b][a] = std::move(v);
}

bool four_point_check(const TreeMetric& m) {
    const auto& lab = m.labels();
    int k = (int)lab.size();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                for (int e = c + 1; e < k; ++e) {
                    Rat s1 = m.at(lab[a], lab[b]) + m.at(lab[c], lab[e]);
                    Rat s2 = m.at(lab[a], lab[c]) + m.at(lab[b], lab[e]);
                    Rat s3 = m.at(lab[a], lab[e]) + m.at(lab[b], lab[c]);
                    Rat mx = std::max(std::max(s1, s2), s3);
                    if ((s1 == mx) + (s2 == mx) + (s3 == mx) < 2) return false;
                }
    return true;
}

LeafTree::LeafTree(std::vector<int> node_labels, std::vector<Edge> edges, bool metric)
    : labels_(std::move(node_labels)), edges_(std::move(edges)), metric_(metric) {
    normalize();
}

void LeafTree::normalize() {
    // Work with mutable adjacency; repeatedly contract zero-length
    // internal edges (metric trees) and suppress degree-2 internal nodes.
    int n = (int)labels_.size();
    std::vector<char> dead_node(n, 0);
    std::vector<char> dead_edge(edges_.size(), 0);
    auto rebuild_adj = [&] {
        std::vector<std::vector<std::pair<int, int>>> adj(n);
        for (int e = 0; e < (int)edges_.size(); ++e) {
            if (dead_edge[e]) continue;
            adj[edges_[e].u].emplace_back(edges_[e].v, e);
            adj[edges_[e].v].emplace_back(edges_[e].u, e);
        }
        return adj;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        auto adj = rebuild_adj();
        if (metric_) {
            for (int e = 0; e < (int)edges_.size() && !changed; ++e) {
                if (dead_edge[e]) continue;
                int u = edges_[e].u, v = edges_[e].v;
                if (labels_[u] == 0 && labels_[v] == 0 && edges_[e].len == 0) {
                    // contract: merge v into u
                    for (auto& ed : edges_) {
                        if (ed.u == v) ed.u = u;
                        if (ed.v == v) ed.v = u;
                    }
                    dead_edge[e] = 1;
                    dead_node[v] = 1;
                    changed = true;
                }
            }
        }
        if (changed) continue;
        for (int w = 0; w < n && !changed; ++w) {
            if (dead_node[w] || labels_[w] != 0 || adj[w].size() != 2) continue;
            auto [a, e1] = adj[w][0];
            auto [b, e2] = adj[w][1];
            edges_[e1] = {a, b, edges_[e1].len + edges_[e2].len};
            dead_edge[e2] = 1;
            dead_node[w] = 1;
            changed = true;
        }
    }

    // compact ids
    std::vector<int> remap(n, -1);
    std::vector<int> new_labels;
    for (int v = 0; v < n; ++v)
        if (!dead_node[v]) {
            remap[v] = (int)new_labels.size();
            new_labels.push_back(labels_[v]);
        }
    std::vector<Edge> new_edges;
    for (int e = 0; e < (int)edges_.size(); ++e)
        if (!dead_edge[e]) new_edges.push_back({remap[edges_[e].u], remap[edges_[e].v],
                                                metric_ ? edges_[e].len : Rat(0)});
    labels_ = std::move(new_labels);
    edges_ = std::move(new_edges);

    // validate
    n = (int)labels_.size();
    if (n < 2 || (int)edges_.size() != n - 1) throw std::invalid_argument("tree: not a tree");
    adj_.assign(n, {});
    for (int e = 0; e < (int)edges_.size(); ++e) {
        if (metric_ && edges_[e].len < 0) throw std::invalid_argument("tree: negative length");
        adj_[edges_[e].u].emplace_back(edges_[e].v, e);
        adj_[edges_[e].v].emplace_back(edges_[e].u, e);
    }
    std::vector<int> seen;
    for (int v = 0; v < n; ++v) {
        if (labels_[v] != 0) {
            if (adj_[v].size() != 1) throw std::invalid_argument("tree: leaf of degree != 1");
            seen.push_back(labels_[v]);
        } else if (adj_[v].size() < 3) {
            throw std::invalid_argument("tree: internal node of degree < 3");
        }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("tree: duplicate leaf label");
    // connectivity: a tree with n-1 edges and no cycles is connected; check
    // reachability from node 0
    std::vector<char> vis(n, 0);
    std::vector<int> stack = {0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj_[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != n) throw std::invalid_argument("tree: disconnected");
}

LeafTree LeafTree::star(const std::vector<int>& labels, std::optional<Rat> length) {
    if (labels.size() < 2) throw std::invalid_argument("star: need at least two leaves");
    std::vector<int> node_labels = {0};
    std::vector<Edge> edges;
    for (int l : labels) {
        node_labels.push_back(l);
        edges.push_back({0, (int)node_labels.size() - 1, length.value_or(Rat(0))});
    }
    return LeafTree(std::move(node_labels), std::move(edges), length.has_value());
}

std::vector<int> LeafTree::leaf_labels() const {
    std::vector<int> out;
    for (int l : labels_)
        if (l != 0) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

Mask LeafTree::leaf_mask() const {
    Mask m = 0;
    for (int l : labels_)
        if (l != 0) m |= bit(l);
    return m;
}

int LeafTree::leaf_node(int label) const {
    for (int v = 0; v < node_count(); ++v)
        if (labels_[v] == label) return v;
    return -1;
}

std::vector<int> LeafTree::internal_nodes() const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
        if (labels_[v] == 0) out.push_back(v);
    return out;
}

bool LeafTree::is_internal_edge(int e) const {
    return labels_[edges_[e].u] == 0 && labels_[edges_[e].v] == 0;
}

LeafTree LeafTree::attach_leaf_at_edge(int e, int lbl) const {
    if (metric_) throw std::invalid_argument("attach: abstract trees only");
    if (e < 0 || e >= (int)edges_.size()) throw std::invalid_argument("attach: bad edge");
    std::vector<int> nl = labels_;
    std::vector<Edge> ne = edges_;
    int mid = (int)nl.size();
    nl.push_back(0);
    nl.push_back(lbl);
    int v = ne[e].v;
    ne[e].v = mid;
    ne.push_back({mid, v, Rat(0)});
    ne.push_back({mid, mid + 1, Rat(0)});
    return LeafTree(std::move(nl), std::move(ne), false);
}

LeafTree LeafTree::attach_leaf_at_node(int node, int lbl) const {
    if (metric_) throw std::invalid_argument("attach: abstract trees only");
    if (node < 0 || node >= node_count() || labels_[node] != 0)
        throw std::invalid_argument("attach: not an internal node");
    std::vector<int> nl = labels_;
    std::vector<Edge> ne = edges_;
    nl.push_back(lbl);
    ne.push_back({node, (int)nl.size() - 1, Rat(0)});
    return LeafTree(std::move(nl), std::move(ne), false);
}

LeafTree LeafTree::with_unit_lengths() const {
    std::vector<Edge> ne = edges_;
    for (auto& e : ne) e.len = 1;
    return LeafTree(labels_, std::move(ne), true);
}

LeafTree LeafTree::without_lengths() const { return LeafTree(labels_, edges_, false); }

LeafTree LeafTree::relabel_leaves(const std::vector<int>& image) const {
    std::vector<int> nl = labels_;
    for (int& l : nl)
        if (l != 0) {
            if (l > (int)image.size()) throw std::invalid_argument("relabel: image too short");
            l = image[l - 1];
        }
    return LeafTree(std::move(nl), edges_, metric_);
}

namespace {

std::string encode_subtree(const LeafTree& t, int node, int parent) {
    if (t.is_leaf(node)) return std::to_string(t.label(node));
    std::vector<std::string> parts;
    for (auto [w, e] : t.neighbors(node))
        if (w != parent) parts.push_back(encode_subtree(t, w, node));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    return out + ")";
}

}  // namespace

std::string LeafTree::canonical_key() const {
    int min_label = leaf_labels().front();
    int leaf = leaf_node(min_label);
    int root = adj_[leaf][0].first;
    return std::to_string(min_label) + "|" + encode_subtree(*this, root, leaf);
}

TreeMetric tree_metric(const LeafTree& t) {
    if (!t.metric()) throw std::invalid_argument("tree_metric: lengths missing");
    TreeMetric m(t.leaf_labels());
    for (int s = 0; s < t.node_count(); ++s) {
        if (!t.is_leaf(s)) continue;
        std::vector<char> vis(t.node_count(), 0);
        std::vector<Rat> dist(t.node_count(), Rat(0));
        std::vector<int> stack = {s};
        vis[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : t.neighbors(v))
                if (!vis[w]) {
                    vis[w] = 1;
                    dist[w] = dist[v] + t.edges()[e].len;
                    stack.push_back(w);
                }
        }
        for (int v = 0; v < t.node_count(); ++v)
            if (t.is_leaf(v) && t.label(v) > t.label(s)) m.set(t.label(s), t.label(v), dist[v]);
    }
    return m;
}

namespace {

[[noreturn]] void throw_four_point(const TreeMetric& m) {
    const auto& lab = m.labels();
    int k = (int)lab.size();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                for (int e = c + 1; e < k; ++e) {
                    Rat s1 = m.at(lab[a], lab[b]) + m.at(lab[c], lab[e]);
                    Rat s2 = m.at(lab[a], lab[c]) + m.at(lab[b], lab[e]);
                    Rat s3 = m.at(lab[a], lab[e]) + m.at(lab[b], lab[c]);
                    Rat mx = std::max(std::max(s1, s2), s3);
                    if ((s1 == mx) + (s2 == mx) + (s3 == mx) < 2)
                        throw std::runtime_error(
                            "four-point condition fails at {" + std::to_string(lab[a]) + "," +
                            std::to_string(lab[b]) + "," + std::to_string(lab[c]) + "," +
                            std::to_string(lab[e]) + "}");
                }
    throw std::runtime_error("metric is not realizable by a tree");
}

// Bandelt-Dress isolation index of the split A|B, times 2.
Rat isolation2(const TreeMetric& m, const std::vector<int>& a, const std::vector<int>& b) {
    bool first = true;
    Rat best(0);
    for (int x : a)
        for (int x2 : a)
            for (int y : b)
                for (int y2 : b) {
                    Rat daa = x == x2 ? Rat(0) : m.at(x, x2);
                    Rat dbb = y == y2 ? Rat(0) : m.at(y, y2);
                    Rat s1 = m.at(x, y) + (x2 == y2 ? Rat(0) : m.at(x2, y2));
                    Rat s2 = m.at(x, y2) + m.at(x2, y);
                    Rat v = std::max(std::max(s1, s2), daa + dbb) - daa - dbb;
                    if (first || v < best) {
                        best = v;
                        first = false;
                    }
                }
    return best;
}

}  // namespace

LeafTree tree_from_metric(const TreeMetric& m) {
    const auto& lab = m.labels();
    int k = (int)lab.size();
    if (k < 2) throw std::invalid_argument("tree_from_metric: need two labels");
    if (!four_point_check(m)) throw_four_point(m);
    if (k == 2) {
        std::vector<int> nl = {lab[0], lab[1]};
        return LeafTree(std::move(nl), {{0, 1, m.at(lab[0], lab[1])}}, true);
    }

    // Pendant lengths and internal splits with positive isolation index.
    std::vector<Rat> pendant(k);
    for (int i = 0; i < k; ++i) {
        std::vector<int> rest;
        for (int j = 0; j < k; ++j)
            if (j != i) rest.push_back(lab[j]);
        pendant[i] = isolation2(m, {lab[i]}, rest) / 2;
    }
    // Internal splits, represented by the side avoiding lab[0].
    std::vector<std::pair<Mask, Rat>> sets;  // (side mask, length)
    for (Mask sub = 1; sub < (Mask(1) << (k - 1)); ++sub) {
        int size = popcount(sub);
        if (size < 2 || size > k - 2) continue;
        std::vector<int> a = {lab[0]}, b;
        for (int j = 1; j < k; ++j) (contains(sub, j) ? b : a).push_back(lab[j]);
        Rat alpha2 = isolation2(m, a, b);
        if (alpha2 > 0) {
            Mask side = 0;
            for (int x : b) side |= bit(x);
            sets.emplace_back(side, alpha2 / 2);
        }
    }
    // The sides must form a laminar family for a tree metric.
    for (auto& [s1, l1] : sets)
        for (auto& [s2, l2] : sets)
            if ((s1 & s2) && (s1 & ~s2) && (s2 & ~s1)) throw_four_point(m);
    std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
        return popcount(x.first) < popcount(y.first);
    });

    // Nodes: root 0, one internal node per set, one leaf per label.
    std::vector<int> nl(1 + sets.size(), 0);
    std::vector<LeafTree::Edge> edges;
    auto parent_of = [&](Mask content, int self) {
        for (int s = self + 1; s < (int)sets.size(); ++s)
            if ((content & ~sets[s].first) == 0) return 1 + s;
        return 0;
    };
    for (int s = 0; s < (int)sets.size(); ++s)
        edges.push_back({1 + s, parent_of(sets[s].first, s), sets[s].second});
    for (int i = 0; i < k; ++i) {
        int node = (int)nl.size();
        nl.push_back(lab[i]);
        int par = i == 0 ? 0 : parent_of(bit(lab[i]), -1);
        edges.push_back({node, par, pendant[i]});
    }

    LeafTree t(std::move(nl), std::move(edges), true);
    if (!(tree_metric(t) == m)) throw_four_point(m);
    return t;
}

LeafTree delete_leaf(const LeafTree& t, int label) {
    int node = t.leaf_node(label);
    if (node < 0) throw std::invalid_argument("delete_leaf: no such leaf");
    std::vector<int> nl;
    std::vector<LeafTree::Edge> ne;
    std::vector<int> remap(t.node_count(), -1);
    for (int v = 0; v < t.node_count(); ++v)
        if (v != node) {
            remap[v] = (int)nl.size();
            nl.push_back(t.label(v));
        }
    for (const auto& e : t.edges())
        if (e.u != node && e.v != node) ne.push_back({remap[e.u], remap[e.v], e.len});
    return LeafTree(std::move(nl), std::move(ne), t.metric());
}

Mask quartet(const LeafTree& t, Mask four) {
    if (popcount(four) != 4 || (four & ~t.leaf_mask()) != 0)
        throw std::invalid_argument("quartet: need four leaf labels");
    TreeMetric m = tree_metric(t.metric() ? t : t.with_unit_lengths());
    std::vector<int> q = members(four);
    Rat s[3] = {m.at(q[0], q[1]) + m.at(q[2], q[3]), m.at(q[0], q[2]) + m.at(q[1], q[3]),
                m.at(q[0], q[3]) + m.at(q[1], q[2])};
    Rat mn = std::min(std::min(s[0], s[1]), s[2]);
    if ((s[0] == mn) + (s[1] == mn) + (s[2] == mn) > 1) return 0;
    if (s[0] == mn) return bit(q[0]) | bit(q[1]);
    if (s[1] == mn) return bit(q[0]) | bit(q[2]);
    return bit(q[0]) | bit(q[3]);
}

LeafTree contract_edge(const LeafTree& t, int e) {
    if (e < 0 || e >= (int)t.edges().size() || !t.is_internal_edge(e))
        throw std::invalid_argument("contract_edge: not an internal edge");
    int u = t.edges()[e].u, v = t.edges()[e].v;
    std::vector<int> nl;
    std::vector<LeafTree::Edge> ne;
    std::vector<int> remap(t.node_count(), -1);
    for (int w = 0; w < t.node_count(); ++w)
        if (w != v) {
            remap[w] = (int)nl.size();
            nl.push_back(t.label(w));
        }
    remap[v] = remap[u];
    for (int i = 0; i < (int)t.edges().size(); ++i)
        if (i != e)
            ne.push_back({remap[t.edges()[i].u], remap[t.edges()[i].v], t.edges()[i].len});
    return LeafTree(std::move(nl), std::move(ne), t.metric());
}

namespace {

LeafTree spine_tree(const std::vector<std::vector<int>>& groups) {
    if (groups.empty()) throw std::invalid_argument("spine: no groups");
    int k = (int)groups.size();
    std::vector<int> nl(k, 0);
    std::vector<LeafTree::Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1, Rat(0)});
    for (int i = 0; i < k; ++i)
        for (int l : groups[i]) {
            nl.push_back(l);
            edges.push_back({i, (int)nl.size() - 1, Rat(0)});
        }
    return LeafTree(std::move(nl), std::move(edges), false);
}

}  // namespace

LeafTree caterpillar(const std::vector<int>& end1, const std::vector<int>& middle,
                     const std::vector<int>& end2) {
    std::vector<std::vector<int>> groups;
    groups.push_back(end1);
    for (int l : middle) groups.push_back({l});
    groups.push_back(end2);
    return spine_tree(groups);
}

LeafTree snowflake(const std::vector<std::vector<int>>& groups) {
    if (groups.size() != 3) throw std::invalid_argument("snowflake: need three groups");
    std::vector<int> nl = {0, 0, 0, 0};
    std::vector<LeafTree::Edge> edges = {{0, 1, Rat(0)}, {0, 2, Rat(0)}, {0, 3, Rat(0)}};
    for (int g = 0; g < 3; ++g) {
        if (groups[g].size() < 2) throw std::invalid_argument("snowflake: group too small");
        for (int l : groups[g]) {
            nl.push_back(l);
            edges.push_back({g + 1, (int)nl.size() - 1, Rat(0)});
        }
    }
    return LeafTree(std::move(nl), std::move(edges), false);
}

namespace {

std::string newick_subtree(const LeafTree& t, int node, int parent, int via_edge) {
    std::string out;
    if (t.is_leaf(node)) {
        out = std::to_string(t.label(node));
    } else {
        out = "(";
        bool first = true;
        for (auto [w, e] : t.neighbors(node)) {
            if (w == parent) continue;
            if (!first) out += ',';
            out += newick_subtree(t, w, node, e);
            first = false;
        }
        out += ")";
    }
    if (t.metric() && via_edge >= 0) out += ":" + to_string(t.edges()[via_edge].len);
    return out;
}

}  // namespace

std::string to_newick(const LeafTree& t) {
    int min_leaf = t.leaf_node(t.leaf_labels().front());
    int root = t.neighbors(min_leaf)[0].first;
    if (t.is_leaf(root)) {
        // two-leaf tree: split the single edge at a virtual root
        std::string out = "(" + std::to_string(t.label(min_leaf));
        if (t.metric()) out += ":" + to_string(t.edges()[0].len);
        out += "," + std::to_string(t.label(root));
        if (t.metric()) out += ":0";
        return out + ");";
    }
    return newick_subtree(t, root, -1, -1) + ";";
}

namespace {

struct NewickParser {
    const std::string& s;
    std::size_t pos = 0;
    std::vector<int> nl;
    std::vector<LeafTree::Edge> edges;
    bool metric = false;

    explicit NewickParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }

    // returns node id
    int parse_node() {
        skip_ws();
        if (pos >= s.size()) throw std::runtime_error("newick: unexpected end");
        if (s[pos] == '(') {
            ++pos;
            int me = (int)nl.size();
            nl.push_back(0);
            for (;;) {
                int child = parse_node();
                Rat len(0);
                skip_ws();
                if (pos < s.size() && s[pos] == ':') {
                    ++pos;
                    std::size_t start = pos;
                    while (pos < s.size() && (isdigit((unsigned char)s[pos]) || s[pos] == '/' ||
                                              s[pos] == '-' || s[pos] == '+'))
                        ++pos;
                    len = parse_rat(s.substr(start, pos - start));
                    metric = true;
                }
                edges.push_back({me, child, len});
                skip_ws();
                if (pos < s.size() && s[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < s.size() && s[pos] == ')') {
                    ++pos;
                    return me;
                }
                throw std::runtime_error("newick: expected ',' or ')'");
            }
        }
        std::size_t start = pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) throw std::runtime_error("newick: expected leaf label");
        nl.push_back(std::stoi(s.substr(start, pos - start)));
        return (int)nl.size() - 1;
    }
};

}  // namespace

LeafTree from_newick(const std::string& s) {
    NewickParser p(s);
    p.parse_node();
    p.skip_ws();
    if (p.pos < s.size() && s[p.pos] == ';') ++p.pos;
    p.skip_ws();
    if (p.pos != s.size()) throw std::runtime_error("newick: trailing input");
    return LeafTree(std::move(p.nl), std::move(p.edges), p.metric);
}

namespace {

std::vector<int> digits_of(const std::string& tok) {
    std::vector<int> out;
    for (char c : tok) {
        if (c < '1' || c > '9') throw std::runtime_error("tree notation: bad token '" + tok + "'");
        out.push_back(c - '0');
    }
    if (out.empty()) throw std::runtime_error("tree notation: empty group");
    return out;
}

std::vector<std::vector<int>> split_groups(const std::string& inner) {
    std::vector<std::vector<int>> groups;
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) groups.push_back(digits_of(tok));
    return groups;
}

}  // namespace

LeafTree tree_from_notation(const std::string& raw) {
    std::string s = raw;
    while (!s.empty() && isspace((unsigned char)s.back())) s.pop_back();
    std::size_t lead = 0;
    while (lead < s.size() && isspace((unsigned char)s[lead])) ++lead;
    s = s.substr(lead);
    if (s.empty()) throw std::runtime_error("tree notation: empty");

    if ((s[0] == 'C' || s[0] == 'S') && s.size() > 2 && s[1] == '(' && s.back() == ')') {
        auto groups = split_groups(s.substr(2, s.size() - 3));
        if (s[0] == 'S') return snowflake(groups);
        if (groups.size() != 3) throw std::runtime_error("caterpillar notation: need 3 groups");
        return caterpillar(groups[0], groups[1], groups[2]);
    }
    if (s[0] == '(' && s.find(' ') == std::string::npos && s.find(')') == s.size() - 1 &&
        s.find(',') != std::string::npos)
        return from_newick(s + ";");
    if (s.back() == ';' || s.find(':') != std::string::npos) return from_newick(s);

    // space-separated spine groups; "(345)" marks a multi-leaf group
    std::vector<std::vector<int>> groups;
    std::stringstream ss(s);
    std::string tok;
    while (ss >> tok) {
        if (tok.front() == '(' && tok.back() == ')') tok = tok.substr(1, tok.size() - 2);
        groups.push_back(digits_of(tok));
    }
    return spine_tree(groups);
}

std::string notation_str(const LeafTree& t) {
    // caterpillar iff the internal nodes form a path
    std::vector<int> internal = t.internal_nodes();
    std::vector<int> ends;
    for (int v : internal) {
        int internal_deg = 0;
        for (auto [w, e] : t.neighbors(v))
            if (!t.is_leaf(w)) ++internal_deg;
        if (internal_deg > 2) return to_newick(t);
        if (internal_deg <= 1) ends.push_back(v);
    }
    std::vector<int> spine;
    if (internal.size() == 1) {
        spine = internal;
    } else {
        int prev = -1, cur = ends[0];
        while (true) {
            spine.push_back(cur);
            int next = -1;
            for (auto [w, e] : t.neighbors(cur))
                if (!t.is_leaf(w) && w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
    }
    auto render = [&](const std::vector<int>& order) {
        std::string out;
        for (std::size_t i = 0; i < order.size(); ++i) {
            std::vector<int> group;
            for (auto [w, e] : t.neighbors(order[i]))
                if (t.is_leaf(w)) group.push_back(t.label(w));
            std::sort(group.begin(), group.end());
            std::string tok;
            for (int l : group) tok += std::to_string(l);
            if (group.size() >= 3 && order.size() > 1) tok = "(" + tok + ")";
            if (i) out += ' ';
            out += tok;
        }
        return out;
    };
    std::string fwd = render(spine);
    std::vector<int> rev(spine.rbegin(), spine.rend());
    std::string bwd = render(rev);
    return std::min(fwd, bwd);
}

std::vector<LeafTree> all_trees(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    if (labels.size() < 3) throw std::invalid_argument("all_trees: need at least 3 labels");
    if (labels.size() == 3) return {LeafTree::star(labels)};
    int last = labels.back();
    labels.pop_back();
    std::vector<LeafTree> out;
    for (const LeafTree& t : all_trees(labels)) {
        for (int e = 0; e < (int)t.edges().size(); ++e)
            out.push_back(t.attach_leaf_at_edge(e, last));
        for (int v : t.internal_nodes()) out.push_back(t.attach_leaf_at_node(v, last));
    }
    return out;
}

bool is_trivalent(const LeafTree& t) {
    for (int v : t.internal_nodes())
        if (t.degree(v) != 3) return false;
    return true;
}

}  // namespace trop
