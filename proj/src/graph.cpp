#include "sociograph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace sociograph {

namespace {

// Insert keeping the neighbor list sorted by id; lookups stay O(log deg).
void insert_sorted(std::vector<Neighbor>& list, NodeId id, double weight) {
    auto pos = std::lower_bound(list.begin(), list.end(), id,
                                [](const Neighbor& n, NodeId v) { return n.id < v; });
    list.insert(pos, Neighbor{id, weight});
}

const Neighbor* find_neighbor(std::span<const Neighbor> list, NodeId id) {
    auto pos = std::lower_bound(list.begin(), list.end(), id,
                                [](const Neighbor& n, NodeId v) { return n.id < v; });
    return (pos != list.end() && pos->id == id) ? &*pos : nullptr;
}

} // namespace

NodeId Graph::add_node(std::string label) {
    if (label.empty()) fail(Errc::empty_label, "node label must be non-empty");
    if (index_.contains(label)) fail(Errc::duplicate_label, "node '" + label + "' already registered");
    NodeId id = static_cast<NodeId>(labels_.size());
    index_.emplace(label, id);
    labels_.push_back(std::move(label));
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

void Graph::add_edge(NodeId u, NodeId v, std::optional<double> weight) {
    check_node(u);
    check_node(v);
    if (u == v) fail(Errc::self_loop, "self-loop at '" + labels_[u] + "'");
    if (weight && !(*weight > 0.0))
        fail(Errc::nonpositive_weight, "edge weight must be > 0");
    if (has_edge(u, v))
        fail(Errc::duplicate_edge, "edge " + labels_[u] + " -> " + labels_[v] + " already present");

    double w = weight.value_or(1.0);
    insert_sorted(out_[u], v, w);
    insert_sorted(in_[v], u, w);
    if (!directed_) {
        insert_sorted(out_[v], u, w);
        insert_sorted(in_[u], v, w);
    }
    if (weight) weighted_ = true;
    ++edge_count_;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return find_neighbor(out_[u], v) != nullptr;
}

double Graph::edge_weight(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    const Neighbor* n = find_neighbor(out_[u], v);
    return n ? n->weight : 0.0;
}

const std::string& Graph::label(NodeId id) const {
    check_node(id);
    return labels_[id];
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    return it == index_.end() ? std::nullopt : std::optional<NodeId>(it->second);
}

NodeId Graph::require(std::string_view label) const {
    auto id = find(label);
    if (!id) fail(Errc::unknown_node, "no node labeled '" + std::string(label) + "'");
    return *id;
}

std::span<const Neighbor> Graph::neighbors(NodeId id) const {
    check_node(id);
    return out_[id];
}

std::span<const Neighbor> Graph::in_neighbors(NodeId id) const {
    check_node(id);
    return in_[id];
}

void Graph::check_node(NodeId id) const {
    if (id >= labels_.size()) fail(Errc::unknown_node, "node id " + std::to_string(id) + " not registered");
}

bool Graph::operator==(const Graph& other) const {
    return directed_ == other.directed_ && weighted_ == other.weighted_ &&
           labels_ == other.labels_ && out_ == other.out_;
}

Matrix adjacency_matrix(const Graph& graph) {
    const std::size_t n = graph.node_count();
    Matrix a(n, n);
    for (NodeId u = 0; u < n; ++u) {
        for (const Neighbor& nb : graph.neighbors(u)) a(u, nb.id) = nb.weight;
    }
    return a;
}

std::vector<EdgeRecord> edge_list(const Graph& graph) {
    std::vector<EdgeRecord> edges;
    edges.reserve(graph.edge_count());
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        for (const Neighbor& nb : graph.neighbors(u)) {
            if (!graph.directed() && nb.id < u) continue; // stored once, canonical order
            edges.push_back({u, nb.id, nb.weight});
        }
    }
    return edges;
}

Graph symmetrize(const Graph& graph, SymmetrizeRule rule) {
    if (!graph.directed()) fail(Errc::mode_mismatch, "symmetrize requires a directed graph");

    Graph result(false);
    for (const std::string& label : graph.labels()) result.add_node(label);

    for (NodeId u = 0; u < graph.node_count(); ++u) {
        for (const Neighbor& nb : graph.neighbors(u)) {
            NodeId v = nb.id;
            if (v < u) continue; // visit each unordered pair once
            double forward = graph.edge_weight(u, v);
            double backward = graph.edge_weight(v, u);
            bool both = forward > 0.0 && backward > 0.0;
            if (rule == SymmetrizeRule::mutual && !both) continue;
            double combined = both ? (forward + backward) / 2.0 : forward + backward;
            if (graph.weighted())
                result.add_edge(u, v, combined);
            else
                result.add_edge(u, v);
        }
    }
    return result;
}

Graph binarize(const Graph& graph, double threshold) {
    if (!(threshold > 0.0)) fail(Errc::bad_parameters, "binarize threshold must be > 0");

    Graph result(graph.directed());
    for (const std::string& label : graph.labels()) result.add_node(label);
    for (const EdgeRecord& e : edge_list(graph)) {
        if (e.weight >= threshold) result.add_edge(e.source, e.target);
    }
    return result;
}

namespace {

Components weak_components(const Graph& graph) {
    const std::size_t n = graph.node_count();
    Components result;
    result.component_of.assign(n, UINT32_MAX);
    std::vector<NodeId> stack;
    for (NodeId start = 0; start < n; ++start) {
        if (result.component_of[start] != UINT32_MAX) continue;
        auto component = static_cast<std::uint32_t>(result.count++);
        result.component_of[start] = component;
        stack.push_back(start);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (const Neighbor& nb : graph.neighbors(u)) {
                if (result.component_of[nb.id] == UINT32_MAX) {
                    result.component_of[nb.id] = component;
                    stack.push_back(nb.id);
                }
            }
            for (const Neighbor& nb : graph.in_neighbors(u)) {
                if (result.component_of[nb.id] == UINT32_MAX) {
                    result.component_of[nb.id] = component;
                    stack.push_back(nb.id);
                }
            }
        }
    }
    return result;
}

// Iterative Tarjan; SCC ids are then relabeled in first-seen node order.
Components strong_components(const Graph& graph) {
    const std::size_t n = graph.node_count();
    std::vector<std::uint32_t> index(n, UINT32_MAX), lowlink(n), scc(n, UINT32_MAX);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    std::uint32_t next_index = 0;
    std::uint32_t scc_count = 0;

    struct Frame {
        NodeId node;
        std::size_t next_child;
    };
    std::vector<Frame> call_stack;

    for (NodeId root = 0; root < n; ++root) {
        if (index[root] != UINT32_MAX) continue;
        call_stack.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            auto children = graph.neighbors(frame.node);
            if (frame.next_child < children.size()) {
                NodeId child = children[frame.next_child++].id;
                if (index[child] == UINT32_MAX) {
                    index[child] = lowlink[child] = next_index++;
                    stack.push_back(child);
                    on_stack[child] = true;
                    call_stack.push_back({child, 0});
                } else if (on_stack[child]) {
                    lowlink[frame.node] = std::min(lowlink[frame.node], index[child]);
                }
            } else {
                NodeId u = frame.node;
                call_stack.pop_back();
                if (!call_stack.empty())
                    lowlink[call_stack.back().node] = std::min(lowlink[call_stack.back().node], lowlink[u]);
                if (lowlink[u] == index[u]) {
                    while (true) {
                        NodeId v = stack.back();
                        stack.pop_back();
                        on_stack[v] = false;
                        scc[v] = scc_count;
                        if (v == u) break;
                    }
                    ++scc_count;
                }
            }
        }
    }

    // Relabel so component ids follow first occurrence by node id.
    std::vector<std::uint32_t> relabel(scc_count, UINT32_MAX);
    Components result;
    result.component_of.resize(n);
    for (NodeId v = 0; v < n; ++v) {
        if (relabel[scc[v]] == UINT32_MAX) relabel[scc[v]] = static_cast<std::uint32_t>(result.count++);
        result.component_of[v] = relabel[scc[v]];
    }
    return result;
}

} // namespace

Components connected_components(const Graph& graph, ComponentMode mode) {
    if (mode == ComponentMode::strong && !graph.directed())
        fail(Errc::mode_mismatch, "strong components require a directed graph");
    return mode == ComponentMode::weak ? weak_components(graph) : strong_components(graph);
}

} // namespace sociograph
