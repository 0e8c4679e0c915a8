#pragma once

#include "sociograph/error.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sociograph {

// Dense node handle; ids are contiguous 0..n-1 within a graph.
using NodeId = std::uint32_t;

struct Neighbor {
    NodeId id;
    double weight; // 1.0 when the graph is unweighted
};

struct EdgeRecord {
    NodeId source;
    NodeId target;
    double weight;
};

// Simple dense matrix, used for adjacency and supra-adjacency exports.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// A simple graph (no self-loops, no parallel edges), directed or undirected,
// optionally weighted. Built once, then treated as an immutable snapshot:
// every transform returns a new graph.
class Graph {
public:
    explicit Graph(bool directed = false) : directed_(directed) {}

    NodeId add_node(std::string label);

    // Omitted weight means an unweighted tie; any explicit weight makes the
    // whole graph weighted. Undirected edges are stored once, canonically
    // ordered by (min id, max id).
    void add_edge(NodeId u, NodeId v, std::optional<double> weight = std::nullopt);

    bool directed() const { return directed_; }
    bool weighted() const { return weighted_; }
    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_node(NodeId id) const { return id < labels_.size(); }
    bool has_edge(NodeId u, NodeId v) const;
    double edge_weight(NodeId u, NodeId v) const; // 0 when the edge is absent

    const std::string& label(NodeId id) const;
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<NodeId> find(std::string_view label) const;
    NodeId require(std::string_view label) const; // throws unknown_node

    // Out-neighbors, sorted by id. For undirected graphs this is every
    // incident edge.
    std::span<const Neighbor> neighbors(NodeId id) const;
    // In-neighbors; identical to neighbors() on undirected graphs.
    std::span<const Neighbor> in_neighbors(NodeId id) const;

    std::size_t degree(NodeId id) const { return neighbors(id).size(); }

    bool operator==(const Graph& other) const;

private:
    void check_node(NodeId id) const;

    bool directed_;
    bool weighted_ = false;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::vector<Neighbor>> out_;
    std::vector<std::vector<Neighbor>> in_;
    std::size_t edge_count_ = 0;
};

// A[i][j] = weight of edge i->j (1 when unweighted), 0 otherwise.
Matrix adjacency_matrix(const Graph& graph);

// One entry per stored edge, sorted by (source id, target id); undirected
// edges appear once with source id < target id.
std::vector<EdgeRecord> edge_list(const Graph& graph);

enum class SymmetrizeRule { union_rule, mutual };

// Collapses a directed graph to an undirected one. union: keep a tie if
// either direction reported; mutual: only reciprocated ties. Reciprocal
// weights combine by arithmetic mean.
Graph symmetrize(const Graph& graph, SymmetrizeRule rule);

// Keeps edges with weight >= threshold and drops the weights.
Graph binarize(const Graph& graph, double threshold);

enum class ComponentMode { weak, strong };

struct Components {
    std::vector<std::uint32_t> component_of; // node id -> component id (contiguous)
    std::size_t count = 0;
};

Components connected_components(const Graph& graph, ComponentMode mode);

} // namespace sociograph
