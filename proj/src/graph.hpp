/* Copyright 2026 gss authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#ifndef GSS_GRAPH_HPP
#define GSS_GRAPH_HPP

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gss {

/// Simple undirected graph: no self-loops, no duplicate edges.
/// Edges are stored normalized as (min,max) pairs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count) : vertex_count_(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        edges_.insert(normalized(u, v));
    }

    bool has_edge(int u, int v) const { return edges_.count(normalized(u, v)) > 0; }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (const auto& [a, b] : edges_) {
            if (a == v) out.push_back(b);
            else if (b == v) out.push_back(a);
        }
        return out;
    }

    const std::set<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const {
        return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
    }

private:
    static std::pair<int, int> normalized(int u, int v) {
        return u < v ? std::pair{u, v} : std::pair{v, u};
    }

    int vertex_count_ = 0;
    std::set<std::pair<int, int>> edges_;
};

/// Chain of star graphs: one entry per spine vertex giving the number of
/// leaf vertices hanging off it. Spine vertices are connected in a path.
struct StarChain {
    std::vector<int> branch_counts;

    StarChain() = default;
    StarChain(std::initializer_list<int> counts) : branch_counts(counts) { validate(); }
    explicit StarChain(std::vector<int> counts) : branch_counts(std::move(counts)) { validate(); }

    void validate() const {
        if (branch_counts.empty())
            throw std::invalid_argument("StarChain: empty chain");
        for (int b : branch_counts)
            if (b < 0) throw std::invalid_argument("StarChain: negative branch count");
    }

    int spine_length() const { return static_cast<int>(branch_counts.size()); }
    int total_vertices() const {
        int n = spine_length();
        for (int b : branch_counts) n += b;
        return n;
    }
};

/// Builds the graph of a star chain. Spine vertices are numbered 0..k-1 and
/// connected in a path; the branch_counts[i] leaves of spine vertex i are
/// appended after all spine vertices, in emission order.
Graph star_chain_to_graph(const StarChain& chain);

}  // namespace gss

#endif
