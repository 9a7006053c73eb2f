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

#include "graph.hpp"

namespace gss {

Graph star_chain_to_graph(const StarChain& chain) {
    chain.validate();
    const int k = chain.spine_length();
    Graph g(chain.total_vertices());
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    int next_leaf = k;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < chain.branch_counts[i]; ++j) g.add_edge(i, next_leaf++);
    return g;
}

}  // namespace gss
