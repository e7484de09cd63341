#pragma once

#include <span>
#include <utility>
#include <vector>

namespace mforge {

/// Deterministic BFS spanning forest of the bipartite graph whose edges are
/// the nonzero entries of an incidence grid. Vertices are identified by their
/// labels (rows and columns share one label namespace and must not collide).
/// Components are started from their least-labeled vertex and neighbors are
/// visited in ascending label order. Edges come back as (rowLabel, colLabel)
/// in discovery order.
inline std::vector<std::pair<int, int>> spanning_forest_bfs(
    const std::vector<std::vector<char>>& incidence, std::span<const int> rowLabels,
    std::span<const int> colLabels) {
    int nr = static_cast<int>(rowLabels.size());
    int nc = static_cast<int>(colLabels.size());
    // vertex ids: 0..nr-1 rows, nr..nr+nc-1 columns
    std::vector<int> order(nr + nc);
    for (int i = 0; i < nr + nc; ++i) order[i] = i;
    auto label_of = [&](int v) { return v < nr ? rowLabels[v] : colLabels[v - nr]; };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return label_of(a) < label_of(b); });

    std::vector<char> visited(nr + nc, 0);
    std::vector<std::pair<int, int>> edges;
    for (int start : order) {
        if (visited[start]) continue;
        visited[start] = 1;
        std::vector<int> queue = {start};
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            std::vector<int> nbrs;
            if (v < nr) {
                for (int j = 0; j < nc; ++j)
                    if (incidence[v][j]) nbrs.push_back(nr + j);
            } else {
                for (int i = 0; i < nr; ++i)
                    if (incidence[i][v - nr]) nbrs.push_back(i);
            }
            std::sort(nbrs.begin(), nbrs.end(),
                      [&](int a, int b) { return label_of(a) < label_of(b); });
            for (int u : nbrs) {
                if (visited[u]) continue;
                visited[u] = 1;
                int row = v < nr ? v : u;
                int col = v < nr ? u : v;
                edges.emplace_back(rowLabels[row], colLabels[col - nr]);
                queue.push_back(u);
            }
        }
    }
    return edges;
}

}  // namespace mforge
