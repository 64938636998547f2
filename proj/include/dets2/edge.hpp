#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace dets2 {

// Edge of the complete graph K_{2d}. Vertices are 1-based and strictly
// ordered: 1 <= i < j <= 2d.
struct Edge {
    int i = 0;
    int j = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    // colex order, matching the column order of the linear system
    friend auto operator<=>(const Edge& a, const Edge& b) {
        if (auto c = a.j <=> b.j; c != 0) return c;
        return a.i <=> b.i;
    }
};

inline int vertex_count(int d) { return 2 * d; }
inline int edge_count(int d) { return d * (2 * d - 1); }

inline void check_edge(Edge e, int d) {
    if (e.i < 1 || e.i >= e.j || e.j > vertex_count(d))
        throw std::out_of_range("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                ") out of range for K_" + std::to_string(vertex_count(d)));
}

// 1-based colex rank: (1,2) -> 1, (1,3) -> 2, (2,3) -> 3, (1,4) -> 4, ...
inline int column_index(Edge e, int d) {
    check_edge(e, d);
    return (e.j - 1) * (e.j - 2) / 2 + e.i;
}

inline Edge edge_at(int column, int d) {
    if (column < 1 || column > edge_count(d))
        throw std::out_of_range("column " + std::to_string(column) + " out of range");
    int j = 2;
    while ((j * (j - 1)) / 2 < column) ++j;
    int i = column - (j - 1) * (j - 2) / 2;
    return Edge{i, j};
}

// all edges of K_{2d} in colex (column) order
inline std::vector<Edge> edges(int d) {
    std::vector<Edge> out;
    out.reserve(edge_count(d));
    for (int j = 2; j <= vertex_count(d); ++j)
        for (int i = 1; i < j; ++i) out.push_back(Edge{i, j});
    return out;
}

} // namespace dets2
