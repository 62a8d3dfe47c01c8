#include "limlab/poset.hpp"

#include <stdexcept>

namespace limlab {

namespace {

bool compute_directed(const FinitePoset& p) {
    for (int a = 0; a < p.node_count; ++a)
        for (int b = a + 1; b < p.node_count; ++b) {
            bool bounded = false;
            for (int c = 0; c < p.node_count && !bounded; ++c)
                bounded = p.leq[a][c] && p.leq[b][c];
            if (!bounded) return false;
        }
    return true;
}

}  // namespace

FinitePoset FinitePoset::from_pairs(int nodes, const std::vector<std::pair<int, int>>& pairs) {
    if (nodes < 0) throw std::invalid_argument("negative node count");
    FinitePoset p;
    p.node_count = nodes;
    p.leq.assign(nodes, std::vector<bool>(nodes, false));
    for (int i = 0; i < nodes; ++i) p.leq[i][i] = true;
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes)
            throw std::invalid_argument("relation pair out of range");
        p.leq[a][b] = true;
    }
    // Floyd-Warshall style transitive closure.
    for (int k = 0; k < nodes; ++k)
        for (int i = 0; i < nodes; ++i) {
            if (!p.leq[i][k]) continue;
            for (int j = 0; j < nodes; ++j)
                if (p.leq[k][j]) p.leq[i][j] = true;
        }
    for (int i = 0; i < nodes; ++i)
        for (int j = i + 1; j < nodes; ++j)
            if (p.leq[i][j] && p.leq[j][i])
                throw std::invalid_argument("relation is not antisymmetric");
    p.directed = compute_directed(p);
    return p;
}

FinitePoset FinitePoset::chain(int nodes) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < nodes; ++i) pairs.emplace_back(i, i + 1);
    return from_pairs(nodes, pairs);
}

FinitePoset FinitePoset::antichain(int nodes) { return from_pairs(nodes, {}); }

std::vector<std::pair<int, int>> FinitePoset::strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < node_count; ++a)
        for (int b = 0; b < node_count; ++b)
            if (a != b && leq[a][b]) out.emplace_back(a, b);
    return out;
}

bool FinitePoset::has_maximum() const {
    for (int m = 0; m < node_count; ++m) {
        bool top = true;
        for (int a = 0; a < node_count && top; ++a) top = leq[a][m];
        if (top) return true;
    }
    return false;
}

std::vector<NodeTuple> ordered_tuples(const FinitePoset& p, int arity) {
    if (arity < 0) throw std::invalid_argument("negative arity");
    std::vector<NodeTuple> out;
    NodeTuple cur;
    // Depth-first in increasing node id keeps the output lexicographic.
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == arity + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v < p.node_count; ++v) {
            if (!cur.empty() && !p.leq[cur.back()][v]) continue;
            cur.push_back(v);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

NodeTuple face(const NodeTuple& t, int i) {
    if (t.size() < 2) throw std::invalid_argument("face of a singleton tuple");
    if (i < 0 || i >= static_cast<int>(t.size()))
        throw std::invalid_argument("face index out of range");
    NodeTuple out;
    out.reserve(t.size() - 1);
    for (int j = 0; j < static_cast<int>(t.size()); ++j)
        if (j != i) out.push_back(t[j]);
    return out;
}

}  // namespace limlab
