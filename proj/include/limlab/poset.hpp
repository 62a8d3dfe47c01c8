#pragma once

#include <utility>
#include <vector>

#include "limlab/domain.hpp"

namespace limlab {

// Weakly increasing tuple of node ids; entry i precedes entry i+1 in the
// poset order of whatever poset the tuple was enumerated from.
using NodeTuple = std::vector<int>;

struct FinitePoset {
    int node_count = 0;
    std::vector<std::vector<bool>> leq;  // leq[a][b] <=> a <= b
    bool directed = false;

    FinitePoset() = default;

    // Builds from a generating pair list: closes reflexively and
    // transitively, then checks antisymmetry.
    static FinitePoset from_pairs(int nodes, const std::vector<std::pair<int, int>>& pairs);

    static FinitePoset chain(int nodes);
    static FinitePoset antichain(int nodes);

    bool related(int a, int b) const { return leq[a][b]; }
    bool comparable(int a, int b) const { return leq[a][b] || leq[b][a]; }

    // Strictly related pairs a < b, lexicographic.
    std::vector<std::pair<int, int>> strict_pairs() const;

    bool has_maximum() const;
    bool operator==(const FinitePoset& o) const {
        return node_count == o.node_count && leq == o.leq;
    }
};

// All weakly increasing (arity+1)-tuples, lexicographic in node numbering.
std::vector<NodeTuple> ordered_tuples(const FinitePoset& p, int arity);

// Deletes entry i; rejects singleton tuples.
NodeTuple face(const NodeTuple& t, int i);

}  // namespace limlab
