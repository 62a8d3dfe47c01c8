#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "limlab/snf.hpp"
#include "limlab/windows.hpp"

namespace limlab {

// Inverse system of abelian groups over a finite poset. Each node carries
// a finite basis; each related pair (lo <= hi) carries a linear map sending
// hi-basis elements to lo-combinations. One representation covers both the
// inclusion maps of the Boolean tail systems and the coordinate projections
// of the ideal systems.
struct SystemSpec {
    FinitePoset poset;
    Domain domain = Domain::Mod2;
    std::vector<std::vector<std::string>> basis;                // labels per node
    std::vector<std::map<std::string, int>> basis_lookup;
    // edge (lo, hi): per hi-basis index, list of (lo-basis index, coeff)
    std::map<std::pair<int, int>, std::vector<std::vector<std::pair<int, Int>>>> edges;
    bool flasque = false;
    std::string name;

    // Structured metadata, where the builder has it.
    int mitchell_level = -1;
    std::vector<std::vector<std::vector<int>>> tuple_basis;  // per node, per basis index
    std::vector<WindowedSet> node_sets;                      // ideal systems
    int window = 0;

    int nodes() const { return poset.node_count; }
    int dim(int node) const { return static_cast<int>(basis[node].size()); }
    int basis_index(int node, const std::string& label) const;
    const std::vector<std::vector<std::pair<int, Int>>>& edge(int lo, int hi) const;

    void rebuild_lookup();
    // Matrix of the edge map G_hi -> G_lo (rows: lo basis, cols: hi basis).
    SparseMatrix edge_matrix(int lo, int hi) const;
};

// Verifies identity edges, exact functoriality on every related triple and
// basis element, and that the stored flasque flag matches the edge ranks.
void check_system(const SystemSpec& s);

bool compute_flasque(const SystemSpec& s);

// Element of the group at one node; sparse, no zero coefficients.
struct Elem {
    int node = 0;
    std::map<int, Int> coords;

    bool zero() const { return coords.empty(); }
    bool operator==(const Elem& o) const = default;
};

Elem elem_make(int node, std::map<int, Int> coords, Domain d);
Elem elem_add(const Elem& a, const Elem& b, Domain d);
Elem elem_scale(const Elem& a, const Int& c, Domain d);
inline Elem elem_sub(const Elem& a, const Elem& b, Domain d) {
    return elem_add(a, elem_scale(b, -1, d), d);
}

// Applies the edge map; target must lie below the element's node.
Elem project(const SystemSpec& s, const Elem& e, int target);

// Chain 0 < 1 < ... < size-1; node a carries the weakly increasing
// (level+1)-tuples drawn from [a, size); edges are inclusions.
std::shared_ptr<const SystemSpec> mitchell_system(int level, int size);

// Nodes are the given subsets of a window ordered by inclusion; node basis
// is the set's members; edges are coordinate projections. Always flasque.
std::shared_ptr<const SystemSpec> ideal_system(const std::vector<WindowedSet>& sets, Domain d);

// ideal_system over the family closed under adding all member singletons;
// the carrier of the product-system trivializer.
std::shared_ptr<const SystemSpec> product_window_system(const std::vector<WindowedSet>& sets,
                                                        Domain d);

// Element of a quotient group at an ideal-system node, carried by a
// representative defined on the node's set, meaningful above cert.bound.
struct QElem {
    int node = 0;
    std::map<int, Int> rep;  // window point -> coefficient (zero elided)
    ModFiniteCert cert;
};

// Least bound m <= N/2 with the representatives equal on [m, N) intersect
// the node's set; absence if only larger bounds would do.
std::optional<ModFiniteCert> q_equal(const SystemSpec& s, const QElem& x, const QElem& y);

}  // namespace limlab
