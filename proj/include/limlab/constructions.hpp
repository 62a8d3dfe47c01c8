#pragma once

#include <array>

#include "limlab/limits.hpp"

namespace limlab {

// Family of functions f_xi on carrier sets a_xi that agree pairwise on
// overlaps above certified bounds.
struct CoherentFamily {
    int window = 0;
    Domain domain = Domain::Mod2;
    std::vector<WindowedSet> sets;                      // a_xi
    std::vector<std::map<int, Int>> functions;          // f_xi, zero elided
    std::map<std::pair<int, int>, ModFiniteCert> pair_certs;
    std::vector<WindowedSet> b_sets;                    // carrier of the diagonal trick
    std::vector<int> agree_bounds;                      // f_xi vs its local rule on b_xi

    int size() const { return static_cast<int>(sets.size()); }
    Int value(int xi, int point) const;
};

// Re-verifies every pair certificate by direct scan; nullopt when all
// certificates hold, otherwise the first failing pair.
std::optional<std::pair<int, int>> verify_pair_certs(const CoherentFamily& f);
std::optional<std::pair<int, int>> verify_pair_certs_serial(const CoherentFamily& f);
void check_family(const CoherentFamily& f);  // throws on the first failure

// Arity-1 cochain over the level-0 tail system on a window: the entry at
// (a,b) is the indicator of the cofinal-sequence members inside [a,b).
// Coherent on every triple.
Cochain mitchell_base_cochain(int size, const std::vector<int>& cofseq);

// One window step of the twisted extension: x (arity n+1, coherent over
// the level-n tail system on window B), trivializer y (arity n, over the
// same window), twist z (arity n, coherent over the level-(n-1) system).
// Returns the coherent extension over window B+1 whose top slice reads z
// back through the stripping slice map.
Cochain mitchell_twist_step(const Cochain& x, const Cochain& y, const Cochain& z);

// Integer-valued coherent family by the almost-disjoint successor trick:
// b_xi = least fresh elements of a_xi, f_xi follows the next-element map
// on b_xi and copies earlier functions above diagonal bounds.
CoherentFamily coherent_family_int(const std::vector<WindowedSet>& sets);

// Mod-2 family with constant value h[xi] on b_xi, same extension scheme.
CoherentFamily coherent_family_mod2_constant(const std::vector<int>& h,
                                             const std::vector<WindowedSet>& sets);

// Binary tree of finite increasing sequences; every internal node has
// exactly two successor labels.
struct BinaryBranchTree {
    std::map<std::vector<int>, std::array<int, 2>> children;

    bool has(const std::vector<int>& node) const { return children.count(node) > 0; }
    static BinaryBranchTree from_branches(const std::vector<WindowedSet>& branches);
};

// Mod-2 family on the branches themselves: g_xi(k) records which of the
// two tree successors the branch takes above k.
CoherentFamily coherent_family_mod2_tree(const BinaryBranchTree& tree,
                                         const std::vector<WindowedSet>& branches);

// Replays the reconstruction induction: from a seed segment and a claimed
// trivializing function, rebuilds the unique branch compatible with both.
WindowedSet branch_reconstruct(const BinaryBranchTree& tree, const std::map<int, Int>& f,
                               const std::vector<int>& seed, int start, int window);

// Forest orders <_k on the tower indices.
struct TreeOrders {
    int levels = 0;                         // K
    std::vector<std::vector<int>> parents;  // [level][index] -> parent or -1

    bool less(int level, int a, int b) const;   // a <_level b, strict
    bool leq(int level, int a, int b) const { return a == b || less(level, a, b); }
    int height(int level) const;
};

// Builds the level orders from the tower's ordinal index structure:
// successors go on top of their predecessor once the window certifies the
// inclusion, limits climb their fundamental sequence.
TreeOrders tree_orderings(const Tower& t);

struct TreeOrderReport {
    int unresolved_pairs = 0;  // pairs related at no level < K
    int max_level_used = 0;
};
// Checks the five order conditions exhaustively; throws on any violation
// of (1),(2),(4),(5); returns the condition-(3) coverage report.
TreeOrderReport check_tree_orders(const Tower& t, const TreeOrders& o);

struct HausdorffData {
    // n_{xi,alpha} for xi < alpha, keyed (xi, alpha).
    std::map<std::pair<int, int>, int> step_points;
    // Per pair alpha < beta: least relating level m and |F_{m-1}(beta)|.
    std::map<std::pair<int, int>, std::pair<int, int>> pair_levels;
};

// The gap family: b_alpha collects one step point per earlier index along
// the tree orders; f_alpha is its indicator on a_alpha.
CoherentFamily hausdorff_family(const Tower& t, const TreeOrders& o,
                                HausdorffData* data = nullptr);

// Two coherent one-step extensions differing exactly by the twist z on the
// new top slice. Requires delta(w) = (-1)^(n+1) x and z coherent.
std::pair<Cochain, Cochain> fork_extensions(const Cochain& x, const Cochain& w,
                                            const Cochain& z,
                                            std::shared_ptr<const SystemSpec> extended,
                                            int top);

// Deterministic carrier sets for the family constructions: fresh blocks of
// size 4*(M-xi) per index, each reaching above N/2, plus seeded overlap.
std::vector<WindowedSet> family_scenario_sets(int count, int window, uint64_t seed);

// Index notations 0..L-1, w, w+1, ..., w*2 used by the ordering scenarios.
std::vector<OrdNotation> standard_index_notations(int count);

}  // namespace limlab
