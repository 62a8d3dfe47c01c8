#pragma once

#include "limlab/system.hpp"

namespace limlab {

// Sparse cochain: entry at a weakly increasing (arity+1)-tuple lives in the
// group at the tuple's first node; omitted tuples are zero.
struct Cochain {
    std::shared_ptr<const SystemSpec> system;
    int arity = 0;
    std::map<NodeTuple, Elem> entries;

    Cochain() = default;
    Cochain(std::shared_ptr<const SystemSpec> s, int a) : system(std::move(s)), arity(a) {}

    const Elem* find(const NodeTuple& t) const {
        auto it = entries.find(t);
        return it == entries.end() ? nullptr : &it->second;
    }
    Elem value(const NodeTuple& t) const {
        const Elem* e = find(t);
        return e ? *e : Elem{t.empty() ? 0 : t[0], {}};
    }
    void set(const NodeTuple& t, const Elem& e);

    bool zero() const { return entries.empty(); }
};

Cochain cochain_add(const Cochain& a, const Cochain& b);
Cochain cochain_scale(const Cochain& a, const Int& c);
inline Cochain cochain_sub(const Cochain& a, const Cochain& b) {
    return cochain_add(a, cochain_scale(b, -1));
}
bool cochain_equal(const Cochain& a, const Cochain& b);

// Entry-by-entry equality through basis labels; tolerates distinct
// SystemSpec instances for the same window shape.
bool cochain_equal_by_labels(const Cochain& a, const Cochain& b);

// Alternating-sum coboundary; raises arity by one. The projection term
// carries +, the deleted-interior terms alternate starting at -.
Cochain coboundary(const Cochain& x);
Cochain coboundary_serial(const Cochain& x);  // reference implementation

struct CoherenceResult {
    bool ok = false;
    NodeTuple witness;  // lexicographically first failing tuple when !ok
};
CoherenceResult is_coherent(const Cochain& x);

// Re-homes a cochain onto another system instance by node id and basis
// label; entries at tuples that do not exist there are rejected.
Cochain rehome(const Cochain& x, std::shared_ptr<const SystemSpec> target);

// Entries with all tuple coordinates below `node_count`, re-homed.
Cochain restrict_to_prefix(const Cochain& x, std::shared_ptr<const SystemSpec> target,
                           int node_count);

// One-step extension: tuples not ending at the new top node copy x, tuples
// ending there read the prescribed slice w.
Cochain slice_extend(const Cochain& x, const Cochain& w,
                     std::shared_ptr<const SystemSpec> extended, int top);

enum class SliceMode { Plain, BooleanStrip };

// Reads the top slice back off; inverse of slice_extend on that slice.
// BooleanStrip additionally strips the top node from each basis tuple and
// lands one Boolean level down (tail-tuple systems only).
Cochain take_slice(const Cochain& v, int top, SliceMode mode,
                   std::shared_ptr<const SystemSpec> target);

// Spreads a coherent cochain on a linear cofinal chain over the whole
// poset by pulling back along the least-upper-chain-point section.
Cochain extend_along_cofinal_chain(const Cochain& x, const std::vector<int>& chain);

// Explicit trivializer over a product window family: reads the answer off
// the singleton coordinates. Requires every member singleton as a node.
Cochain trivialize_product(const Cochain& x);

// Cochain with values in quotient groups of an ideal-system window,
// carried by certified representatives.
struct QCochain {
    std::shared_ptr<const SystemSpec> system;
    int arity = 0;
    std::map<NodeTuple, QElem> entries;
};

// Lifts representatives, applies the coboundary, checks every entry dies
// above its certificate region (the window reading of finite support), and
// returns the resulting finite-support cochain one arity up.
Cochain connecting_map(const QCochain& x);

}  // namespace limlab
