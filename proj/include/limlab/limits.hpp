#pragma once

#include "limlab/cochain.hpp"

namespace limlab {

// Coordinates for the group of arity-k cochains: one block per tuple,
// tuples lexicographic, basis order inside each block.
struct TupleBasis {
    std::vector<NodeTuple> tuples;
    std::vector<int> offset;
    int total = 0;
    std::map<NodeTuple, int> position;

    static TupleBasis build(const SystemSpec& s, int arity);
    std::vector<Int> pack(const Cochain& x) const;
    Cochain unpack(const std::vector<Int>& v, std::shared_ptr<const SystemSpec> s,
                   int arity) const;
};

// Matrix of the coboundary from arity k-1 to arity k (k >= 1).
SparseMatrix delta_matrix(const SystemSpec& s, int k, const TupleBasis& from,
                          const TupleBasis& to);

struct LimitResult {
    int n = 0;
    GroupInvariants invariants;
    long long kernel_rank = 0;
    long long image_rank = 0;
    std::vector<Cochain> witness_generators;
};

// ker(delta^{n+1}) / im(delta^n), exactly; n = 0 yields the inverse limit.
LimitResult derived_limit(const std::shared_ptr<const SystemSpec>& s, int n);

// Mod-2 dimension of the same quotient by exhaustive enumeration of all
// cochains, driven through the cochain-level coboundary; the independent
// oracle for derived_limit. Caps at 2^20 states per arity.
long long brute_force_limit_mod2(const std::shared_ptr<const SystemSpec>& s, int n);
long long brute_force_limit_mod2_serial(const std::shared_ptr<const SystemSpec>& s, int n);

// Trivializes a coherent 1-cochain over a flasque system: recursion up the
// given cofinal chain picking sparse preimages, then the one-step fill-in
// formula for off-chain nodes.
Cochain goblot_trivialize(const std::shared_ptr<const SystemSpec>& s,
                          const std::vector<int>& chain, const Cochain& z);

// True when the poset is directed and n >= 1: a finite directed poset has
// a maximum, so the derived limit is expected to vanish.
bool vanishing_expectation(const SystemSpec& s, int n);

// Deterministic sparse solution of M x = b: greedily pins coordinates to
// zero from the left, then solves the reduced system.
std::optional<std::vector<Int>> solve_sparse_greedy(const SparseMatrix& m,
                                                    const std::vector<Int>& b, Domain d);

}  // namespace limlab
