#pragma once

#include "limlab/constructions.hpp"

namespace limlab {

struct SearchBudget {
    int support_bound = 1;        // max support size per entry
    int coeff_bound = 1;          // max |coefficient|, integer domain only
    int stabilization_bound = 0;  // max allowed certificate bound
    std::vector<int> node_subset; // empty means no restriction

    void validate(int window) const;
};

struct ForcedValue {
    NodeTuple tuple;
    std::string basis_label;
    Int value;
};

struct FalsificationReport {
    Int searched = 0;  // candidates covered, by enumeration or by algebra
    std::optional<Cochain> found;
    std::vector<ForcedValue> forced;
    long long partitions = 0;
    long long cursor = 0;
    long long elapsed_ms = 0;  // never serialized into canonical artifacts
};

// Exhaustive search for y with coboundary(y) = x inside the budget.
// A full-window solve runs first: no solution anywhere means no solution
// in the budget, and a solution already inside the budget is returned
// without enumeration. Only the remaining case enumerates, by increasing
// support size then lexicographically, and is subject to the 2^30 cap.
FalsificationReport search_trivializer(const Cochain& x, const SearchBudget& budget);
FalsificationReport search_trivializer_serial(const Cochain& x, const SearchBudget& budget);

// Exact number of candidates the budget spans.
Int budget_cardinality(const Cochain& x, const SearchBudget& budget);

struct MitchellForcedReport {
    std::vector<int> forced_points;  // y_0 is pinned to 1 at these
    long long minimal_support = 0;
    std::vector<std::string> equations;
};

// Constraint propagation for the level-0 tail window: every trivializer
// of the base cochain has y_0 = 1 at each cofinal member m with m+1 still
// in the window, so its support is at least their count.
MitchellForcedReport forced_values_mitchell(int size, const std::vector<int>& cofseq);

struct GapScenario {
    Tower tower;
    TreeOrders orders;
    CoherentFamily family;
    HausdorffData data;
};

GapScenario build_gap_scenario(int length, int window, uint64_t seed);

struct Violation {
    int alpha = 0;
    int beta = 0;
    int point = 0;
    std::string kind;  // "strip" or "agreement"
};

// Replays the gap refutation: hunts a pair alpha < beta whose step point
// lies above the claimed bounds and catches the candidate either keeping
// it (strip violation) or losing it (agreement violation).
std::optional<Violation> refute_uniform_trivializer(const GapScenario& g, const WindowedSet& b,
                                                    const std::vector<int>& bounds,
                                                    int stabilization_bound);

struct ForkObstructionResult {
    FalsificationReport report;
    std::optional<std::pair<Cochain, Cochain>> pair;  // u0, u1 when found
    std::optional<Cochain> conversion;                // trivializer of z read off the pair
};

// Equal-restriction trivializer pairs for the two forks reduce exactly to
// trivializers of the twist z; the search runs on z and any hit is
// converted back into a pair and re-verified.
ForkObstructionResult fork_obstruction_check(const Cochain& fork0, const Cochain& fork1,
                                             const Cochain& z, const SearchBudget& budget,
                                             int top);

}  // namespace limlab
