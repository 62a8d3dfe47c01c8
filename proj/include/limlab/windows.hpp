#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "limlab/ordinal.hpp"
#include "limlab/poset.hpp"

namespace limlab {

// Subset of the finite window [0, N); the desk-scale stand-in for a
// subset of omega.
struct WindowedSet {
    int window = 0;
    std::vector<bool> bits;

    WindowedSet() = default;
    explicit WindowedSet(int n) : window(n), bits(n, false) {}
    WindowedSet(int n, const std::vector<int>& members) : WindowedSet(n) {
        for (int m : members) add(m);
    }

    bool contains(int x) const { return x >= 0 && x < window && bits[x]; }
    void add(int x) {
        if (x < 0 || x >= window) throw std::out_of_range("element outside window");
        bits[x] = true;
    }
    void remove(int x) {
        if (x < 0 || x >= window) throw std::out_of_range("element outside window");
        bits[x]= false;
    }
    int count() const;
    std::vector<int> members() const;

    // Little-endian '0'/'1' string of length N (index 0 first).
    std::string bitstring() const;
    static WindowedSet from_bitstring(const std::string& s);

    bool subset_of(const WindowedSet& o) const;
    WindowedSet set_minus(const WindowedSet& o) const;
    WindowedSet set_union(const WindowedSet& o) const;
    WindowedSet set_intersect(const WindowedSet& o) const;

    bool operator==(const WindowedSet& o) const = default;
    bool operator<(const WindowedSet& o) const {
        return window != o.window ? window < o.window : bits < o.bits;
    }
};

// Certifies that a relation holds on [bound, N). Bounds above N/2 are
// refused everywhere: a fact visible only at the window edge is no fact.
struct ModFiniteCert {
    int bound = 0;
    bool operator==(const ModFiniteCert& o) const = default;
};

inline bool cert_bound_ok(int bound, int window) { return 2 * bound <= window; }

// Least m with a \ [0,m) contained in b, provided m <= N/2.
std::optional<ModFiniteCert> almost_subset_cert(const WindowedSet& a, const WindowedSet& b);

struct Tower {
    int window = 0;
    std::vector<WindowedSet> levels;
    std::map<std::pair<int, int>, ModFiniteCert> certs;  // (xi, eta), xi < eta
    std::vector<OrdNotation> indices;  // optional ordinal structure; empty means 0..M-1

    int length() const { return static_cast<int>(levels.size()); }
    const ModFiniteCert& cert(int xi, int eta) const;
};

// Throws with a description of the first violated invariant.
void check_tower(const Tower& t);

// Deterministic tower with strictly almost-increasing levels. Growth comes
// from the top end of the window so it clears every certificate bound;
// certificates become nontrivial by dropping small seeded odd elements.
Tower tower_generate(int length, int window, uint64_t seed);

// Variant used by the ordering/gap constructions: caps dropped elements at
// `drop_cap` (keeps tree-order certificate bounds small) and additionally
// grows from the bottom end so that fresh elements exist below N/2.
// Requires 4*length <= window when dual_growth is set.
Tower tower_generate_profile(int length, int window, uint64_t seed, int drop_cap,
                             bool dual_growth, std::vector<OrdNotation> indices = {});

// Hypograph basis for the ideal on a width x height grid: function f
// yields { (i,j) : j <= f(i) }, flattened to the window [0, w*h) by
// i*h + j.
struct IdealBasisA {
    int width = 0;
    int height = 0;
    std::vector<std::vector<int>> functions;

    WindowedSet hypograph(int which) const;
};

struct IdealSublattice {
    FinitePoset poset;
    std::vector<WindowedSet> sets;  // deduped, first-occurrence order
};

IdealSublattice ideal_sublattice_A(const IdealBasisA& basis);

}  // namespace limlab
