#pragma once

#include <functional>
#include <map>
#include <vector>

#include "limlab/cochain.hpp"
#include "limlab/rng.hpp"

namespace limlab::testing {

// Random poset on up to max_nodes nodes; optionally forced directed by
// adding a top element.
inline FinitePoset random_poset(Rng& rng, int max_nodes, bool force_directed = false) {
    int n = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(max_nodes - 1)));
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.below(3) == 0) pairs.emplace_back(a, b);  // edges respect numbering
    if (force_directed)
        for (int a = 0; a + 1 < n; ++a) pairs.emplace_back(a, n - 1);
    return FinitePoset::from_pairs(n, pairs);
}

// Random system over a poset: small node dimensions, random edge maps made
// functorial by routing everything through a chain of covers... kept
// simple instead: random maps on cover pairs, composed transitively.
inline std::shared_ptr<const SystemSpec> random_system(Rng& rng, const FinitePoset& p,
                                                       Domain domain, int max_dim = 2) {
    auto s = std::make_shared<SystemSpec>();
    s->poset = p;
    s->domain = domain;
    s->name = "random";
    int n = p.node_count;
    s->basis.resize(n);
    for (int a = 0; a < n; ++a) {
        int d = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_dim)));
        for (int i = 0; i < d; ++i) s->basis[a].push_back("e" + std::to_string(i));
    }
    s->rebuild_lookup();
    for (int a = 0; a < n; ++a) {
        std::vector<std::vector<std::pair<int, Int>>> id(s->dim(a));
        for (int i = 0; i < s->dim(a); ++i) id[i] = {{i, 1}};
        s->edges[{a, a}] = std::move(id);
    }
    // Choose maps on covering pairs, then define every edge as the product
    // along one fixed chain of covers so functoriality holds by fiat.
    auto covers = [&]() {
        std::vector<std::pair<int, int>> cs;
        for (auto [a, b] : p.strict_pairs()) {
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                cover = !(c != a && c != b && p.leq[a][c] && p.leq[c][b]);
            if (cover) cs.emplace_back(a, b);
        }
        return cs;
    }();
    std::map<std::pair<int, int>, SparseMatrix> mat;
    for (auto [a, b] : covers) {
        SparseMatrix m(s->dim(a), s->dim(b));
        for (int c = 0; c < s->dim(b); ++c)
            for (int r = 0; r < s->dim(a); ++r) {
                int v = static_cast<int>(rng.below(4)) - 1;  // -1..2, sparse-ish
                if (domain == Domain::Mod2) v = static_cast<int>(rng.below(2));
                if (v != 0) m.set(r, c, v);
            }
        mat[{a, b}] = m;
    }
    // Fixed factorization: first cover step below b on the way down to a.
    std::function<SparseMatrix(int, int)> route = [&](int a, int b) -> SparseMatrix {
        if (a == b) return SparseMatrix::identity(s->dim(a));
        for (auto [lo, hi] : covers)
            if (hi == b && p.leq[a][lo])
                return route(a, lo).times(mat[{lo, hi}]);
        throw std::logic_error("no cover route");
    };
    for (auto [a, b] : p.strict_pairs()) {
        SparseMatrix m = route(a, b);
        std::vector<std::vector<std::pair<int, Int>>> maps(s->dim(b));
        for (const auto& [rc, v] : m.entries) {
            Int nv = normalize(v, domain);
            if (nv != 0) maps[rc.second].emplace_back(rc.first, nv);
        }
        s->edges[{a, b}] = std::move(maps);
    }
    s->flasque = compute_flasque(*s);
    return s;
}

inline Cochain random_cochain(Rng& rng, std::shared_ptr<const SystemSpec> s, int arity,
                              int coeff_range = 3) {
    Cochain c(s, arity);
    for (const auto& t : ordered_tuples(s->poset, arity)) {
        Elem e{t[0], {}};
        for (int i = 0; i < s->dim(t[0]); ++i) {
            if (rng.below(2)) continue;
            int v = static_cast<int>(rng.below(static_cast<uint64_t>(2 * coeff_range + 1))) -
                    coeff_range;
            Int nv = normalize(v, s->domain);
            if (nv != 0) e.coords[i] = nv;
        }
        if (!e.zero()) c.entries[t] = e;
    }
    return c;
}

}  // namespace limlab::testing
