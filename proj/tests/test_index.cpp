#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "limlab/ordinal.hpp"
#include "limlab/poset.hpp"
#include "limlab/rng.hpp"
#include "limlab/windows.hpp"

using namespace limlab;

TEST_CASE("ordered tuples on the pinned shapes") {
    FinitePoset chain3 = FinitePoset::chain(3);
    auto t1 = ordered_tuples(chain3, 1);
    CHECK(t1.size() == 6);
    CHECK(t1.front() == NodeTuple{0, 0});
    CHECK(t1.back() == NodeTuple{2, 2});

    auto t0 = ordered_tuples(chain3, 0);
    CHECK(t0 == std::vector<NodeTuple>{{0}, {1}, {2}});

    FinitePoset anti = FinitePoset::antichain(2);
    auto ta = ordered_tuples(anti, 1);
    CHECK(ta == std::vector<NodeTuple>{{0, 0}, {1, 1}});
}

TEST_CASE("tuple count matches brute-force filtering") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.below(2)) pairs.emplace_back(a, b);
        FinitePoset p = FinitePoset::from_pairs(n, pairs);
        for (int arity = 0; arity <= 3; ++arity) {
            size_t expect = 0;
            // Full product, filtered by the weak chain predicate.
            std::vector<int> idx(arity + 1, 0);
            while (true) {
                bool inc = true;
                for (int i = 0; i + 1 <= arity && inc; ++i) inc = p.leq[idx[i]][idx[i + 1]];
                if (inc) ++expect;
                int k = arity;
                while (k >= 0 && idx[k] == n - 1) idx[k--] = 0;
                if (k < 0) break;
                ++idx[k];
            }
            CHECK(ordered_tuples(p, arity).size() == expect);
        }
    }
}

TEST_CASE("face deletion and the simplicial identity") {
    CHECK(face({0, 1, 2}, 1) == NodeTuple{0, 2});
    CHECK(face({0, 0}, 0) == NodeTuple{0});
    CHECK(face({4, 5, 6, 7}, 3) == NodeTuple{4, 5, 6});
    CHECK_THROWS(face({3}, 0));

    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.below(4));
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.below(2)) pairs.emplace_back(a, b);
        FinitePoset p = FinitePoset::from_pairs(n, pairs);
        for (int arity = 2; arity <= 4; ++arity)
            for (const auto& t : ordered_tuples(p, arity))
                for (int j = 1; j <= arity; ++j)
                    for (int i = 0; i < j; ++i)
                        CHECK(face(face(t, j), i) == face(face(t, i), j - 1));
    }
}

TEST_CASE("ordinal notation basics") {
    OrdNotation w = OrdNotation::omega_power(1);
    OrdNotation w2 = OrdNotation::omega_power(1, 2);
    OrdNotation wsq = OrdNotation::omega_power(2);
    CHECK(OrdNotation::finite(3) < w);
    CHECK(w < w2);
    CHECK(w2 < wsq);
    CHECK(w.is_limit());
    CHECK(!w.is_successor());
    CHECK(OrdNotation::finite(4).is_successor());
    CHECK(OrdNotation::finite(4).predecessor() == OrdNotation::finite(3));
    CHECK(OrdNotation::finite(0).is_zero());
    CHECK(w.successor().predecessor() == w);
    CHECK(OrdNotation::parse("w^2*3+w+5").str() == "w^2*3+w+5");
    CHECK(OrdNotation::parse("0").is_zero());
}

TEST_CASE("fundamental sequences are canonical plus one") {
    OrdNotation w = OrdNotation::omega_power(1);
    CHECK(fundamental_sequence(w, 3) == OrdNotation::finite(4));

    OrdNotation w2 = OrdNotation::omega_power(1, 2);
    OrdNotation expect = OrdNotation::omega_power(1);
    expect.terms.emplace_back(0, 3);
    CHECK(fundamental_sequence(w2, 2) == expect);

    OrdNotation wsq = OrdNotation::omega_power(2);
    CHECK(fundamental_sequence(wsq, 0) == OrdNotation::finite(1));

    CHECK_THROWS(fundamental_sequence(OrdNotation::finite(5), 0));
    CHECK_THROWS(fundamental_sequence(OrdNotation::finite(0), 0));

    for (const auto& lim : {w, w2, wsq, OrdNotation::parse("w^2+w*3")}) {
        OrdNotation prev;
        for (int k = 0; k < 8; ++k) {
            OrdNotation m = fundamental_sequence(lim, k);
            CHECK(m.is_successor());
            CHECK(m < lim);
            if (k > 0) CHECK(prev < m);
            prev = m;
        }
    }
}

TEST_CASE("almost inclusion certificates") {
    WindowedSet a(16, {0, 4, 8});
    WindowedSet b(16, {4, 8, 12});
    auto c = almost_subset_cert(a, b);
    REQUIRE(c.has_value());
    CHECK(c->bound == 1);

    WindowedSet sub(16, {4, 8});
    auto c0 = almost_subset_cert(sub, b);
    REQUIRE(c0.has_value());
    CHECK(c0->bound == 0);

    WindowedSet evens(16), odds(16);
    for (int i = 0; i < 16; i += 2) evens.add(i);
    for (int i = 1; i < 16; i += 2) odds.add(i);
    CHECK(!almost_subset_cert(evens, odds).has_value());

    WindowedSet other(8);
    CHECK_THROWS(almost_subset_cert(a, other));
}

TEST_CASE("tower generation and invariants") {
    Tower single = tower_generate(1, 8, 3);
    CHECK(single.length() == 1);
    CHECK(single.certs.empty());

    Tower t = tower_generate(4, 16, 7);
    for (int xi = 0; xi < 4; ++xi)
        for (int eta = xi + 1; eta < 4; ++eta) {
            auto c = almost_subset_cert(t.levels[xi], t.levels[eta]);
            REQUIRE(c.has_value());
            CHECK(c->bound == t.cert(xi, eta).bound);
        }

    Tower big = tower_generate(20, 64, 0);
    check_tower(big);  // the invariant checker is the oracle

    CHECK_THROWS(tower_generate(5, 8, 0));  // needs 2M <= N
}

TEST_CASE("tower cert bounds are transitive after re-verification") {
    for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        Tower t = tower_generate(8, 32, seed);
        for (int a = 0; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b)
                for (int c = b + 1; c < 8; ++c)
                    CHECK(t.cert(a, c).bound <=
                          std::max(t.cert(a, b).bound, t.cert(b, c).bound));
    }
}

TEST_CASE("hypograph sublattice") {
    IdealBasisA one{2, 3, {{1, 2}}};
    auto lat1 = ideal_sublattice_A(one);
    CHECK(lat1.poset.node_count == 1);
    CHECK(lat1.poset.directed);

    IdealBasisA cross{2, 2, {{0, 1}, {1, 0}}};
    auto lat2 = ideal_sublattice_A(cross);
    CHECK(lat2.poset.node_count == 2);
    CHECK(!lat2.poset.directed);
    CHECK(!lat2.sets[0].subset_of(lat2.sets[1]));
    CHECK(!lat2.sets[1].subset_of(lat2.sets[0]));

    IdealBasisA closed{2, 2, {{0, 1}, {1, 0}, {1, 1}}};
    auto lat3 = ideal_sublattice_A(closed);
    CHECK(lat3.poset.node_count == 3);
    CHECK(lat3.poset.directed);
    CHECK(lat3.poset.has_maximum());

    IdealBasisA dup{2, 2, {{1, 1}, {1, 1}}};
    CHECK(ideal_sublattice_A(dup).poset.node_count == 1);
}
