#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "limlab/cochain.hpp"
#include "support.hpp"

using namespace limlab;

namespace {

// Chain with one-dimensional groups and identity maps.
std::shared_ptr<const SystemSpec> one_dim_chain(int n, Domain d) {
    auto s = std::make_shared<SystemSpec>();
    s->poset = FinitePoset::chain(n);
    s->domain = d;
    s->name = "chain" + std::to_string(n);
    s->basis.assign(n, {"e"});
    s->rebuild_lookup();
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) s->edges[{a, b}] = {{{0, 1}}};
    s->flasque = true;
    return s;
}

}  // namespace

TEST_CASE("coboundary on the pinned chain examples") {
    auto s = one_dim_chain(3, Domain::Mod2);

    Cochain zero(s, 1);
    CHECK(coboundary(zero).zero());

    // x_{01} = 1, x_{12} = 1, x_{02} = 0, diagonals 0: coherent.
    Cochain x(s, 1);
    x.set({0, 1}, Elem{0, {{0, 1}}});
    x.set({1, 2}, Elem{1, {{0, 1}}});
    Cochain dx = coboundary(x);
    CHECK(dx.value({0, 1, 2}).zero());
    CHECK(is_coherent(x).ok);

    // y = (1, 0, 1) at arity 0: delta(y)_{01} = p(y_1) - y_0 = 1 mod 2.
    Cochain y(s, 0);
    y.set({0}, Elem{0, {{0, 1}}});
    y.set({2}, Elem{2, {{0, 1}}});
    Cochain dy = coboundary(y);
    CHECK(dy.value({0, 1}).coords.at(0) == 1);

    // Incoherent witness: x_{01} = 1 alone fails at (0,1,2).
    Cochain bad(s, 1);
    bad.set({0, 1}, Elem{0, {{0, 1}}});
    CoherenceResult res = is_coherent(bad);
    CHECK(!res.ok);
    CHECK(res.witness == NodeTuple{0, 1, 2});
}

TEST_CASE("coboundary squares to zero on random systems") {
    Rng rng(42);
    int done = 0;
    while (done < 40) {
        FinitePoset p = testing::random_poset(rng, 5);
        Domain d = rng.coin() ? Domain::Integers : Domain::Mod2;
        auto s = testing::random_system(rng, p, d);
        for (int arity = 0; arity <= 2; ++arity) {
            Cochain c = testing::random_cochain(rng, s, arity);
            CHECK(coboundary(coboundary(c)).zero());
        }
        ++done;
    }
}

TEST_CASE("any coboundary image is coherent") {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = testing::random_system(rng, testing::random_poset(rng, 5),
                                        rng.coin() ? Domain::Integers : Domain::Mod2);
        Cochain c = testing::random_cochain(rng, s, 1);
        CHECK(is_coherent(coboundary(c)).ok);
    }
}

TEST_CASE("parallel and serial coboundary agree") {
    Rng rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = testing::random_system(rng, testing::random_poset(rng, 6),
                                        rng.coin() ? Domain::Integers : Domain::Mod2);
        Cochain c = testing::random_cochain(rng, s, 1 + static_cast<int>(rng.below(2)));
        CHECK(cochain_equal(coboundary(c), coboundary_serial(c)));
    }
}

TEST_CASE("slice extension and slice readback") {
    auto window = one_dim_chain(2, Domain::Mod2);
    auto extended = one_dim_chain(3, Domain::Mod2);

    Cochain x(window, 1);
    x.set({0, 1}, Elem{0, {{0, 1}}});
    Cochain w(window, 0);
    w.set({0}, Elem{0, {{0, 1}}});

    Cochain ext = slice_extend(x, w, extended, 2);
    CHECK(ext.value({0, 1}).coords.at(0) == 1);
    CHECK(ext.value({0, 2}).coords.at(0) == 1);
    CHECK(ext.value({1, 2}).zero());

    // Restriction back to the window recovers x.
    Cochain back = restrict_to_prefix(ext, window, 2);
    CHECK(cochain_equal_by_labels(back, x));

    // Slice readback recovers w.
    Cochain slice = take_slice(ext, 2, SliceMode::Plain, window);
    CHECK(cochain_equal_by_labels(slice, w));

    // Zero slice extends by zero.
    Cochain zeroslice = slice_extend(x, Cochain(window, 0), extended, 2);
    CHECK(zeroslice.value({0, 2}).zero());
}

TEST_CASE("slice readback inverts slice extension on random data") {
    Rng rng(2121);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng.below(2));
        auto window = one_dim_chain(n - 1, Domain::Integers);
        auto extended = one_dim_chain(n, Domain::Integers);
        int arity = 1 + static_cast<int>(rng.below(2));
        Cochain x = testing::random_cochain(rng, window, arity);
        Cochain w = testing::random_cochain(rng, window, arity - 1);
        Cochain ext = slice_extend(x, w, extended, n - 1);
        Cochain got = take_slice(ext, n - 1, SliceMode::Plain, window);
        CHECK(cochain_equal_by_labels(got, w));
        CHECK(cochain_equal_by_labels(restrict_to_prefix(ext, window, n - 1), x));
    }
}

TEST_CASE("boolean strip slice readback") {
    // Hand-built arity-1 cochain over the level-1 tail system on 3 nodes,
    // extended window has 4 nodes with top 3.
    auto big = mitchell_system(1, 4);
    auto target = mitchell_system(0, 3);
    Cochain v(big, 1);
    // Entry at (0, 3): basis tuples of node 0 in [0,4): pick (1,3) and (2,2).
    Elem e{0, {}};
    e.coords[big->basis_index(0, "1,3")] = 1;
    e.coords[big->basis_index(0, "2,2")] = 1;
    v.set({0, 3}, e);
    Cochain got = take_slice(v, 3, SliceMode::BooleanStrip, target);
    // Only the tuple ending in the top survives, stripped to "1".
    REQUIRE(got.entries.count({0}) == 1);
    CHECK(got.value({0}).coords.at(target->basis_index(0, "1")) == 1);
    CHECK(got.value({0}).coords.size() == 1);
}

TEST_CASE("extension along a cofinal chain") {
    // Square with a top: bottoms 0,1 below 2,3, and 4 on top.
    FinitePoset p = FinitePoset::from_pairs(
        5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
    Rng rng(9);
    auto s = testing::random_system(rng, p, Domain::Integers);
    std::vector<int> chain{0, 2, 4};

    // Identity case: chain = whole poset on a chain system.
    auto cs = one_dim_chain(3, Domain::Integers);
    Cochain idx = testing::random_cochain(rng, cs, 0);
    Cochain idz = extend_along_cofinal_chain(coboundary(idx), {0, 1, 2});
    CHECK(cochain_equal(idz, coboundary(idx)));

    // Coherent input on the chain extends coherently.
    for (int trial = 0; trial < 10; ++trial) {
        Cochain seed = testing::random_cochain(rng, s, 0);
        // Clip the coboundary to chain support to get a coherent chain cochain.
        Cochain dc = coboundary(seed);
        Cochain clipped(s, 1);
        for (const auto& [t, e] : dc.entries) {
            bool on = true;
            for (int v : t) on = on && (v == 0 || v == 2 || v == 4);
            if (on) clipped.entries[t] = e;
        }
        Cochain z = extend_along_cofinal_chain(clipped, chain);
        CHECK(is_coherent(z).ok);
        for (const auto& [t, e] : clipped.entries) CHECK(z.value(t) == e);
    }

    // Arity-0 threads extend to threads.
    Cochain thread(s, 0);
    Elem top{4, {}};
    for (int i = 0; i < s->dim(4); ++i) top.coords[i] = 1;
    top = elem_make(4, top.coords, Domain::Integers);
    thread.set({4}, top);
    thread.set({2}, project(*s, top, 2));
    thread.set({0}, project(*s, top, 0));
    Cochain full = extend_along_cofinal_chain(thread, chain);
    for (auto [lo, hi] : p.strict_pairs())
        CHECK(project(*s, full.value({hi}), lo) == full.value({lo}));

    CHECK_THROWS(extend_along_cofinal_chain(thread, std::vector<int>{0, 2}));  // not cofinal
}

TEST_CASE("product window trivializer") {
    Rng rng(55);
    WindowedSet s0(4, {0});
    WindowedSet s1(4, {1});
    WindowedSet s01(4, {0, 1});
    auto sys = product_window_system({s0, s1, s01}, Domain::Mod2);

    CHECK(trivialize_product(Cochain(sys, 1)).zero());

    for (int trial = 0; trial < 15; ++trial) {
        Cochain seed = testing::random_cochain(rng, sys, 0);
        Cochain x = coboundary(seed);  // coherent by construction
        Cochain y = trivialize_product(x);
        CHECK(cochain_equal(coboundary(y), x));
    }

    // The singleton-first-coordinate entries use the prescribed zero.
    Cochain seed = testing::random_cochain(rng, sys, 0);
    Cochain x = coboundary(seed);
    Cochain y = trivialize_product(x);
    for (const auto& [t, e] : y.entries)
        CHECK(sys->node_sets[t[0]].count() > 1);
}

TEST_CASE("product trivializer also works over the integers") {
    Rng rng(56);
    WindowedSet a(6, {0, 2});
    WindowedSet b(6, {0, 2, 5});
    auto sys = product_window_system({a, b}, Domain::Integers);
    for (int trial = 0; trial < 10; ++trial) {
        Cochain seed = testing::random_cochain(rng, sys, 0);
        Cochain x = coboundary(seed);
        Cochain y = trivialize_product(x);
        CHECK(cochain_equal(coboundary(y), x));
    }
}

TEST_CASE("connecting map on certified quotient cochains") {
    // Window chain of two sets; representatives differ at one point.
    WindowedSet a(12, {0, 1, 2, 3});
    WindowedSet b(12, {0, 1, 2, 3, 4, 5});
    auto sys = ideal_system({a, b}, Domain::Integers);

    // Honest lift of a product cochain maps to zero.
    QCochain honest;
    honest.system = sys;
    honest.arity = 0;
    QElem qb{1, {{0, 2}, {4, 1}}, {0}};
    QElem qa{0, {{0, 2}}, {0}};
    honest.entries[{0}] = qa;
    honest.entries[{1}] = qb;
    Cochain img = connecting_map(honest);
    CHECK(img.zero());

    // Representatives differing at one early point give a nonzero
    // finite-support coherent image.
    QCochain off = honest;
    off.entries[{0}].rep[1] = 7;  // disagreement at point 1 only
    Cochain img2 = connecting_map(off);
    CHECK(!img2.zero());
    CHECK(is_coherent(img2).ok);
    for (const auto& [t, e] : img2.entries)
        for (const auto& [i, c] : e.coords)
            CHECK(std::stoi(sys->basis[e.node][i]) < 6);

    // Linearity on random instances.
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        QCochain u = honest, v = honest;
        for (auto& [t, q] : u.entries)
            for (int p : sys->node_sets[q.node].members())
                if (rng.coin()) q.rep[p] = static_cast<int>(rng.below(5)) - 2;
        for (auto& [t, q] : v.entries)
            for (int p : sys->node_sets[q.node].members())
                if (rng.coin()) q.rep[p] = static_cast<int>(rng.below(5)) - 2;
        QCochain sum = u;
        for (auto& [t, q] : sum.entries) {
            for (int p : sys->node_sets[q.node].members()) {
                Int uv = u.entries[t].rep.count(p) ? u.entries[t].rep[p] : 0;
                Int vv = v.entries[t].rep.count(p) ? v.entries[t].rep[p] : 0;
                if (uv + vv != 0)
                    q.rep[p] = uv + vv;
                else
                    q.rep.erase(p);
            }
        }
        Cochain du = connecting_map(u);
        Cochain dv = connecting_map(v);
        Cochain dsum = connecting_map(sum);
        CHECK(cochain_equal(dsum, cochain_add(du, dv)));
    }

    // Quotient incoherence: representatives drifting past the cap.
    QCochain bad = honest;
    bad.entries[{0}].rep[3] = 1;
    bad.entries[{0}].rep[2] = 1;
    QCochain worse;
    worse.system = sys;
    worse.arity = 0;
    QElem qa2{0, {}, {0}};
    QElem qb2{1, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, {0}};
    worse.entries[{0}] = qa2;
    worse.entries[{1}] = qb2;
    // Differences survive at points 4 and 5; 5 < 6 = N/2 keeps this legal,
    // so force disagreement past the cap with a wider window.
    WindowedSet wa(12, {0, 7, 8});
    WindowedSet wb(12, {0, 7, 8, 9});
    auto sys2 = ideal_system({wa, wb}, Domain::Integers);
    QCochain clash;
    clash.system = sys2;
    clash.arity = 0;
    clash.entries[{0}] = QElem{0, {{7, 1}}, {0}};
    clash.entries[{1}] = QElem{1, {}, {0}};
    CHECK_THROWS(connecting_map(clash));
}
