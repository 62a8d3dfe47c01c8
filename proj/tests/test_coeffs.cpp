#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "limlab/rng.hpp"
#include "limlab/snf.hpp"

using namespace limlab;

namespace {

SparseMatrix dense(const std::vector<std::vector<int>>& rows) {
    SparseMatrix m(static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (rows[r][c] != 0) m.set(r, c, rows[r][c]);
    return m;
}

Int igcd(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Independent oracle: k-th determinantal divisor = gcd of all k x k minors;
// the k-th invariant factor is their successive quotient.
std::vector<Int> determinantal_divisor_diagonal(const SparseMatrix& m) {
    int n = std::min(m.rows, m.cols);
    auto minor_det = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
        int k = static_cast<int>(rs.size());
        // Expansion by permutations; k <= 4 in the tests.
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i) perm[i] = i;
        Int det = 0;
        do {
            int inversions = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            Int term = inversions % 2 ? -1 : 1;
            for (int i = 0; i < k; ++i) term *= m.at(rs[i], cs[perm[i]]);
            det += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return det;
    };
    std::vector<Int> dd(n + 1, 0);
    dd[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Int g = 0;
        std::vector<int> rs(k), cs(k);
        std::function<void(int, int)> pick_rows = [&](int start, int depth) {
            if (depth == k) {
                std::function<void(int, int)> pick_cols = [&](int cstart, int cdepth) {
                    if (cdepth == k) {
                        g = igcd(g, minor_det(rs, cs));
                        return;
                    }
                    for (int c = cstart; c < m.cols; ++c) {
                        cs[cdepth] = c;
                        pick_cols(c + 1, cdepth + 1);
                    }
                };
                pick_cols(0, 0);
                return;
            }
            for (int r = start; r < m.rows; ++r) {
                rs[depth] = r;
                pick_rows(r + 1, depth + 1);
            }
        };
        pick_rows(0, 0);
        dd[k] = g;
    }
    std::vector<Int> diag(n, 0);
    for (int k = 1; k <= n; ++k) {
        if (dd[k] == 0) break;  // rank reached; the rest stay zero
        diag[k - 1] = dd[k] / dd[k - 1];
    }
    return diag;
}

void check_snf_consistency(const SparseMatrix& m) {
    SnfResult s = smith_normal_form(m);
    // left * M * right equals the diagonal, exactly.
    SparseMatrix prod = s.left.times(m).times(s.right);
    SparseMatrix diag(m.rows, m.cols);
    for (size_t i = 0; i < s.diagonal.size(); ++i)
        if (s.diagonal[i] != 0) diag.set(static_cast<int>(i), static_cast<int>(i), s.diagonal[i]);
    CHECK(prod == diag);
    // Divisibility chain with zeros trailing.
    for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        if (s.diagonal[i] == 0) CHECK(s.diagonal[i + 1] == 0);
        if (s.diagonal[i] != 0 && s.diagonal[i + 1] != 0)
            CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
    // Transforms are unimodular and tracked inverses really invert.
    CHECK(s.left.times(s.left_inv) == SparseMatrix::identity(m.rows));
    CHECK(s.right.times(s.right_inv) == SparseMatrix::identity(m.cols));
    SnfResult dl = smith_normal_form(s.left);
    for (const Int& d : dl.diagonal) CHECK(abs(d) == 1);
    SnfResult dr = smith_normal_form(s.right);
    for (const Int& d : dr.diagonal) CHECK(abs(d) == 1);
}

}  // namespace

TEST_CASE("smith normal form on the pinned examples") {
    SnfResult id2 = smith_normal_form(SparseMatrix::identity(2));
    CHECK(id2.diagonal == std::vector<Int>{1, 1});

    SnfResult s = smith_normal_form(dense({{2, 4}, {6, 8}}));
    CHECK(s.diagonal == std::vector<Int>{2, 4});
    check_snf_consistency(dense({{2, 4}, {6, 8}}));

    SnfResult z = smith_normal_form(SparseMatrix(3, 3));
    CHECK(z.diagonal == std::vector<Int>{0, 0, 0});
}

TEST_CASE("smith normal form matches the determinantal divisor oracle") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + static_cast<int>(rng.below(4));
        int c = 1 + static_cast<int>(rng.below(4));
        SparseMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                int v = static_cast<int>(rng.below(9)) - 4;
                if (v != 0) m.set(i, j, v);
            }
        SnfResult s = smith_normal_form(m);
        std::vector<Int> expect = determinantal_divisor_diagonal(m);
        CHECK(s.diagonal == expect);
        check_snf_consistency(m);
    }
}

TEST_CASE("solve_linear examples") {
    SparseMatrix id = SparseMatrix::identity(3);
    std::vector<Int> b{5, -2, 7};
    auto sol = solve_linear(id, b, Domain::Integers);
    REQUIRE(sol.has_value());
    CHECK(*sol == b);

    SparseMatrix two = dense({{2}});
    CHECK(!solve_linear(two, {1}, Domain::Integers).has_value());
    auto even = solve_linear(two, {6}, Domain::Integers);
    REQUIRE(even.has_value());
    CHECK((*even)[0] == 3);

    SparseMatrix m2 = dense({{1, 1}});
    auto s2 = solve_linear(m2, {1}, Domain::Mod2);
    REQUIRE(s2.has_value());
    // Brute force over the four candidates: exactly (1,0) and (0,1) work.
    int count = 0;
    bool matched = false;
    for (int a = 0; a < 2; ++a)
        for (int b2 = 0; b2 < 2; ++b2) {
            if ((a + b2) % 2 == 1) {
                ++count;
                matched = matched || (Int(a) == (*s2)[0] && Int(b2) == (*s2)[1]);
            }
        }
    CHECK(count == 2);
    CHECK(matched);
}

TEST_CASE("solve_linear absence agrees with a bounded box search") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + static_cast<int>(rng.below(3));
        int c = 1 + static_cast<int>(rng.below(4));
        SparseMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                int v = static_cast<int>(rng.below(7)) - 3;
                if (v != 0) m.set(i, j, v);
            }
        std::vector<Int> b(r);
        for (int i = 0; i < r; ++i) b[i] = static_cast<int>(rng.below(7)) - 3;
        auto sol = solve_linear(m, b, Domain::Integers);
        if (sol) {
            CHECK(m.apply(*sol, Domain::Integers) == b);
        } else {
            // Exhaustive box [-3,3]^c must also come up empty.
            std::vector<Int> v(c, -3);
            bool any = false;
            while (true) {
                if (m.apply(v, Domain::Integers) == b) any = true;
                int k = 0;
                while (k < c && v[k] == 3) v[k++] = -3;
                if (k == c) break;
                ++v[k];
            }
            CHECK(!any);
        }
    }
}

TEST_CASE("kernel_basis examples and exhaustive mod-2 check") {
    CHECK(kernel_basis(SparseMatrix::identity(4), Domain::Integers).empty());

    SparseMatrix z12(1, 2);  // zero 1x2 over mod 2: full kernel
    auto k = kernel_basis(z12, Domain::Mod2);
    CHECK(k.size() == 2);

    auto k2 = kernel_basis(dense({{1, 1}, {1, 1}}), Domain::Mod2);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == std::vector<Int>{1, 1});
}

TEST_CASE("mod-2 kernel span equals the brute-force kernel") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + static_cast<int>(rng.below(4));
        int c = 1 + static_cast<int>(rng.below(10));
        SparseMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (rng.below(2)) m.set(i, j, 1);
        auto basis = kernel_basis(m, Domain::Mod2);
        // Enumerate the span and compare against brute force.
        std::set<std::vector<Int>> span;
        uint64_t combos = uint64_t(1) << basis.size();
        for (uint64_t mask = 0; mask < combos; ++mask) {
            std::vector<Int> v(c, 0);
            for (size_t bi = 0; bi < basis.size(); ++bi)
                if (mask >> bi & 1)
                    for (int j = 0; j < c; ++j) v[j] = normalize(v[j] + basis[bi][j], Domain::Mod2);
            span.insert(v);
        }
        std::set<std::vector<Int>> brute;
        for (uint64_t mask = 0; mask < (uint64_t(1) << c); ++mask) {
            std::vector<Int> v(c);
            for (int j = 0; j < c; ++j) v[j] = (mask >> j) & 1;
            bool in_kernel = true;
            for (const Int& x : m.apply(v, Domain::Mod2)) in_kernel = in_kernel && x == 0;
            if (in_kernel) brute.insert(v);
        }
        CHECK(span == brute);
    }
}

TEST_CASE("integer kernel basis is saturated") {
    // Saturated means: every kernel vector is an integer combination of
    // the basis. Check on small random matrices by boxed enumeration.
    Rng rng(1234);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + static_cast<int>(rng.below(2));
        int c = 2 + static_cast<int>(rng.below(3));
        SparseMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                int v = static_cast<int>(rng.below(5)) - 2;
                if (v != 0) m.set(i, j, v);
            }
        auto basis = kernel_basis(m, Domain::Integers);
        SparseMatrix kmat(c, static_cast<int>(basis.size()));
        for (size_t j = 0; j < basis.size(); ++j)
            for (int i = 0; i < c; ++i)
                if (basis[j][i] != 0) kmat.set(i, static_cast<int>(j), basis[j][i]);
        std::vector<Int> v(c, -3);
        while (true) {
            bool in_kernel = true;
            for (const Int& x : m.apply(v, Domain::Integers)) in_kernel = in_kernel && x == 0;
            if (in_kernel) {
                auto coords = solve_linear(kmat, v, Domain::Integers);
                CHECK(coords.has_value());
            }
            int k = 0;
            while (k < c && v[k] == 3) v[k++] = -3;
            if (k == c) break;
            ++v[k];
        }
    }
}
