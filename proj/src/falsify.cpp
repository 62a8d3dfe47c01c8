#include "limlab/falsify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>

#include "limlab/parallel.hpp"

namespace limlab {

void SearchBudget::validate(int window) const {
    if (support_bound < 1 || coeff_bound < 1 || stabilization_bound < 0)
        throw std::invalid_argument("budget bounds must be positive");
    if (window > 0 && !cert_bound_ok(stabilization_bound, window))
        throw std::invalid_argument("stabilization bound above the window cap");
}

namespace {

constexpr long long kBatch = 8192;
const Int kHardCap = Int(1) << 30;

struct Coordinate {
    int tuple_pos;  // position in the arity-(n-1) tuple basis
    int local;      // basis index inside the tuple's node group
    int column;     // global column in the coboundary matrix
};

struct SearchSpace {
    std::shared_ptr<const SystemSpec> system;
    int arity = 0;  // arity of the candidates
    TupleBasis from, to;
    SparseMatrix matrix;
    std::vector<std::vector<std::pair<int, Int>>> col_entries;
    std::vector<Int> target;
    std::vector<Coordinate> coords;
    int allowed_tuples = 0;

    Cochain unpack(const std::vector<std::pair<int, Int>>& assignment) const {
        std::vector<Int> v(from.total, 0);
        for (const auto& [ci, val] : assignment) v[coords[ci].column] = val;
        return from.unpack(v, system, arity);
    }
};

SearchSpace build_space(const Cochain& x, const SearchBudget& budget) {
    SearchSpace sp;
    sp.system = x.system;
    sp.arity = x.arity - 1;
    sp.from = TupleBasis::build(*x.system, x.arity - 1);
    sp.to = TupleBasis::build(*x.system, x.arity);
    sp.matrix = delta_matrix(*x.system, x.arity, sp.from, sp.to);
    sp.col_entries.assign(sp.from.total, {});
    for (const auto& [rc, v] : sp.matrix.entries)
        sp.col_entries[rc.second].emplace_back(rc.first, v);
    sp.target = sp.to.pack(x);
    std::vector<bool> allowed_node(x.system->nodes(), budget.node_subset.empty());
    for (int v : budget.node_subset) {
        if (v < 0 || v >= x.system->nodes())
            throw std::invalid_argument("budget node subset out of range");
        allowed_node[v] = true;
    }
    for (size_t ti = 0; ti < sp.from.tuples.size(); ++ti) {
        const NodeTuple& t = sp.from.tuples[ti];
        bool ok = true;
        for (int v : t) ok = ok && allowed_node[v];
        if (!ok) continue;
        ++sp.allowed_tuples;
        for (int j = 0; j < x.system->dim(t[0]); ++j)
            sp.coords.push_back({static_cast<int>(ti), j, sp.from.offset[ti] + j});
    }
    return sp;
}

Int per_tuple_choices(int dim, const SearchBudget& b, Domain d) {
    Int total = 0;
    Int binom = 1;
    Int weight = 1;
    for (int j = 0; j <= std::min(dim, b.support_bound); ++j) {
        if (j > 0) {
            binom = binom * (dim - j + 1) / j;
            weight = d == Domain::Mod2 ? Int(1) : weight * 2 * b.coeff_bound;
        }
        total += binom * weight;
    }
    return total;
}

// Coefficient ladder 1, -1, 2, -2, ...; mod 2 has only 1.
Int coeff_at(int rank, Domain d) {
    if (d == Domain::Mod2) return 1;
    int mag = rank / 2 + 1;
    return rank % 2 == 0 ? Int(mag) : Int(-mag);
}

// Candidates in search order: support size ascending, combination index
// lists lexicographic, then the coefficient odometer.
struct Enumerator {
    const SearchSpace& sp;
    const SearchBudget& budget;
    Domain domain;
    int coord_count;
    int max_size;
    int size = 0;
    std::vector<int> combo;
    std::vector<int> coeff_rank;
    bool done = false;
    bool fresh = true;

    Enumerator(const SearchSpace& sp_, const SearchBudget& b, Domain d)
        : sp(sp_), budget(b), domain(d) {
        coord_count = static_cast<int>(sp.coords.size());
        max_size = std::min(coord_count, budget.support_bound * sp.allowed_tuples);
    }

    bool per_entry_ok() const {
        std::map<int, int> cnt;
        for (int ci : combo)
            if (++cnt[sp.coords[ci].tuple_pos] > budget.support_bound) return false;
        return true;
    }

    bool seed_combo(int s) {
        size = s;
        combo.resize(s);
        for (int i = 0; i < s; ++i) combo[i] = i;
        if (s == 0 || per_entry_ok()) {
            coeff_rank.assign(s, 0);
            return true;
        }
        return step_combo();
    }

    bool step_combo() {
        while (true) {
            int i = size - 1;
            while (i >= 0 && combo[i] == coord_count - (size - i)) --i;
            if (i < 0) return false;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
            if (per_entry_ok()) {
                coeff_rank.assign(size, 0);
                return true;
            }
        }
    }

    int coeff_options() const { return domain == Domain::Mod2 ? 1 : 2 * budget.coeff_bound; }

    // Advances to the next candidate; false when exhausted.
    bool advance() {
        if (fresh) {
            fresh = false;
            for (int s = 0; s <= max_size; ++s)
                if (seed_combo(s)) return true;
            done = true;
            return false;
        }
        int i = size - 1;
        while (i >= 0 && coeff_rank[i] == coeff_options() - 1) --i;
        if (i >= 0) {
            ++coeff_rank[i];
            for (int j = i + 1; j < size; ++j) coeff_rank[j] = 0;
            return true;
        }
        if (step_combo()) return true;
        for (int s = size + 1; s <= max_size; ++s)
            if (seed_combo(s)) return true;
        done = true;
        return false;
    }

    std::vector<std::pair<int, Int>> current() const {
        std::vector<std::pair<int, Int>> out;
        out.reserve(size);
        for (int i = 0; i < size; ++i) out.emplace_back(combo[i], coeff_at(coeff_rank[i], domain));
        return out;
    }
};

bool check_candidate(const SearchSpace& sp, const std::vector<std::pair<int, Int>>& cand,
                     Domain d) {
    std::vector<Int> acc(sp.to.total, 0);
    for (const auto& [ci, val] : cand)
        for (const auto& [row, v] : sp.col_entries[sp.coords[ci].column]) acc[row] += v * val;
    for (int r = 0; r < sp.to.total; ++r)
        if (normalize(acc[r] - sp.target[r], d) != 0) return false;
    return true;
}

FalsificationReport search_impl(const Cochain& x, const SearchBudget& budget, bool parallel) {
    auto start = std::chrono::steady_clock::now();
    auto stamp = [&](FalsificationReport& r) {
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    };
    if (x.arity < 1) throw std::invalid_argument("search needs arity >= 1");
    if (!is_coherent(x).ok) throw std::invalid_argument("search target is not coherent");
    budget.validate(x.system->window);

    FalsificationReport rep;
    SearchSpace sp = build_space(x, budget);
    Domain d = x.system->domain;
    Int cardinality = budget_cardinality(x, budget);

    // Full-window algebra first: unsolvable anywhere means unsolvable in
    // the budget; a solution already inside the budget skips enumeration.
    auto full = solve_linear(sp.matrix, sp.target, d);
    if (!full) {
        rep.searched = cardinality;
        stamp(rep);
        return rep;
    }
    {
        auto kernel = kernel_basis(sp.matrix, d);
        for (const Coordinate& c : sp.coords) {
            bool free_dir = false;
            for (const auto& k : kernel)
                free_dir = free_dir || normalize(k[c.column], d) != 0;
            Int v = normalize((*full)[c.column], d);
            if (!free_dir && v != 0)
                rep.forced.push_back({sp.from.tuples[c.tuple_pos],
                                      x.system->basis[sp.from.tuples[c.tuple_pos][0]][c.local],
                                      v});
        }
    }

    auto within_budget = [&](const std::vector<Int>& v) {
        std::vector<bool> allowed_col(sp.from.total, false);
        for (const Coordinate& c : sp.coords) allowed_col[c.column] = true;
        std::map<int, int> support;
        for (const Coordinate& c : sp.coords) {
            Int val = normalize(v[c.column], d);
            if (val == 0) continue;
            if (d == Domain::Integers && abs(val) > budget.coeff_bound) return false;
            if (++support[c.tuple_pos] > budget.support_bound) return false;
        }
        for (int col = 0; col < sp.from.total; ++col)
            if (!allowed_col[col] && normalize(v[col], d) != 0) return false;
        return true;
    };
    if (within_budget(*full)) {
        rep.searched = 0;
        rep.found = sp.from.unpack(*full, x.system, x.arity - 1);
        if (!cochain_equal(coboundary(*rep.found), x))
            throw std::logic_error("search: found trivializer fails re-verification");
        stamp(rep);
        return rep;
    }

    if (cardinality > kHardCap)
        throw std::length_error("search budget exceeds the candidate hard cap");

    long long total = cardinality.convert_to<long long>();
    rep.partitions = (total + kBatch - 1) / kBatch;
    Enumerator en(sp, budget, d);
    long long seen = 0;
    int nthreads = parallel ? thread_budget() : 1;
    bool exhausted = false;
    while (!exhausted && !rep.found) {
        std::vector<std::vector<std::pair<int, Int>>> batch;
        batch.reserve(kBatch);
        while (static_cast<long long>(batch.size()) < kBatch) {
            if (!en.advance()) {
                exhausted = true;
                break;
            }
            batch.push_back(en.current());
        }
        if (batch.empty()) break;
        long long hit = static_cast<long long>(batch.size());
#pragma omp parallel for schedule(static) reduction(min : hit) num_threads(nthreads)
        for (long long i = 0; i < static_cast<long long>(batch.size()); ++i)
            if (check_candidate(sp, batch[i], d) && i < hit) hit = i;
        ++rep.cursor;
        if (hit < static_cast<long long>(batch.size())) {
            seen += hit + 1;
            rep.searched = seen;
            rep.found = sp.unpack(batch[hit]);
            if (!cochain_equal(coboundary(*rep.found), x))
                throw std::logic_error("search: found trivializer fails re-verification");
        } else {
            seen += static_cast<long long>(batch.size());
        }
    }
    if (!rep.found) {
        rep.searched = cardinality;
        rep.cursor = rep.partitions;
    }
    stamp(rep);
    return rep;
}

}  // namespace

Int budget_cardinality(const Cochain& x, const SearchBudget& budget) {
    SearchSpace sp = build_space(x, budget);
    std::map<int, int> dim_of_tuple;
    for (const Coordinate& c : sp.coords) ++dim_of_tuple[c.tuple_pos];
    Int total = 1;
    for (const auto& [t, dim] : dim_of_tuple)
        total *= per_tuple_choices(dim, budget, x.system->domain);
    return total;
}

FalsificationReport search_trivializer(const Cochain& x, const SearchBudget& budget) {
    return search_impl(x, budget, true);
}

FalsificationReport search_trivializer_serial(const Cochain& x, const SearchBudget& budget) {
    return search_impl(x, budget, false);
}

MitchellForcedReport forced_values_mitchell(int size, const std::vector<int>& cofseq) {
    Cochain x = mitchell_base_cochain(size, cofseq);
    const auto& s = x.system;
    MitchellForcedReport rep;
    for (int m : cofseq) {
        if (m + 1 >= size) continue;
        // x_{0,m+1}(m) = 1, and any y_{m+1} is supported in [m+1, size),
        // so y_0(m) = 1 is forced for every window trivializer.
        Elem e = x.value({0, m + 1});
        auto it = e.coords.find(s->basis_index(0, std::to_string(m)));
        if (it == e.coords.end() || it->second != 1)
            throw std::logic_error("base cochain lost its cofinal indicator");
        rep.forced_points.push_back(m);
        rep.equations.push_back("y_0(" + std::to_string(m) + ") = x_{0," +
                                std::to_string(m + 1) + "}(" + std::to_string(m) + ") = 1");
    }
    rep.minimal_support = static_cast<long long>(rep.forced_points.size());
    return rep;
}

GapScenario build_gap_scenario(int length, int window, uint64_t seed) {
    GapScenario g;
    g.tower = tower_generate_profile(length, window, seed, 6, true,
                                     standard_index_notations(length));
    g.orders = tree_orderings(g.tower);
    check_tree_orders(g.tower, g.orders);
    g.family = hausdorff_family(g.tower, g.orders, &g.data);
    return g;
}

std::optional<Violation> refute_uniform_trivializer(const GapScenario& g, const WindowedSet& b,
                                                    const std::vector<int>& bounds,
                                                    int stabilization_bound) {
    int count = g.tower.length();
    if (static_cast<int>(bounds.size()) != count)
        throw std::invalid_argument("one bound per tower index required");
    if (!cert_bound_ok(stabilization_bound, g.tower.window))
        throw std::invalid_argument("stabilization bound above the window cap");
    for (int m : bounds)
        if (m < 0 || m > stabilization_bound)
            throw std::invalid_argument("bounds must respect the stabilization bound");
    if (b.window != g.tower.window) throw std::invalid_argument("candidate window mismatch");

    for (int alpha = 0; alpha < count; ++alpha) {
        int succ = -1;
        if (!g.tower.indices.empty()) {
            OrdNotation want = g.tower.indices[alpha].successor();
            for (int q = 0; q < count && succ < 0; ++q)
                if (g.tower.indices[q] == want) succ = q;
        } else if (alpha + 1 < count) {
            succ = alpha + 1;
        }
        if (succ < 0) continue;
        for (int beta = alpha + 1; beta < count; ++beta) {
            auto it = g.data.step_points.find({alpha, beta});
            if (it == g.data.step_points.end()) continue;
            int step = it->second;
            int m = std::max(bounds[alpha], bounds[beta]);
            int level = -1;
            for (int k = 0; k < g.orders.levels && level < 0; ++k)
                if (g.orders.less(k, alpha, beta)) level = k;
            if (level < 0 || level <= m) continue;
            if (!(g.orders.less(level, alpha, succ) && g.orders.leq(level, succ, beta)))
                continue;
            bool in_strip = g.tower.levels[succ].bits[step] && !g.tower.levels[alpha].bits[step];
            if (!in_strip || step <= m) continue;
            if (!g.family.b_sets[beta].contains(step))
                throw std::logic_error("step point missing from its own gap set");
            // The candidate either keeps the point, breaking the strip
            // claim, or drops it, breaking the agreement claim.
            if (b.contains(step)) return Violation{alpha, beta, step, "strip"};
            return Violation{alpha, beta, step, "agreement"};
        }
    }
    return std::nullopt;
}

ForkObstructionResult fork_obstruction_check(const Cochain& fork0, const Cochain& fork1,
                                             const Cochain& z, const SearchBudget& budget,
                                             int top) {
    if (fork0.system != fork1.system || fork0.arity != fork1.arity)
        throw std::invalid_argument("forks must share system and arity");
    int n = fork0.arity;
    if (z.arity != n - 1) throw std::invalid_argument("twist arity mismatch");
    if (n < 2) throw std::invalid_argument("fork obstruction needs twist arity >= 1");
    Cochain diff = cochain_sub(fork1, fork0);
    for (const auto& [t, e] : diff.entries)
        if (t.back() != top) throw std::invalid_argument("forks disagree off the top slice");
    Cochain slice = take_slice(diff, top, SliceMode::Plain, z.system);
    if (!cochain_equal_by_labels(slice, z))
        throw std::invalid_argument("fork difference does not read back the twist");

    ForkObstructionResult out;
    out.report = search_trivializer(z, budget);
    if (!out.report.found) return out;

    // Any trivializer t of z converts into an equal-restriction pair:
    // u1 - u0 is t pushed into the top slice.
    TupleBasis from = TupleBasis::build(*fork0.system, n - 1);
    TupleBasis to = TupleBasis::build(*fork0.system, n);
    SparseMatrix m = delta_matrix(*fork0.system, n, from, to);
    auto u0v = solve_sparse_greedy(m, to.pack(fork0), fork0.system->domain);
    if (!u0v) {
        // The base fork itself is not window-trivial; no pair exists.
        out.report.found.reset();
        return out;
    }
    Cochain u0 = from.unpack(*u0v, fork0.system, n - 1);
    Cochain zero_window(out.report.found->system, n - 1);
    Cochain v = slice_extend(zero_window, *out.report.found, fork0.system, top);
    Cochain u1 = cochain_add(u0, v);

    if (!cochain_equal(coboundary(u0), fork0) || !cochain_equal(coboundary(u1), fork1))
        throw std::logic_error("fork pair fails re-verification");
    Cochain conv = take_slice(cochain_sub(u1, u0), top, SliceMode::Plain, z.system);
    if (!cochain_equal_by_labels(coboundary(conv), z))
        throw std::logic_error("conversion identity failed re-verification");
    out.pair = {std::move(u0), std::move(u1)};
    out.conversion = std::move(conv);
    return out;
}

}  // namespace limlab
