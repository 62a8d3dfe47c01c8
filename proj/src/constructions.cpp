#include "limlab/constructions.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>

#include "limlab/parallel.hpp"
#include "limlab/rng.hpp"

namespace limlab {

Int CoherentFamily::value(int xi, int point) const {
    auto it = functions[xi].find(point);
    return it == functions[xi].end() ? Int(0) : it->second;
}

namespace {

// Largest disagreement point of two family functions on the overlap, plus
// one; 0 when they agree everywhere on it.
int disagreement_bound(const CoherentFamily& f, int xi, int eta) {
    WindowedSet common = f.sets[xi].set_intersect(f.sets[eta]);
    int bound = 0;
    for (int p : common.members())
        if (normalize(f.value(xi, p) - f.value(eta, p), f.domain) != 0) bound = p + 1;
    return bound;
}

}  // namespace

std::optional<std::pair<int, int>> verify_pair_certs_serial(const CoherentFamily& f) {
    for (int xi = 0; xi < f.size(); ++xi)
        for (int eta = xi + 1; eta < f.size(); ++eta) {
            auto it = f.pair_certs.find({xi, eta});
            if (it == f.pair_certs.end()) return std::make_pair(xi, eta);
            if (!cert_bound_ok(it->second.bound, f.window) ||
                disagreement_bound(f, xi, eta) > it->second.bound)
                return std::make_pair(xi, eta);
        }
    return std::nullopt;
}

std::optional<std::pair<int, int>> verify_pair_certs(const CoherentFamily& f) {
    std::vector<std::pair<int, int>> pairs;
    for (int xi = 0; xi < f.size(); ++xi)
        for (int eta = xi + 1; eta < f.size(); ++eta) pairs.emplace_back(xi, eta);
    long long bad = static_cast<long long>(pairs.size());
    int nthreads = thread_budget();
#pragma omp parallel for schedule(static) reduction(min : bad) num_threads(nthreads)
    for (long long i = 0; i < static_cast<long long>(pairs.size()); ++i) {
        auto [xi, eta] = pairs[i];
        auto it = f.pair_certs.find({xi, eta});
        bool ok = it != f.pair_certs.end() && cert_bound_ok(it->second.bound, f.window) &&
                  disagreement_bound(f, xi, eta) <= it->second.bound;
        if (!ok && i < bad) bad = i;
    }
    if (bad == static_cast<long long>(pairs.size())) return std::nullopt;
    return pairs[bad];
}

void check_family(const CoherentFamily& f) {
    if (auto bad = verify_pair_certs(f))
        throw std::invalid_argument("family certificate fails at pair (" +
                                    std::to_string(bad->first) + "," +
                                    std::to_string(bad->second) + ")");
}

Cochain mitchell_base_cochain(int size, const std::vector<int>& cofseq) {
    for (size_t i = 0; i < cofseq.size(); ++i) {
        if (cofseq[i] < 0 || cofseq[i] >= size)
            throw std::invalid_argument("cofinal sequence member out of range");
        if (i && cofseq[i] <= cofseq[i - 1])
            throw std::invalid_argument("cofinal sequence must be strictly increasing");
    }
    auto s = mitchell_system(0, size);
    Cochain x(s, 1);
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b) {
            Elem e{a, {}};
            for (int m : cofseq)
                if (a <= m && m < b) e.coords[s->basis_index(a, std::to_string(m))] = 1;
            if (!e.zero()) x.entries[{a, b}] = e;
        }
    return x;
}

Cochain mitchell_twist_step(const Cochain& x, const Cochain& y, const Cochain& z) {
    const auto& sys = x.system;
    int level = sys->mitchell_level;
    int size = sys->nodes();
    if (level < 1) throw std::invalid_argument("twist step needs a tail system of level >= 1");
    if (y.arity != x.arity - 1 || z.arity != x.arity - 1)
        throw std::invalid_argument("twist step arity mismatch");
    if (!is_coherent(x).ok) throw std::invalid_argument("twist step: x not coherent");
    if (!cochain_equal(coboundary(y), x))
        throw std::invalid_argument("twist step: y does not trivialize x");
    if (z.system->mitchell_level != level - 1 || z.system->nodes() != size)
        throw std::invalid_argument("twist step: z lives on the wrong system");
    if (!is_coherent(z).ok) throw std::invalid_argument("twist step: z not coherent");

    auto extended = mitchell_system(level, size + 1);
    int top = size;
    Cochain out = rehome(x, extended);

    // Slice entries: trivializer value plus the twist pushed one level up
    // by appending the new top to every basis tuple in its support.
    std::map<NodeTuple, Elem> slice;
    for (const auto& [t, e] : y.entries) {
        Elem ne{e.node, {}};
        for (const auto& [i, c] : e.coords) {
            int j = extended->basis_index(e.node, sys->basis[e.node][i]);
            ne.coords[j] = c;
        }
        slice[t] = std::move(ne);
    }
    for (const auto& [t, e] : z.entries) {
        Elem add{e.node, {}};
        for (const auto& [i, c] : e.coords) {
            std::vector<int> bt = z.system->tuple_basis[e.node][i];
            bt.push_back(top);
            std::string label;
            for (size_t k = 0; k < bt.size(); ++k)
                label += (k ? "," : "") + std::to_string(bt[k]);
            int j = extended->basis_index(e.node, label);
            if (j < 0) throw std::logic_error("twist step: lifted basis tuple missing");
            add.coords[j] = c;
        }
        auto [it, inserted] = slice.try_emplace(t, Elem{e.node, {}});
        it->second = elem_add(it->second, add, Domain::Mod2);
    }
    for (const auto& [t, e] : slice) {
        if (e.zero()) continue;
        NodeTuple full = t;
        full.push_back(top);
        out.entries[full] = e;
    }

    if (!is_coherent(out).ok) throw std::logic_error("twist step produced an incoherent extension");
    Cochain back = take_slice(out, top, SliceMode::BooleanStrip, z.system);
    if (!cochain_equal_by_labels(back, z))
        throw std::logic_error("twist step slice does not recover the twist");
    return out;
}

namespace {

struct DisjointifierParts {
    std::vector<WindowedSet> b_sets;
    std::vector<std::map<int, Int>> functions;
    std::vector<int> agree_bounds;
};

// Shared scheme of the almost-disjoint family constructions: pick fresh
// blocks b_xi greedily, then extend by copying earlier functions above
// scanned diagonal bounds; the rule supplies the values on b_xi.
CoherentFamily build_disjointified_family(
    const std::vector<WindowedSet>& sets, Domain domain,
    const std::function<Int(int xi, int point, const WindowedSet& b)>& rule) {
    if (sets.empty()) throw std::invalid_argument("empty family input");
    int window = sets[0].window;
    int count = static_cast<int>(sets.size());
    for (const auto& s : sets)
        if (s.window != window) throw std::invalid_argument("window mismatch across sets");

    CoherentFamily fam;
    fam.window = window;
    fam.domain = domain;
    fam.sets = sets;

    WindowedSet used_earlier(window);  // union of earlier sets and blocks
    for (int xi = 0; xi < count; ++xi) {
        int want = 4 * (count - xi);
        WindowedSet fresh = sets[xi].set_minus(used_earlier);
        std::vector<int> avail = fresh.members();
        if (static_cast<int>(avail.size()) < want)
            throw std::invalid_argument("family infeasible: index " + std::to_string(xi) +
                                        " has too few fresh elements");
        WindowedSet b(window);
        for (int i = 0; i < want; ++i) b.add(avail[i]);
        fam.b_sets.push_back(b);
        used_earlier = used_earlier.set_union(sets[xi]).set_union(b);
    }

    for (int xi = 0; xi < count; ++xi) {
        // Diagonal bounds against every earlier function.
        std::vector<int> n_bounds(xi, 0);
        for (int eta = 0; eta < xi; ++eta) {
            WindowedSet clash = sets[eta].set_intersect(fam.b_sets[xi]);
            int nb = 0;
            for (int p : clash.members()) nb = std::max(nb, p + 1);
            for (int zeta = 0; zeta < eta; ++zeta) {
                int d = 0;
                WindowedSet common = sets[eta].set_intersect(sets[zeta]);
                for (int p : common.members())
                    if (normalize(fam.value(eta, p) - fam.value(zeta, p), domain) != 0)
                        d = std::max(d, p + 1);
                if (n_bounds[zeta] < d) nb = std::max(nb, d);
            }
            n_bounds[eta] = nb;
        }
        std::map<int, Int> f;
        for (int p : sets[xi].members()) {
            Int v = 0;
            bool copied = false;
            for (int eta = 0; eta < xi && !copied; ++eta)
                if (sets[eta].contains(p) && p >= n_bounds[eta]) {
                    v = fam.value(eta, p);
                    copied = true;
                }
            if (!copied && fam.b_sets[xi].contains(p)) v = rule(xi, p, fam.b_sets[xi]);
            v = normalize(v, domain);
            if (v != 0) f[p] = v;
        }
        fam.functions.push_back(std::move(f));
        fam.agree_bounds.push_back(0);
    }

    for (int xi = 0; xi < count; ++xi)
        for (int eta = xi + 1; eta < count; ++eta) {
            int d = disagreement_bound(fam, xi, eta);
            if (!cert_bound_ok(d, window))
                throw std::invalid_argument("family infeasible: pair (" + std::to_string(xi) +
                                            "," + std::to_string(eta) +
                                            ") needs a bound above the window cap");
            fam.pair_certs[{xi, eta}] = ModFiniteCert{d};
        }
    check_family(fam);
    return fam;
}

int next_in(const WindowedSet& b, int p) {
    for (int q = p + 1; q < b.window; ++q)
        if (b.contains(q)) return q;
    return 0;  // no successor inside the window
}

}  // namespace

CoherentFamily coherent_family_int(const std::vector<WindowedSet>& sets) {
    return build_disjointified_family(
        sets, Domain::Integers,
        [](int, int p, const WindowedSet& b) { return Int(next_in(b, p)); });
}

CoherentFamily coherent_family_mod2_constant(const std::vector<int>& h,
                                             const std::vector<WindowedSet>& sets) {
    if (h.size() != sets.size())
        throw std::invalid_argument("value vector length must match the family");
    return build_disjointified_family(
        sets, Domain::Mod2, [&h](int xi, int, const WindowedSet&) { return Int(h[xi]); });
}

BinaryBranchTree BinaryBranchTree::from_branches(const std::vector<WindowedSet>& branches) {
    std::map<std::vector<int>, std::vector<int>> kids;
    for (const auto& br : branches) {
        std::vector<int> prefix;
        for (int m : br.members()) {
            auto& k = kids[prefix];
            if (std::find(k.begin(), k.end(), m) == k.end()) k.push_back(m);
            prefix.push_back(m);
        }
    }
    BinaryBranchTree t;
    for (auto& [node, k] : kids) {
        std::sort(k.begin(), k.end());
        if (k.size() > 2)
            throw std::invalid_argument("branches force more than two successors at a node");
        if (k.size() == 1) {
            // Synthesize the sibling just above the real child.
            k.push_back(k[0] + 1);
        }
        t.children[node] = {k[0], k[1]};
    }
    return t;
}

CoherentFamily coherent_family_mod2_tree(const BinaryBranchTree& tree,
                                         const std::vector<WindowedSet>& branches) {
    if (branches.empty()) throw std::invalid_argument("empty branch list");
    int window = branches[0].window;
    CoherentFamily fam;
    fam.window = window;
    fam.domain = Domain::Mod2;
    fam.sets = branches;
    fam.b_sets = branches;
    for (const auto& br : branches) {
        std::map<int, Int> g;
        std::vector<int> prefix;
        std::vector<int> ms = br.members();
        for (size_t i = 0; i + 1 < ms.size(); ++i) {
            prefix.push_back(ms[i]);
            auto it = tree.children.find(prefix);
            if (it == tree.children.end())
                throw std::invalid_argument("branch leaves the tree at " +
                                            std::to_string(ms[i]));
            int next = ms[i + 1];
            if (next == it->second[1])
                g[ms[i]] = 1;
            else if (next != it->second[0])
                throw std::invalid_argument("branch leaves the tree after " +
                                            std::to_string(ms[i]));
        }
        fam.functions.push_back(std::move(g));
        fam.agree_bounds.push_back(0);
    }
    for (int xi = 0; xi < fam.size(); ++xi)
        for (int eta = xi + 1; eta < fam.size(); ++eta) {
            int d = disagreement_bound(fam, xi, eta);
            if (!cert_bound_ok(d, window))
                throw std::invalid_argument("branches stay too close for the window cap");
            fam.pair_certs[{xi, eta}] = ModFiniteCert{d};
        }
    check_family(fam);
    return fam;
}

WindowedSet branch_reconstruct(const BinaryBranchTree& tree, const std::map<int, Int>& f,
                               const std::vector<int>& seed, int start, int window) {
    for (size_t i = 0; i + 1 < seed.size(); ++i)
        if (seed[i] >= seed[i + 1]) throw std::invalid_argument("seed must be increasing");
    if (!seed.empty() && seed.back() > start)
        throw std::invalid_argument("seed reaches beyond the start point");
    WindowedSet out(window);
    std::vector<int> node = seed;
    for (int m : seed) out.add(m);
    auto fval = [&f](int p) {
        auto it = f.find(p);
        return it == f.end() ? 0 : static_cast<int>(normalize(it->second, Domain::Mod2));
    };
    if (node.empty()) {
        // No anchor to read the function at: take the first successor.
        auto it = tree.children.find(node);
        if (it == tree.children.end()) return out;
        int first = it->second[0];
        if (first >= window) return out;
        out.add(first);
        node.push_back(first);
    }
    while (true) {
        auto it = tree.children.find(node);
        if (it == tree.children.end()) break;
        int next = it->second[fval(node.back())];
        if (next >= window || next <= node.back()) break;
        out.add(next);
        node.push_back(next);
    }
    return out;
}

bool TreeOrders::less(int level, int a, int b) const {
    int cur = parents[level][b];
    while (cur != -1) {
        if (cur == a) return true;
        cur = parents[level][cur];
    }
    return false;
}

int TreeOrders::height(int level) const {
    int h = 0;
    for (size_t g = 0; g < parents[level].size(); ++g) {
        int d = 0, cur = static_cast<int>(g);
        while (parents[level][cur] != -1) {
            cur = parents[level][cur];
            ++d;
        }
        h = std::max(h, d);
    }
    return h;
}

TreeOrders tree_orderings(const Tower& t) {
    if (t.indices.empty())
        throw std::invalid_argument("tree_orderings: tower carries no ordinal indices");
    int count = t.length();
    int K = 4;
    while ((1 << (K - 4)) < count) ++K;

    std::map<OrdNotation, int> position;
    for (int g = 0; g < count; ++g) position[t.indices[g]] = g;

    TreeOrders o;
    o.levels = K;
    o.parents.assign(K, std::vector<int>(count, -1));

    auto inclusion_bound = [&](int lo_pos, int hi_pos) {
        WindowedSet diff = t.levels[lo_pos].set_minus(t.levels[hi_pos]);
        int b = 0;
        for (int p : diff.members()) b = std::max(b, p + 1);
        return b;
    };

    for (int g = 0; g < count; ++g) {
        const OrdNotation& gamma = t.indices[g];
        if (g == 0 || gamma.is_zero()) continue;  // roots everywhere
        if (gamma.is_successor()) {
            auto pit = position.find(gamma.predecessor());
            if (pit == position.end()) continue;  // predecessor outside the window: root
            int p = pit->second;
            int nstar = inclusion_bound(p, g);
            if (!cert_bound_ok(nstar, t.window))
                throw std::invalid_argument(
                    "window too small to certify inclusion for pair (" + std::to_string(p) +
                    "," + std::to_string(g) + ")");
            for (int k = nstar; k < K; ++k) o.parents[k][g] = p;
            continue;
        }
        // Limit: climb the fundamental sequence.
        std::vector<int> members;
        for (int k = 0;; ++k) {
            auto mit = position.find(fundamental_sequence(gamma, k));
            if (mit == position.end() || mit->second >= g) break;
            members.push_back(mit->second);
        }
        if (members.empty())
            throw std::invalid_argument("limit index " + gamma.str() +
                                        " has no fundamental members in the window");
        std::vector<int> cut;  // n_k per member
        int prev = 0;
        for (size_t k = 0; k < members.size(); ++k) {
            // Least n above both the previous cut and k itself.
            int n = std::max(prev + 1, static_cast<int>(k) + 1);
            bool found = false;
            for (; n < K; ++n) {
                bool ok = true;
                for (size_t i = 0; i + 1 <= k && ok; ++i)
                    ok = o.less(n, members[i], members[i + 1]);
                for (size_t i = 0; i <= k && ok; ++i)
                    ok = inclusion_bound(members[i], g) <= n;
                if (ok) {
                    found = true;
                    break;
                }
            }
            if (!found) break;
            cut.push_back(n);
            prev = n;
        }
        if (cut.empty())
            throw std::invalid_argument("limit index " + gamma.str() +
                                        " cannot be placed below the level cap");
        for (size_t k = 0; k < cut.size(); ++k) {
            int from = cut[k];
            int to = k + 1 < cut.size() ? cut[k + 1] : K;
            for (int i = from; i < to; ++i) o.parents[i][g] = members[k];
        }
    }
    return o;
}

TreeOrderReport check_tree_orders(const Tower& t, const TreeOrders& o) {
    int count = t.length();
    for (int k = 0; k < o.levels; ++k) {
        for (int g = 0; g < count; ++g)
            if (o.parents[k][g] >= g)
                throw std::invalid_argument("order parents must point backwards");
        if (o.height(k) > t.window)
            throw std::invalid_argument("order height exceeds the window cap");
    }
    for (int k = 0; k + 1 < o.levels; ++k)
        for (int a = 0; a < count; ++a)
            for (int b = 0; b < count; ++b)
                if (a != b && o.less(k, a, b) && !o.less(k + 1, a, b))
                    throw std::invalid_argument("orders are not nested across levels");
    for (int k = 0; k < o.levels; ++k)
        for (int a = 0; a < count; ++a)
            for (int b = 0; b < count; ++b) {
                if (a == b || !o.less(k, a, b)) continue;
                // Inclusion above the level index.
                for (int x = k; x < t.window; ++x)
                    if (t.levels[a].bits[x] && !t.levels[b].bits[x])
                        throw std::invalid_argument("order relation violates inclusion at level " +
                                                    std::to_string(k));
                if (t.indices.size() == static_cast<size_t>(count) && t.indices[a].is_limit()) {
                    auto succ = t.indices[a].successor();
                    for (int q = 0; q < count; ++q)
                        if (t.indices[q] == succ && !o.leq(k, q, b))
                            throw std::invalid_argument(
                                "limit predecessor rule violated at level " + std::to_string(k));
                }
            }
    TreeOrderReport rep;
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b) {
            bool related = false;
            for (int k = 0; k < o.levels && !related; ++k)
                related = o.less(k, a, b) || o.less(k, b, a);
            if (!related) ++rep.unresolved_pairs;
        }
    for (int k = 1; k < o.levels; ++k)
        if (o.parents[k] != o.parents[k - 1]) rep.max_level_used = k;
    return rep;
}

CoherentFamily hausdorff_family(const Tower& t, const TreeOrders& o, HausdorffData* data) {
    int count = t.length();
    CoherentFamily fam;
    fam.window = t.window;
    fam.domain = Domain::Mod2;
    fam.sets = t.levels;

    for (int alpha = 0; alpha < count; ++alpha) {
        WindowedSet b(t.window);
        for (int xi = 0; xi < alpha; ++xi) {
            int n = -1;
            for (int k = 0; k < o.levels && n < 0; ++k)
                if (o.less(k, xi, alpha)) n = k;
            if (n < 0)
                throw std::invalid_argument("pair (" + std::to_string(xi) + "," +
                                            std::to_string(alpha) +
                                            ") unresolved by the tree orders");
            int eta = -1;
            for (int q = xi + 1; q <= alpha && eta < 0; ++q)
                if (o.less(n, xi, q) && o.leq(n, q, alpha)) eta = q;
            if (eta < 0) throw std::logic_error("no intermediate index on the order chain");
            int step = -1;
            for (int x = n + 1; x < t.window && step < 0; ++x)
                if (t.levels[eta].bits[x] && !t.levels[xi].bits[x]) step = x;
            if (step < 0)
                throw std::invalid_argument("step point undefined within the window for pair (" +
                                            std::to_string(xi) + "," + std::to_string(alpha) +
                                            ")");
            b.add(step);
            if (data) data->step_points[{xi, alpha}] = step;
        }
        if (!b.subset_of(t.levels[alpha]))
            throw std::logic_error("step points escaped the carrier set");
        std::map<int, Int> f;
        for (int p : b.members()) f[p] = 1;
        fam.b_sets.push_back(std::move(b));
        fam.functions.push_back(std::move(f));
        fam.agree_bounds.push_back(0);
    }
    for (int a = 0; a < count; ++a)
        for (int bta = a + 1; bta < count; ++bta) {
            int d = disagreement_bound(fam, a, bta);
            if (!cert_bound_ok(d, t.window))
                throw std::invalid_argument("gap family pair (" + std::to_string(a) + "," +
                                            std::to_string(bta) +
                                            ") needs a bound above the window cap");
            fam.pair_certs[{a, bta}] = ModFiniteCert{d};
            if (data) {
                int m = -1;
                for (int k = 0; k < o.levels && m < 0; ++k)
                    if (o.less(k, a, bta)) m = k;
                int fsize = 0;
                if (m > 0)
                    for (int xi = 0; xi < bta; ++xi)
                        if (o.less(m - 1, xi, bta)) ++fsize;
                data->pair_levels[{a, bta}] = {m, fsize};
            }
        }
    check_family(fam);
    return fam;
}

std::pair<Cochain, Cochain> fork_extensions(const Cochain& x, const Cochain& w,
                                            const Cochain& z,
                                            std::shared_ptr<const SystemSpec> extended,
                                            int top) {
    int n = x.arity;
    if (w.arity != n - 1 || z.arity != n - 1)
        throw std::invalid_argument("fork_extensions: arity mismatch");
    if (!is_coherent(x).ok) throw std::invalid_argument("fork_extensions: x is not coherent");
    if (!is_coherent(z).ok) throw std::invalid_argument("fork_extensions: z is not coherent");
    Int sign = (n + 1) % 2 == 0 ? 1 : -1;
    if (!cochain_equal(coboundary(w), cochain_scale(x, sign)))
        throw std::invalid_argument(
            "fork_extensions: w does not trivialize x with the required sign");

    Cochain fork0 = slice_extend(x, w, extended, top);
    Cochain fork1 = slice_extend(x, cochain_add(w, z), extended, top);
    if (!is_coherent(fork0).ok || !is_coherent(fork1).ok)
        throw std::logic_error("fork_extensions produced an incoherent extension");
    return {fork0, fork1};
}

std::vector<WindowedSet> family_scenario_sets(int count, int window, uint64_t seed) {
    if (count < 1) throw std::invalid_argument("need at least one set");
    long long fresh_total = 2LL * count * (count + 1);
    if (fresh_total > window)
        throw std::invalid_argument("window too small for the requested family scenario");
    Rng rng(seed);

    int half = window / 2;
    std::vector<int> highs;  // one guaranteed point above the cap per set
    for (int xi = 0; xi < count; ++xi) highs.push_back(half + xi);

    std::vector<int> pool;
    for (int x = 0; x < window; ++x)
        if (x < half || x >= half + count) pool.push_back(x);
    // Seeded shuffle.
    for (size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng.below(i)]);

    std::vector<WindowedSet> sets;
    size_t cursor = 0;
    for (int xi = 0; xi < count; ++xi) {
        WindowedSet s(window);
        s.add(highs[xi]);
        int need = 4 * (count - xi) - 1;
        for (int i = 0; i < need; ++i) {
            if (cursor >= pool.size())
                throw std::invalid_argument("window too small for the requested family scenario");
            s.add(pool[cursor++]);
        }
        // Seeded overlap with earlier sets keeps the pairwise machinery
        // non-vacuous.
        for (int eta = 0; eta < xi; ++eta)
            for (int p : sets[eta].members())
                if (rng.below(4) == 0) s.add(p);
        sets.push_back(std::move(s));
    }
    return sets;
}

std::vector<OrdNotation> standard_index_notations(int count) {
    std::vector<OrdNotation> out;
    if (count <= 6) {
        for (int i = 0; i < count; ++i) out.push_back(OrdNotation::finite(i));
        return out;
    }
    int finite = (count - 2) / 2;
    for (int i = 0; i < finite; ++i) out.push_back(OrdNotation::finite(i));
    OrdNotation omega = OrdNotation::omega_power(1);
    out.push_back(omega);
    for (int i = 1; i < count - finite - 2 + 1; ++i) {
        OrdNotation v = omega;
        v.terms.emplace_back(0, i);
        out.push_back(v);
    }
    out.push_back(OrdNotation::omega_power(1, 2));
    return out;
}

}  // namespace limlab
