#include "limlab/system.hpp"

#include <algorithm>

namespace limlab {

int SystemSpec::basis_index(int node, const std::string& label) const {
    const auto& lut = basis_lookup[node];
    auto it = lut.find(label);
    return it == lut.end() ? -1 : it->second;
}

const std::vector<std::vector<std::pair<int, Int>>>& SystemSpec::edge(int lo, int hi) const {
    auto it = edges.find({lo, hi});
    if (it == edges.end()) throw std::out_of_range("no edge map for the requested pair");
    return it->second;
}

void SystemSpec::rebuild_lookup() {
    basis_lookup.assign(basis.size(), {});
    for (size_t n = 0; n < basis.size(); ++n)
        for (size_t i = 0; i < basis[n].size(); ++i)
            basis_lookup[n][basis[n][i]] = static_cast<int>(i);
}

SparseMatrix SystemSpec::edge_matrix(int lo, int hi) const {
    const auto& e = edge(lo, hi);
    SparseMatrix m(dim(lo), dim(hi));
    for (int col = 0; col < dim(hi); ++col)
        for (const auto& [row, coeff] : e[col]) m.add_to(row, col, coeff);
    return m;
}

bool compute_flasque(const SystemSpec& s) {
    for (const auto& [pair, _] : s.edges) {
        auto [lo, hi] = pair;
        if (lo == hi) continue;
        if (rank_over(s.edge_matrix(lo, hi), s.domain) < s.dim(lo)) return false;
    }
    return true;
}

void check_system(const SystemSpec& s) {
    int n = s.nodes();
    if (static_cast<int>(s.basis.size()) != n)
        throw std::invalid_argument("system: basis list does not match node count");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!s.poset.leq[a][b]) {
                if (s.edges.count({a, b}))
                    throw std::invalid_argument("system: edge stored for unrelated pair");
                continue;
            }
            const auto& e = s.edge(a, b);
            if (static_cast<int>(e.size()) != s.dim(b))
                throw std::invalid_argument("system: edge map arity mismatch");
            if (a == b) {
                for (int i = 0; i < s.dim(a); ++i)
                    if (!(e[i].size() == 1 && e[i][0].first == i && e[i][0].second == 1))
                        throw std::invalid_argument("system: identity edge is not the identity");
            }
        }
    // Functoriality, exactly, on every basis element of every related triple.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!(s.poset.leq[a][b] && a != b)) continue;
            for (int c = 0; c < n; ++c) {
                if (!(s.poset.leq[b][c] && b != c)) continue;
                for (int i = 0; i < s.dim(c); ++i) {
                    Elem via = project(s, project(s, Elem{c, {{i, 1}}}, b), a);
                    Elem direct = project(s, Elem{c, {{i, 1}}}, a);
                    if (!(via == direct))
                        throw std::invalid_argument("system: functoriality fails");
                }
            }
        }
    if (s.flasque != compute_flasque(s))
        throw std::invalid_argument("system: flasque flag does not match edge ranks");
}

Elem elem_make(int node, std::map<int, Int> coords, Domain d) {
    Elem e{node, {}};
    for (auto& [k, v] : coords) {
        Int nv = normalize(v, d);
        if (nv != 0) e.coords[k] = nv;
    }
    return e;
}

Elem elem_add(const Elem& a, const Elem& b, Domain d) {
    if (a.node != b.node) throw std::invalid_argument("element addition across nodes");
    Elem out{a.node, a.coords};
    for (const auto& [k, v] : b.coords) {
        auto [it, inserted] = out.coords.try_emplace(k, v);
        if (!inserted) it->second += v;
        it->second = normalize(it->second, d);
        if (it->second == 0) out.coords.erase(it);
    }
    return out;
}

Elem elem_scale(const Elem& a, const Int& c, Domain d) {
    Elem out{a.node, {}};
    for (const auto& [k, v] : a.coords) {
        Int nv = normalize(v * c, d);
        if (nv != 0) out.coords[k] = nv;
    }
    return out;
}

Elem project(const SystemSpec& s, const Elem& e, int target) {
    if (!s.poset.leq[target][e.node])
        throw std::invalid_argument("project: target not below the element's node");
    if (target == e.node) return e;
    const auto& map = s.edge(target, e.node);
    Elem out{target, {}};
    for (const auto& [idx, coeff] : e.coords)
        for (const auto& [row, c] : map[idx]) {
            auto [it, inserted] = out.coords.try_emplace(row, 0);
            it->second = normalize(it->second + coeff * c, s.domain);
            if (it->second == 0) out.coords.erase(it);
        }
    return out;
}

namespace {

std::vector<std::vector<int>> tail_tuples(int level, int lo, int hi) {
    // Weakly increasing (level+1)-tuples from [lo, hi), lexicographic.
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int depth, int least) -> void {
        if (depth == level + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = least; v < hi; ++v) {
            cur.push_back(v);
            self(self, depth + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, lo);
    return out;
}

std::string tuple_label(const std::vector<int>& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s;
}

void add_identity_edges(SystemSpec& s) {
    for (int a = 0; a < s.nodes(); ++a) {
        std::vector<std::vector<std::pair<int, Int>>> id(s.dim(a));
        for (int i = 0; i < s.dim(a); ++i) id[i] = {{i, 1}};
        s.edges[{a, a}] = std::move(id);
    }
}

}  // namespace

std::shared_ptr<const SystemSpec> mitchell_system(int level, int size) {
    if (level < 0 || size < 2) throw std::invalid_argument("mitchell_system: level >= 0, size >= 2");
    auto s = std::make_shared<SystemSpec>();
    s->poset = FinitePoset::chain(size);
    s->domain = Domain::Mod2;
    s->mitchell_level = level;
    s->name = "mitchell(" + std::to_string(level) + "," + std::to_string(size) + ")";
    s->basis.resize(size);
    s->tuple_basis.resize(size);
    for (int a = 0; a < size; ++a) {
        s->tuple_basis[a] = tail_tuples(level, a, size);
        for (const auto& t : s->tuple_basis[a]) s->basis[a].push_back(tuple_label(t));
    }
    s->rebuild_lookup();
    add_identity_edges(*s);
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b) {
            std::vector<std::vector<std::pair<int, Int>>> inc(s->dim(b));
            for (int i = 0; i < s->dim(b); ++i) {
                int j = s->basis_index(a, s->basis[b][i]);
                inc[i] = {{j, 1}};
            }
            s->edges[{a, b}] = std::move(inc);
        }
    s->flasque = compute_flasque(*s);
    return s;
}

std::shared_ptr<const SystemSpec> ideal_system(const std::vector<WindowedSet>& sets, Domain d) {
    if (sets.empty()) throw std::invalid_argument("ideal_system: empty family");
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (sets[i] == sets[j]) throw std::invalid_argument("ideal_system: duplicate sets");
    int n = static_cast<int>(sets.size());
    auto s = std::make_shared<SystemSpec>();
    s->domain = d;
    s->node_sets = sets;
    s->window = sets[0].window;
    s->name = "ideal(" + std::to_string(n) + "," + std::to_string(s->window) + ")";
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && sets[a].subset_of(sets[b])) pairs.emplace_back(a, b);
    s->poset = FinitePoset::from_pairs(n, pairs);
    s->basis.resize(n);
    for (int a = 0; a < n; ++a)
        for (int x : sets[a].members()) s->basis[a].push_back(std::to_string(x));
    s->rebuild_lookup();
    add_identity_edges(*s);
    for (auto [a, b] : s->poset.strict_pairs()) {
        // b-node set contains a-node set is encoded as poset a <= b only
        // when sets[a] subset sets[b]; the projection keeps shared points.
        std::vector<std::vector<std::pair<int, Int>>> proj(s->dim(b));
        for (int i = 0; i < s->dim(b); ++i) {
            int j = s->basis_index(a, s->basis[b][i]);
            if (j >= 0) proj[i] = {{j, 1}};
        }
        s->edges[{a, b}] = std::move(proj);
    }
    s->flasque = true;
    return s;
}

std::shared_ptr<const SystemSpec> product_window_system(const std::vector<WindowedSet>& sets,
                                                        Domain d) {
    if (sets.empty()) throw std::invalid_argument("product_window_system: empty family");
    int window = sets[0].window;
    std::vector<bool> needed(window, false);
    for (const auto& s : sets)
        for (int x : s.members()) needed[x] = true;
    std::vector<WindowedSet> family;
    for (int x = 0; x < window; ++x)
        if (needed[x]) family.push_back(WindowedSet(window, {x}));
    for (const auto& s : sets)
        if (std::find(family.begin(), family.end(), s) == family.end()) family.push_back(s);
    return ideal_system(family, d);
}

std::optional<ModFiniteCert> q_equal(const SystemSpec& s, const QElem& x, const QElem& y) {
    if (x.node != y.node) throw std::invalid_argument("q_equal: node mismatch");
    if (s.node_sets.empty()) throw std::invalid_argument("q_equal: not an ideal system");
    const WindowedSet& a = s.node_sets[x.node];
    auto coeff = [](const std::map<int, Int>& m, int k) {
        auto it = m.find(k);
        return it == m.end() ? Int(0) : it->second;
    };
    int m = 0;
    for (int p : a.members())
        if (normalize(coeff(x.rep, p) - coeff(y.rep, p), s.domain) != 0) m = p + 1;
    if (!cert_bound_ok(m, s.window)) return std::nullopt;
    return ModFiniteCert{m};
}

}  // namespace limlab
