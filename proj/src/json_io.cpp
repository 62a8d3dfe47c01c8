#include "limlab/json_io.hpp"

namespace limlab {

Json to_json(const SparseMatrix& m) {
    Json entries = Json::array();
    for (const auto& [rc, v] : m.entries)
        entries.push_back(Json::array({rc.first, rc.second, int_to_string(v)}));
    return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

SparseMatrix sparse_matrix_from_json(const Json& j) {
    SparseMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.at("entries"))
        m.set(e.at(0).get<int>(), e.at(1).get<int>(), int_from_string(e.at(2).get<std::string>()));
    return m;
}

Json to_json(const FinitePoset& p) {
    Json pairs = Json::array();
    for (auto [a, b] : p.strict_pairs()) pairs.push_back(Json::array({a, b}));
    return Json{{"nodes", p.node_count}, {"pairs", pairs}};
}

FinitePoset poset_from_json(const Json& j) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("pairs")) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return FinitePoset::from_pairs(j.at("nodes").get<int>(), pairs);
}

Json to_json(const WindowedSet& s) { return Json(s.bitstring()); }

WindowedSet windowed_set_from_json(const Json& j) {
    return WindowedSet::from_bitstring(j.get<std::string>());
}

Json to_json(const Tower& t) {
    Json levels = Json::array();
    for (const auto& l : t.levels) levels.push_back(to_json(l));
    Json certs = Json::array();
    for (const auto& [pair, c] : t.certs)
        certs.push_back(Json::array({pair.first, pair.second, c.bound}));
    Json out{{"N", t.window}, {"levels", levels}, {"certs", certs}};
    if (!t.indices.empty()) {
        Json idx = Json::array();
        for (const auto& o : t.indices) idx.push_back(o.str());
        out["indices"] = idx;
    }
    return out;
}

Tower tower_from_json(const Json& j) {
    Tower t;
    t.window = j.at("N").get<int>();
    for (const auto& l : j.at("levels")) t.levels.push_back(windowed_set_from_json(l));
    for (const auto& c : j.at("certs"))
        t.certs[{c.at(0).get<int>(), c.at(1).get<int>()}] = ModFiniteCert{c.at(2).get<int>()};
    if (j.contains("indices"))
        for (const auto& o : j.at("indices")) t.indices.push_back(OrdNotation::parse(o));
    return t;
}

Json to_json(const IdealBasisA& b) {
    return Json{{"w", b.width}, {"h", b.height}, {"functions", b.functions}};
}

IdealBasisA ideal_basis_from_json(const Json& j) {
    IdealBasisA b;
    b.width = j.at("w").get<int>();
    b.height = j.at("h").get<int>();
    b.functions = j.at("functions").get<std::vector<std::vector<int>>>();
    return b;
}

Json to_json(const SystemSpec& s) {
    Json node_basis = Json::object();
    for (int a = 0; a < s.nodes(); ++a) node_basis[std::to_string(a)] = s.basis[a];
    Json edges = Json::object();
    for (const auto& [pair, maps] : s.edges) {
        auto [lo, hi] = pair;
        if (lo == hi) continue;
        Json em = Json::object();
        for (int i = 0; i < s.dim(hi); ++i) {
            Json targets = Json::array();
            for (const auto& [j, c] : maps[i])
                targets.push_back(Json::array({s.basis[lo][j], int_to_string(c)}));
            em[s.basis[hi][i]] = targets;
        }
        edges[std::to_string(lo) + "<=" + std::to_string(hi)] = em;
    }
    Json out{{"poset", to_json(s.poset)},
             {"nodeBasis", node_basis},
             {"edges", edges},
             {"domain", domain_name(s.domain)},
             {"name", s.name}};
    if (s.mitchell_level >= 0) out["mitchellLevel"] = s.mitchell_level;
    if (!s.node_sets.empty()) {
        Json sets = Json::array();
        for (const auto& w : s.node_sets) sets.push_back(to_json(w));
        out["nodeSets"] = sets;
        out["window"] = s.window;
    }
    return out;
}

std::shared_ptr<const SystemSpec> system_from_json(const Json& j) {
    auto s = std::make_shared<SystemSpec>();
    s->poset = poset_from_json(j.at("poset"));
    s->domain = domain_from_name(j.at("domain").get<std::string>());
    s->name = j.value("name", std::string("system"));
    s->basis.resize(s->poset.node_count);
    for (int a = 0; a < s->poset.node_count; ++a)
        s->basis[a] = j.at("nodeBasis").at(std::to_string(a)).get<std::vector<std::string>>();
    s->rebuild_lookup();
    for (int a = 0; a < s->nodes(); ++a) {
        std::vector<std::vector<std::pair<int, Int>>> id(s->dim(a));
        for (int i = 0; i < s->dim(a); ++i) id[i] = {{i, 1}};
        s->edges[{a, a}] = std::move(id);
    }
    for (auto [lo, hi] : s->poset.strict_pairs()) {
        const Json& em = j.at("edges").at(std::to_string(lo) + "<=" + std::to_string(hi));
        std::vector<std::vector<std::pair<int, Int>>> maps(s->dim(hi));
        for (int i = 0; i < s->dim(hi); ++i) {
            const Json& targets = em.at(s->basis[hi][i]);
            for (const auto& t : targets) {
                int jdx = s->basis_index(lo, t.at(0).get<std::string>());
                if (jdx < 0) throw std::invalid_argument("edge target label missing");
                maps[i].emplace_back(jdx, int_from_string(t.at(1).get<std::string>()));
            }
        }
        s->edges[{lo, hi}] = std::move(maps);
    }
    if (j.contains("mitchellLevel")) {
        s->mitchell_level = j.at("mitchellLevel").get<int>();
        s->tuple_basis.resize(s->nodes());
        for (int a = 0; a < s->nodes(); ++a)
            for (const auto& label : s->basis[a]) {
                std::vector<int> t;
                size_t pos = 0;
                while (pos <= label.size()) {
                    size_t comma = label.find(',', pos);
                    if (comma == std::string::npos) comma = label.size();
                    t.push_back(std::stoi(label.substr(pos, comma - pos)));
                    pos = comma + 1;
                }
                s->tuple_basis[a].push_back(std::move(t));
            }
    }
    if (j.contains("nodeSets")) {
        for (const auto& w : j.at("nodeSets")) s->node_sets.push_back(windowed_set_from_json(w));
        s->window = j.at("window").get<int>();
    }
    s->flasque = compute_flasque(*s);
    check_system(*s);
    return s;
}

Json to_json(const Cochain& c) {
    Json entries = Json::array();
    for (const auto& [t, e] : c.entries) {
        Json elem = Json::object();
        for (const auto& [i, v] : e.coords) elem[c.system->basis[e.node][i]] = int_to_string(v);
        entries.push_back(Json{{"tuple", t}, {"elem", elem}});
    }
    return Json{{"systemRef", c.system ? c.system->name : ""},
                {"arity", c.arity},
                {"entries", entries}};
}

Cochain cochain_from_json(const Json& j, std::shared_ptr<const SystemSpec> system) {
    Cochain c(system, j.at("arity").get<int>());
    for (const auto& e : j.at("entries")) {
        NodeTuple t = e.at("tuple").get<NodeTuple>();
        Elem el{t.empty() ? 0 : t[0], {}};
        for (const auto& [label, v] : e.at("elem").items()) {
            int idx = system->basis_index(el.node, label);
            if (idx < 0) throw std::invalid_argument("cochain entry label missing from basis");
            el.coords[idx] = int_from_string(v.get<std::string>());
        }
        c.set(t, el);
    }
    return c;
}

Json to_json(const GroupInvariants& g) {
    Json torsion = Json::array();
    for (const auto& d : g.torsion) torsion.push_back(int_to_string(d));
    return Json{{"rank", g.rank}, {"torsion", torsion}};
}

Json to_json(const LimitResult& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.witness_generators) witnesses.push_back(to_json(w));
    return Json{{"n", r.n},
                {"rank", r.invariants.rank},
                {"torsion", to_json(r.invariants)["torsion"]},
                {"kernelRank", r.kernel_rank},
                {"imageRank", r.image_rank},
                {"witnesses", witnesses}};
}

Json to_json(const CoherentFamily& f) {
    Json sets = Json::array();
    for (const auto& s : f.sets) sets.push_back(to_json(s));
    Json funcs = Json::array();
    for (const auto& fn : f.functions) {
        Json m = Json::object();
        for (const auto& [p, v] : fn) m[std::to_string(p)] = int_to_string(v);
        funcs.push_back(m);
    }
    Json certs = Json::array();
    for (const auto& [pair, c] : f.pair_certs)
        certs.push_back(Json::array({pair.first, pair.second, c.bound}));
    Json out{{"N", f.window},
             {"M", f.size()},
             {"domain", domain_name(f.domain)},
             {"sets", sets},
             {"functions", funcs},
             {"certs", certs}};
    if (!f.b_sets.empty()) {
        Json bs = Json::array();
        for (const auto& s : f.b_sets) bs.push_back(to_json(s));
        out["bSets"] = bs;
        out["agreeBounds"] = f.agree_bounds;
    }
    return out;
}

CoherentFamily family_from_json(const Json& j) {
    CoherentFamily f;
    f.window = j.at("N").get<int>();
    f.domain = domain_from_name(j.at("domain").get<std::string>());
    for (const auto& s : j.at("sets")) f.sets.push_back(windowed_set_from_json(s));
    for (const auto& fn : j.at("functions")) {
        std::map<int, Int> m;
        for (const auto& [p, v] : fn.items())
            m[std::stoi(p)] = int_from_string(v.get<std::string>());
        f.functions.push_back(std::move(m));
    }
    for (const auto& c : j.at("certs"))
        f.pair_certs[{c.at(0).get<int>(), c.at(1).get<int>()}] = ModFiniteCert{c.at(2).get<int>()};
    if (j.contains("bSets")) {
        for (const auto& s : j.at("bSets")) f.b_sets.push_back(windowed_set_from_json(s));
        f.agree_bounds = j.at("agreeBounds").get<std::vector<int>>();
    }
    return f;
}

Json to_json(const TreeOrders& o) {
    Json parents = Json::array();
    for (const auto& level : o.parents) {
        Json l = Json::array();
        for (int p : level) {
            if (p < 0)
                l.push_back(nullptr);
            else
                l.push_back(p);
        }
        parents.push_back(l);
    }
    return Json{{"K", o.levels}, {"parents", parents}};
}

TreeOrders tree_orders_from_json(const Json& j) {
    TreeOrders o;
    o.levels = j.at("K").get<int>();
    for (const auto& level : j.at("parents")) {
        std::vector<int> l;
        for (const auto& p : level) l.push_back(p.is_null() ? -1 : p.get<int>());
        o.parents.push_back(std::move(l));
    }
    return o;
}

Json to_json(const FalsificationReport& r) {
    Json forced = Json::array();
    for (const auto& f : r.forced)
        forced.push_back(Json{{"tuple", f.tuple},
                              {"basis", f.basis_label},
                              {"value", int_to_string(f.value)}});
    Json out{{"searched", int_to_string(r.searched)},
             {"forced", forced},
             {"partitions", r.partitions},
             {"cursor", r.cursor}};
    if (r.found) out["found"] = to_json(*r.found);
    return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace limlab
