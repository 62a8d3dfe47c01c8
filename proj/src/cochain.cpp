#include "limlab/cochain.hpp"

#include <omp.h>

#include <algorithm>

#include "limlab/parallel.hpp"

namespace limlab {

void Cochain::set(const NodeTuple& t, const Elem& e) {
    if (static_cast<int>(t.size()) != arity + 1)
        throw std::invalid_argument("cochain entry arity mismatch");
    if (!t.empty() && e.node != t[0])
        throw std::invalid_argument("cochain entry must live at the tuple's first node");
    if (e.zero())
        entries.erase(t);
    else
        entries[t] = e;
}

Cochain cochain_add(const Cochain& a, const Cochain& b) {
    if (a.system != b.system || a.arity != b.arity)
        throw std::invalid_argument("cochain addition shape mismatch");
    Cochain out = a;
    for (const auto& [t, e] : b.entries) {
        Elem sum = elem_add(out.value(t), e, a.system->domain);
        out.set(t, sum);
    }
    return out;
}

Cochain cochain_scale(const Cochain& a, const Int& c) {
    Cochain out(a.system, a.arity);
    for (const auto& [t, e] : a.entries) {
        Elem s = elem_scale(e, c, a.system->domain);
        if (!s.zero()) out.entries[t] = s;
    }
    return out;
}

bool cochain_equal(const Cochain& a, const Cochain& b) {
    return a.arity == b.arity && a.entries == b.entries;
}

bool cochain_equal_by_labels(const Cochain& a, const Cochain& b) {
    if (a.arity != b.arity) return false;
    auto labelled = [](const Cochain& c) {
        std::map<NodeTuple, std::map<std::string, Int>> out;
        for (const auto& [t, e] : c.entries) {
            std::map<std::string, Int> m;
            for (const auto& [i, v] : e.coords) m[c.system->basis[e.node][i]] = v;
            out[t] = std::move(m);
        }
        return out;
    };
    return labelled(a) == labelled(b);
}

namespace {

Elem coboundary_at(const Cochain& x, const NodeTuple& t) {
    const SystemSpec& s = *x.system;
    int n = static_cast<int>(t.size()) - 1;  // number of alternating terms
    Elem acc = project(s, x.value(face(t, 0)), t[0]);
    Int sign = 1;
    for (int i = 1; i <= n; ++i) {
        sign = -sign;
        acc = elem_add(acc, elem_scale(x.value(face(t, i)), sign, s.domain), s.domain);
    }
    return acc;
}

}  // namespace

Cochain coboundary_serial(const Cochain& x) {
    if (!x.system) throw std::invalid_argument("coboundary of an unattached cochain");
    Cochain out(x.system, x.arity + 1);
    for (const auto& t : ordered_tuples(x.system->poset, x.arity + 1)) {
        Elem e = coboundary_at(x, t);
        if (!e.zero()) out.entries[t] = e;
    }
    return out;
}

Cochain coboundary(const Cochain& x) {
    if (!x.system) throw std::invalid_argument("coboundary of an unattached cochain");
    std::vector<NodeTuple> ts = ordered_tuples(x.system->poset, x.arity + 1);
    std::vector<Elem> vals(ts.size());
    int nthreads = thread_budget();
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (long long i = 0; i < static_cast<long long>(ts.size()); ++i)
        vals[i] = coboundary_at(x, ts[i]);
    Cochain out(x.system, x.arity + 1);
    for (size_t i = 0; i < ts.size(); ++i)
        if (!vals[i].zero()) out.entries[std::move(ts[i])] = std::move(vals[i]);
    return out;
}

CoherenceResult is_coherent(const Cochain& x) {
    Cochain d = coboundary(x);
    if (d.entries.empty()) return {true, {}};
    return {false, d.entries.begin()->first};
}

Cochain rehome(const Cochain& x, std::shared_ptr<const SystemSpec> target) {
    Cochain out(target, x.arity);
    for (const auto& [t, e] : x.entries) {
        for (int v : t)
            if (v >= target->nodes())
                throw std::invalid_argument("rehome: tuple node outside target system");
        Elem ne{e.node, {}};
        for (const auto& [i, c] : e.coords) {
            int j = target->basis_index(e.node, x.system->basis[e.node][i]);
            if (j < 0) throw std::invalid_argument("rehome: basis label missing in target");
            ne.coords[j] = c;
        }
        out.entries[t] = std::move(ne);
    }
    return out;
}

Cochain restrict_to_prefix(const Cochain& x, std::shared_ptr<const SystemSpec> target,
                           int node_count) {
    Cochain clipped(x.system, x.arity);
    for (const auto& [t, e] : x.entries) {
        bool inside = true;
        for (int v : t) inside = inside && v < node_count;
        if (inside) clipped.entries[t] = e;
    }
    return rehome(clipped, std::move(target));
}

Cochain slice_extend(const Cochain& x, const Cochain& w,
                     std::shared_ptr<const SystemSpec> extended, int top) {
    if (w.arity != x.arity - 1) throw std::invalid_argument("slice_extend: arity mismatch");
    for (int v = 0; v < extended->nodes(); ++v)
        if (v != top && !extended->poset.leq[v][top])
            throw std::invalid_argument("slice_extend: top node must dominate the window");
    Cochain out = rehome(x, extended);
    out.arity = x.arity;
    for (const auto& [t, e] : w.entries) {
        NodeTuple full = t;
        full.push_back(top);
        Elem ne{e.node, {}};
        for (const auto& [i, c] : e.coords) {
            int j = extended->basis_index(e.node, w.system->basis[e.node][i]);
            if (j < 0) throw std::invalid_argument("slice_extend: basis label missing");
            ne.coords[j] = c;
        }
        out.entries[full] = std::move(ne);
    }
    return out;
}

Cochain take_slice(const Cochain& v, int top, SliceMode mode,
                   std::shared_ptr<const SystemSpec> target) {
    if (v.arity < 1) throw std::invalid_argument("take_slice: arity must be at least 1");
    for (int u = 0; u < v.system->nodes(); ++u)
        if (u != top && !v.system->poset.leq[u][top])
            throw std::invalid_argument("take_slice: top node must dominate the window");
    Cochain out(target, v.arity - 1);
    for (const auto& [t, e] : v.entries) {
        if (t.back() != top) continue;
        NodeTuple prefix(t.begin(), t.end() - 1);
        bool window_tuple = true;
        for (int u : prefix) window_tuple = window_tuple && u != top;
        if (!window_tuple) continue;
        if (mode == SliceMode::Plain) {
            Elem ne{e.node, {}};
            for (const auto& [i, c] : e.coords) {
                int j = target->basis_index(e.node, v.system->basis[e.node][i]);
                if (j < 0) throw std::invalid_argument("take_slice: basis label missing");
                ne.coords[j] = c;
            }
            if (!ne.zero()) out.entries[std::move(prefix)] = std::move(ne);
        } else {
            if (v.system->mitchell_level < 1)
                throw std::invalid_argument("take_slice: strip mode needs a tail-tuple system");
            Elem ne{e.node, {}};
            for (const auto& [i, c] : e.coords) {
                const auto& bt = v.system->tuple_basis[e.node][i];
                if (bt.back() != top) continue;
                std::vector<int> stripped(bt.begin(), bt.end() - 1);
                std::string label;
                for (size_t k = 0; k < stripped.size(); ++k)
                    label += (k ? "," : "") + std::to_string(stripped[k]);
                int j = target->basis_index(e.node, label);
                if (j < 0) throw std::invalid_argument("take_slice: stripped label missing");
                ne.coords[j] = c;
            }
            if (!ne.zero()) out.entries[std::move(prefix)] = std::move(ne);
        }
    }
    return out;
}

namespace {

void check_coherent_on_chain(const Cochain& x, const std::vector<int>& chain) {
    const SystemSpec& s = *x.system;
    int len = static_cast<int>(chain.size());
    std::vector<NodeTuple> idx;
    NodeTuple cur;
    auto rec = [&](auto&& self, int depth, int least) -> void {
        if (depth == x.arity + 2) {
            idx.push_back(cur);
            return;
        }
        for (int i = least; i < len; ++i) {
            cur.push_back(chain[i]);
            self(self, depth + 1, i);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    for (const auto& t : idx) {
        Elem acc = project(s, x.value(face(t, 0)), t[0]);
        Int sign = 1;
        for (int i = 1; i <= static_cast<int>(t.size()) - 1; ++i) {
            sign = -sign;
            acc = elem_add(acc, elem_scale(x.value(face(t, i)), sign, s.domain), s.domain);
        }
        if (!acc.zero())
            throw std::invalid_argument("extend_along_cofinal_chain: input not coherent on chain");
    }
}

}  // namespace

Cochain extend_along_cofinal_chain(const Cochain& x, const std::vector<int>& chain) {
    const SystemSpec& s = *x.system;
    if (chain.empty()) throw std::invalid_argument("empty chain");
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!s.poset.leq[chain[i]][chain[i + 1]])
            throw std::invalid_argument("chain is not linearly ordered");
    for (int v = 0; v < s.nodes(); ++v) {
        bool covered = false;
        for (int c : chain) covered = covered || s.poset.leq[v][c];
        if (!covered) throw std::invalid_argument("chain is not cofinal");
    }
    std::vector<bool> on_chain(s.nodes(), false);
    for (int c : chain) on_chain[c] = true;
    for (const auto& [t, e] : x.entries)
        for (int v : t)
            if (!on_chain[v])
                throw std::invalid_argument("input cochain has support off the chain");
    check_coherent_on_chain(x, chain);

    // Least chain point above each node.
    std::vector<int> sec(s.nodes(), -1);
    for (int v = 0; v < s.nodes(); ++v)
        for (int c : chain)
            if (s.poset.leq[v][c]) {
                sec[v] = c;
                break;
            }

    Cochain out(x.system, x.arity);
    for (const auto& t : ordered_tuples(s.poset, x.arity)) {
        NodeTuple lifted(t.size());
        for (size_t i = 0; i < t.size(); ++i) lifted[i] = sec[t[i]];
        Elem e = project(s, x.value(lifted), t[0]);
        if (!e.zero()) out.entries[t] = e;
    }
    return out;
}

Cochain trivialize_product(const Cochain& x) {
    const SystemSpec& s = *x.system;
    if (s.node_sets.empty())
        throw std::invalid_argument("trivialize_product: needs an ideal-system window");
    if (x.arity < 1) throw std::invalid_argument("trivialize_product: arity must be >= 1");
    std::map<int, int> singleton_node;
    for (int a = 0; a < s.nodes(); ++a)
        if (s.node_sets[a].count() == 1) singleton_node[s.node_sets[a].members()[0]] = a;
    for (int a = 0; a < s.nodes(); ++a)
        for (int p : s.node_sets[a].members())
            if (!singleton_node.count(p))
                throw std::invalid_argument("trivialize_product: missing singleton node");
    CoherenceResult coh = is_coherent(x);
    if (!coh.ok) throw std::invalid_argument("trivialize_product: input not coherent");

    Cochain out(x.system, x.arity - 1);
    for (const auto& t : ordered_tuples(s.poset, x.arity - 1)) {
        int a0 = t[0];
        Elem e{a0, {}};
        for (int p : s.node_sets[a0].members()) {
            if (s.node_sets[a0].count() == 1) break;  // prescribed zero
            NodeTuple u;
            u.reserve(t.size() + 1);
            u.push_back(singleton_node[p]);
            for (int v : t) u.push_back(v);
            Elem xe = x.value(u);
            int pi = s.basis_index(singleton_node[p], std::to_string(p));
            auto it = xe.coords.find(pi);
            if (it == xe.coords.end()) continue;
            int out_idx = s.basis_index(a0, std::to_string(p));
            e.coords[out_idx] = it->second;
        }
        if (!e.zero()) out.entries[t] = e;
    }
    return out;
}

Cochain connecting_map(const QCochain& x) {
    if (!x.system || x.system->node_sets.empty())
        throw std::invalid_argument("connecting_map: needs an ideal-system window");
    const SystemSpec& s = *x.system;
    Cochain lift(x.system, x.arity);
    for (const auto& [t, q] : x.entries) {
        if (q.node != t[0]) throw std::invalid_argument("connecting_map: entry node mismatch");
        Elem e{q.node, {}};
        for (const auto& [p, v] : q.rep) {
            int i = s.basis_index(q.node, std::to_string(p));
            if (i < 0)
                throw std::invalid_argument("connecting_map: representative leaves its set");
            Int nv = normalize(v, s.domain);
            if (nv != 0) e.coords[i] = nv;
        }
        if (!e.zero()) lift.entries[t] = e;
    }
    Cochain image = coboundary(lift);
    // Quotient coherence: every entry must vanish above its certificate
    // region; on the window that is support below N/2.
    for (const auto& [t, e] : image.entries) {
        int bound = 0;
        for (const auto& [i, v] : e.coords) {
            int p = std::stoi(s.basis[e.node][i]);
            bound = std::max(bound, p + 1);
        }
        if (!cert_bound_ok(bound, s.window))
            throw std::invalid_argument(
                "connecting_map: input is not coherent in the quotient sense");
    }
    return image;
}

}  // namespace limlab
