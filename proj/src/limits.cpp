#include "limlab/limits.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <set>

#include "limlab/parallel.hpp"

namespace limlab {

TupleBasis TupleBasis::build(const SystemSpec& s, int arity) {
    TupleBasis tb;
    tb.tuples = ordered_tuples(s.poset, arity);
    tb.offset.resize(tb.tuples.size());
    for (size_t i = 0; i < tb.tuples.size(); ++i) {
        tb.offset[i] = tb.total;
        tb.position[tb.tuples[i]] = static_cast<int>(i);
        tb.total += s.dim(tb.tuples[i][0]);
    }
    return tb;
}

std::vector<Int> TupleBasis::pack(const Cochain& x) const {
    std::vector<Int> v(total, 0);
    for (const auto& [t, e] : x.entries) {
        int pos = position.at(t);
        for (const auto& [i, c] : e.coords) v[offset[pos] + i] = c;
    }
    return v;
}

Cochain TupleBasis::unpack(const std::vector<Int>& v, std::shared_ptr<const SystemSpec> s,
                           int arity) const {
    Cochain x(s, arity);
    for (size_t i = 0; i < tuples.size(); ++i) {
        Elem e{tuples[i][0], {}};
        for (int j = 0; j < s->dim(tuples[i][0]); ++j) {
            Int c = normalize(v[offset[i] + j], s->domain);
            if (c != 0) e.coords[j] = c;
        }
        if (!e.zero()) x.entries[tuples[i]] = e;
    }
    return x;
}

SparseMatrix delta_matrix(const SystemSpec& s, int k, const TupleBasis& from,
                          const TupleBasis& to) {
    if (k < 1) throw std::invalid_argument("delta_matrix: k >= 1");
    SparseMatrix m(to.total, from.total);
    for (size_t ti = 0; ti < to.tuples.size(); ++ti) {
        const NodeTuple& t = to.tuples[ti];
        // Projection term from the 0-face.
        {
            NodeTuple f = face(t, 0);
            int col_block = from.offset[from.position.at(f)];
            const auto& e = s.edge(t[0], f[0]);
            for (int j = 0; j < s.dim(f[0]); ++j)
                for (const auto& [row, c] : e[j])
                    m.add_to(to.offset[ti] + row, col_block + j, c);
        }
        Int sign = 1;
        for (int i = 1; i <= k; ++i) {
            sign = -sign;
            NodeTuple f = face(t, i);
            int col_block = from.offset[from.position.at(f)];
            for (int j = 0; j < s.dim(t[0]); ++j)
                m.add_to(to.offset[ti] + j, col_block + j, sign);
        }
    }
    if (s.domain == Domain::Mod2) {
        SparseMatrix red(m.rows, m.cols);
        for (const auto& [rc, v] : m.entries) {
            Int nv = normalize(v, Domain::Mod2);
            if (nv != 0) red.entries[rc] = nv;
        }
        return red;
    }
    return m;
}

namespace {

// Quotient invariants of ker / im given a kernel basis (saturated over the
// integers) and the image generators expressed in ambient coordinates.
struct QuotientData {
    GroupInvariants invariants;
    std::vector<std::vector<Int>> witness_vectors;  // ambient coordinates
};

QuotientData quotient_invariants(const std::vector<std::vector<Int>>& kernel,
                                 const std::vector<std::vector<Int>>& image_gens,
                                 Domain domain) {
    QuotientData out;
    int k = static_cast<int>(kernel.size());
    if (k == 0) return out;
    int ambient = static_cast<int>(kernel[0].size());

    SparseMatrix kmat(ambient, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < ambient; ++i)
            if (kernel[j][i] != 0) kmat.entries[{i, j}] = kernel[j][i];

    // Image generators in kernel coordinates.
    std::vector<std::vector<Int>> cols;
    for (const auto& g : image_gens) {
        auto c = solve_linear(kmat, g, domain);
        if (!c) throw std::logic_error("image generator escapes the kernel");
        cols.push_back(*c);
    }
    SparseMatrix rel(k, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < k; ++i) {
            Int v = normalize(cols[j][i], domain);
            if (v != 0) rel.entries[{i, static_cast<int>(j)}] = v;
        }

    auto to_ambient = [&](const std::vector<Int>& kc) {
        std::vector<Int> v(ambient, 0);
        for (int i = 0; i < ambient; ++i)
            for (int j = 0; j < k; ++j) v[i] += kernel[j][i] * kc[j];
        for (auto& x : v) x = normalize(x, domain);
        return v;
    };

    if (domain == Domain::Mod2) {
        BitMatrix rb = BitMatrix::from_sparse(rel);
        long long image_dim = rb.rank();
        long long q = k - image_dim;
        out.invariants.rank = 0;
        out.invariants.torsion.assign(q, 2);
        // Kernel coordinates independent modulo the image: greedy sweep.
        BitMatrix acc(k, static_cast<int>(cols.size()) + k);
        for (int r = 0; r < k; ++r)
            for (size_t j = 0; j < cols.size(); ++j)
                if (normalize(cols[j][r], Domain::Mod2) == 1) acc.set(r, static_cast<int>(j), true);
        long long have = image_dim;
        BitMatrix probe = acc;
        int extra = 0;
        for (int j = 0; j < k && have < k; ++j) {
            BitMatrix trial = probe;
            trial.set(j, static_cast<int>(cols.size()) + extra, true);
            // Column-space rank grows iff e_j independent of current span.
            long long r0 = probe.rank();
            long long r1 = trial.rank();
            if (r1 > r0) {
                std::vector<Int> kc(k, 0);
                kc[j] = 1;
                out.witness_vectors.push_back(to_ambient(kc));
                probe = trial;
                ++extra;
                ++have;
            }
        }
        return out;
    }

    SnfResult snf = smith_normal_form(rel);
    int diag_len = static_cast<int>(snf.diagonal.size());
    for (int i = 0; i < k; ++i) {
        Int d = i < diag_len ? snf.diagonal[i] : Int(0);
        if (d == 0)
            ++out.invariants.rank;
        else if (d != 1 && d != -1)
            out.invariants.torsion.push_back(d);
    }
    std::sort(out.invariants.torsion.begin(), out.invariants.torsion.end());
    // Generators: columns of left_inv at the non-unit diagonal positions.
    for (int i = 0; i < k; ++i) {
        Int d = i < diag_len ? snf.diagonal[i] : Int(0);
        if (d == 1 || d == -1) continue;
        std::vector<Int> kc(k, 0);
        for (int r = 0; r < k; ++r) kc[r] = snf.left_inv.at(r, i);
        out.witness_vectors.push_back(to_ambient(kc));
    }
    return out;
}

}  // namespace

LimitResult derived_limit(const std::shared_ptr<const SystemSpec>& s, int n) {
    if (n < 0) throw std::invalid_argument("derived_limit: n >= 0");
    LimitResult res;
    res.n = n;

    TupleBasis bn = TupleBasis::build(*s, n);
    TupleBasis bn1 = TupleBasis::build(*s, n + 1);
    SparseMatrix up = delta_matrix(*s, n + 1, bn, bn1);
    std::vector<std::vector<Int>> kernel = kernel_basis(up, s->domain);
    res.kernel_rank = static_cast<long long>(kernel.size());

    std::vector<std::vector<Int>> image_gens;
    if (n >= 1) {
        TupleBasis bprev = TupleBasis::build(*s, n - 1);
        SparseMatrix down = delta_matrix(*s, n, bprev, bn);
        res.image_rank = rank_over(down, s->domain);
        std::vector<std::vector<Int>> cols(down.cols, std::vector<Int>(down.rows, 0));
        for (const auto& [rc, v] : down.entries) cols[rc.second][rc.first] = v;
        for (auto& g : cols) {
            bool nonzero = std::any_of(g.begin(), g.end(), [](const Int& v) { return v != 0; });
            if (nonzero) image_gens.push_back(std::move(g));
        }
    }

    if (n == 0) {
        // The inverse limit itself: free on the kernel basis.
        if (s->domain == Domain::Mod2) {
            res.invariants.rank = 0;
            res.invariants.torsion.assign(kernel.size(), 2);
        } else {
            res.invariants.rank = static_cast<long long>(kernel.size());
        }
        for (const auto& v : kernel) res.witness_generators.push_back(bn.unpack(v, s, n));
        return res;
    }

    QuotientData q = quotient_invariants(kernel, image_gens, s->domain);
    res.invariants = q.invariants;
    for (const auto& v : q.witness_vectors) {
        Cochain w = bn.unpack(v, s, n);
        if (!w.zero()) res.witness_generators.push_back(std::move(w));
    }
    return res;
}

namespace {

struct Mod2Masks {
    // Column masks of the coboundary, derived through the cochain path so
    // the enumeration stays independent of delta_matrix.
    std::vector<std::vector<uint64_t>> cols;
    int out_words = 0;

    Mod2Masks(const std::shared_ptr<const SystemSpec>& s, int arity, const TupleBasis& from,
              const TupleBasis& to) {
        out_words = (to.total + 63) / 64;
        cols.assign(from.total, std::vector<uint64_t>(out_words, 0));
        for (size_t ti = 0; ti < from.tuples.size(); ++ti) {
            const NodeTuple& t = from.tuples[ti];
            for (int j = 0; j < s->dim(t[0]); ++j) {
                Cochain unit(s, arity);
                unit.entries[t] = Elem{t[0], {{j, 1}}};
                Cochain img = coboundary_serial(unit);
                auto& mask = cols[from.offset[ti] + j];
                for (const auto& [u, e] : img.entries) {
                    int block = to.offset[to.position.at(u)];
                    for (const auto& [i, c] : e.coords) {
                        int bit = block + i;
                        mask[bit >> 6] ^= uint64_t(1) << (bit & 63);
                    }
                }
            }
        }
    }
};

long long mod2_dimension_count(const Mod2Masks& m, int dims, bool parallel) {
    // Number of vectors with zero image is 2^(kernel dim).
    uint64_t states = uint64_t(1) << dims;
    long long zero_count = 0;
    int words = m.out_words;
    int nthreads = parallel ? thread_budget() : 1;
#pragma omp parallel for schedule(static) reduction(+ : zero_count) num_threads(nthreads)
    for (long long v = 0; v < static_cast<long long>(states); ++v) {
        // Gray-code free: recompute per state; dims <= 20 keeps this cheap.
        uint64_t acc[4] = {0, 0, 0, 0};
        uint64_t bits = static_cast<uint64_t>(v);
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            for (int w = 0; w < words; ++w) acc[w] ^= m.cols[b][w];
        }
        bool zero = true;
        for (int w = 0; w < words; ++w) zero = zero && acc[w] == 0;
        if (zero) ++zero_count;
    }
    long long dim = 0;
    while ((1LL << dim) < zero_count) ++dim;
    if ((1LL << dim) != zero_count) throw std::logic_error("kernel count is not a power of two");
    return dim;
}

long long brute_force_impl(const std::shared_ptr<const SystemSpec>& s, int n, bool parallel) {
    if (s->domain != Domain::Mod2)
        throw std::invalid_argument("brute force oracle is mod-2 only");
    TupleBasis bn = TupleBasis::build(*s, n);
    TupleBasis bn1 = TupleBasis::build(*s, n + 1);
    if (bn.total > 20 || bn1.total > 256)
        throw std::invalid_argument("brute force oracle: state cap exceeded");
    Mod2Masks up(s, n, bn, bn1);
    long long kdim = mod2_dimension_count(up, bn.total, parallel);

    long long idim = 0;
    if (n >= 1) {
        TupleBasis bprev = TupleBasis::build(*s, n - 1);
        if (bprev.total > 20) throw std::invalid_argument("brute force oracle: state cap exceeded");
        Mod2Masks down(s, n - 1, bprev, bn);
        // Enumerate all images and count distinct values.
        uint64_t states = uint64_t(1) << bprev.total;
        std::set<std::vector<uint64_t>> values;
        for (uint64_t v = 0; v < states; ++v) {
            std::vector<uint64_t> acc(down.out_words, 0);
            uint64_t bits = v;
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                for (int w = 0; w < down.out_words; ++w) acc[w] ^= down.cols[b][w];
            }
            values.insert(std::move(acc));
            if (values.size() > (uint64_t(1) << 20))
                throw std::invalid_argument("brute force oracle: state cap exceeded");
        }
        long long count = static_cast<long long>(values.size());
        while ((1LL << idim) < count) ++idim;
        if ((1LL << idim) != count) throw std::logic_error("image count is not a power of two");
    }
    return kdim - idim;
}

}  // namespace

long long brute_force_limit_mod2(const std::shared_ptr<const SystemSpec>& s, int n) {
    return brute_force_impl(s, n, true);
}

long long brute_force_limit_mod2_serial(const std::shared_ptr<const SystemSpec>& s, int n) {
    return brute_force_impl(s, n, false);
}

std::optional<std::vector<Int>> solve_sparse_greedy(const SparseMatrix& m,
                                                    const std::vector<Int>& b, Domain d) {
    std::vector<bool> pinned(m.cols, false);
    auto reduced = [&](const std::vector<bool>& pin) {
        SparseMatrix r(m.rows, m.cols);
        for (const auto& [rc, v] : m.entries)
            if (!pin[rc.second]) r.entries[rc] = v;
        return r;
    };
    if (!solve_linear(m, b, d)) return std::nullopt;
    for (int c = 0; c < m.cols; ++c) {
        pinned[c] = true;
        if (!solve_linear(reduced(pinned), b, d)) pinned[c] = false;
    }
    auto sol = solve_linear(reduced(pinned), b, d);
    if (!sol) throw std::logic_error("greedy reduction lost solvability");
    for (int c = 0; c < m.cols; ++c)
        if (pinned[c]) (*sol)[c] = 0;
    for (auto& v : *sol) v = normalize(v, d);
    return sol;
}

Cochain goblot_trivialize(const std::shared_ptr<const SystemSpec>& s,
                          const std::vector<int>& chain, const Cochain& z) {
    if (!s->flasque) throw std::invalid_argument("goblot_trivialize: system is not flasque");
    if (z.arity != 1) throw std::invalid_argument("goblot_trivialize: input arity must be 1");
    CoherenceResult coh = is_coherent(z);
    if (!coh.ok) throw std::invalid_argument("goblot_trivialize: input not coherent");
    if (chain.empty()) throw std::invalid_argument("goblot_trivialize: empty chain");
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!s->poset.leq[chain[i]][chain[i + 1]])
            throw std::invalid_argument("goblot_trivialize: chain not increasing");
    for (int v = 0; v < s->nodes(); ++v) {
        bool covered = false;
        for (int c : chain) covered = covered || s->poset.leq[v][c];
        if (!covered) throw std::invalid_argument("goblot_trivialize: chain not cofinal");
    }

    Cochain x(s, 0);
    // Zero start at the chain bottom, then preimages up the chain.
    std::map<int, Elem> chain_vals;
    chain_vals[chain[0]] = Elem{chain[0], {}};
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        int lo = chain[i], hi = chain[i + 1];
        Elem target = elem_sub(chain_vals[lo], z.value({lo, hi}), s->domain);
        SparseMatrix pm = s->edge_matrix(lo, hi);
        std::vector<Int> rhs(s->dim(lo), 0);
        for (const auto& [k, v] : target.coords) rhs[k] = v;
        auto pre = solve_sparse_greedy(pm, rhs, s->domain);
        if (!pre) throw std::logic_error("flasque edge failed to lift");
        Elem e{hi, {}};
        for (int k = 0; k < s->dim(hi); ++k) {
            Int v = normalize((*pre)[k], s->domain);
            if (v != 0) e.coords[k] = v;
        }
        chain_vals[hi] = e;
    }
    std::vector<bool> on_chain(s->nodes(), false);
    for (int c : chain) on_chain[c] = true;
    for (int v = 0; v < s->nodes(); ++v) {
        Elem val;
        if (on_chain[v]) {
            val = chain_vals[v];
        } else {
            int mu = -1;
            for (int c : chain)
                if (s->poset.leq[v][c]) {
                    mu = c;
                    break;
                }
            val = elem_add(project(*s, chain_vals[mu], v), z.value({v, mu}), s->domain);
        }
        if (!val.zero()) x.entries[{v}] = val;
    }
    return x;
}

bool vanishing_expectation(const SystemSpec& s, int n) { return n >= 1 && s.poset.directed; }

}  // namespace limlab
