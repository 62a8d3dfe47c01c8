#include "limlab/snf.hpp"

#include <algorithm>

namespace limlab {

namespace {

// Dense working state for the Smith reduction. Row operations on the
// diagonal target are mirrored on `left` and inverted on `left_inv`
// (column operations there), and symmetrically for the column side.
struct SnfWork {
    int rows, cols;
    std::vector<std::vector<Int>> d, l, r, linv, rinv;

    explicit SnfWork(const SparseMatrix& m)
        : rows(m.rows),
          cols(m.cols),
          d(m.rows, std::vector<Int>(m.cols, 0)),
          l(m.rows, std::vector<Int>(m.rows, 0)),
          r(m.cols, std::vector<Int>(m.cols, 0)),
          linv(m.rows, std::vector<Int>(m.rows, 0)),
          rinv(m.cols, std::vector<Int>(m.cols, 0)) {
        for (const auto& [rc, v] : m.entries) d[rc.first][rc.second] = v;
        for (int i = 0; i < rows; ++i) l[i][i] = linv[i][i] = 1;
        for (int j = 0; j < cols; ++j) r[j][j] = rinv[j][j] = 1;
    }

    void row_swap(int i, int j) {
        if (i == j) return;
        std::swap(d[i], d[j]);
        std::swap(l[i], l[j]);
        for (int k = 0; k < rows; ++k) std::swap(linv[k][i], linv[k][j]);
    }
    void row_negate(int i) {
        for (auto& x : d[i]) x = -x;
        for (auto& x : l[i]) x = -x;
        for (int k = 0; k < rows; ++k) linv[k][i] = -linv[k][i];
    }
    // row i += q * row j
    void row_addmul(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < cols; ++c) d[i][c] += q * d[j][c];
        for (int c = 0; c < rows; ++c) l[i][c] += q * l[j][c];
        for (int k = 0; k < rows; ++k) linv[k][j] -= q * linv[k][i];
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < rows; ++k) std::swap(d[k][i], d[k][j]);
        for (int k = 0; k < cols; ++k) std::swap(r[k][i], r[k][j]);
        std::swap(rinv[i], rinv[j]);
    }
    // col i += q * col j
    void col_addmul(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int k = 0; k < rows; ++k) d[k][i] += q * d[k][j];
        for (int k = 0; k < cols; ++k) r[k][i] += q * r[k][j];
        for (int c = 0; c < cols; ++c) rinv[j][c] -= q * rinv[i][c];
    }

    // Nonzero entry of minimal absolute value in the trailing block,
    // ties broken by lowest row then column.
    bool find_pivot(int s, int& pr, int& pc) const {
        bool found = false;
        Int best;
        for (int i = s; i < rows; ++i)
            for (int j = s; j < cols; ++j) {
                if (d[i][j] == 0) continue;
                Int a = abs(d[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        return found;
    }

    bool pivot_clears(int s) const {
        for (int i = s + 1; i < rows; ++i)
            if (d[i][s] != 0) return false;
        for (int j = s + 1; j < cols; ++j)
            if (d[s][j] != 0) return false;
        return true;
    }
};

SparseMatrix to_sparse(const std::vector<std::vector<Int>>& a) {
    SparseMatrix m(static_cast<int>(a.size()), a.empty() ? 0 : static_cast<int>(a[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (a[i][j] != 0) m.entries[{i, j}] = a[i][j];
    return m;
}

}  // namespace

SnfResult smith_normal_form(const SparseMatrix& m) {
    SnfWork w(m);
    int n = std::min(w.rows, w.cols);

    for (int s = 0; s < n; ++s) {
        int pr, pc;
        if (!w.find_pivot(s, pr, pc)) break;
        w.row_swap(s, pr);
        w.col_swap(s, pc);

        while (!w.pivot_clears(s)) {
            for (int i = s + 1; i < w.rows; ++i) {
                if (w.d[i][s] == 0) continue;
                Int q = w.d[i][s] / w.d[s][s];
                w.row_addmul(i, s, -q);
            }
            for (int j = s + 1; j < w.cols; ++j) {
                if (w.d[s][j] == 0) continue;
                Int q = w.d[s][j] / w.d[s][s];
                w.col_addmul(j, s, -q);
            }
            if (!w.pivot_clears(s)) {
                // Remainders survived; a smaller pivot now exists.
                if (w.find_pivot(s, pr, pc)) {
                    w.row_swap(s, pr);
                    w.col_swap(s, pc);
                }
            }
        }

        // Enforce the divisibility chain: fold any non-multiple into the
        // pivot's row and redo this step.
        bool redo = false;
        for (int i = s + 1; i < w.rows && !redo; ++i)
            for (int j = s + 1; j < w.cols && !redo; ++j)
                if (w.d[i][j] % w.d[s][s] != 0) {
                    w.row_addmul(s, i, 1);
                    redo = true;
                }
        if (redo) {
            --s;
            continue;
        }
        if (w.d[s][s] < 0) w.row_negate(s);
    }

    SnfResult out;
    out.diagonal.resize(n, 0);
    for (int i = 0; i < n; ++i) out.diagonal[i] = w.d[i][i];
    out.left = to_sparse(w.l);
    out.right = to_sparse(w.r);
    out.left_inv = to_sparse(w.linv);
    out.right_inv = to_sparse(w.rinv);
    return out;
}

BitMatrix BitMatrix::from_sparse(const SparseMatrix& m) {
    BitMatrix b(m.rows, m.cols);
    for (const auto& [rc, v] : m.entries)
        if (normalize(v, Domain::Mod2) == 1) b.set(rc.first, rc.second, true);
    return b;
}

long long BitMatrix::rank() const {
    BitMatrix a = *this;
    long long rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int pivot = -1;
        for (int r = static_cast<int>(rk); r < rows; ++r)
            if (a.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a.row_words[rk], a.row_words[pivot]);
        for (int r = 0; r < rows; ++r)
            if (r != rk && a.get(r, c)) a.xor_row(r, static_cast<int>(rk));
        ++rk;
    }
    return rk;
}

std::optional<std::vector<Int>> BitMatrix::solve(const std::vector<Int>& b) const {
    if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("solve shape mismatch");
    BitMatrix a(rows, cols + 1);
    for (int r = 0; r < rows; ++r) {
        a.row_words[r] = row_words[r];
        a.row_words[r].resize((cols + 1 + 63) / 64, 0);
        if (normalize(b[r], Domain::Mod2) == 1) a.set(r, cols, true);
    }
    std::vector<int> pivot_col;
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int pivot = -1;
        for (int r = rk; r < rows; ++r)
            if (a.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a.row_words[rk], a.row_words[pivot]);
        for (int r = 0; r < rows; ++r)
            if (r != rk && a.get(r, c)) a.xor_row(r, rk);
        pivot_col.push_back(c);
        ++rk;
    }
    for (int r = rk; r < rows; ++r)
        if (a.get(r, cols)) return std::nullopt;
    std::vector<Int> x(cols, 0);
    for (int i = 0; i < rk; ++i)
        if (a.get(i, cols)) x[pivot_col[i]] = 1;
    return x;
}

std::vector<std::vector<Int>> BitMatrix::kernel() const {
    BitMatrix a = *this;
    std::vector<int> pivot_col;
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int pivot = -1;
        for (int r = rk; r < rows; ++r)
            if (a.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a.row_words[rk], a.row_words[pivot]);
        for (int r = 0; r < rows; ++r)
            if (r != rk && a.get(r, c)) a.xor_row(r, rk);
        pivot_col.push_back(c);
        ++rk;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Int>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Int> v(cols, 0);
        v[c] = 1;
        for (int i = 0; i < rk; ++i)
            if (a.get(i, c)) v[pivot_col[i]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Int>> solve_linear(const SparseMatrix& m,
                                             const std::vector<Int>& b,
                                             Domain d) {
    if (static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("solve_linear shape mismatch");
    if (d == Domain::Mod2) return BitMatrix::from_sparse(m).solve(b);

    SnfResult s = smith_normal_form(m);
    std::vector<Int> lb = s.left.apply(b, Domain::Integers);
    int n = static_cast<int>(s.diagonal.size());
    std::vector<Int> w(m.cols, 0);
    for (int i = 0; i < m.rows; ++i) {
        Int di = i < n ? s.diagonal[i] : Int(0);
        if (di == 0) {
            if (lb[i] != 0) return std::nullopt;
        } else {
            if (lb[i] % di != 0) return std::nullopt;
            w[i] = lb[i] / di;
        }
    }
    return s.right.apply(w, Domain::Integers);
}

std::vector<std::vector<Int>> kernel_basis(const SparseMatrix& m, Domain d) {
    if (d == Domain::Mod2) return BitMatrix::from_sparse(m).kernel();
    SnfResult s = smith_normal_form(m);
    std::vector<std::vector<Int>> basis;
    for (int j = 0; j < m.cols; ++j) {
        Int dj = j < static_cast<int>(s.diagonal.size()) ? s.diagonal[j] : Int(0);
        if (dj != 0) continue;
        std::vector<Int> e(m.cols, 0);
        e[j] = 1;
        basis.push_back(s.right.apply(e, Domain::Integers));
    }
    return basis;
}

long long rank_over(const SparseMatrix& m, Domain d) {
    if (d == Domain::Mod2) return BitMatrix::from_sparse(m).rank();
    SnfResult s = smith_normal_form(m);
    long long rk = 0;
    for (const Int& v : s.diagonal)
        if (v != 0) ++rk;
    return rk;
}

}  // namespace limlab
