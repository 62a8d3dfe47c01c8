#pragma once

#include <map>
#include <utility>
#include <vector>

#include "limlab/domain.hpp"

namespace limlab {

// Sparse exact matrix; no zero entry is ever stored.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, Int> entries;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c) {}

    static SparseMatrix identity(int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.entries[{i, i}] = 1;
        return m;
    }

    void check_bounds(int r, int c) const {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::out_of_range("matrix index out of bounds");
    }

    Int at(int r, int c) const {
        check_bounds(r, c);
        auto it = entries.find({r, c});
        return it == entries.end() ? Int(0) : it->second;
    }

    void set(int r, int c, const Int& v) {
        check_bounds(r, c);
        if (v == 0)
            entries.erase({r, c});
        else
            entries[{r, c}] = v;
    }

    void add_to(int r, int c, const Int& v) {
        if (v == 0) return;
        check_bounds(r, c);
        auto [it, inserted] = entries.try_emplace({r, c}, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) entries.erase(it);
        }
    }

    SparseMatrix times(const SparseMatrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
        SparseMatrix out(rows, o.cols);
        for (const auto& [rc, v] : entries) {
            auto [r, k] = rc;
            auto lo = o.entries.lower_bound({k, 0});
            auto hi = o.entries.upper_bound({k, o.cols});
            for (auto it = lo; it != hi; ++it) out.add_to(r, it->first.second, v * it->second);
        }
        return out;
    }

    std::vector<Int> apply(const std::vector<Int>& v, Domain d) const {
        if (static_cast<int>(v.size()) != cols)
            throw std::invalid_argument("matrix apply shape mismatch");
        std::vector<Int> out(rows, 0);
        for (const auto& [rc, e] : entries) out[rc.first] += e * v[rc.second];
        for (auto& x : out) x = normalize(x, d);
        return out;
    }

    SparseMatrix transposed() const {
        SparseMatrix out(cols, rows);
        for (const auto& [rc, v] : entries) out.entries[{rc.second, rc.first}] = v;
        return out;
    }

    bool operator==(const SparseMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
};

}  // namespace limlab
