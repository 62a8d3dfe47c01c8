#pragma once

#include <optional>
#include <vector>

#include "limlab/sparse_matrix.hpp"

namespace limlab {

// left * M * right == diag(diagonal), with both transforms unimodular.
// The inverse transforms are tracked alongside; they are needed when
// reading quotient generators back off a Smith form.
struct SnfResult {
    std::vector<Int> diagonal;  // divisibility chain, zeros trailing
    SparseMatrix left, right;
    SparseMatrix left_inv, right_inv;
};

SnfResult smith_normal_form(const SparseMatrix& m);

// Exact solve of M x = b over the given domain; over the integers the
// solution, when present, is integral (found through the Smith form).
std::optional<std::vector<Int>> solve_linear(const SparseMatrix& m,
                                             const std::vector<Int>& b,
                                             Domain d);

// Generators of ker M. Over the integers the returned vectors are a basis
// of the full kernel lattice (the kernel of an integer matrix is a direct
// summand, and the Smith right transform hands us a basis of it).
std::vector<std::vector<Int>> kernel_basis(const SparseMatrix& m, Domain d);

long long rank_over(const SparseMatrix& m, Domain d);

// Isomorphism type Z^rank + Z/d1 + Z/d2 + ... with d1 | d2 | ...
struct GroupInvariants {
    long long rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const GroupInvariants& o) const = default;
};

// Dense bit rows; the working representation for everything mod 2.
struct BitMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<uint64_t>> row_words;

    BitMatrix() = default;
    BitMatrix(int r, int c)
        : rows(r), cols(c), row_words(r, std::vector<uint64_t>((c + 63) / 64, 0)) {}

    static BitMatrix from_sparse(const SparseMatrix& m);

    bool get(int r, int c) const { return (row_words[r][c >> 6] >> (c & 63)) & 1u; }
    void set(int r, int c, bool v) {
        uint64_t mask = uint64_t(1) << (c & 63);
        if (v)
            row_words[r][c >> 6] |= mask;
        else
            row_words[r][c >> 6] &= ~mask;
    }
    void xor_row(int dst, int src) {
        auto& d = row_words[dst];
        const auto& s = row_words[src];
        for (size_t w = 0; w < d.size(); ++w) d[w] ^= s[w];
    }

    long long rank() const;
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
    std::vector<std::vector<Int>> kernel() const;
};

}  // namespace limlab
