#pragma once

#include <compare>
#include <string>
#include <vector>

namespace limlab {

// Ordinal below omega^omega in Cantor normal form: sum of w^e * c terms
// with strictly decreasing exponents and positive coefficients.
struct OrdNotation {
    std::vector<std::pair<int, long long>> terms;

    OrdNotation() = default;

    static OrdNotation finite(long long k);
    static OrdNotation omega_power(int exponent, long long coeff = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_successor() const { return !terms.empty() && terms.back().first == 0; }
    bool is_limit() const { return !terms.empty() && terms.back().first > 0; }

    OrdNotation successor() const;
    OrdNotation predecessor() const;  // only for successors

    // Lexicographic on CNF; a linear order.
    std::strong_ordering operator<=>(const OrdNotation& o) const;
    bool operator==(const OrdNotation& o) const { return terms == o.terms; }

    std::string str() const;
    static OrdNotation parse(const std::string& s);
};

// k-th member of the canonical fundamental sequence of a limit notation,
// plus one, so every member is a successor. Strictly increasing in k with
// supremum the input.
OrdNotation fundamental_sequence(const OrdNotation& limit, int k);

}  // namespace limlab
