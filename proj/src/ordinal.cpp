#include "limlab/ordinal.hpp"

#include <stdexcept>

namespace limlab {

OrdNotation OrdNotation::finite(long long k) {
    if (k < 0) throw std::invalid_argument("negative ordinal");
    OrdNotation o;
    if (k > 0) o.terms.emplace_back(0, k);
    return o;
}

OrdNotation OrdNotation::omega_power(int exponent, long long coeff) {
    if (exponent < 0 || coeff <= 0) throw std::invalid_argument("bad CNF term");
    OrdNotation o;
    o.terms.emplace_back(exponent, coeff);
    return o;
}

OrdNotation OrdNotation::successor() const {
    OrdNotation o = *this;
    if (!o.terms.empty() && o.terms.back().first == 0)
        ++o.terms.back().second;
    else
        o.terms.emplace_back(0, 1);
    return o;
}

OrdNotation OrdNotation::predecessor() const {
    if (!is_successor()) throw std::invalid_argument("predecessor of a non-successor");
    OrdNotation o = *this;
    if (--o.terms.back().second == 0) o.terms.pop_back();
    return o;
}

std::strong_ordering OrdNotation::operator<=>(const OrdNotation& o) const {
    size_t n = std::min(terms.size(), o.terms.size());
    for (size_t i = 0; i < n; ++i) {
        if (terms[i].first != o.terms[i].first)
            return terms[i].first <=> o.terms[i].first;
        if (terms[i].second != o.terms[i].second)
            return terms[i].second <=> o.terms[i].second;
    }
    return terms.size() <=> o.terms.size();
}

std::string OrdNotation::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms) {
        if (!s.empty()) s += "+";
        if (e == 0) {
            s += std::to_string(c);
        } else {
            s += e == 1 ? "w" : "w^" + std::to_string(e);
            if (c != 1) s += "*" + std::to_string(c);
        }
    }
    return s;
}

OrdNotation OrdNotation::parse(const std::string& s) {
    OrdNotation o;
    if (s == "0") return o;
    size_t pos = 0;
    auto number = [&]() {
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("bad ordinal literal: " + s);
        return std::stoll(s.substr(start, pos - start));
    };
    while (pos < s.size()) {
        int e = 0;
        long long c = 1;
        if (s[pos] == 'w') {
            ++pos;
            e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = static_cast<int>(number());
            }
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                c = number();
            }
        } else {
            c = number();
        }
        if (!o.terms.empty() && o.terms.back().first <= e)
            throw std::invalid_argument("CNF exponents must strictly decrease: " + s);
        if (c <= 0) throw std::invalid_argument("CNF coefficients must be positive: " + s);
        o.terms.emplace_back(e, c);
        if (pos < s.size()) {
            if (s[pos] != '+') throw std::invalid_argument("bad ordinal literal: " + s);
            ++pos;
        }
    }
    return o;
}

OrdNotation fundamental_sequence(const OrdNotation& limit, int k) {
    if (!limit.is_limit()) throw std::invalid_argument("fundamental sequence of a non-limit");
    if (k < 0) throw std::invalid_argument("negative sequence index");
    auto [e, c] = limit.terms.back();
    OrdNotation head = limit;
    head.terms.pop_back();
    if (c > 1) head.terms.emplace_back(e, c - 1);
    // Canonical member below w^e, then bump to a successor.
    OrdNotation member = head;
    if (k > 0) member.terms.emplace_back(e - 1, k);
    return member.successor();
}

}  // namespace limlab
