#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace limlab {

// All group arithmetic is exact: arbitrary precision over the integers,
// single bits over the two-element field.
using Int = boost::multiprecision::cpp_int;

enum class Domain { Integers, Mod2 };

inline Int normalize(Int v, Domain d) {
    if (d == Domain::Mod2) {
        v %= 2;
        if (v < 0) v += 2;
    }
    return v;
}

inline std::string domain_name(Domain d) {
    return d == Domain::Integers ? "Z" : "Z2";
}

inline Domain domain_from_name(const std::string& s) {
    if (s == "Z") return Domain::Integers;
    if (s == "Z2") return Domain::Mod2;
    throw std::invalid_argument("unknown coefficient domain: " + s);
}

inline std::string int_to_string(const Int& v) { return v.str(); }

inline Int int_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return Int(s);
}

}  // namespace limlab
