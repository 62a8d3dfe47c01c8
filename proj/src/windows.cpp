#include "limlab/windows.hpp"

#include <algorithm>
#include <stdexcept>

#include "limlab/rng.hpp"

namespace limlab {

int WindowedSet::count() const {
    return static_cast<int>(std::count(bits.begin(), bits.end(), true));
}

std::vector<int> WindowedSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < window; ++i)
        if (bits[i]) out.push_back(i);
    return out;
}

std::string WindowedSet::bitstring() const {
    std::string s(window, '0');
    for (int i = 0; i < window; ++i)
        if (bits[i]) s[i] = '1';
    return s;
}

WindowedSet WindowedSet::from_bitstring(const std::string& s) {
    WindowedSet w(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            w.bits[i] = true;
        else if (s[i] != '0')
            throw std::invalid_argument("bitstring must be over {0,1}");
    }
    return w;
}

bool WindowedSet::subset_of(const WindowedSet& o) const {
    if (window != o.window) throw std::invalid_argument("window mismatch");
    for (int i = 0; i < window; ++i)
        if (bits[i] && !o.bits[i]) return false;
    return true;
}

WindowedSet WindowedSet::set_minus(const WindowedSet& o) const {
    if (window != o.window) throw std::invalid_argument("window mismatch");
    WindowedSet out(window);
    for (int i = 0; i < window; ++i) out.bits[i] = bits[i] && !o.bits[i];
    return out;
}

WindowedSet WindowedSet::set_union(const WindowedSet& o) const {
    if (window != o.window) throw std::invalid_argument("window mismatch");
    WindowedSet out(window);
    for (int i = 0; i < window; ++i) out.bits[i] = bits[i] || o.bits[i];
    return out;
}

WindowedSet WindowedSet::set_intersect(const WindowedSet& o) const {
    if (window != o.window) throw std::invalid_argument("window mismatch");
    WindowedSet out(window);
    for (int i = 0; i < window; ++i) out.bits[i] = bits[i] && o.bits[i];
    return out;
}

std::optional<ModFiniteCert> almost_subset_cert(const WindowedSet& a, const WindowedSet& b) {
    if (a.window != b.window) throw std::invalid_argument("window mismatch");
    int m = 0;
    for (int i = 0; i < a.window; ++i)
        if (a.bits[i] && !b.bits[i]) m = i + 1;
    if (!cert_bound_ok(m, a.window)) return std::nullopt;
    return ModFiniteCert{m};
}

const ModFiniteCert& Tower::cert(int xi, int eta) const {
    auto it = certs.find({xi, eta});
    if (it == certs.end()) throw std::out_of_range("missing tower certificate");
    return it->second;
}

void check_tower(const Tower& t) {
    int M = t.length();
    if (!t.indices.empty()) {
        if (static_cast<int>(t.indices.size()) != M)
            throw std::invalid_argument("tower: index list length mismatch");
        for (int i = 0; i + 1 < M; ++i)
            if (!(t.indices[i] < t.indices[i + 1]))
                throw std::invalid_argument("tower: indices not increasing");
    }
    int max_bound = 0;
    for (int xi = 0; xi < M; ++xi)
        for (int eta = xi + 1; eta < M; ++eta) {
            const ModFiniteCert& c = t.cert(xi, eta);
            if (!cert_bound_ok(c.bound, t.window))
                throw std::invalid_argument("tower: certificate bound above window cap");
            max_bound = std::max(max_bound, c.bound);
        }
    for (int xi = 0; xi < M; ++xi)
        for (int eta = xi + 1; eta < M; ++eta) {
            const auto& a = t.levels[xi];
            const auto& b = t.levels[eta];
            int bound = t.cert(xi, eta).bound;
            for (int x = bound; x < t.window; ++x)
                if (a.bits[x] && !b.bits[x])
                    throw std::invalid_argument("tower: certificate fails at pair (" +
                                                std::to_string(xi) + "," + std::to_string(eta) +
                                                ")");
            // Strict growth must survive above every recorded bound.
            bool grows = false;
            for (int x = max_bound; x < t.window && !grows; ++x)
                grows = b.bits[x] && !a.bits[x];
            if (!grows)
                throw std::invalid_argument("tower: no strict growth above bounds at pair (" +
                                            std::to_string(xi) + "," + std::to_string(eta) + ")");
        }
}

Tower tower_generate_profile(int length, int window, uint64_t seed, int drop_cap,
                             bool dual_growth, std::vector<OrdNotation> indices) {
    if (length < 1) throw std::invalid_argument("tower length must be positive");
    if (2 * length > window)
        throw std::invalid_argument("window too small for requested tower length");
    if (dual_growth && 4 * length > window)
        throw std::invalid_argument("window too small for dual growth profile");

    Rng rng(seed);
    int top_even_low = window - 2 * length;        // smallest even used for growth
    top_even_low += top_even_low % 2;              // keep it even
    int cap = std::min({drop_cap, top_even_low, window / 2});

    std::vector<int> droppable, body;
    for (int x = 1; x < window; x += 2) {
        if (x + 1 < cap && rng.coin())
            droppable.push_back(x);
        else if (x >= cap && rng.coin())
            body.push_back(x);
    }

    Tower t;
    t.window = window;
    t.indices = std::move(indices);
    for (int xi = 0; xi < length; ++xi) {
        WindowedSet s(window);
        for (int i = 0; i <= xi; ++i) s.add(window - 2 - 2 * i + (window % 2));
        if (dual_growth)
            for (int i = 0; i <= xi; ++i) s.add(2 * i);
        for (int x : body) s.add(x);
        for (size_t i = xi; i < droppable.size(); ++i) s.add(droppable[i]);
        t.levels.push_back(std::move(s));
    }
    for (int xi = 0; xi < length; ++xi)
        for (int eta = xi + 1; eta < length; ++eta) {
            auto c = almost_subset_cert(t.levels[xi], t.levels[eta]);
            if (!c) throw std::logic_error("tower generation produced an uncertifiable pair");
            t.certs[{xi, eta}] = *c;
        }
    check_tower(t);
    return t;
}

Tower tower_generate(int length, int window, uint64_t seed) {
    return tower_generate_profile(length, window, seed,
                                  std::max(0, window - 2 * length), false);
}

WindowedSet IdealBasisA::hypograph(int which) const {
    const auto& f = functions.at(which);
    if (static_cast<int>(f.size()) != width)
        throw std::invalid_argument("function domain must be [0,width)");
    WindowedSet s(width * height);
    for (int i = 0; i < width; ++i) {
        if (f[i] < 0 || f[i] >= height)
            throw std::invalid_argument("function value outside [0,height)");
        for (int j = 0; j <= f[i]; ++j) s.add(i * height + j);
    }
    return s;
}

IdealSublattice ideal_sublattice_A(const IdealBasisA& basis) {
    if (basis.functions.empty()) throw std::invalid_argument("empty function list");
    IdealSublattice out;
    for (size_t k = 0; k < basis.functions.size(); ++k) {
        WindowedSet s = basis.hypograph(static_cast<int>(k));
        if (std::find(out.sets.begin(), out.sets.end(), s) == out.sets.end())
            out.sets.push_back(std::move(s));
    }
    int n = static_cast<int>(out.sets.size());
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && out.sets[a].subset_of(out.sets[b])) pairs.emplace_back(a, b);
    out.poset = FinitePoset::from_pairs(n, pairs);
    return out;
}

}  // namespace limlab
