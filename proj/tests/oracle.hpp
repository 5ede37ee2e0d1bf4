#pragma once

// Self-contained reference computations for the expected values in the test
// suites. Everything here works on raw letter vectors and plain integer maps
// so it shares no code with the library paths it is used to check.

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

// polynomial in one or more variables: exponent vector -> integer coefficient
using Poly = std::map<std::vector<int>, long long>;

inline void add_term(Poly& p, const std::vector<int>& e, long long c) {
    if (c == 0)
        return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        p.erase(it);
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b)
        add_term(out, e, c);
    return out;
}

inline Poly neg(const Poly& a) {
    Poly out;
    for (const auto& [e, c] : a)
        out.emplace(e, -c);
    return out;
}

// phi(d(word)/dx_j) straight from the letterwise rule: walk the word keeping
// the abelianized prefix, emit +prefix at x_j and -prefix*x_j^-1 at x_j^-1.
// Words are vectors of signed 1-based letters.
inline Poly fox_image(const std::vector<int>& word, int j, int nvars, bool gassner) {
    Poly out;
    std::vector<int> prefix(static_cast<std::size_t>(nvars), 0);
    for (int l : word) {
        const int idx = gassner ? std::abs(l) : 1;
        if (l == j) {
            add_term(out, prefix, 1);
            prefix[static_cast<std::size_t>(idx) - 1] += 1;
        } else if (l == -j) {
            prefix[static_cast<std::size_t>(idx) - 1] -= 1;
            add_term(out, prefix, -1);
        } else {
            prefix[static_cast<std::size_t>(idx) - 1] += l > 0 ? 1 : -1;
        }
    }
    return out;
}

// full matrix of fox images for an endomorphism given by raw image words
inline std::vector<std::vector<Poly>> magnus_of_images(
    const std::vector<std::vector<int>>& images, int nvars, bool gassner) {
    std::vector<std::vector<Poly>> m;
    for (const auto& w : images) {
        std::vector<Poly> row;
        for (int j = 1; j <= static_cast<int>(images.size()); ++j)
            row.push_back(fox_image(w, j, nvars, gassner));
        m.push_back(row);
    }
    return m;
}

// --- single-variable helpers for the Alexander checks ---------------------

// dense map exponent -> coefficient
using Poly1 = std::map<int, long long>;

inline Poly1 p1(std::initializer_list<std::pair<int, long long>> terms) {
    Poly1 p;
    for (auto& [e, c] : terms)
        if (c != 0)
            p[e] += c;
    return p;
}

inline Poly1 add1(const Poly1& a, const Poly1& b) {
    Poly1 out = a;
    for (auto& [e, c] : b) {
        out[e] += c;
        if (out[e] == 0)
            out.erase(e);
    }
    return out;
}

inline Poly1 mul1(const Poly1& a, const Poly1& b) {
    Poly1 out;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            out[ea + eb] += ca * cb;
            if (out[ea + eb] == 0)
                out.erase(ea + eb);
        }
    return out;
}

inline Poly1 neg1(const Poly1& a) {
    Poly1 out;
    for (auto& [e, c] : a)
        out[e] = -c;
    return out;
}

// exact long division of Laurent polynomials; throws if a remainder appears
// so release builds cannot silently truncate
inline Poly1 div1(Poly1 a, const Poly1& b) {
    if (b.empty())
        throw std::logic_error("oracle division by zero");
    // exact quotients cannot reach below this exponent
    const int floor_exp = a.empty() ? 0 : a.begin()->first - b.begin()->first;
    Poly1 q;
    while (!a.empty()) {
        const auto [ea, ca] = *a.rbegin();
        const auto [eb, cb] = *b.rbegin();
        const int e = ea - eb;
        if (ca % cb != 0 || e < floor_exp)
            throw std::logic_error("oracle division must be exact");
        const long long c = ca / cb;
        q[e] += c;
        Poly1 piece;
        piece[e] = c;
        a = add1(a, neg1(mul1(piece, b)));
    }
    return q;
}

// lowest exponent to 0, positive top coefficient
inline Poly1 normalize1(Poly1 a) {
    if (a.empty())
        return a;
    const int low = a.begin()->first;
    Poly1 out;
    for (auto& [e, c] : a)
        out[e - low] = c;
    if (out.rbegin()->second < 0)
        out = neg1(out);
    return out;
}

} // namespace oracle
