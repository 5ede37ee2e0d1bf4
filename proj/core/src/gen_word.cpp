#include "foxmag/gen_word.hpp"

#include <stdexcept>

namespace foxmag {

Endomorphism letter_endo(const GenLetter& l, int n) {
    switch (l.kind) {
    case GenKind::Sigma:
        return l.pow > 0 ? sigma_endo(l.a, n) : sigma_endo_inv(l.a, n);
    case GenKind::Pure:
        return l.pow > 0 ? a_pure_endo(l.a, l.b, n) : a_pure_endo_inv(l.a, l.b, n);
    case GenKind::Eps:
        return l.pow > 0 ? eps_endo(l.a, l.b, n) : eps_endo_inv(l.a, l.b, n);
    case GenKind::Eps3:
        return l.pow > 0 ? eps3_endo(l.a, l.b, l.c, n) : eps3_endo_inv(l.a, l.b, l.c, n);
    }
    throw std::invalid_argument("unknown generator kind");
}

Endomorphism to_endomorphism(const GenWord& w, int n) {
    Endomorphism e = Endomorphism::identity(n);
    for (const GenLetter& l : w)
        e = e.then(letter_endo(l, n));
    return e;
}

GenWord inverse(const GenWord& w) {
    GenWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(it->inverse());
    return out;
}

GenWord group_commutator(const GenWord& u, const GenWord& v) {
    GenWord out = inverse(u);
    const GenWord vi = inverse(v);
    out.insert(out.end(), vi.begin(), vi.end());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

bool is_eps_word(const GenWord& w) {
    for (const GenLetter& l : w)
        if (l.kind != GenKind::Eps)
            return false;
    return true;
}

std::string str(const GenWord& w) {
    std::string s;
    for (const GenLetter& l : w) {
        if (!s.empty())
            s += ' ';
        switch (l.kind) {
        case GenKind::Sigma:
            s += 's' + std::to_string(l.a);
            break;
        case GenKind::Pure:
            s += "a[" + std::to_string(l.a) + ',' + std::to_string(l.b) + ']';
            break;
        case GenKind::Eps:
            s += "e[" + std::to_string(l.a) + ',' + std::to_string(l.b) + ']';
            break;
        case GenKind::Eps3:
            s += "e[" + std::to_string(l.a) + ',' + std::to_string(l.b) + ',' +
                 std::to_string(l.c) + ']';
            break;
        }
        if (l.pow < 0)
            s += "^-1";
    }
    return s;
}

} // namespace foxmag
