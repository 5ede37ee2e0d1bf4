#include "foxmag/free_word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace foxmag {

namespace {

void check_rank(int rank) {
    if (rank < 1)
        throw std::invalid_argument("free group rank must be positive, got " +
                                    std::to_string(rank));
}

void push_reduced(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter)
        out.pop_back();
    else
        out.push_back(letter);
}

} // namespace

FreeWord::FreeWord(int rank) : rank_(rank) { check_rank(rank); }

FreeWord FreeWord::reduce(int rank, std::span<const int> letters) {
    check_rank(rank);
    FreeWord w(rank);
    w.letters_.reserve(letters.size());
    for (int l : letters) {
        if (l == 0 || std::abs(l) > rank)
            throw std::invalid_argument("letter index " + std::to_string(l) +
                                        " out of range for rank " + std::to_string(rank));
        push_reduced(w.letters_, l);
    }
    return w;
}

FreeWord FreeWord::generator(int index, int rank) {
    if (index < 1 || index > rank)
        throw std::invalid_argument("generator index " + std::to_string(index) +
                                    " out of range for rank " + std::to_string(rank));
    FreeWord w(rank);
    w.letters_.push_back(index);
    return w;
}

FreeWord FreeWord::inverse() const {
    FreeWord w(rank_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(-*it);
    return w;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    if (rank_ != rhs.rank_)
        throw std::invalid_argument("rank mismatch in word multiplication");
    FreeWord w(rank_);
    w.letters_ = letters_;
    for (int l : rhs.letters_)
        push_reduced(w.letters_, l);
    return w;
}

FreeWord FreeWord::pow(int k) const {
    FreeWord base = k >= 0 ? *this : inverse();
    FreeWord acc(rank_);
    for (int i = 0, e = std::abs(k); i < e; ++i)
        acc = acc * base;
    return acc;
}

std::vector<long> FreeWord::exponent_vector() const {
    std::vector<long> v(static_cast<std::size_t>(rank_), 0);
    for (int l : letters_)
        v[static_cast<std::size_t>(std::abs(l)) - 1] += l > 0 ? 1 : -1;
    return v;
}

long FreeWord::exponent_sum() const {
    long s = 0;
    for (int l : letters_)
        s += l > 0 ? 1 : -1;
    return s;
}

bool FreeWord::operator<(const FreeWord& rhs) const {
    if (letters_.size() != rhs.letters_.size())
        return letters_.size() < rhs.letters_.size();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const int a = letters_[i], b = rhs.letters_[i];
        // x_k sorts before its inverse, lower indices first
        const auto ka = std::pair(std::abs(a), a < 0);
        const auto kb = std::pair(std::abs(b), b < 0);
        if (ka != kb)
            return ka < kb;
    }
    return false;
}

std::string FreeWord::str() const {
    std::string s;
    for (int l : letters_) {
        if (!s.empty())
            s += ' ';
        s += 'x';
        s += std::to_string(std::abs(l));
        if (l < 0)
            s += "^-1";
    }
    return s;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
    if (u.rank() != v.rank())
        throw std::invalid_argument("rank mismatch in commutator");
    return u.inverse() * v.inverse() * u * v;
}

FreeWord conjugate(const FreeWord& w, const FreeWord& g) {
    if (w.rank() != g.rank())
        throw std::invalid_argument("rank mismatch in conjugation");
    return g.inverse() * w * g;
}

} // namespace foxmag
