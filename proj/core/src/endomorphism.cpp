#include "foxmag/endomorphism.hpp"

#include <cstdlib>
#include <stdexcept>

namespace foxmag {

namespace {

FreeWord word_of(int rank, std::initializer_list<int> letters) {
    return FreeWord::reduce(rank, std::span<const int>(letters.begin(), letters.size()));
}

void check_index(int i, int n, const char* what) {
    if (i < 1 || i > n)
        throw std::invalid_argument(std::string(what) + " index out of range");
}

} // namespace

Endomorphism Endomorphism::identity(int rank) {
    std::vector<FreeWord> images;
    images.reserve(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i)
        images.push_back(FreeWord::generator(i, rank));
    return Endomorphism(rank, std::move(images));
}

Endomorphism::Endomorphism(int rank, std::vector<FreeWord> images)
    : rank_(rank), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != rank)
        throw std::invalid_argument("endomorphism needs one image per generator");
    for (const FreeWord& w : images_)
        if (w.rank() != rank)
            throw std::invalid_argument("image word rank mismatch");
}

const FreeWord& Endomorphism::image(int i) const {
    check_index(i, rank_, "generator");
    return images_[static_cast<std::size_t>(i) - 1];
}

FreeWord Endomorphism::apply(const FreeWord& w) const {
    if (w.rank() != rank_)
        throw std::invalid_argument("rank mismatch in apply");
    std::vector<int> out;
    out.reserve(w.length() * 2);
    auto push = [&out](int letter) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    };
    for (int l : w.letters()) {
        const FreeWord& img = images_[static_cast<std::size_t>(std::abs(l)) - 1];
        if (l > 0) {
            for (int m : img.letters())
                push(m);
        } else {
            const auto& ls = img.letters();
            for (auto it = ls.rbegin(); it != ls.rend(); ++it)
                push(-*it);
        }
    }
    return FreeWord::reduce(rank_, out);
}

Endomorphism Endomorphism::then(const Endomorphism& next) const {
    if (rank_ != next.rank_)
        throw std::invalid_argument("rank mismatch in composition");
    std::vector<FreeWord> images;
    images.reserve(images_.size());
    for (const FreeWord& w : images_)
        images.push_back(next.apply(w));
    return Endomorphism(rank_, std::move(images));
}

Endomorphism sigma_endo(int i, int n) {
    check_index(i, n - 1, "sigma");
    Endomorphism e = Endomorphism::identity(n);
    std::vector<FreeWord> images;
    for (int l = 1; l <= n; ++l) {
        if (l == i)
            images.push_back(word_of(n, {i, i + 1, -i}));
        else if (l == i + 1)
            images.push_back(FreeWord::generator(i, n));
        else
            images.push_back(FreeWord::generator(l, n));
    }
    return Endomorphism(n, std::move(images));
}

Endomorphism sigma_endo_inv(int i, int n) {
    check_index(i, n - 1, "sigma");
    std::vector<FreeWord> images;
    for (int l = 1; l <= n; ++l) {
        if (l == i)
            images.push_back(FreeWord::generator(i + 1, n));
        else if (l == i + 1)
            images.push_back(word_of(n, {-(i + 1), i, i + 1}));
        else
            images.push_back(FreeWord::generator(l, n));
    }
    return Endomorphism(n, std::move(images));
}

Endomorphism a_pure_endo(int r, int s, int n) {
    if (!(1 <= r && r < s && s <= n))
        throw std::invalid_argument("pure braid generator needs 1 <= r < s <= n");
    // [x_r^-1, x_s^-1] = x_r x_s x_r^-1 x_s^-1
    const FreeWord comm = word_of(n, {r, s, -r, -s});
    std::vector<FreeWord> images;
    for (int i = 1; i <= n; ++i) {
        if (i == r)
            images.push_back(word_of(n, {r, s, r, -s, -r}));
        else if (i == s)
            images.push_back(word_of(n, {r, s, -r}));
        else if (r < i && i < s)
            images.push_back(comm * FreeWord::generator(i, n) * comm.inverse());
        else
            images.push_back(FreeWord::generator(i, n));
    }
    return Endomorphism(n, std::move(images));
}

Endomorphism a_pure_endo_inv(int r, int s, int n) {
    if (!(1 <= r && r < s && s <= n))
        throw std::invalid_argument("pure braid generator needs 1 <= r < s <= n");
    // a_rs = A s_r^2 A^-1 with A = s_{s-1} ... s_{r+1}, so the inverse is
    // A s_r^-2 A^-1: same wings, inverted core.
    Endomorphism e = Endomorphism::identity(n);
    for (int k = s - 1; k >= r + 1; --k)
        e = e.then(sigma_endo(k, n));
    e = e.then(sigma_endo_inv(r, n)).then(sigma_endo_inv(r, n));
    for (int k = r + 1; k <= s - 1; ++k)
        e = e.then(sigma_endo_inv(k, n));
    return e;
}

Endomorphism eps_endo(int i, int j, int n) {
    check_index(i, n, "eps");
    check_index(j, n, "eps");
    if (i == j)
        throw std::invalid_argument("eps needs i != j");
    std::vector<FreeWord> images;
    for (int l = 1; l <= n; ++l)
        images.push_back(l == i ? word_of(n, {-j, i, j}) : FreeWord::generator(l, n));
    return Endomorphism(n, std::move(images));
}

Endomorphism eps_endo_inv(int i, int j, int n) {
    check_index(i, n, "eps");
    check_index(j, n, "eps");
    if (i == j)
        throw std::invalid_argument("eps needs i != j");
    std::vector<FreeWord> images;
    for (int l = 1; l <= n; ++l)
        images.push_back(l == i ? word_of(n, {j, i, -j}) : FreeWord::generator(l, n));
    return Endomorphism(n, std::move(images));
}

Endomorphism eps3_endo(int i, int j, int k, int n) {
    check_index(i, n, "eps3");
    check_index(j, n, "eps3");
    check_index(k, n, "eps3");
    if (i == j || j == k || i == k)
        throw std::invalid_argument("eps3 needs pairwise distinct indices");
    std::vector<FreeWord> images;
    for (int l = 1; l <= n; ++l)
        images.push_back(l == i ? word_of(n, {i, -j, -k, j, k}) : FreeWord::generator(l, n));
    return Endomorphism(n, std::move(images));
}

Endomorphism eps3_endo_inv(int i, int j, int k, int n) {
    check_index(i, n, "eps3");
    check_index(j, n, "eps3");
    check_index(k, n, "eps3");
    if (i == j || j == k || i == k)
        throw std::invalid_argument("eps3 needs pairwise distinct indices");
    std::vector<FreeWord> images;
    for (int l = 1; l <= n; ++l)
        images.push_back(l == i ? word_of(n, {i, -k, -j, k, j}) : FreeWord::generator(l, n));
    return Endomorphism(n, std::move(images));
}

Endomorphism perm_endo(const Permutation& p) {
    const int n = p.size();
    std::vector<FreeWord> images;
    for (int i = 1; i <= n; ++i)
        images.push_back(FreeWord::generator(p(i), n));
    return Endomorphism(n, std::move(images));
}

} // namespace foxmag
