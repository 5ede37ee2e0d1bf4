#include "foxmag/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace foxmag {

Permutation Permutation::identity(int n) {
    if (n < 1)
        throw std::invalid_argument("permutation size must be positive");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("invalid transposition indices");
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(i) - 1], p.img_[static_cast<std::size_t>(j) - 1]);
    return p;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    if (n < 1)
        throw std::invalid_argument("permutation size must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("image table is not a bijection");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::then(const Permutation& next) const {
    if (size() != next.size())
        throw std::invalid_argument("size mismatch in permutation composition");
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        img[i] = next(img_[i]);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        img[static_cast<std::size_t>(img_[i]) - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

bool Permutation::is_n_cycle() const {
    const int n = size();
    int at = 1;
    for (int step = 0; step < n; ++step) {
        at = (*this)(at);
        if (at == 1)
            return step == n - 1;
    }
    return false;
}

} // namespace foxmag
