#pragma once

#include <string>
#include <vector>

namespace foxmag {

/// A permutation of {1, ..., n}, stored as its image table.
class Permutation {
public:
    static Permutation identity(int n);
    static Permutation transposition(int i, int j, int n);

    /// images[i-1] is the image of i; must be a bijection.
    explicit Permutation(std::vector<int> images);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i) - 1]; }

    /// Apply this first, then next.
    Permutation then(const Permutation& next) const;
    Permutation inverse() const;

    bool is_identity() const;
    /// True iff the permutation is a single cycle through all n points.
    bool is_n_cycle() const;

    bool operator==(const Permutation& rhs) const = default;

private:
    std::vector<int> img_;
};

} // namespace foxmag
