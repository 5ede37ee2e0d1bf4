#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace foxmag {

/// A freely reduced word in the free group F_n on x_1, ..., x_n.
///
/// Letters are stored as signed indices: +k stands for x_k, -k for the
/// inverse of x_k. The letter sequence is kept freely reduced at all times;
/// raw sequences exist only while a word is being assembled. Indices are
/// 1-based and must lie in 1..rank. Values are immutable after construction.
class FreeWord {
public:
    /// The identity word of F_n.
    explicit FreeWord(int rank);

    /// Free reduction of a raw letter sequence. Idempotent.
    static FreeWord reduce(int rank, std::span<const int> letters);

    /// The single-letter word x_index.
    static FreeWord generator(int index, int rank);

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& rhs) const;
    FreeWord pow(int k) const;

    /// Exponent sum of each generator; index i-1 holds the sum for x_i.
    std::vector<long> exponent_vector() const;
    /// Total exponent sum over all generators.
    long exponent_sum() const;

    bool operator==(const FreeWord& rhs) const = default;

    /// Orders words by length, then letter by letter (index before sign).
    bool operator<(const FreeWord& rhs) const;

    /// Tokens `x<k>` / `x<k>^-1` separated by single spaces; "" for identity.
    std::string str() const;

private:
    int rank_;
    std::vector<int> letters_;
};

/// [u, v] = u^-1 v^-1 u v, reduced.
FreeWord commutator(const FreeWord& u, const FreeWord& v);

/// g^-1 w g, reduced.
FreeWord conjugate(const FreeWord& w, const FreeWord& g);

} // namespace foxmag
