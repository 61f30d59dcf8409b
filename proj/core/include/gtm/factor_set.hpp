// factor_set.hpp -- packed, sorted set of equal-length words

#pragma once

#include <cstddef>
#include <optional>
#include <ranges>
#include <vector>

#include "gtm/wordgen.hpp"

namespace gtm {

/// A set of words that all have the same length, stored back to back in one
/// buffer in lexicographic order. Membership is a binary search over spans.
class FactorSet {
public:
    /// The set {epsilon} when length == 0.
    FactorSet() = default;

    /// Takes `packed` as a concatenation of length-`length` words in any order
    /// and with duplicates; the constructor sorts and deduplicates.
    FactorSet(std::size_t length, std::vector<Letter> packed);

    std::size_t length() const { return length_; }
    std::size_t size() const { return count_; }

    WordView operator[](std::size_t i) const {
        return WordView(packed_).subspan(i * length_, length_);
    }

    std::optional<std::size_t> index_of(WordView w) const;
    bool contains(WordView w) const { return index_of(w).has_value(); }

    const std::vector<Letter>& packed() const { return packed_; }

    auto words() const {
        return std::views::iota(std::size_t{0}, count_) |
               std::views::transform([this](std::size_t i) { return (*this)[i]; });
    }

    friend bool operator==(const FactorSet&, const FactorSet&) = default;

private:
    std::size_t length_ = 0;
    std::size_t count_ = 1;
    std::vector<Letter> packed_;
};

}  // namespace gtm
