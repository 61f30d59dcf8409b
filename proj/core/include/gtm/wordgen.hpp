// wordgen.hpp -- generalized Thue-Morse words and their generating substitution

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gtm {

/// A letter of the alphabet Z_m, always stored reduced into [0, m).
using Letter = std::uint32_t;

/// A finite word over Z_m. The empty word is the empty vector.
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

/// Reduces an arbitrary integer into [0, modulus).
Letter reduce(std::int64_t value, std::uint32_t modulus);

/// The pair (b, m) selecting the word t_{b,m}, with its derived constants.
struct Params {
    std::uint32_t base = 2;
    std::uint32_t modulus = 2;
    /// Order of the letter permutation k -> k + base - 1, i.e. the smallest
    /// positive q with q * (base - 1) == 0 (mod modulus).
    std::uint32_t last_letter_order = 2;
    /// base == 1 (mod modulus); the word is then purely periodic.
    bool periodic = false;

    /// Validates base >= 2 and modulus >= 1; throws std::invalid_argument.
    static Params make(std::uint32_t base, std::uint32_t modulus);

    friend bool operator==(const Params&, const Params&) = default;
};

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base);

/// The n-th letter of t_{b,m}: digit_sum(n, b) mod m.
Letter gtm_letter(std::uint64_t n, const Params& params);

/// First `length` letters of t_{b,m}, computed from digit sums.
Word gtm_prefix(const Params& params, std::size_t length);

/// phi(k) = k (k+1) ... (k+b-1), letters mod m.
Word substitution_image(Letter k, const Params& params);

/// Letterwise image under phi; the result has base * |w| letters.
Word substitution_apply(WordView w, const Params& params);

/// First `length` letters of the fixed point of phi starting with 0.
Word fixed_point_prefix(const Params& params, std::size_t length);

bool is_word_over(WordView w, std::uint32_t modulus);

/// Digit string when m <= 10 ("0121"), otherwise comma separated ("0,11,2").
std::string to_string(WordView w, std::uint32_t modulus);

/// Inverse of to_string. Throws std::invalid_argument on malformed input or
/// letters outside Z_m.
Word parse_word(std::string_view text, std::uint32_t modulus);

}  // namespace gtm
