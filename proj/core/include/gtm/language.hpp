// language.hpp -- exact factor language of t_{b,m}
//
// Levels are computed by closure under the substitution rather than by
// scanning a prefix: every factor of length n sits inside phi(v) for some
// factor v of length ceil(n/b) + 1, so L_n is the set of length-n windows of
// phi(L_{ceil(n/b)+1}). For the few small n where that recursion does not
// shrink, L_n is the least set containing the length-n prefix and closed
// under taking windows of phi of its own members.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "gtm/dihedral.hpp"
#include "gtm/factor_set.hpp"
#include "gtm/level_store.hpp"
#include "gtm/wordgen.hpp"

namespace gtm {

using LetterPair = std::pair<Letter, Letter>;

/// Extension data of a single factor w. All three lists are sorted.
struct Extensions {
    std::vector<Letter> left;       // a with aw in the language
    std::vector<Letter> right;      // c with wc in the language
    std::vector<LetterPair> both;   // (a, c) with awc in the language

    bool left_special() const { return left.size() >= 2; }
    bool right_special() const { return right.size() >= 2; }
    bool bispecial() const { return left_special() && right_special(); }

    /// #both - #left - #right + 1
    std::int64_t bilateral_order() const;

    friend bool operator==(const Extensions&, const Extensions&) = default;
};

/// L_n together with the extensions of each of its members.
struct LanguageLevel {
    std::size_t length = 0;
    std::shared_ptr<const FactorSet> factors;
    std::vector<Extensions> extensions;  // parallel to *factors

    std::size_t size() const { return factors->size(); }
    WordView operator[](std::size_t i) const { return (*factors)[i]; }
};

/// A bispecial factor with its bilateral order and, when some antimorphism of
/// D_m fixes it, that antimorphism and its number of palindromic extensions.
struct BispecialRecord {
    Word word;
    std::int64_t bilateral_order = 0;
    std::optional<GroupElement> theta;
    std::size_t pext_count = 0;
};

/// The language of one t_{b,m}, with memoized levels.
///
/// Lookups are thread safe. Two threads missing on the same level both compute
/// it and the first insert wins; the results are identical.
class Language {
public:
    explicit Language(Params params, std::shared_ptr<const LevelStore> store = nullptr);

    const Params& params() const { return params_; }
    std::uint32_t modulus() const { return params_.modulus; }

    /// L_n as a packed set.
    std::shared_ptr<const FactorSet> factors(std::size_t length) const;

    /// L_n with extension data; pulls in L_{n+1} and L_{n+2}.
    std::shared_ptr<const LanguageLevel> level(std::size_t length) const;

    bool contains(WordView w) const { return factors(w.size())->contains(w); }

private:
    std::shared_ptr<const FactorSet> compute_factors(std::size_t length) const;
    std::shared_ptr<const LanguageLevel> compute_level(std::size_t length) const;

    Params params_;
    std::shared_ptr<const LevelStore> store_;

    mutable std::mutex mutex_;
    mutable std::map<std::size_t, std::shared_ptr<const FactorSet>> factor_cache_;
    mutable std::map<std::size_t, std::shared_ptr<const LanguageLevel>> level_cache_;
};

/// C(n) = #L_n.
std::size_t complexity(const Language& lang, std::size_t length);

/// Throws std::invalid_argument if w is not a factor.
Extensions extensions(const Language& lang, WordView w);

std::int64_t bilateral_order(const Language& lang, WordView w);

/// All bispecial factors of the given length, in lexicographic order.
std::vector<BispecialRecord> bispecials(const Language& lang, std::size_t length);

/// Every factor v such that w occurs in phi(v) but in neither phi of v without
/// its first letter nor phi of v without its last letter. w must be a
/// non-empty factor; throws std::invalid_argument otherwise.
std::vector<Word> ancestors(const Language& lang, WordView w);

struct SecondDifference {
    std::int64_t lhs = 0;  // C(n+2) - 2C(n+1) + C(n)
    std::int64_t rhs = 0;  // sum of b(w) over L_n
    bool equal() const { return lhs == rhs; }
};

SecondDifference second_difference_identity_check(const Language& lang, std::size_t length);

}  // namespace gtm
