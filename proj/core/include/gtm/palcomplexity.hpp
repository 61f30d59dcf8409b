// palcomplexity.hpp -- Theta-palindromes of t_{b,m} for the antimorphisms of D_m

#pragma once

#include <cstddef>
#include <vector>

#include "gtm/dihedral.hpp"
#include "gtm/language.hpp"
#include "gtm/wordgen.hpp"

namespace gtm {

/// theta(w) == w. Throws std::invalid_argument if theta is a morphism.
bool is_theta_palindrome(WordView w, const GroupElement& theta);

struct FixingAntimorphisms {
    /// Set for the empty word, which every antimorphism fixes; `elements` is
    /// then left empty.
    bool fixes_all = false;
    std::vector<GroupElement> elements;
};

/// The antimorphisms Psi_x of D_m with Psi_x(w) == w.
FixingAntimorphisms fixing_antimorphisms(WordView w, std::uint32_t modulus);

/// Letters a with a w theta(a) among the two-sided extensions. `ext` must be
/// the extension data of a theta-palindrome.
std::vector<Letter> palindromic_extension_letters(const Extensions& ext, const GroupElement& theta);

/// Pext_theta(w), each extension a w theta(a) represented by its left letter a.
/// Throws std::invalid_argument unless w is a theta-palindromic factor.
std::vector<Letter> palindromic_extensions(const Language& lang, WordView w, const GroupElement& theta);

/// The full word a w theta(a).
Word palindromic_extension_word(WordView w, Letter a, const GroupElement& theta);

/// P_theta(n): number of theta-palindromes among the factors of length n.
std::size_t palindromic_complexity(const Language& lang, const GroupElement& theta, std::size_t length);

struct PalindromeTable {
    struct Entry {
        GroupElement theta;
        std::vector<Word> palindromes;
    };

    std::size_t length = 0;
    std::vector<Entry> entries;  // one per antimorphism, in canonical order

    /// P_theta(n) for one antimorphism; 0 if theta is not listed.
    std::size_t count(const GroupElement& theta) const;
    std::size_t total() const;
};

PalindromeTable palindrome_table(const Language& lang, std::size_t length);

}  // namespace gtm
