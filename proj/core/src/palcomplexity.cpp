#include "gtm/palcomplexity.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtm {
namespace {

void require_antimorphism(const GroupElement& theta) {
    if (!theta.is_antimorphism()) throw std::invalid_argument("theta must be an antimorphism");
}

}  // namespace

bool is_theta_palindrome(WordView w, const GroupElement& theta) {
    require_antimorphism(theta);
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (theta.map_letter(w[n - 1 - i]) != w[i]) return false;
    }
    return true;
}

FixingAntimorphisms fixing_antimorphisms(WordView w, std::uint32_t modulus) {
    FixingAntimorphisms out;
    if (w.empty()) {
        out.fixes_all = true;
        return out;
    }
    // Psi_x(w) == w forces x == w_first + w_last, so there is one candidate.
    const auto candidate =
        GroupElement::antimorphism(static_cast<std::int64_t>(w.front()) + w.back(), modulus);
    if (is_theta_palindrome(w, candidate)) out.elements.push_back(candidate);
    return out;
}

std::vector<Letter> palindromic_extension_letters(const Extensions& ext, const GroupElement& theta) {
    require_antimorphism(theta);
    std::vector<Letter> out;
    for (const auto& [a, c] : ext.both) {
        if (theta.map_letter(a) == c) out.push_back(a);
    }
    return out;
}

std::vector<Letter> palindromic_extensions(const Language& lang, WordView w, const GroupElement& theta) {
    if (!is_theta_palindrome(w, theta)) {
        throw std::invalid_argument("word is not a " + to_string(theta) + "-palindrome");
    }
    return palindromic_extension_letters(extensions(lang, w), theta);
}

Word palindromic_extension_word(WordView w, Letter a, const GroupElement& theta) {
    Word out;
    out.reserve(w.size() + 2);
    out.push_back(a);
    out.insert(out.end(), w.begin(), w.end());
    out.push_back(theta.map_letter(a));
    return out;
}

std::size_t palindromic_complexity(const Language& lang, const GroupElement& theta, std::size_t length) {
    require_antimorphism(theta);
    const auto level = lang.factors(length);
    std::size_t count = 0;
    for (const auto w : level->words()) count += is_theta_palindrome(w, theta) ? 1 : 0;
    return count;
}

std::size_t PalindromeTable::count(const GroupElement& theta) const {
    for (const auto& e : entries) {
        if (e.theta == theta) return e.palindromes.size();
    }
    return 0;
}

std::size_t PalindromeTable::total() const {
    std::size_t sum = 0;
    for (const auto& e : entries) sum += e.palindromes.size();
    return sum;
}

PalindromeTable palindrome_table(const Language& lang, std::size_t length) {
    PalindromeTable table;
    table.length = length;
    const auto level = lang.factors(length);
    for (const auto& theta : involutive_antimorphisms(lang.modulus())) {
        PalindromeTable::Entry entry{theta, {}};
        for (const auto w : level->words()) {
            if (is_theta_palindrome(w, theta)) entry.palindromes.emplace_back(w.begin(), w.end());
        }
        table.entries.push_back(std::move(entry));
    }
    return table;
}

}  // namespace gtm
