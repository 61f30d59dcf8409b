#include "gtm/properties.hpp"

#include <algorithm>
#include <set>

#include "gtm/dihedral.hpp"
#include "gtm/palcomplexity.hpp"

namespace gtm {
namespace {

class Check {
public:
    Check(std::string id, std::string description) {
        result_.id = std::move(id);
        result_.description = std::move(description);
    }

    bool failed() const { return result_.status == PropertyStatus::Fail; }

    void fail(std::string witness) {
        if (failed()) return;
        result_.status = PropertyStatus::Fail;
        result_.witness = std::move(witness);
    }

    PropertyResult done() && { return std::move(result_); }

    static PropertyResult not_applicable(std::string id, std::string description) {
        Check c(std::move(id), std::move(description));
        c.result_.status = PropertyStatus::NotApplicable;
        return std::move(c).done();
    }

private:
    PropertyResult result_;
};

std::string w_str(WordView w, std::uint32_t m) {
    return w.empty() ? std::string("<empty>") : to_string(w, m);
}

bool has_prefix(WordView w, WordView prefix) {
    return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool has_suffix(WordView w, WordView suffix) {
    return suffix.size() <= w.size() && std::equal(suffix.begin(), suffix.end(), w.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

// Enumerates all words of the given length over Z_m.
template <typename F>
void for_each_word(std::size_t length, std::uint32_t m, F&& f) {
    Word w(length, 0);
    while (true) {
        f(WordView(w));
        std::size_t i = length;
        while (i > 0 && ++w[i - 1] == m) w[--i] = 0;
        if (i == 0) return;
    }
}

PropertyResult property_i(const Language& lang, const PropertyBounds& bounds) {
    // Maps compose right to left: (Psi_x phi)(w) = Psi_x(phi(w)).
    Check c("property_i", "Pi_x phi = phi Pi_x and Psi_x phi = phi Psi_{x-b+1}");
    const auto& p = lang.params();
    const auto m = p.modulus;
    for (std::size_t n = 0; n <= bounds.morphism_word_length && !c.failed(); ++n) {
        for (const auto w : lang.factors(n)->words()) {
            const auto image = substitution_apply(w, p);
            for (std::uint32_t x = 0; x < m; ++x) {
                const auto pi = GroupElement::morphism(x, m);
                const auto psi = GroupElement::antimorphism(x, m);
                const auto psi_shifted = GroupElement::antimorphism(std::int64_t{x} - p.base + 1, m);
                if (apply_element(pi, image) != substitution_apply(apply_element(pi, w), p)) {
                    c.fail("w=" + w_str(w, m) + " x=" + std::to_string(x) + " (morphism)");
                }
                if (apply_element(psi, image) != substitution_apply(apply_element(psi_shifted, w), p)) {
                    c.fail("w=" + w_str(w, m) + " x=" + std::to_string(x) + " (antimorphism)");
                }
            }
        }
    }
    return std::move(c).done();
}

PropertyResult property_ii(const Params& p) {
    Check c("property_ii", "phi is uniform: |phi(k)| = b");
    for (Letter k = 0; k < p.modulus; ++k) {
        if (substitution_image(k, p).size() != p.base) c.fail("k=" + std::to_string(k));
    }
    return std::move(c).done();
}

PropertyResult property_iii(const Params& p) {
    Check c("property_iii", "phi is bifix-free: first letters distinct, last letters distinct");
    std::set<Letter> first, last;
    for (Letter k = 0; k < p.modulus; ++k) {
        const auto img = substitution_image(k, p);
        if (!first.insert(img.front()).second) c.fail("first letter repeats at k=" + std::to_string(k));
        if (!last.insert(img.back()).second) c.fail("last letter repeats at k=" + std::to_string(k));
    }
    return std::move(c).done();
}

PropertyResult property_iv(const Language& lang) {
    Check c("property_iv", "L_2 = { pi^k(r-1) r : r in Z_m, 0 <= k < q }");
    const auto& p = lang.params();
    const auto m = static_cast<std::int64_t>(p.modulus);
    std::vector<Letter> expected;
    for (std::int64_t r = 0; r < m; ++r) {
        for (std::int64_t k = 0; k < p.last_letter_order; ++k) {
            expected.push_back(reduce(r - 1 + k * (std::int64_t{p.base} - 1), p.modulus));
            expected.push_back(static_cast<Letter>(r));
        }
    }
    if (FactorSet(2, std::move(expected)) != *lang.factors(2)) c.fail("L_2 differs from the formula");
    return std::move(c).done();
}

PropertyResult property_v(const Language& lang) {
    Check c("property_v", "L_3 = { pi^k(t-1) t (t+1) } u { (t-1) t pi^{-k}(t+1) }");
    const auto& p = lang.params();
    const auto m = static_cast<std::int64_t>(p.modulus);
    const auto step = std::int64_t{p.base} - 1;
    std::vector<Letter> expected;
    for (std::int64_t t = 0; t < m; ++t) {
        for (std::int64_t k = 0; k < p.last_letter_order; ++k) {
            for (auto v : {t - 1 + k * step, t, t + 1}) expected.push_back(reduce(v, p.modulus));
            for (auto v : {t - 1, t, t + 1 - k * step}) expected.push_back(reduce(v, p.modulus));
        }
    }
    if (FactorSet(3, std::move(expected)) != *lang.factors(3)) c.fail("L_3 differs from the formula");
    return std::move(c).done();
}

PropertyResult property_vi(const Params& p) {
    Check c("property_vi", "every word of length 1 or 2 is a Psi_x-palindrome for exactly one x");
    for (std::size_t len : {std::size_t{1}, std::size_t{2}}) {
        for_each_word(len, p.modulus, [&](WordView w) {
            std::size_t fixing = 0;
            for (std::uint32_t x = 0; x < p.modulus; ++x) {
                if (apply_element(GroupElement::antimorphism(x, p.modulus), w) == Word(w.begin(), w.end())) ++fixing;
            }
            if (fixing != 1) c.fail("w=" + w_str(w, p.modulus) + " fixed by " + std::to_string(fixing));
        });
    }
    return std::move(c).done();
}

PropertyResult property_vii(const Language& lang, const PropertyBounds& bounds) {
    Check c("property_vii", "w a Psi_x-palindrome implies phi(w) a Psi_{x+b-1}-palindrome");
    const auto& p = lang.params();
    for (std::size_t n = 1; n <= bounds.palindrome_image_length; ++n) {
        for (const auto w : lang.factors(n)->words()) {
            for (std::uint32_t x = 0; x < p.modulus; ++x) {
                if (!is_theta_palindrome(w, GroupElement::antimorphism(x, p.modulus))) continue;
                const auto image = substitution_apply(w, p);
                const auto target = GroupElement::antimorphism(std::int64_t{x} + p.base - 1, p.modulus);
                if (!is_theta_palindrome(image, target) || !lang.contains(image)) {
                    c.fail("w=" + w_str(w, p.modulus) + " x=" + std::to_string(x));
                }
            }
        }
    }
    return std::move(c).done();
}

PropertyResult property_viii(const Language& lang, std::size_t max_length) {
    Check c("property_viii", "nu(w) is bispecial with b(nu(w)) = b(w); nu Theta nu^-1 fixes nu(w)");
    const auto m = lang.modulus();
    const auto group = all_elements(m);
    for (std::size_t n = 1; n <= max_length && !c.failed(); ++n) {
        const auto level = lang.level(n);
        for (std::size_t i = 0; i < level->size(); ++i) {
            const auto& ext = level->extensions[i];
            if (!ext.bispecial()) continue;
            const auto w = (*level)[i];
            const auto fixing = fixing_antimorphisms(w, m);
            for (const auto& nu : group) {
                const auto image = apply_element(nu, w);
                const auto index = level->factors->index_of(image);
                if (!index || !level->extensions[*index].bispecial() ||
                    level->extensions[*index].bilateral_order() != ext.bilateral_order()) {
                    c.fail("w=" + w_str(w, m) + " nu=" + to_string(nu));
                    continue;
                }
                for (const auto& theta : fixing.elements) {
                    if (!is_theta_palindrome(image, conjugate_antimorphism(nu, theta))) {
                        c.fail("w=" + w_str(w, m) + " nu=" + to_string(nu) + " theta=" + to_string(theta));
                    }
                }
            }
        }
    }
    return std::move(c).done();
}

PropertyResult property_ix(const Language& lang, std::size_t max_length) {
    Check c("property_ix", "w with some w_{i+1} != w_i + 1 has exactly one ancestor");
    const auto m = lang.modulus();
    for (std::size_t n = 2; n <= max_length && !c.failed(); ++n) {
        for (const auto w : lang.factors(n)->words()) {
            bool broken = false;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i + 1] != reduce(std::int64_t{w[i]} + 1, m)) broken = true;
            }
            if (!broken) continue;
            const auto count = ancestors(lang, w).size();
            if (count != 1) c.fail("w=" + w_str(w, m) + " ancestors=" + std::to_string(count));
        }
    }
    return std::move(c).done();
}

PropertyResult property_x(const Language& lang, std::size_t max_length) {
    const auto& p = lang.params();
    if (p.periodic) return Check::not_applicable("property_x", "|w| > 2b implies exactly one ancestor");
    Check c("property_x", "|w| > 2b implies exactly one ancestor");
    for (std::size_t n = 2 * std::size_t{p.base} + 1; n <= max_length && !c.failed(); ++n) {
        for (const auto w : lang.factors(n)->words()) {
            const auto count = ancestors(lang, w).size();
            if (count != 1) c.fail("w=" + w_str(w, p.modulus) + " ancestors=" + std::to_string(count));
        }
    }
    return std::move(c).done();
}

PropertyResult property_xi(const Language& lang, std::size_t max_length) {
    Check c("property_xi", "bispecial w with |w| >= b starts with some phi(x) and ends with some phi(y)");
    const auto& p = lang.params();
    for (std::size_t n = p.base; n <= max_length && !c.failed(); ++n) {
        const auto level = lang.level(n);
        for (std::size_t i = 0; i < level->size(); ++i) {
            if (!level->extensions[i].bispecial()) continue;
            const auto w = (*level)[i];
            bool prefix = false, suffix = false;
            for (Letter k = 0; k < p.modulus; ++k) {
                const auto img = substitution_image(k, p);
                prefix = prefix || has_prefix(w, img);
                suffix = suffix || has_suffix(w, img);
            }
            if (!prefix || !suffix) c.fail("w=" + w_str(w, p.modulus));
        }
    }
    return std::move(c).done();
}

PropertyResult factorial(const Language& lang, std::size_t max_length) {
    Check c("factorial", "prefix and suffix of every factor of length n+1 lie in L_n");
    for (std::size_t n = 0; n < max_length && !c.failed(); ++n) {
        const auto shorter = lang.factors(n);
        for (const auto w : lang.factors(n + 1)->words()) {
            if (!shorter->contains(w.first(n)) || !shorter->contains(w.subspan(1))) {
                c.fail("w=" + w_str(w, lang.modulus()));
            }
        }
    }
    return std::move(c).done();
}

PropertyResult second_difference(const Language& lang, std::size_t max_length) {
    Check c("second_difference", "C(n+2) - 2C(n+1) + C(n) = sum of b(w) over L_n");
    for (std::size_t n = 0; n <= max_length; ++n) {
        const auto r = second_difference_identity_check(lang, n);
        if (!r.equal()) {
            c.fail("n=" + std::to_string(n) + " lhs=" + std::to_string(r.lhs) + " rhs=" + std::to_string(r.rhs));
        }
    }
    return std::move(c).done();
}

PropertyResult non_bispecial_palindromes(const Language& lang, std::size_t max_length) {
    Check c("non_bispecial_palindromes", "a non-bispecial Theta-palindrome has exactly one Theta-palindromic extension");
    const auto m = lang.modulus();
    const auto thetas = involutive_antimorphisms(m);
    for (std::size_t n = 1; n <= max_length && !c.failed(); ++n) {
        const auto level = lang.level(n);
        for (std::size_t i = 0; i < level->size(); ++i) {
            if (level->extensions[i].bispecial()) continue;
            for (const auto& theta : thetas) {
                if (!is_theta_palindrome((*level)[i], theta)) continue;
                const auto count = palindromic_extension_letters(level->extensions[i], theta).size();
                if (count != 1) {
                    c.fail("w=" + w_str((*level)[i], m) + " theta=" + to_string(theta) + " pext=" + std::to_string(count));
                }
            }
        }
    }
    return std::move(c).done();
}

PropertyResult short_bispecials(const Language& lang) {
    const auto& p = lang.params();
    const std::string description = "bispecial factors with 1 <= |w| < 2b match the short-factor table";
    if (p.periodic) return Check::not_applicable("short_bispecials", description);
    Check c("short_bispecials", description);
    for (std::size_t n = 1; n < 2 * std::size_t{p.base}; ++n) {
        const auto expected = short_bispecial_expectation(p, n);
        for (const auto& rec : bispecials(lang, n)) {
            const ShortBispecialRow got{rec.bilateral_order, rec.pext_count};
            if (!rec.theta || got != *expected) {
                c.fail("w=" + w_str(rec.word, p.modulus) + " b=" + std::to_string(rec.bilateral_order) +
                       " pext=" + std::to_string(rec.pext_count));
            }
        }
    }
    return std::move(c).done();
}

PropertyResult bilateral_from_extensions(const Language& lang, std::size_t max_length) {
    const auto& p = lang.params();
    const std::string description = "every non-empty bispecial w has a unique fixing Theta and b(w) = #Pext_Theta(w) - 1";
    if (p.periodic) return Check::not_applicable("bilateral_from_extensions", description);
    Check c("bilateral_from_extensions", description);
    for (std::size_t n = 1; n <= max_length && !c.failed(); ++n) {
        const auto level = lang.level(n);
        for (std::size_t i = 0; i < level->size(); ++i) {
            const auto& ext = level->extensions[i];
            if (!ext.bispecial()) continue;
            const auto w = (*level)[i];
            // count fixing antimorphisms by brute force, not by the shortcut
            std::vector<GroupElement> fixing;
            for (const auto& theta : involutive_antimorphisms(p.modulus)) {
                if (is_theta_palindrome(w, theta)) fixing.push_back(theta);
            }
            if (fixing.size() != 1) {
                c.fail("w=" + w_str(w, p.modulus) + " fixed by " + std::to_string(fixing.size()));
                continue;
            }
            const auto pext = static_cast<std::int64_t>(palindromic_extension_letters(ext, fixing.front()).size());
            if (ext.bilateral_order() != pext - 1) {
                c.fail("w=" + w_str(w, p.modulus) + " b=" + std::to_string(ext.bilateral_order()) +
                       " pext=" + std::to_string(pext));
            }
        }
    }
    return std::move(c).done();
}

PropertyResult long_bispecials(const Language& lang, std::size_t max_length) {
    const auto& p = lang.params();
    const std::string description =
        "bispecial w with |w| >= 2b is phi(v) for a unique bispecial ancestor v with equal b and #Pext";
    if (p.periodic) return Check::not_applicable("long_bispecials", description);
    Check c("long_bispecials", description);
    const auto m = p.modulus;
    for (std::size_t n = 2 * std::size_t{p.base}; n <= max_length && !c.failed(); ++n) {
        const auto level = lang.level(n);
        for (std::size_t i = 0; i < level->size(); ++i) {
            const auto& ext = level->extensions[i];
            if (!ext.bispecial()) continue;
            const auto w = (*level)[i];
            const auto tag = "w=" + w_str(w, m);

            const auto parents = ancestors(lang, w);
            if (parents.size() != 1) {
                c.fail(tag + " ancestors=" + std::to_string(parents.size()));
                continue;
            }
            const auto& v = parents.front();
            if (substitution_apply(v, p) != Word(w.begin(), w.end())) {
                c.fail(tag + " phi(ancestor) != w");
                continue;
            }
            const auto parent_ext = extensions(lang, v);
            if (!parent_ext.bispecial() || parent_ext.bilateral_order() != ext.bilateral_order()) {
                c.fail(tag + " ancestor " + w_str(v, m) + " has a different bilateral order");
                continue;
            }
            const auto parent_fixing = fixing_antimorphisms(v, m);
            for (const auto& theta1 : parent_fixing.elements) {
                const auto theta2 = GroupElement::antimorphism(std::int64_t{theta1.shift()} + p.base - 1, m);
                const auto fixing = fixing_antimorphisms(w, m);
                if (fixing.elements.size() != 1 || fixing.elements.front() != theta2) {
                    c.fail(tag + " is not fixed by exactly " + to_string(theta2));
                    continue;
                }
                const auto pw = palindromic_extension_letters(ext, theta2).size();
                const auto pv = palindromic_extension_letters(parent_ext, theta1).size();
                if (pw != pv) c.fail(tag + " pext=" + std::to_string(pw) + " ancestor pext=" + std::to_string(pv));
            }
        }
    }
    return std::move(c).done();
}

}  // namespace

std::optional<ShortBispecialRow> short_bispecial_expectation(const Params& params, std::size_t length) {
    const std::size_t b = params.base;
    if (params.periodic || length < 1 || length >= 2 * b) return std::nullopt;
    if (length == b) return ShortBispecialRow{1, 2};
    if (length == 2 * b - 1) return ShortBispecialRow{-1, 0};
    return ShortBispecialRow{0, 1};
}

std::string_view to_string(PropertyStatus status) {
    switch (status) {
        case PropertyStatus::Pass: return "pass";
        case PropertyStatus::Fail: return "FAIL";
        case PropertyStatus::NotApplicable: return "n/a";
    }
    return "unknown";
}

std::vector<PropertyResult> run_property_suite(const Language& lang, const PropertyBounds& bounds) {
    const auto& p = lang.params();
    const std::size_t b = p.base;
    const auto or_default = [](std::size_t value, std::size_t fallback) { return value != 0 ? value : fallback; };
    const auto ancestor_len = or_default(bounds.ancestor_length, 4 * b);
    const auto corollary_len = or_default(bounds.corollary_length, 4 * b);
    const auto long_len = or_default(bounds.long_bispecial_length, 4 * b * b);

    std::vector<PropertyResult> out;
    out.push_back(property_i(lang, bounds));
    out.push_back(property_ii(p));
    out.push_back(property_iii(p));
    out.push_back(property_iv(lang));
    out.push_back(property_v(lang));
    out.push_back(property_vi(p));
    out.push_back(property_vii(lang, bounds));
    out.push_back(property_viii(lang, long_len));
    out.push_back(property_ix(lang, ancestor_len));
    out.push_back(property_x(lang, ancestor_len));
    out.push_back(property_xi(lang, long_len));
    out.push_back(factorial(lang, bounds.factorial_length));
    out.push_back(second_difference(lang, bounds.second_difference_length));
    out.push_back(non_bispecial_palindromes(lang, bounds.non_bispecial_palindrome_length));
    out.push_back(short_bispecials(lang));
    out.push_back(bilateral_from_extensions(lang, corollary_len));
    out.push_back(long_bispecials(lang, long_len));
    return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    return std::none_of(results.begin(), results.end(),
                        [](const PropertyResult& r) { return r.status == PropertyStatus::Fail; });
}

}  // namespace gtm
