#include "gtm/richness.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "gtm/palcomplexity.hpp"

namespace gtm {

ClosureResult closure_check(const Language& lang, std::size_t max_length) {
    ClosureResult out;
    const auto group = all_elements(lang.modulus());
    for (std::size_t n = 1; n <= max_length; ++n) {
        const auto level = lang.factors(n);
        for (const auto w : level->words()) {
            for (const auto& e : group) {
                if (!level->contains(apply_element(e, w))) {
                    out.ok = false;
                    out.counterexample = ClosureResult::Counterexample{Word(w.begin(), w.end()), e};
                    return out;
                }
            }
        }
    }
    return out;
}

InjectivityResult injectivity_check(const Language& lang, std::size_t max_length) {
    InjectivityResult out;
    const auto group = all_elements(lang.modulus());
    for (std::size_t n = 1; n <= max_length; ++n) {
        for (const auto w : lang.factors(n)->words()) {
            // group is ordered by kind, so an equal image of a different
            // element of the same kind is found among earlier entries
            std::vector<std::pair<Word, GroupElement>> seen;
            for (const auto& e : group) {
                auto image = apply_element(e, w);
                for (const auto& [other_image, other] : seen) {
                    if (other.kind() == e.kind() && other_image == image) {
                        out.ok = false;
                        out.counterexample = InjectivityResult::Counterexample{Word(w.begin(), w.end()), other, e};
                        return out;
                    }
                }
                seen.emplace_back(std::move(image), e);
            }
        }
    }
    return out;
}

RichnessRow richness_row(const Language& lang, std::size_t length) {
    RichnessRow row;
    row.length = length;
    const auto m = static_cast<std::int64_t>(lang.modulus());
    row.lhs = static_cast<std::int64_t>(complexity(lang, length + 1)) -
              static_cast<std::int64_t>(complexity(lang, length)) + 2 * m;
    for (const auto& theta : involutive_antimorphisms(lang.modulus())) {
        row.rhs += static_cast<std::int64_t>(palindromic_complexity(lang, theta, length) +
                                             palindromic_complexity(lang, theta, length + 1));
    }
    row.defect = row.lhs - row.rhs;
    return row;
}

std::int64_t richness_defect(const Language& lang, std::size_t length) {
    return richness_row(lang, length).defect;
}

bool RichnessReport::all_defects_zero() const {
    for (const auto& row : rows) {
        if (row.defect != 0) return false;
    }
    return true;
}

bool RichnessReport::criterion_satisfied() const {
    return closure.ok && injectivity.ok && all_defects_zero();
}

std::string RichnessReport::verdict() const {
    const auto bound = std::to_string(max_length);
    return criterion_satisfied() ? "criterion satisfied up to n_max = " + bound
                                 : "criterion violated within n_max = " + bound;
}

RichnessReport richness_report(const Language& lang, std::size_t max_length) {
    RichnessReport report;
    report.params = lang.params();
    report.max_length = max_length;
    report.antimorphisms = involutive_antimorphisms(lang.modulus());

    // Warm the shared levels in order so the parallel rows only read them.
    lang.factors(max_length + 1);

    report.rows.resize(max_length);
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(max_length, 1));
    std::vector<std::future<void>> pending;
    for (std::size_t t = 0; t < workers; ++t) {
        pending.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t n = 1 + t; n <= max_length; n += workers) report.rows[n - 1] = richness_row(lang, n);
        }));
    }
    report.closure = closure_check(lang, max_length);
    report.injectivity = injectivity_check(lang, max_length);
    for (auto& f : pending) f.get();
    return report;
}

TelescopedIdentity telescoped_identity_check(const Language& lang, std::size_t length) {
    TelescopedIdentity out;
    const auto c = [&](std::size_t n) { return static_cast<std::int64_t>(complexity(lang, n)); };
    out.delta_lhs = (c(length + 2) - c(length + 1)) - (c(length + 1) - c(length));

    const auto level = lang.level(length);
    for (const auto& ext : level->extensions) out.bilateral_sum += ext.bilateral_order();

    for (const auto& theta : involutive_antimorphisms(lang.modulus())) {
        out.delta_rhs += static_cast<std::int64_t>(palindromic_complexity(lang, theta, length + 2)) -
                         static_cast<std::int64_t>(palindromic_complexity(lang, theta, length));
        for (std::size_t i = 0; i < level->size(); ++i) {
            if (!is_theta_palindrome((*level)[i], theta)) continue;
            out.pext_sum +=
                static_cast<std::int64_t>(palindromic_extension_letters(level->extensions[i], theta).size()) - 1;
        }
    }
    return out;
}

}  // namespace gtm
