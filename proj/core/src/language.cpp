#include "gtm/language.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gtm/palcomplexity.hpp"

namespace gtm {
namespace {

// Appends every length-`length` window of phi(v) that starts inside the
// image of v's first letter. Windows starting later are windows of phi of a
// later factor, so nothing is lost.
void append_leading_windows(WordView v, std::size_t length, const Params& params,
                            std::vector<Letter>& out) {
    const Word image = substitution_apply(v, params);
    for (std::size_t start = 0; start < params.base && start + length <= image.size(); ++start) {
        out.insert(out.end(), image.begin() + static_cast<std::ptrdiff_t>(start),
                   image.begin() + static_cast<std::ptrdiff_t>(start + length));
    }
}

bool occurs_in(WordView needle, WordView haystack) {
    return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

}  // namespace

std::int64_t Extensions::bilateral_order() const {
    return static_cast<std::int64_t>(both.size()) - static_cast<std::int64_t>(left.size()) -
           static_cast<std::int64_t>(right.size()) + 1;
}

Language::Language(Params params, std::shared_ptr<const LevelStore> store)
    : params_(params), store_(std::move(store)) {}

std::shared_ptr<const FactorSet> Language::factors(std::size_t length) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = factor_cache_.find(length); it != factor_cache_.end()) return it->second;
    }
    auto computed = compute_factors(length);
    std::lock_guard lock(mutex_);
    return factor_cache_.try_emplace(length, std::move(computed)).first->second;
}

std::shared_ptr<const LanguageLevel> Language::level(std::size_t length) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = level_cache_.find(length); it != level_cache_.end()) return it->second;
    }
    auto computed = compute_level(length);
    std::lock_guard lock(mutex_);
    return level_cache_.try_emplace(length, std::move(computed)).first->second;
}

std::shared_ptr<const FactorSet> Language::compute_factors(std::size_t length) const {
    if (length == 0) return std::make_shared<const FactorSet>();

    if (store_) {
        if (auto cached = store_->load(params_, length)) {
            return std::make_shared<const FactorSet>(std::move(*cached));
        }
    }

    const std::size_t b = params_.base;
    const std::size_t source_length = (length + b - 1) / b + 1;
    std::shared_ptr<const FactorSet> result;

    if (source_length < length) {
        const auto source = factors(source_length);
        std::vector<Letter> packed;
        packed.reserve(source->size() * b * length);
        for (const auto v : source->words()) append_leading_windows(v, length, params_, packed);
        result = std::make_shared<const FactorSet>(length, std::move(packed));
    } else {
        // Least set containing the prefix and closed under windows of phi.
        std::set<Word> found;
        std::vector<Word> frontier{fixed_point_prefix(params_, length)};
        found.insert(frontier.front());
        while (!frontier.empty()) {
            std::vector<Letter> windows;
            for (const auto& v : frontier) append_leading_windows(v, length, params_, windows);
            frontier.clear();
            for (std::size_t i = 0; i < windows.size(); i += length) {
                Word w(windows.begin() + static_cast<std::ptrdiff_t>(i),
                       windows.begin() + static_cast<std::ptrdiff_t>(i + length));
                if (found.insert(w).second) frontier.push_back(std::move(w));
            }
        }
        std::vector<Letter> packed;
        packed.reserve(found.size() * length);
        for (const auto& w : found) packed.insert(packed.end(), w.begin(), w.end());
        result = std::make_shared<const FactorSet>(length, std::move(packed));
    }

    if (store_) store_->save(params_, *result);
    return result;
}

std::shared_ptr<const LanguageLevel> Language::compute_level(std::size_t length) const {
    auto out = std::make_shared<LanguageLevel>();
    out->length = length;
    out->factors = factors(length);
    out->extensions.resize(out->factors->size());

    const auto& base = *out->factors;
    const auto longer = factors(length + 1);
    const auto longest = factors(length + 2);

    // The longer levels are in lexicographic order, so each list below comes
    // out sorted without further work.
    for (const auto u : longer->words()) {
        const auto suffix = base.index_of(u.subspan(1));
        const auto prefix = base.index_of(u.first(length));
        if (!suffix || !prefix) throw std::logic_error("language level is not factorial");
        out->extensions[*suffix].left.push_back(u.front());
        out->extensions[*prefix].right.push_back(u.back());
    }
    for (const auto u : longest->words()) {
        const auto middle = base.index_of(u.subspan(1, length));
        if (!middle) throw std::logic_error("language level is not factorial");
        out->extensions[*middle].both.emplace_back(u.front(), u.back());
    }
    return out;
}

std::size_t complexity(const Language& lang, std::size_t length) {
    return lang.factors(length)->size();
}

Extensions extensions(const Language& lang, WordView w) {
    const auto level = lang.level(w.size());
    const auto index = level->factors->index_of(w);
    if (!index) throw std::invalid_argument("word is not a factor of t_{b,m}");
    return level->extensions[*index];
}

std::int64_t bilateral_order(const Language& lang, WordView w) {
    return extensions(lang, w).bilateral_order();
}

std::vector<BispecialRecord> bispecials(const Language& lang, std::size_t length) {
    const auto level = lang.level(length);
    std::vector<BispecialRecord> out;
    for (std::size_t i = 0; i < level->size(); ++i) {
        const auto& ext = level->extensions[i];
        if (!ext.bispecial()) continue;

        BispecialRecord rec;
        rec.word.assign((*level)[i].begin(), (*level)[i].end());
        rec.bilateral_order = ext.bilateral_order();
        if (length > 0) {
            const auto fixing = fixing_antimorphisms(rec.word, lang.modulus());
            if (fixing.elements.size() == 1) {
                rec.theta = fixing.elements.front();
                rec.pext_count = palindromic_extension_letters(ext, *rec.theta).size();
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<Word> ancestors(const Language& lang, WordView w) {
    if (w.empty()) throw std::invalid_argument("ancestors: empty word");
    if (!lang.contains(w)) throw std::invalid_argument("word is not a factor of t_{b,m}");

    const auto& params = lang.params();
    const std::size_t b = params.base;

    std::set<Word> found;
    for (std::size_t offset = 0; offset < b; ++offset) {
        const std::size_t span = (offset + w.size() + b - 1) / b;
        Word v(span);
        bool consistent = true;
        for (std::size_t j = 0; j < span && consistent; ++j) {
            // letters of w covered by the image of v_j
            const std::size_t lo = std::max(j * b, offset);
            const std::size_t hi = std::min(j * b + b, offset + w.size());
            const Letter k = reduce(static_cast<std::int64_t>(w[lo - offset]) -
                                        static_cast<std::int64_t>(lo - j * b), params.modulus);
            for (std::size_t p = lo; p < hi; ++p) {
                if (reduce(static_cast<std::int64_t>(k) + static_cast<std::int64_t>(p - j * b), params.modulus) !=
                    w[p - offset]) {
                    consistent = false;
                    break;
                }
            }
            v[j] = k;
        }
        if (!consistent || !lang.contains(v)) continue;

        const WordView vv(v);
        if (occurs_in(w, substitution_apply(vv.subspan(1), params))) continue;
        if (occurs_in(w, substitution_apply(vv.first(span - 1), params))) continue;
        found.insert(std::move(v));
    }
    return {found.begin(), found.end()};
}

SecondDifference second_difference_identity_check(const Language& lang, std::size_t length) {
    SecondDifference out;
    out.lhs = static_cast<std::int64_t>(complexity(lang, length + 2)) -
              2 * static_cast<std::int64_t>(complexity(lang, length + 1)) +
              static_cast<std::int64_t>(complexity(lang, length));
    const auto level = lang.level(length);
    for (const auto& ext : level->extensions) out.rhs += ext.bilateral_order();
    return out;
}

}  // namespace gtm
