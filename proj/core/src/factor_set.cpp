#include "gtm/factor_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gtm {

FactorSet::FactorSet(std::size_t length, std::vector<Letter> packed) : length_(length) {
    if (length == 0) {
        // Any input collapses to {epsilon}; an empty set of empty words is not
        // a language level.
        count_ = 1;
        return;
    }
    if (packed.size() % length != 0) {
        throw std::invalid_argument("FactorSet: buffer is not a whole number of words");
    }
    const std::size_t n = packed.size() / length;
    auto word = [&](std::size_t i) { return WordView(packed).subspan(i * length, length); };

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto wa = word(a), wb = word(b);
        return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
    });
    auto last = std::unique(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto wa = word(a), wb = word(b);
        return std::equal(wa.begin(), wa.end(), wb.begin());
    });
    order.erase(last, order.end());

    packed_.reserve(order.size() * length);
    for (std::size_t i : order) {
        const auto w = word(i);
        packed_.insert(packed_.end(), w.begin(), w.end());
    }
    count_ = order.size();
}

std::optional<std::size_t> FactorSet::index_of(WordView w) const {
    if (w.size() != length_) return std::nullopt;
    if (length_ == 0) return 0;
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const auto f = (*this)[mid];
        if (std::lexicographical_compare(f.begin(), f.end(), w.begin(), w.end())) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < count_ && std::equal(w.begin(), w.end(), (*this)[lo].begin())) return lo;
    return std::nullopt;
}

}  // namespace gtm
