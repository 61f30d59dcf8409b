#include "gtm/wordgen.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gtm {

Letter reduce(std::int64_t value, std::uint32_t modulus) {
    const auto m = static_cast<std::int64_t>(modulus);
    auto r = value % m;
    if (r < 0) r += m;
    return static_cast<Letter>(r);
}

Params Params::make(std::uint32_t base, std::uint32_t modulus) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    if (modulus < 1) throw std::invalid_argument("modulus must be at least 1");

    Params p;
    p.base = base;
    p.modulus = modulus;
    p.last_letter_order = modulus / std::gcd(base - 1, modulus);
    p.periodic = (base - 1) % modulus == 0;

    // The closed form must be the least positive q with q(b-1) = 0 mod m:
    // it annihilates b-1 and no q/prime does.
    const auto annihilates = [&](std::uint64_t q) { return (q * (base - 1)) % modulus == 0; };
    bool minimal = annihilates(p.last_letter_order);
    std::uint64_t rest = p.last_letter_order;
    for (std::uint64_t prime = 2; prime * prime <= rest; ++prime) {
        if (rest % prime != 0) continue;
        minimal = minimal && !annihilates(p.last_letter_order / prime);
        while (rest % prime == 0) rest /= prime;
    }
    if (rest > 1) minimal = minimal && !annihilates(p.last_letter_order / rest);
    if (!minimal) throw std::logic_error("last-letter order is not minimal");
    return p;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base) {
    if (base < 2) throw std::invalid_argument("digit_sum: base must be at least 2");
    std::uint64_t sum = 0;
    for (; n != 0; n /= base) sum += n % base;
    return sum;
}

Letter gtm_letter(std::uint64_t n, const Params& params) {
    return static_cast<Letter>(digit_sum(n, params.base) % params.modulus);
}

Word gtm_prefix(const Params& params, std::size_t length) {
    Word out(length);
    for (std::size_t i = 0; i < length; ++i) out[i] = gtm_letter(i, params);
    return out;
}

Word substitution_image(Letter k, const Params& params) {
    if (k >= params.modulus) throw std::invalid_argument("letter outside Z_m");
    Word out(params.base);
    for (std::uint32_t j = 0; j < params.base; ++j) {
        out[j] = static_cast<Letter>((std::uint64_t{k} + j) % params.modulus);
    }
    return out;
}

Word substitution_apply(WordView w, const Params& params) {
    Word out;
    out.reserve(w.size() * params.base);
    for (Letter k : w) {
        for (std::uint32_t j = 0; j < params.base; ++j) {
            out.push_back(static_cast<Letter>((std::uint64_t{k} + j) % params.modulus));
        }
    }
    return out;
}

Word fixed_point_prefix(const Params& params, std::size_t length) {
    if (length == 0) return {};
    Word w{0};
    while (w.size() < length) w = substitution_apply(w, params);
    w.resize(length);
    return w;
}

bool is_word_over(WordView w, std::uint32_t modulus) {
    return std::all_of(w.begin(), w.end(), [modulus](Letter k) { return k < modulus; });
}

std::string to_string(WordView w, std::uint32_t modulus) {
    std::string out;
    if (modulus <= 10) {
        out.reserve(w.size());
        for (Letter k : w) out.push_back(static_cast<char>('0' + k));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(std::string_view text, std::uint32_t modulus) {
    Word out;
    if (modulus <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument("malformed word");
            out.push_back(static_cast<Letter>(c - '0'));
        }
    } else if (!text.empty()) {
        std::size_t pos = 0;
        while (true) {
            const auto comma = text.find(',', pos);
            const auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
            Letter k = 0;
            const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), k);
            if (ec != std::errc{} || end != token.data() + token.size() || token.empty()) {
                throw std::invalid_argument("malformed word");
            }
            out.push_back(k);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    if (!is_word_over(out, modulus)) throw std::invalid_argument("letter outside Z_m");
    return out;
}

}  // namespace gtm
