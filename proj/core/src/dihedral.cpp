#include "gtm/dihedral.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtm {

GroupElement GroupElement::morphism(std::int64_t shift, std::uint32_t modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be at least 1");
    return {Kind::Morphism, reduce(shift, modulus), modulus};
}

GroupElement GroupElement::antimorphism(std::int64_t shift, std::uint32_t modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be at least 1");
    return {Kind::Antimorphism, reduce(shift, modulus), modulus};
}

Letter GroupElement::map_letter(Letter k) const {
    const auto x = static_cast<std::int64_t>(shift_);
    const auto v = static_cast<std::int64_t>(k);
    return reduce(kind_ == Kind::Morphism ? x + v : x - v, modulus_);
}

GroupElement GroupElement::inverse() const {
    if (kind_ == Kind::Antimorphism) return *this;
    return morphism(-static_cast<std::int64_t>(shift_), modulus_);
}

Word apply_element(const GroupElement& e, WordView w) {
    Word out(w.size());
    std::transform(w.begin(), w.end(), out.begin(), [&e](Letter k) { return e.map_letter(k); });
    if (e.is_antimorphism()) std::reverse(out.begin(), out.end());
    return out;
}

GroupElement compose(const GroupElement& outer, const GroupElement& inner) {
    if (outer.modulus() != inner.modulus()) {
        throw std::invalid_argument("compose: elements of different groups");
    }
    const auto m = outer.modulus();
    const auto x = static_cast<std::int64_t>(outer.shift());
    const auto y = static_cast<std::int64_t>(inner.shift());
    if (!outer.is_antimorphism()) {
        // x + (y +- k)
        return inner.is_antimorphism() ? GroupElement::antimorphism(x + y, m)
                                       : GroupElement::morphism(x + y, m);
    }
    // x - (y +- k)
    return inner.is_antimorphism() ? GroupElement::morphism(x - y, m)
                                   : GroupElement::antimorphism(x - y, m);
}

GroupElement conjugate_antimorphism(const GroupElement& nu, const GroupElement& theta) {
    if (!theta.is_antimorphism()) {
        throw std::invalid_argument("conjugate_antimorphism: theta is not an antimorphism");
    }
    return compose(compose(nu, theta), nu.inverse());
}

std::vector<GroupElement> all_elements(std::uint32_t modulus) {
    std::vector<GroupElement> out;
    out.reserve(2 * std::size_t{modulus});
    for (std::uint32_t x = 0; x < modulus; ++x) out.push_back(GroupElement::morphism(x, modulus));
    for (std::uint32_t x = 0; x < modulus; ++x) out.push_back(GroupElement::antimorphism(x, modulus));
    return out;
}

std::vector<GroupElement> involutive_antimorphisms(std::uint32_t modulus) {
    std::vector<GroupElement> out;
    for (const auto& e : all_elements(modulus)) {
        if (e.is_antimorphism() && compose(e, e).is_identity()) out.push_back(e);
    }
    return out;
}

std::string to_string(const GroupElement& e) {
    return (e.is_antimorphism() ? "Psi_" : "Pi_") + std::to_string(e.shift());
}

}  // namespace gtm
