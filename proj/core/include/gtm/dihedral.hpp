// dihedral.hpp -- the group D_m of shift morphisms and shift-negation antimorphisms

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gtm/wordgen.hpp"

namespace gtm {

enum class Kind : std::uint8_t { Morphism, Antimorphism };

/// An element of D_m.
///
/// Morphism(x) maps each letter k to x + k and keeps the order of letters.
/// Antimorphism(x) maps each letter k to x - k and reverses the word.
/// Elements carry their modulus so that mixing groups is detected.
class GroupElement {
public:
    static GroupElement morphism(std::int64_t shift, std::uint32_t modulus);
    static GroupElement antimorphism(std::int64_t shift, std::uint32_t modulus);
    static GroupElement identity(std::uint32_t modulus) { return morphism(0, modulus); }

    Kind kind() const { return kind_; }
    Letter shift() const { return shift_; }
    std::uint32_t modulus() const { return modulus_; }
    bool is_antimorphism() const { return kind_ == Kind::Antimorphism; }
    bool is_identity() const { return kind_ == Kind::Morphism && shift_ == 0; }

    Letter map_letter(Letter k) const;
    GroupElement inverse() const;

    /// Canonical order: morphisms before antimorphisms, then by shift.
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

private:
    GroupElement(Kind kind, Letter shift, std::uint32_t modulus)
        : kind_(kind), shift_(shift), modulus_(modulus) {}

    Kind kind_;
    Letter shift_;
    std::uint32_t modulus_;
};

Word apply_element(const GroupElement& e, WordView w);

/// The element acting as `outer` after `inner`. Throws std::invalid_argument
/// if the moduli differ.
GroupElement compose(const GroupElement& outer, const GroupElement& inner);

/// nu * theta * nu^{-1}; theta must be an antimorphism.
GroupElement conjugate_antimorphism(const GroupElement& nu, const GroupElement& theta);

/// All 2m elements: Pi_0..Pi_{m-1}, then Psi_0..Psi_{m-1}.
std::vector<GroupElement> all_elements(std::uint32_t modulus);

/// Antimorphisms that square to the identity. In D_m that is every one of them.
std::vector<GroupElement> involutive_antimorphisms(std::uint32_t modulus);

/// "Pi_x" or "Psi_x".
std::string to_string(const GroupElement& e);

}  // namespace gtm
