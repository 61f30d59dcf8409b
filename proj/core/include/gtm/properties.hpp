// properties.hpp -- exhaustive desk-scale checks of the structural properties
// of t_{b,m}: the substitution, the shapes of L_2 and L_3, palindromes under
// D_m, ancestors, and the bilateral orders of bispecial factors.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtm/language.hpp"

namespace gtm {

/// Expected (b(w), #Pext_Theta(w)) of a bispecial factor of length
/// 1 <= |w| < 2b in the aperiodic case:
///
///   1 <= |w| <= b-1     ( 0, 1)
///   |w| = b             ( 1, 2)
///   b+1 <= |w| <= 2b-2  ( 0, 1)
///   |w| = 2b-1          (-1, 0)
///
/// nullopt for periodic parameters or lengths outside that range.
struct ShortBispecialRow {
    std::int64_t bilateral_order;
    std::size_t pext_count;
    friend bool operator==(const ShortBispecialRow&, const ShortBispecialRow&) = default;
};

std::optional<ShortBispecialRow> short_bispecial_expectation(const Params& params, std::size_t length);

/// Length bounds. Zero means "derive from b": 4b for the ancestor and
/// corollary checks, 4b^2 for the long-bispecial checks.
struct PropertyBounds {
    std::size_t morphism_word_length = 8;
    std::size_t palindrome_image_length = 12;
    std::size_t ancestor_length = 0;
    std::size_t corollary_length = 0;
    std::size_t long_bispecial_length = 0;
    std::size_t second_difference_length = 40;
    std::size_t non_bispecial_palindrome_length = 30;
    std::size_t factorial_length = 40;
};

enum class PropertyStatus : std::uint8_t { Pass, Fail, NotApplicable };

std::string_view to_string(PropertyStatus status);

struct PropertyResult {
    std::string id;           // short stable key, e.g. "property_iv"
    std::string description;
    PropertyStatus status = PropertyStatus::Pass;
    std::string witness;      // first counterexample when status is Fail
};

std::vector<PropertyResult> run_property_suite(const Language& lang, const PropertyBounds& bounds = {});

/// NotApplicable counts as passing.
bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace gtm
