// richness.hpp -- empirical check of the D_m-richness criterion
//
// The criterion has three parts: the language is closed under every element
// of D_m, distinct elements of the same kind act differently on every
// non-empty factor, and
//
//     C(n+1) - C(n) + 2m == sum over antimorphisms Theta of P_Theta(n) + P_Theta(n+1)
//
// for all n >= 1. All m antimorphisms of D_m are involutions, so the sum runs
// over all of them. Nothing here proves anything for unbounded n; a passing
// report means the criterion holds up to n_max.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtm/dihedral.hpp"
#include "gtm/language.hpp"

namespace gtm {

struct ClosureResult {
    struct Counterexample {
        Word word;
        GroupElement element;
    };
    bool ok = true;
    std::optional<Counterexample> counterexample;
};

ClosureResult closure_check(const Language& lang, std::size_t max_length);

struct InjectivityResult {
    struct Counterexample {
        Word word;
        GroupElement first;
        GroupElement second;
    };
    bool ok = true;
    std::optional<Counterexample> counterexample;
};

InjectivityResult injectivity_check(const Language& lang, std::size_t max_length);

struct RichnessRow {
    std::size_t length = 0;
    std::int64_t lhs = 0;     // C(n+1) - C(n) + 2m
    std::int64_t rhs = 0;     // sum of P_Theta(n) + P_Theta(n+1)
    std::int64_t defect = 0;  // lhs - rhs
};

RichnessRow richness_row(const Language& lang, std::size_t length);

/// lhs - rhs of the richness equality at n.
std::int64_t richness_defect(const Language& lang, std::size_t length);

struct RichnessReport {
    Params params;
    std::size_t max_length = 0;
    std::vector<GroupElement> antimorphisms;  // the terms of the palindromic sum
    std::vector<RichnessRow> rows;            // n = 1 .. max_length
    ClosureResult closure;
    InjectivityResult injectivity;

    bool all_defects_zero() const;
    /// Closure, injectivity, and zero defect at every n.
    bool criterion_satisfied() const;
    std::string verdict() const;
};

/// Rows are computed in parallel over n and assembled in order.
RichnessReport richness_report(const Language& lang, std::size_t max_length);

/// The first difference of the richness equality, checked through both of its
/// expansions: the left side as the sum of bilateral orders over L_n, the
/// right side as the sum of (#Pext_Theta(w) - 1) over theta-palindromes w of
/// length n.
struct TelescopedIdentity {
    std::int64_t delta_lhs = 0;      // (C(n+2) - C(n+1)) - (C(n+1) - C(n))
    std::int64_t delta_rhs = 0;      // sum of P_Theta(n+2) - P_Theta(n)
    std::int64_t bilateral_sum = 0;  // sum of b(w) over L_n
    std::int64_t pext_sum = 0;       // sum of #Pext_Theta(w) - 1
    bool holds() const {
        return delta_lhs == delta_rhs && delta_lhs == bilateral_sum && delta_rhs == pext_sum;
    }
};

TelescopedIdentity telescoped_identity_check(const Language& lang, std::size_t length);

}  // namespace gtm
