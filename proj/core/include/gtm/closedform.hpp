// closedform.hpp -- closed-form factor complexity of t_{b,m}
//
// Aperiodic case (b != 1 mod m), with q the last-letter order:
//
//   n                                   dC(n)      C(n)
//   0                                   m - 1      1
//   1                                   qm - m     m
//   2 <= n <= b                         qm - m     qm(n-1) - m(n-2)
//   b^k + 1 + l,                        qm         qm(n-1) - m(b^k - b^{k-1})
//       k >= 1, 0 <= l < b^k - b^{k-1}
//   (2b-1)b^{k-1} + 1 + l,              qm - m     qm(n-1) - m(b^k - b^{k-1} + l)
//       k >= 1, 0 <= l < b^{k+1} - 2b^k + b^{k-1}
//
// Periodic case: C(0) = 1 and C(n) = m for n > 0.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "gtm/language.hpp"
#include "gtm/wordgen.hpp"

namespace gtm {

enum class Branch : std::uint8_t { Zero, One, LowRange, PlateauHigh, PlateauLow, Periodic };

std::string_view to_string(Branch branch);

struct ComplexityFormulaResult {
    std::uint64_t length = 0;
    Branch branch = Branch::Zero;
    std::int64_t delta_c = 0;
    std::int64_t c = 0;
    std::optional<std::uint64_t> exponent;  // k of the plateau rows
    std::optional<std::uint64_t> offset;    // l of the plateau rows
};

/// Exact integer evaluation. Intermediate powers of b are 128-bit; throws
/// std::overflow_error if C(n) itself does not fit in 64 bits.
ComplexityFormulaResult formula_complexity(const Params& params, std::uint64_t length);

std::int64_t formula_delta(const Params& params, std::uint64_t length);

struct CrossValidation {
    bool ok = true;
    std::optional<std::size_t> first_mismatch;
};

/// Compares formula and enumerated C(n) and dC(n) for n = 0 .. max_length.
CrossValidation cross_validate(const Language& lang, std::size_t max_length);

}  // namespace gtm
