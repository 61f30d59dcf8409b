#include "gtm/closedform.hpp"

#include <limits>
#include <stdexcept>

namespace gtm {
namespace {

__extension__ using wide = __int128;

std::int64_t narrow(wide value) {
    if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("factor complexity does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(value);
}

}  // namespace

std::string_view to_string(Branch branch) {
    switch (branch) {
        case Branch::Zero: return "zero";
        case Branch::One: return "one";
        case Branch::LowRange: return "low_range";
        case Branch::PlateauHigh: return "plateau_high";
        case Branch::PlateauLow: return "plateau_low";
        case Branch::Periodic: return "periodic";
    }
    return "unknown";
}

ComplexityFormulaResult formula_complexity(const Params& params, std::uint64_t length) {
    ComplexityFormulaResult r;
    r.length = length;
    const wide n = length;
    const wide b = params.base;
    const wide m = params.modulus;
    const wide qm = wide{params.last_letter_order} * m;

    if (length == 0) {
        r.branch = Branch::Zero;
        r.delta_c = narrow(m - 1);
        r.c = 1;
        return r;
    }
    if (params.periodic) {
        r.branch = Branch::Periodic;
        r.delta_c = 0;
        r.c = narrow(m);
        return r;
    }
    if (length == 1) {
        r.branch = Branch::One;
        r.delta_c = narrow(qm - m);
        r.c = narrow(m);
        return r;
    }
    if (n <= b) {
        r.branch = Branch::LowRange;
        r.delta_c = narrow(qm - m);
        r.c = narrow(qm * (n - 1) - m * (n - 2));
        return r;
    }

    // smallest k >= 1 with b^k < n <= b^{k+1}
    std::uint64_t k = 1;
    wide power = b;  // b^k
    while (power * b < n) {
        power *= b;
        ++k;
    }
    const wide previous = power / b;  // b^{k-1}
    const wide plateau_step = power - previous;
    const wide split = (2 * b - 1) * previous;

    r.exponent = k;
    if (n <= split) {
        r.branch = Branch::PlateauHigh;
        r.offset = static_cast<std::uint64_t>(n - power - 1);
        r.delta_c = narrow(qm);
        r.c = narrow(qm * (n - 1) - m * plateau_step);
    } else {
        const wide l = n - split - 1;
        r.branch = Branch::PlateauLow;
        r.offset = static_cast<std::uint64_t>(l);
        r.delta_c = narrow(qm - m);
        r.c = narrow(qm * (n - 1) - m * (plateau_step + l));
    }
    return r;
}

std::int64_t formula_delta(const Params& params, std::uint64_t length) {
    return formula_complexity(params, length).delta_c;
}

CrossValidation cross_validate(const Language& lang, std::size_t max_length) {
    CrossValidation out;
    const auto& params = lang.params();
    for (std::size_t n = 0; n <= max_length; ++n) {
        const auto c = static_cast<std::int64_t>(complexity(lang, n));
        const auto next = static_cast<std::int64_t>(complexity(lang, n + 1));
        const auto f = formula_complexity(params, n);
        if (f.c != c || f.delta_c != next - c) {
            out.ok = false;
            out.first_mismatch = n;
            return out;
        }
    }
    return out;
}

}  // namespace gtm
