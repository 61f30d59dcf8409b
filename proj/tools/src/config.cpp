#include "gtm/cli/config.hpp"

namespace gtm::cli {

void RunConfig::validate() const {
    if (base < 2) throw UsageError("base (-b) must be at least 2");
    if (modulus < 1) throw UsageError("modulus (-m) must be at least 1");
    switch (command) {
        case Command::Generate:
            if (!length) throw UsageError("generate needs -n/--length");
            break;
        case Command::Complexity:
        case Command::Richness:
            if (!max_length || *max_length < 1) throw UsageError(std::string(to_string(command)) + " needs --max-n >= 1");
            break;
        case Command::Bispecial:
            if (length && max_length) throw UsageError("bispecial takes -n or --max-n, not both");
            if (!length && !max_length) throw UsageError("bispecial needs -n or --max-n");
            if ((length && *length < 1) || (max_length && *max_length < 1)) {
                throw UsageError("bispecial lengths start at 1");
            }
            break;
        case Command::Verify:
            break;
    }
}

std::string_view to_string(Command command) {
    switch (command) {
        case Command::Generate: return "generate";
        case Command::Complexity: return "complexity";
        case Command::Richness: return "richness";
        case Command::Bispecial: return "bispecial";
        case Command::Verify: return "verify";
    }
    return "unknown";
}

std::string_view to_string(Format format) {
    switch (format) {
        case Format::Text: return "text";
        case Format::Json: return "json";
        case Format::Csv: return "csv";
    }
    return "unknown";
}

}  // namespace gtm::cli
