#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gtm::cli {

enum class Command { Generate, Complexity, Richness, Bispecial, Verify };
enum class Format { Text, Json, Csv };

/// Stable process exit codes.
enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2 };

/// Invalid parameters or flag combinations; maps to kUsage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::Generate;
    std::uint32_t base = 2;
    std::uint32_t modulus = 2;
    std::optional<std::size_t> length;      // -n
    std::optional<std::size_t> max_length;  // --max-n
    Format format = Format::Text;
    std::optional<std::filesystem::path> output;
    std::optional<std::filesystem::path> cache_dir;

    /// Throws UsageError when b < 2, m < 1, or the length bounds the command
    /// needs are missing or zero.
    void validate() const;
};

std::string_view to_string(Command command);
std::string_view to_string(Format format);

}  // namespace gtm::cli
