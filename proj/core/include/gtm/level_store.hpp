// level_store.hpp -- on-disk cache of language levels
//
// Layout: <root>/<b>_<m>/<n>.bin. A file is a sequence of records, one per
// factor, each a little-endian u32 word length followed by that many letters.
// Letters use the narrowest unsigned width that holds m - 1 (1, 2 or 4 bytes),
// also little-endian.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "gtm/factor_set.hpp"
#include "gtm/wordgen.hpp"

namespace gtm {

std::size_t letter_width(std::uint32_t modulus);

void write_level(std::ostream& out, const FactorSet& level, std::uint32_t modulus);

/// Returns nullopt on truncation, a record of the wrong length, a letter
/// outside Z_m, or an empty file.
std::optional<FactorSet> read_level(std::istream& in, std::size_t length, std::uint32_t modulus);

class LevelStore {
public:
    explicit LevelStore(std::filesystem::path root) : root_(std::move(root)) {}

    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path path_for(const Params& params, std::size_t length) const;

    std::optional<FactorSet> load(const Params& params, std::size_t length) const;

    /// Writes through a temporary file and renames it into place. Returns
    /// false if the directory or file cannot be written; the cache is optional
    /// so callers may ignore it.
    bool save(const Params& params, const FactorSet& level) const;

private:
    std::filesystem::path root_;
};

}  // namespace gtm
