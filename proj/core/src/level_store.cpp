#include "gtm/level_store.hpp"

#include <array>
#include <atomic>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <system_error>
#include <thread>

namespace gtm {
namespace {

void put_le(std::ostream& out, std::uint32_t value, std::size_t width) {
    std::array<char, 4> bytes{};
    for (std::size_t i = 0; i < width; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xffu);
    out.write(bytes.data(), static_cast<std::streamsize>(width));
}

bool get_le(std::istream& in, std::uint32_t& value, std::size_t width) {
    std::array<unsigned char, 4> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(width))) return false;
    value = 0;
    for (std::size_t i = 0; i < width; ++i) value |= std::uint32_t{bytes[i]} << (8 * i);
    return true;
}

}  // namespace

std::size_t letter_width(std::uint32_t modulus) {
    if (modulus <= 0x100u) return 1;
    if (modulus <= 0x10000u) return 2;
    return 4;
}

void write_level(std::ostream& out, const FactorSet& level, std::uint32_t modulus) {
    const auto width = letter_width(modulus);
    for (const auto w : level.words()) {
        put_le(out, static_cast<std::uint32_t>(w.size()), 4);
        for (Letter k : w) put_le(out, k, width);
    }
}

std::optional<FactorSet> read_level(std::istream& in, std::size_t length, std::uint32_t modulus) {
    const auto width = letter_width(modulus);
    std::vector<Letter> packed;
    std::size_t records = 0;
    std::uint32_t record_length = 0;
    while (get_le(in, record_length, 4)) {
        if (record_length != length) return std::nullopt;
        for (std::size_t i = 0; i < length; ++i) {
            std::uint32_t k = 0;
            if (!get_le(in, k, width) || k >= modulus) return std::nullopt;
            packed.push_back(k);
        }
        ++records;
    }
    // A partial length prefix leaves the stream in a failed state with some
    // bytes consumed.
    if (in.gcount() != 0 || records == 0) return std::nullopt;
    FactorSet level(length, std::move(packed));
    if (level.size() != records) return std::nullopt;  // duplicates
    return level;
}

std::filesystem::path LevelStore::path_for(const Params& params, std::size_t length) const {
    return root_ / (std::to_string(params.base) + "_" + std::to_string(params.modulus)) /
           (std::to_string(length) + ".bin");
}

std::optional<FactorSet> LevelStore::load(const Params& params, std::size_t length) const {
    std::ifstream in(path_for(params, length), std::ios::binary);
    if (!in) return std::nullopt;
    return read_level(in, length, params.modulus);
}

bool LevelStore::save(const Params& params, const FactorSet& level) const {
    static std::atomic<unsigned> counter{0};
    const auto target = path_for(params, level.length());
    std::error_code ec;
    std::filesystem::create_directories(target.parent_path(), ec);
    if (ec) return false;

    auto tmp = target;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "_" +
           std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return false;
        write_level(out, level, params.modulus);
        if (!out.flush()) {
            std::filesystem::remove(tmp, ec);
            return false;
        }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        return false;
    }
    return true;
}

}  // namespace gtm
