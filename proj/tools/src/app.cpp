#include "gtm/cli/app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <limits>
#include <memory>

#include "gtm/cli/config.hpp"
#include "gtm/cli/documents.hpp"
#include "gtm/cli/render.hpp"
#include "gtm/level_store.hpp"

namespace gtm::cli {

namespace {

constexpr const char* kCacheEnv = "GTM_CACHE_DIR";

struct RawOptions {
    std::int64_t base = 2;
    std::int64_t modulus = 2;
    std::optional<std::int64_t> length;
    std::optional<std::int64_t> max_length;
    std::string format = "text";
    std::optional<std::string> output;
    std::optional<std::string> cache_dir;
    bool no_cache = false;
};

std::uint32_t narrow_param(std::int64_t v, const char* name, std::int64_t minimum) {
    if (v < minimum || v > std::numeric_limits<std::uint32_t>::max()) {
        throw UsageError(std::string(name) + " must be in [" + std::to_string(minimum) + ", 2^32)");
    }
    return static_cast<std::uint32_t>(v);
}

std::optional<std::size_t> narrow_length(const std::optional<std::int64_t>& v, const char* name) {
    if (!v) return std::nullopt;
    if (*v < 0) throw UsageError(std::string(name) + " must be non-negative");
    return static_cast<std::size_t>(*v);
}

RunConfig to_config(Command command, const RawOptions& raw) {
    RunConfig cfg;
    cfg.command = command;
    cfg.base = narrow_param(raw.base, "base (-b)", 2);
    cfg.modulus = narrow_param(raw.modulus, "modulus (-m)", 1);
    cfg.length = narrow_length(raw.length, "-n/--length");
    cfg.max_length = narrow_length(raw.max_length, "--max-n");
    if (raw.format == "text") cfg.format = Format::Text;
    else if (raw.format == "json") cfg.format = Format::Json;
    else cfg.format = Format::Csv;
    if (raw.output) cfg.output = *raw.output;
    if (!raw.no_cache) {
        if (raw.cache_dir) {
            cfg.cache_dir = *raw.cache_dir;
        } else if (const char* env = std::getenv(kCacheEnv); env && *env) {
            cfg.cache_dir = env;
        }
    }
    cfg.validate();
    return cfg;
}

Document execute(const RunConfig& cfg) {
    const Params params = Params::make(cfg.base, cfg.modulus);
    if (cfg.command == Command::Generate) return generate_document(params, *cfg.length);

    std::shared_ptr<const LevelStore> store;
    if (cfg.cache_dir) store = std::make_shared<const LevelStore>(*cfg.cache_dir);
    const Language lang(params, store);

    switch (cfg.command) {
        case Command::Complexity: return complexity_document(lang, *cfg.max_length);
        case Command::Richness: return richness_document(lang, *cfg.max_length);
        case Command::Bispecial:
            if (cfg.length) return bispecial_document(lang, *cfg.length, *cfg.length);
            return bispecial_document(lang, 1, *cfg.max_length);
        case Command::Verify: return verify_document(lang);
        case Command::Generate: break;
    }
    return generate_document(params, 0);
}

std::string csv_footer(Command command) { return "CSV columns: " + csv_header(command); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Thue-Morse words: generation, factor statistics and D_m-richness checks", "gtm"};
    app.require_subcommand(1);

    RawOptions raw;
    std::optional<Command> chosen;

    auto add_common = [&](CLI::App* sub, Command command, bool wants_length, bool wants_range) {
        sub->add_option("-b,--base", raw.base, "base b >= 2")->required();
        sub->add_option("-m,--modulus", raw.modulus, "modulus m >= 1")->required();
        if (wants_length) sub->add_option("-n,--length", raw.length, "length N");
        if (wants_range) sub->add_option("--max-n", raw.max_length, "largest length to analyse");
        sub->add_option("--format", raw.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--output", raw.output, "write to this file instead of stdout");
        sub->add_option("--cache-dir", raw.cache_dir, "directory for cached language levels (default $GTM_CACHE_DIR)");
        sub->add_flag("--no-cache", raw.no_cache, "ignore any cache directory");
        sub->footer(csv_footer(command));
        sub->callback([&chosen, command] { chosen = command; });
    };

    add_common(app.add_subcommand("generate", "print a prefix of t_{b,m}"), Command::Generate, true, false);
    add_common(app.add_subcommand("complexity", "brute-force and closed-form factor complexity for n = 0..max-n"),
               Command::Complexity, false, true);
    add_common(app.add_subcommand("richness", "richness defects, closure and injectivity for n = 1..max-n"),
               Command::Richness, false, true);
    add_common(app.add_subcommand("bispecial", "bispecial factors of length n, or of every length up to max-n"),
               Command::Bispecial, true, true);
    add_common(app.add_subcommand("verify", "run the structural property suite"), Command::Verify, false, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "gtm: " << e.what() << '\n';
        return kUsage;
    }
    if (!chosen) {
        err << "gtm: no command given\n";
        return kUsage;
    }

    RunConfig cfg;
    Document doc;
    try {
        cfg = to_config(*chosen, raw);
        doc = execute(cfg);
    } catch (const UsageError& e) {
        err << "gtm: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "gtm: " << e.what() << '\n';
        return kUsage;
    }

    if (cfg.output) {
        std::ofstream file(*cfg.output, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "gtm: cannot open " << cfg.output->string() << '\n';
            return kUsage;
        }
        render(file, doc.body, cfg.command, cfg.format);
    } else {
        render(out, doc.body, cfg.command, cfg.format);
    }

    if (doc.exit_code == kMismatch && cfg.command == Command::Complexity) {
        err << "gtm: formula disagrees with brute force at n = " << doc.body["summary"]["first_mismatch"] << '\n';
    }
    return doc.exit_code;
}

}  // namespace gtm::cli
