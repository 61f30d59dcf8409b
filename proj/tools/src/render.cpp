#include "gtm/cli/render.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gtm::cli {

namespace {

// Plain text for scalars; strings unquoted, null as "-".
std::string cell(const Json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

struct Column {
    const char* title;
    const char* key;
    const char* sub = nullptr;  // nested field, e.g. expected.pext_count
};

const Json& lookup(const Json& row, const Column& col) {
    static const Json null_value;
    const Json& v = row.at(col.key);
    if (!col.sub) return v;
    if (v.is_null()) return null_value;
    return v.at(col.sub);
}

std::vector<Column> columns(Command command) {
    switch (command) {
        case Command::Generate:
            return {{"length", "length"}, {"word", "word"}};
        case Command::Complexity:
            return {{"n", "n"},
                    {"c", "c"},
                    {"delta_c", "delta_c"},
                    {"formula_c", "formula_c"},
                    {"formula_delta_c", "formula_delta_c"},
                    {"branch", "branch"},
                    {"match", "match"}};
        case Command::Richness:
            return {{"n", "n"}, {"lhs", "lhs"}, {"rhs", "rhs"}, {"defect", "defect"}};
        case Command::Bispecial:
            return {{"length", "length"},
                    {"word", "word"},
                    {"bilateral_order", "bilateral_order"},
                    {"theta", "theta"},
                    {"pext_count", "pext_count"},
                    {"expected_bilateral_order", "expected", "bilateral_order"},
                    {"expected_pext_count", "expected", "pext_count"},
                    {"match", "match"}};
        case Command::Verify:
            return {{"id", "id"}, {"status", "status"}, {"description", "description"}, {"witness", "witness"}};
    }
    return {};
}

void render_table(std::ostream& out, const Json& rows, const std::vector<Column>& cols) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width;
    for (const Column& c : cols) width.push_back(std::string_view(c.title).size());
    for (const Json& row : rows) {
        auto& line = cells.emplace_back();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            line.push_back(cell(lookup(row, cols[i])));
            width[i] = std::max(width[i], line.back().size());
        }
    }
    auto emit = [&](auto&& get) {
        std::string line;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            std::string s = get(i);
            if (i + 1 < cols.size()) s.resize(width[i], ' ');
            line += s;
            if (i + 1 < cols.size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    };
    emit([&](std::size_t i) { return std::string(cols[i].title); });
    for (const auto& line : cells) emit([&](std::size_t i) { return line[i]; });
}

void render_text(std::ostream& out, const Json& doc, Command command) {
    const Json& params = doc.at("params");
    const Json& results = doc.at("results");
    const Json& summary = doc.at("summary");

    if (command == Command::Generate) {
        out << results.at(0).at("word").get<std::string>() << '\n';
        return;
    }

    out << "t_{" << params.at("b") << ',' << params.at("m") << "}  q = " << params.at("q")
        << (params.at("periodic").get<bool>() ? "  (periodic)" : "") << '\n';

    switch (command) {
        case Command::Complexity:
            render_table(out, results, columns(command));
            if (summary.at("all_match").get<bool>()) {
                out << "formula agrees with brute force\n";
            } else {
                out << "MISMATCH at n = " << summary.at("first_mismatch") << '\n';
            }
            break;
        case Command::Richness: {
            if (summary.at("periodic_case").get<bool>()) out << "periodic case\n";
            out << "antimorphisms:";
            for (const Json& a : summary.at("antimorphisms")) out << ' ' << a.get<std::string>();
            out << '\n';
            render_table(out, results, columns(command));
            for (const char* key : {"closure", "injectivity"}) {
                const Json& check = summary.at(key);
                out << key << ": " << (check.at("ok").get<bool>() ? "ok" : "FAILED");
                if (!check.at("counterexample").is_null()) out << "  " << check.at("counterexample").dump();
                out << '\n';
            }
            out << summary.at("verdict").get<std::string>() << '\n';
            break;
        }
        case Command::Bispecial:
            if (results.empty()) {
                out << "no bispecial factors\n";
            } else {
                render_table(out, results, columns(command));
            }
            out << summary.at("contradictions") << " contradiction(s) in " << summary.at("checked_against_table")
                << " short factor(s) checked\n";
            break;
        case Command::Verify:
            for (const Json& r : results) {
                std::string status = r.at("status").get<std::string>();
                status.resize(5, ' ');
                out << status << ' ' << r.at("id").get<std::string>() << "  " << r.at("description").get<std::string>();
                const std::string witness = r.at("witness").get<std::string>();
                if (!witness.empty()) out << "  [" << witness << ']';
                out << '\n';
            }
            out << (summary.at("all_passed").get<bool>() ? "all properties hold" : "some properties FAILED") << '\n';
            break;
        case Command::Generate:
            break;
    }
}

}  // namespace

std::string csv_header(Command command) {
    std::string header;
    for (const Column& c : columns(command)) {
        if (!header.empty()) header += ',';
        header += c.title;
    }
    return header;
}

void render(std::ostream& out, const Json& doc, Command command, Format format) {
    switch (format) {
        case Format::Json:
            out << doc.dump(2) << '\n';
            return;
        case Format::Csv: {
            const auto cols = columns(command);
            out << csv_header(command) << '\n';
            for (const Json& row : doc.at("results")) {
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    if (i) out << ',';
                    out << csv_cell(lookup(row, cols[i]));
                }
                out << '\n';
            }
            return;
        }
        case Format::Text:
            render_text(out, doc, command);
            return;
    }
}

}  // namespace gtm::cli
