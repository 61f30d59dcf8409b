#include "gtm/cli/documents.hpp"

#include "gtm/closedform.hpp"
#include "gtm/palcomplexity.hpp"
#include "gtm/properties.hpp"
#include "gtm/richness.hpp"

namespace gtm::cli {

namespace {

Json word_json(WordView w, std::uint32_t modulus) { return gtm::to_string(w, modulus); }

Json envelope(const Params& params, Command command) {
    Json doc;
    doc["params"] = params_json(params);
    doc["command"] = std::string(to_string(command));
    doc["results"] = Json::array();
    doc["summary"] = Json::object();
    return doc;
}

std::int64_t signed_count(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

Json params_json(const Params& params) {
    return Json{{"b", params.base}, {"m", params.modulus}, {"q", params.last_letter_order}, {"periodic", params.periodic}};
}

Document generate_document(const Params& params, std::size_t length) {
    Document out{envelope(params, Command::Generate)};
    const Word prefix = gtm_prefix(params, length);
    Json letters = Json::array();
    for (Letter a : prefix) letters.push_back(a);
    out.body["results"].push_back(Json{{"length", length}, {"word", word_json(prefix, params.modulus)}, {"letters", std::move(letters)}});
    return out;
}

Document complexity_document(const Language& lang, std::size_t max_length) {
    const Params& params = lang.params();
    Document out{envelope(params, Command::Complexity)};

    std::optional<std::size_t> first_mismatch;
    std::size_t next = complexity(lang, 0);
    for (std::size_t n = 0; n <= max_length; ++n) {
        const std::size_t c = next;
        next = complexity(lang, n + 1);
        const std::int64_t delta = signed_count(next) - signed_count(c);
        const ComplexityFormulaResult f = formula_complexity(params, n);
        const bool match = f.c == signed_count(c) && f.delta_c == delta;
        if (!match && !first_mismatch) first_mismatch = n;

        Json row{{"n", n},
                 {"c", c},
                 {"delta_c", delta},
                 {"formula_c", f.c},
                 {"formula_delta_c", f.delta_c},
                 {"branch", std::string(to_string(f.branch))},
                 {"match", match}};
        out.body["results"].push_back(std::move(row));
    }

    Json& summary = out.body["summary"];
    summary["all_match"] = !first_mismatch.has_value();
    summary["first_mismatch"] = first_mismatch ? Json(*first_mismatch) : Json(nullptr);
    if (first_mismatch) out.exit_code = kMismatch;
    return out;
}

Document richness_document(const Language& lang, std::size_t max_length) {
    const Params& params = lang.params();
    Document out{envelope(params, Command::Richness)};
    const RichnessReport report = richness_report(lang, max_length);

    for (const RichnessRow& row : report.rows) {
        out.body["results"].push_back(Json{{"n", row.length}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"defect", row.defect}});
    }

    Json& summary = out.body["summary"];
    Json antis = Json::array();
    for (const GroupElement& theta : report.antimorphisms) antis.push_back(to_string(theta));
    summary["antimorphisms"] = std::move(antis);
    summary["periodic_case"] = params.periodic;
    summary["all_defects_zero"] = report.all_defects_zero();

    Json closure{{"ok", report.closure.ok}, {"counterexample", nullptr}};
    if (report.closure.counterexample) {
        const auto& ce = *report.closure.counterexample;
        closure["counterexample"] = Json{{"word", word_json(ce.word, params.modulus)}, {"element", to_string(ce.element)}};
    }
    summary["closure"] = std::move(closure);

    Json injectivity{{"ok", report.injectivity.ok}, {"counterexample", nullptr}};
    if (report.injectivity.counterexample) {
        const auto& ce = *report.injectivity.counterexample;
        injectivity["counterexample"] = Json{{"word", word_json(ce.word, params.modulus)},
                                             {"first", to_string(ce.first)},
                                             {"second", to_string(ce.second)}};
    }
    summary["injectivity"] = std::move(injectivity);
    summary["verdict"] = report.verdict();

    if (!report.criterion_satisfied()) out.exit_code = kMismatch;
    return out;
}

Document bispecial_document(const Language& lang, std::size_t min_length, std::size_t max_length) {
    const Params& params = lang.params();
    Document out{envelope(params, Command::Bispecial)};

    std::size_t checked = 0;
    std::size_t contradictions = 0;
    std::size_t total = 0;
    for (std::size_t n = min_length; n <= max_length; ++n) {
        const auto expected = short_bispecial_expectation(params, n);
        for (const BispecialRecord& rec : bispecials(lang, n)) {
            ++total;
            Json row{{"length", n},
                     {"word", word_json(rec.word, params.modulus)},
                     {"bilateral_order", rec.bilateral_order},
                     {"theta", rec.theta ? Json(to_string(*rec.theta)) : Json(nullptr)},
                     {"pext_count", rec.pext_count},
                     {"expected", nullptr},
                     {"match", nullptr}};
            if (expected) {
                const bool match = rec.bilateral_order == expected->bilateral_order && rec.pext_count == expected->pext_count;
                row["expected"] = Json{{"bilateral_order", expected->bilateral_order}, {"pext_count", expected->pext_count}};
                row["match"] = match;
                ++checked;
                if (!match) ++contradictions;
            }
            out.body["results"].push_back(std::move(row));
        }
    }

    Json& summary = out.body["summary"];
    summary["bispecial_count"] = total;
    summary["checked_against_table"] = checked;
    summary["contradictions"] = contradictions;
    if (contradictions > 0) out.exit_code = kMismatch;
    return out;
}

Document verify_document(const Language& lang) {
    Document out{envelope(lang.params(), Command::Verify)};
    const std::vector<PropertyResult> results = run_property_suite(lang);
    std::size_t failed = 0;
    for (const PropertyResult& r : results) {
        if (r.status == PropertyStatus::Fail) ++failed;
        out.body["results"].push_back(Json{{"id", r.id},
                                           {"description", r.description},
                                           {"status", std::string(to_string(r.status))},
                                           {"witness", r.witness}});
    }
    out.body["summary"]["failed"] = failed;
    out.body["summary"]["all_passed"] = failed == 0;
    if (failed > 0) out.exit_code = kMismatch;
    return out;
}

}  // namespace gtm::cli
