// documents.hpp -- command results as JSON documents
//
// Every command produces one document:
//
//   { "params":  {"b": .., "m": .., "q": .., "periodic": ..},
//     "command": "<name>",
//     "results": [ one object per row ],
//     "summary": { command-specific verdicts } }
//
// All numbers are exact integers. Text and CSV output are rendered from the
// same document, so the three formats never disagree.

#pragma once

#include <json.hpp>

#include "gtm/cli/config.hpp"
#include "gtm/language.hpp"

namespace gtm::cli {

using Json = nlohmann::json;

struct Document {
    Json body;
    int exit_code = kSuccess;
};

Document generate_document(const Params& params, std::size_t length);
Document complexity_document(const Language& lang, std::size_t max_length);
Document richness_document(const Language& lang, std::size_t max_length);
Document bispecial_document(const Language& lang, std::size_t min_length, std::size_t max_length);
Document verify_document(const Language& lang);

Json params_json(const Params& params);

}  // namespace gtm::cli
