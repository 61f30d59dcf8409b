#pragma once

#include <ostream>

#include "gtm/cli/config.hpp"
#include "gtm/cli/documents.hpp"

namespace gtm::cli {

/// Writes a document in the requested format. Output always ends with a newline.
void render(std::ostream& out, const Json& doc, Command command, Format format);

/// The fixed CSV header for a command (no trailing newline).
std::string csv_header(Command command);

}  // namespace gtm::cli
