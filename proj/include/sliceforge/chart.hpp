#pragma once

#include "sliceforge/slice.hpp"

#include <string>

// Deterministic chart serialization: versioned JSON, SVG 1.1, plain-text
// grids. Identical pages produce byte-identical documents.

namespace sliceforge::chart {

std::string export_json(const slice::Page& page);
std::string export_svg(const slice::Page& page);
std::string export_txt(const slice::Page& page);
// format: "json" | "svg" | "txt"; throws slice::UnsupportedFormat
std::string export_chart(const slice::Page& page, const std::string& format);

// Re-ingest an exported E1 page. The serialized entries and differential
// blocks are validated against a rebuild from the page parameters; a
// mismatch (hand-edited or stale file) is an error.
slice::Page import_json(const std::string& text);

}  // namespace sliceforge::chart
