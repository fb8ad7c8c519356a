#pragma once

#include <string>

#include "gonalbn/json_io.hpp"

namespace gonalbn {

std::string render_text(const Rank1Query& q);
std::string render_text(const ClassifierReport& r);
std::string render_text(const FixedDetReport& r);
std::string render_text(const Atlas& a);
std::string render_text(const VerificationReport& r);

// CSV: header row plus one row per component, UTF-8.
std::string render_csv(const Rank1Query& q);
std::string render_csv(const ClassifierReport& r);
std::string render_csv(const FixedDetReport& r);

// Fixed 80-column number line with one band per family, proportional
// placement and a legend.
std::string render_ascii_atlas(const Atlas& a);

// Self-contained SVG document, 800-pixel-wide viewBox.
std::string render_svg_atlas(const Atlas& a);

}  // namespace gonalbn
