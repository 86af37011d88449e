#ifndef SHIMIN_RENDER_HPP
#define SHIMIN_RENDER_HPP

#include "shimin/diagrams.hpp"

#include <string>

namespace shimin {

/*
 * ASCII drawing: arcs as "+---+" brackets above a row of values. In type D the
 * bottom fork value sits on a second row under the top one, and arcs ending at
 * it are drawn upside down below that row.
 */
std::string render_text(const ArcDiagram& d);

/// Standalone SVG document (dots, value labels, arcs as Bezier curves).
std::string render_svg(const ArcDiagram& d);

} // namespace shimin

#endif // SHIMIN_RENDER_HPP
