#pragma once

#include <string>

#include "qv/presentation.hpp"
#include "qv/quiver.hpp"
#include "qv/signed_graph.hpp"

namespace qv {

// Text formats (UTF-8, line based, '#' starts a comment):
//
//   quiver                       sgraph
//   vertex <label>               vertex <label>
//   arrow <src> <dst> [mult]     solid <u> <v> [mult]
//                                dotted <u> <v> [mult]
//
// A presentation file is a quiver file with extra lines
//   relation <src> <tgt> : <src>><v>>...><tgt> [+ <path>]...

Quiver parse_quiver(const std::string& text);
std::string render_quiver(const Quiver& q);

SignedGraph parse_signed_graph(const std::string& text);
std::string render_signed_graph(const SignedGraph& g);

Presentation parse_presentation(const std::string& text);
std::string render_presentation(const Presentation& p);

std::string render_dot(const Quiver& q);

std::string read_file(const std::string& path);

}  // namespace qv
