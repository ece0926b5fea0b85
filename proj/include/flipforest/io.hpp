#pragma once

#include <iosfwd>
#include <string>

#include "flipforest/core.hpp"

namespace flipforest {

// Tree text format (.nct): first non-comment line "n <int>", then one
// "i j" pair per line, 1-based. '#' starts a comment; edge order does not
// matter on input. The writer emits edges sorted lexicographically.
//
// Flip-sequence format (.nfs): "n <int>", a "start" block listing the start
// tree's edges, then one line per flip: "- i j + k l".
//
// Parsers throw Error("Parse", ...) on malformed input and validate the
// parsed tree / start tree.

NcTree read_tree(std::istream& in);
NcTree read_tree_string(const std::string& text);
NcTree read_tree_file(const std::string& path);
std::string write_tree(const NcTree& t);
void write_tree_file(const NcTree& t, const std::string& path);

FlipSeq read_sequence(std::istream& in);
FlipSeq read_sequence_string(const std::string& text);
FlipSeq read_sequence_file(const std::string& path);
std::string write_sequence(const FlipSeq& seq);
void write_sequence_file(const FlipSeq& seq, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace flipforest
