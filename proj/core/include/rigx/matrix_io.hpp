#pragma once

// Text formats:
//   matrix: "gfmat 1 p=<p> m=<m> n=<n>\n" then m lines of n space-separated
//           entries in [0, p), LF endings, no trailing whitespace.
//   ds:     "gfds 1 p=<p> m=<m> n=<n> s=<s> t=<t>\n", P (s lines), a blank
//           line, then Q (m lines).

#include <iosfwd>
#include <string>
#include <string_view>

#include "rigx/gfmat.hpp"

namespace rigx {

struct LinearDS;

std::string format_matrix(const FieldMatrix& m);
FieldMatrix parse_matrix(std::string_view text);

std::string format_ds(const LinearDS& ds);
LinearDS parse_ds(std::string_view text);

FieldMatrix read_matrix_file(const std::string& path);
LinearDS read_ds_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// FNV-1a 64-bit digest rendered as 16 hex digits; stable across platforms.
std::string digest_hex(std::string_view bytes);

}  // namespace rigx
