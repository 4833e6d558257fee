#pragma once

#include "ldpcdist/bitmat.hpp"

#include <iosfwd>
#include <string>

namespace ldpcdist {

/// Parse the alist interchange format:
///   line 1: n r
///   line 2: max_col_wt max_row_wt
///   line 3: n column weights
///   line 4: r row weights
///   n lines of 1-based row indices per column, zero-padded to max_col_wt
///   r lines of 1-based column indices per row, zero-padded to max_row_wt
/// Both adjacency blocks must agree. Errors carry the offending line number.
BitMatrix alist_read(std::istream& in);
BitMatrix alist_read_file(const std::string& path);

/// Byte-stable writer for the format above; indices ascending, single spaces,
/// every line newline-terminated.
void alist_write(const BitMatrix& m, std::ostream& out);
void alist_write_file(const BitMatrix& m, const std::string& path);
std::string alist_to_string(const BitMatrix& m);

} // namespace ldpcdist
