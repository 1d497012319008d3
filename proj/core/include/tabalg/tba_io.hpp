#ifndef TABALG_TBA_IO_HPP
#define TABALG_TBA_IO_HPP

#include <iosfwd>
#include <string>

#include "tabalg/table.hpp"

namespace tabalg {

/// Reads one algebra in the line-oriented `tba 1` text format:
///
///     tba 1
///     rank <k>
///     label <i> <name>          (optional)
///     star <i> <j>              (non-fixed points; default identity)
///     deg <i> <num>[/<den>]     (optional; otherwise lambda(i,i*,0))
///     sc <a> <b> <c> <num>[/<den>]
///
/// `#` starts a comment. Decimal numbers are accepted and read as
/// approximate values. Errors throw ParseError with the line number.
StructureConstantTable read_tba(std::istream& in);
StructureConstantTable parse_tba(const std::string& text);

/// Canonical rendering: header, labels, star pairs, all degrees, then sc
/// lines sorted by (a, b, c). Byte-stable for a given table.
std::string write_tba(const StructureConstantTable& t);

}  // namespace tabalg

#endif  // TABALG_TBA_IO_HPP
