#ifndef NCREP_QUIVER_IO_HPP
#define NCREP_QUIVER_IO_HPP

#include <string>
#include <string_view>

#include "ncrep/quiver.hpp"

namespace ncrep
{

/// Quiver file format.
///
///     # Jordan quiver
///     vertices: [v]
///     arrows: [{x, v, v}]
///     double: true
///
/// Statements `key: value` are separated by newlines or `;`. `vertices` is a
/// list of names, `arrows` a list of records, either positional
/// `{name, tail, head}` or keyed `{name: x, tail: v, head: v}`. The optional
/// `double: true` doubles the quiver on load. `#` starts a comment. Vertex
/// names are [A-Za-z0-9_]+; arrow names start with a letter or `_`, and may
/// not contain the reserved suffix `~` or be spelled e_<vertex>.
///
/// Throws ParseError with 1-based line and column.
Quiver parse_quiver(std::string_view text);

// Reads and parses a file. Throws std::runtime_error if it cannot be read.
Quiver load_quiver(const std::string &path);

// Inverse of parse_quiver: a double quiver prints its base arrows and
// `double: true`, preceded by a comment listing every arrow.
std::string print_quiver(const Quiver &q);

} // namespace ncrep

#endif
