#ifndef CITERANK_EDGE_IO_HPP
#define CITERANK_EDGE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "citerank/model.hpp"

namespace citerank {

/// How input columns map onto citation edges.
///
/// citations: lines are `citer,cited[,count]` and are taken as written.
/// league:    lines are `winner,loser[,count]`. The WINNER is the CITED
///            party: beating a team is that team endorsing you, so the line
///            becomes the edge (citer = loser, cited = winner). Example:
///            `tigers,lions,2` (tigers beat lions twice) is the citation
///            edge ("lions", "tigers", 2), and weight flows to tigers.
enum class InputMode { Citations, League };

const char* to_string(InputMode m);

/// Parses comma- or tab-separated edge lines. The count column is optional
/// and defaults to 1. Blank lines and `#` comments are skipped, as is an
/// optional leading header line (`citer,cited[,count]` / `winner,loser[,count]`).
/// Throws ParseError (with the 1-based line number) on malformed lines and
/// on counts that are not positive integers.
std::vector<Edge> parse_edges(std::istream& in, const std::string& path, InputMode mode);

/// Same, reading from a file. Throws InputError when the file cannot be read.
std::vector<Edge> parse_edges_file(const std::string& path, InputMode mode);

}  // namespace citerank

#endif
