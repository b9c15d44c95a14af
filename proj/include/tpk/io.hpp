#pragma once

#include <iosfwd>
#include <string>

#include "tpk/edit_set.hpp"
#include "tpk/graph.hpp"
#include "tpk/kernel.hpp"

namespace tpk {

/// Reads `p tp <n> <m>` followed by exactly m `e <u> <v>` lines (1-based);
/// `#` lines and blank lines are skipped. File vertex i becomes vertex i-1.
/// Throws ParseError carrying the offending line number.
Graph parse_graph(std::istream &in);
Graph parse_graph_text(const std::string &text);

/// Canonical form with edges sorted. By default identifiers are kept: the
/// header counts id_bound vertices and missing identifiers, which read back
/// as isolated vertices, are listed in a leading `# absent` comment. With
/// renumber, present vertices become 1..n in identifier order and a leading
/// `# ids` comment lists their original (1-based) identifiers.
void write_graph(std::ostream &out, const Graph &g, bool renumber = false);
std::string graph_to_text(const Graph &g, bool renumber = false);

/// `add u v` / `del u v` lines, 1-based. Throws ParseError.
EditSet parse_edits(std::istream &in);
void write_edits(std::ostream &out, const EditSet &f);

/// JSON document {"steps": [{"rule", "removed", "added", "note"}]} with
/// 1-based vertices. read_trace throws ParseError on malformed input.
void write_trace(std::ostream &out, const ReductionTrace &trace);
ReductionTrace read_trace(std::istream &in);

}  // namespace tpk
