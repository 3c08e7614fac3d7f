#pragma once

// Table rendering and the JSON interchange format
//
//   { "entries": [{"k":0,"n":0,"v":"1"}, ...],
//     "nmax": N,
//     "spec": {"a":["a0","a1","a2"], "b":["b0","b1","b2"]} }
//
// Rationals are strings in the "p" / "p/q" wire format. Keys are emitted
// sorted, so parse + re-serialize of emitted output is byte-identical.

#include "gkp/core.hpp"

#include <string>
#include <string_view>

namespace gkp {

enum class TableFormat { Csv, Json, Markdown };

TableFormat parse_table_format(std::string_view name);

struct TableExport {
    GkpSpec spec;
    Triangle triangle;
};

// csv: "n,k,value" header then one triple per entry.
// md: one table row per n.
std::string render_table(const TableExport& t, TableFormat format);

std::string triangle_to_json(const TableExport& t);

// Throws std::invalid_argument on schema violations (missing keys, entries
// outside 0 <= k <= n <= nmax, duplicates, or holes).
TableExport triangle_from_json(std::string_view text);

}  // namespace gkp
