#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lklab/graphs.hpp"

namespace lklab {

// DIMACS undirected-graph export, bit-exact:
//   c lklab family=<name> [m=..] [n=..] [r=..] [t=..]
//   p edge <V> <E>
//   e <u> <v>          (1-based, u < v, ascending)
// The label sidecar has one line per vertex:
//   <index> TAB {A} TAB {B}
// with sets rendered as comma-separated ascending integers in braces.
void write_dimacs(std::ostream& os, const Graph& g);
void write_label_sidecar(std::ostream& os, const Graph& g);

struct LabeledGraphFile {
    std::string family; // from the header comment; empty when absent
    int m = 0, n = 0, r = 0, t = 0;
    int vertices = 0;
    std::vector<std::pair<int, int>> edges; // 0-based
    std::vector<VertexLabel> labels;        // filled by attach_labels
};

// Parses a DIMACS file; SchemaError on malformed input.
LabeledGraphFile read_dimacs(std::istream& is);

// Parses a sidecar and attaches the labels; SchemaError on malformed input,
// wrong vertex count, duplicate labels, or overlapping (A, B).
void attach_labels(LabeledGraphFile& file, std::istream& sidecar);

// Checks a loaded file against its family's adjacency rule: every listed
// edge must satisfy the rule and every rule-satisfying pair must be listed.
// Returns an empty string on success, else a description of the first
// mismatch. SchemaError when the family header is missing or unknown.
std::string check_file_against_family(const LabeledGraphFile& file);

} // namespace lklab
