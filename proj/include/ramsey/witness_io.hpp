#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/schur.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace ramsey {

// Text formats. Edge colorings:
//
//   ramsey-witness N=<int> n=<int>
//   i j c        (one line per edge, 0 <= i < j < N, 0 <= c < n)
//
// Schur partitions:
//
//   schur-witness N=<int> n=<int>
//   v b          (one line per integer, 1 <= v <= N, 0 <= b < n)
//
// Every edge (or integer) must appear exactly once; duplicates and gaps
// are rejected. '#' starts a comment; blank lines are ignored. All
// parsers throw FormatError with the offending line number.

EdgeColoring read_ramsey_witness(std::istream& in, const std::string& source);
EdgeColoring load_ramsey_witness(const std::string& path);
void write_ramsey_witness(std::ostream& out, const EdgeColoring& c);
void save_ramsey_witness(const std::string& path, const EdgeColoring& c);

SchurPartition read_schur_witness(std::istream& in, const std::string& source);
SchurPartition load_schur_witness(const std::string& path);
void write_schur_witness(std::ostream& out, const SchurPartition& p);
void save_schur_witness(const std::string& path, const SchurPartition& p);

// Dispatches on the header line.
std::variant<EdgeColoring, SchurPartition> load_witness(const std::string& path);

}  // namespace ramsey
