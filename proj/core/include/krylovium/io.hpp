#pragma once

#include <iosfwd>
#include <string>

#include "krylovium/dense_matrix.hpp"
#include "krylovium/poly_matrix.hpp"

namespace krylovium {

/// Matrix text format: a header line "p n m", then n lines of m residues in
/// [0, p), single-space separated, LF line endings. p must be prime.
/// Parsing throws ParseError carrying the offending 1-based line number.
DenseMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const DenseMatrix& m);

DenseMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const DenseMatrix& m);

/// Order-tuple format: one line of space-separated naturals (may be empty).
DegreeTuple read_tuple(std::istream& in);
void write_tuple(std::ostream& out, const DegreeTuple& d);
DegreeTuple read_tuple_file(const std::string& path);

/// Polynomial line: coefficients low-to-high, space separated; the zero
/// polynomial is an empty line.
std::string poly_to_line(const Poly& f);

}  // namespace krylovium
