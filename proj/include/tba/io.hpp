#pragma once

#include <iosfwd>
#include <string>

#include "tba/algebra.hpp"

namespace tba {

/// Reads the native format: "tba 1" header, dim, degrees, involution and
/// sparse lambda lines, with # comments.  Structural problems raise
/// ParseError; the result still needs axiom validation.
RawAlgebra parse_native_raw(std::istream& in);

/// parse_native_raw followed by full validation (throws AxiomError).
TableAlgebra::Ptr parse_native(std::istream& in);

/// Writes the native format; parse_native(write_native(A)) reproduces A.
void write_native(std::ostream& out, const TableAlgebra& algebra);
std::string write_native(const TableAlgebra& algebra);

/// Reads an association scheme as an n x n color matrix ("scheme" header)
/// and forms its adjacency algebra: lambda_ijk = p^k_ij, degrees are the
/// valencies, star reverses colors.  Violations raise NotAScheme.
RawAlgebra parse_scheme_raw(std::istream& in);
TableAlgebra::Ptr parse_scheme(std::istream& in);

/// Reads a finite group as an n x n Cayley table ("group" header, identity
/// element 0) and forms its group algebra: all degrees one, star inverts.
/// Violations raise NotAGroup.
RawAlgebra parse_group_raw(std::istream& in);
TableAlgebra::Ptr parse_group(std::istream& in);

/// Dispatches on the first token of the stream: tba, scheme or group.
RawAlgebra parse_any_raw(std::istream& in);
TableAlgebra::Ptr parse_any(std::istream& in);

/// parse_any on the contents of a file; unreadable paths raise FileError.
RawAlgebra load_raw(const std::string& path);
TableAlgebra::Ptr load_algebra(const std::string& path);

/// The (q+2)-dimensional algebra with basis r_0 .. r_{q+1}, all elements
/// self-adjoint of degree q-1, and
///   r_i r_i = (q-1) r_0 + (q-2) r_i
///   r_i r_j = sum of all r_k with k not in {0, i, j}     (i != j)
/// Defined for q >= 2.
TableAlgebra::Ptr example_q(int q);

}  // namespace tba
