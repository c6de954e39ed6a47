#ifndef CARTAN_TABLEIO_HPP
#define CARTAN_TABLEIO_HPP

#include <iosfwd>
#include <string>

#include "cartan/table.hpp"

namespace cartan {

/// Versioned text export of an algebra table: a header with the family,
/// generator count, gradings and weights, then one record per nonzero
/// structure constant "c a b k num den". Round-trips bit-exactly.
void export_table(std::ostream& os, const AlgebraTable& t);
std::string export_table_string(const AlgebraTable& t);

/// Parses the export format. Validates shape (indices in range, vector
/// lengths) but not the algebraic invariants, so that verification
/// subcommands can report defects in imported tables as check failures.
/// The vector-field realization is not part of the format; imported tables
/// have an empty basis.
AlgebraTable import_table(std::istream& is);
AlgebraTable import_table_string(const std::string& s);

}  // namespace cartan

#endif
