#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hera/matrix.hpp"

namespace hera {

/// Matrix file format: optional comment lines starting with '#' (the writer
/// records the field spec as "# field p,k,digits"), then "rows,cols", then
/// one CSV line of canonical integer encodings per row.
void write_matrix(std::ostream& os, const FieldMatrix& m);
void write_matrix_file(const std::string& path, const FieldMatrix& m);

FieldMatrix read_matrix(std::istream& is, const Field& field);
FieldMatrix read_matrix_file(const std::string& path, const Field& field);

/// Line-oriented key=value scheme configuration:
/// q, L, T, a, b, c, seed, optional points= (comma-separated canonical
/// indices). Blank lines and '#' comments are skipped.
struct SchemeConfig {
    uint32_t q = 0;
    size_t L = 0, T = 0;
    size_t a = 0, b = 0, c = 0;
    uint64_t seed = 0;
    std::optional<std::vector<size_t>> points;
};

SchemeConfig parse_scheme_config(std::istream& is);
SchemeConfig read_scheme_config(const std::string& path);

std::vector<size_t> parse_index_list(const std::string& csv);

} // namespace hera
