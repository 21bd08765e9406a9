#pragma once

#include <map>
#include <string>
#include <vector>

#include "hartree/field.hpp"

namespace hartree::io {

// Versioned binary container: ASCII header and metadata lines followed by
// raw little-endian 64-bit floats per field.
//
//   <header>\n
//   meta <count>\n
//   <key> <value %.17g>\n ...
//   fields <count>\n
//   field <n> <box_length>\n
//   <n^3 doubles> ...
//   end\n
struct Container {
    std::string header;
    std::map<std::string, double> meta;
    std::vector<Field> fields;
};

void write_container(const std::string& path, const Container& c);
Container read_container(const std::string& path, const std::string& expect_header);

std::string format_double(double v);  // shortest round-trip (%.17g)

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace hartree::io
