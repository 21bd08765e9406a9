#include "hartree/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hartree/grid.hpp"

namespace hartree::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_container(const std::string& path, const Container& c) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_container: cannot open " + path);
    out << c.header << "\n";
    out << "meta " << c.meta.size() << "\n";
    for (const auto& [k, v] : c.meta) out << k << " " << format_double(v) << "\n";
    out << "fields " << c.fields.size() << "\n";
    for (const Field& f : c.fields) {
        out << "field " << f.grid.n << " " << format_double(f.grid.box_length) << "\n";
        out.write(reinterpret_cast<const char*>(f.values.data()),
                  static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    }
    out << "end\n";
    if (!out) throw std::runtime_error("write_container: write failed for " + path);
}

Container read_container(const std::string& path, const std::string& expect_header) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_container: cannot open " + path);
    Container c;
    std::getline(in, c.header);
    if (c.header != expect_header)
        throw std::runtime_error("read_container: expected header " + expect_header + ", got '" +
                                 c.header + "' in " + path);
    std::string word;
    std::size_t count = 0;
    in >> word >> count;
    if (word != "meta") throw std::runtime_error("read_container: malformed meta block in " + path);
    for (std::size_t i = 0; i < count; ++i) {
        std::string key;
        double value;
        in >> key >> value;
        c.meta[key] = value;
    }
    in >> word >> count;
    if (word != "fields") throw std::runtime_error("read_container: malformed fields block in " + path);
    for (std::size_t i = 0; i < count; ++i) {
        int n;
        double box;
        in >> word >> n >> box;
        if (word != "field") throw std::runtime_error("read_container: malformed field entry in " + path);
        in.ignore(1);  // newline before raw data
        Grid3 g = make_grid(n, box);
        Field f(g);
        in.read(reinterpret_cast<char*>(f.values.data()),
                static_cast<std::streamsize>(f.values.size() * sizeof(double)));
        if (!in) throw std::runtime_error("read_container: truncated field data in " + path);
        c.fields.push_back(std::move(f));
    }
    in >> word;
    if (word != "end") throw std::runtime_error("read_container: missing end marker in " + path);
    return c;
}

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
}

}  // namespace hartree::io
