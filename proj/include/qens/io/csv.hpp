#ifndef QENS_IO_CSV_HPP
#define QENS_IO_CSV_HPP

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qens::io {

struct Column {
    std::string name;
    std::string unit;  // empty for dimensionless
    std::vector<double> values;
};

inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

/// Writes columns of equal length; the header is "name (unit)".
/// Values use 12 significant digits so repeated runs are byte-identical.
inline void write_csv(const std::string& path, const std::vector<Column>& cols) {
    if (cols.empty()) throw std::invalid_argument("write_csv: no columns");
    const std::size_t rows = cols.front().values.size();
    for (const auto& c : cols)
        if (c.values.size() != rows) throw std::invalid_argument("write_csv: column '" + c.name + "' has wrong length");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j) out << ',';
        out << cols[j].name;
        if (!cols[j].unit.empty()) out << " (" << cols[j].unit << ')';
    }
    out << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j) out << ',';
            out << format_value(cols[j].values[i]);
        }
        out << '\n';
    }
    if (!out) throw std::ios_base::failure("write failed for '" + path + "'");
}

}  // namespace qens::io

#endif
