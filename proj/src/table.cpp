#include "wgqed/table.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wgqed/types.hpp"

namespace wgqed {

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

void ResultTable::write(std::ostream& os) const {
    for (std::size_t j = 0; j < columns.size(); ++j)
        os << columns[j] << (j + 1 < columns.size() ? "\t" : "");
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << row[j] << (j + 1 < row.size() ? "\t" : "");
        os << "\n";
    }
}

std::string ResultTable::to_string() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

void emit_plot_data(const ResultTable& table, const std::string& path,
                    const std::string& command, std::uint64_t config_hash) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    char hash[24];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(config_hash));
    out << "# wgqed " << command << "\n";
    out << "# config_fnv1a64: " << hash << "\n";
    table.write(out);
    if (!out) throw ValidationError("write failed: " + path);
}

}  // namespace wgqed
