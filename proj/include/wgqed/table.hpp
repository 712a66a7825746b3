// Deterministic tabular output: fixed column order, 9 significant digits.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wgqed {

std::string format_number(double x);  ///< %.9g, locale-independent

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::vector<std::string>& add_row() { return rows.emplace_back(); }
    void write(std::ostream& os) const;  ///< tab-separated, header first
    std::string to_string() const;
};

/// Write the table to a delimiter-separated file with a comment block
/// naming the command and the config hash. Throws ValidationError when the
/// file cannot be opened.
void emit_plot_data(const ResultTable& table, const std::string& path,
                    const std::string& command, std::uint64_t config_hash);

}  // namespace wgqed
