#include "tautilt/table.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace tautilt {

std::string render_table(CountEngine& engine, const TableRequest& request) {
    if (request.r_max < 1 || request.n_max < 1) {
        throw std::invalid_argument("table ranges must be nonempty: r_max and n_max must be >= 1");
    }
    std::vector<std::vector<std::string>> cells;
    for (int r = 1; r <= request.r_max; ++r) {
        auto& row = cells.emplace_back();
        for (int n = 1; n <= request.n_max; ++n) row.push_back(engine.count(request.family, r, n).str());
    }

    std::ostringstream out;
    switch (request.format) {
        case TableFormat::Markdown: {
            out << "| r \\ n |";
            for (int n = 1; n <= request.n_max; ++n) out << ' ' << n << " |";
            out << "\n|---|";
            for (int n = 1; n <= request.n_max; ++n) out << "---:|";
            out << '\n';
            for (int r = 1; r <= request.r_max; ++r) {
                out << "| " << r << " |";
                for (const auto& v : cells[static_cast<std::size_t>(r - 1)]) out << ' ' << v << " |";
                out << '\n';
            }
            break;
        }
        case TableFormat::Csv:
            for (const auto& row : cells) {
                for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k];
                out << '\n';
            }
            break;
        case TableFormat::Json: {
            nlohmann::json doc;
            doc["family"] = to_string(request.family);
            doc["r_max"] = request.r_max;
            doc["n_max"] = request.n_max;
            doc["rows"] = nlohmann::json::array();
            for (int r = 1; r <= request.r_max; ++r) {
                doc["rows"].push_back({{"r", r}, {"values", cells[static_cast<std::size_t>(r - 1)]}});
            }
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

}  // namespace tautilt
