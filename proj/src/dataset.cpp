#include "moglib/dataset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace moglib {

std::vector<double> Dataset::column(int k) const {
    if (k != 1 && k != 2) throw std::domain_error("Dataset::column: k must be 1 or 2");
    std::vector<double> out;
    out.reserve(pairs.size());
    for (const auto& pt : pairs) out.push_back(k == 1 ? pt.x1 : pt.x2);
    return out;
}

namespace {

double parse_field(const std::string& field, const std::string& path, std::size_t line) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::runtime_error(path + ":" + std::to_string(line) +
                                 ": not a number: '" + field + "'");
    if (value < 0.0)
        throw std::runtime_error(path + ":" + std::to_string(line) +
                                 ": negative value: '" + field + "'");
    return value;
}

}  // namespace

Dataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_csv: cannot open " + path);

    Dataset ds;
    ds.name = path;
    ds.source = path;

    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != "x1,x2")
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": expected header 'x1,x2'");
            saw_header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected exactly two comma-separated fields");
        const double x1 = parse_field(line.substr(0, comma), path, line_no);
        const double x2 = parse_field(line.substr(comma + 1), path, line_no);
        ds.pairs.push_back({x1, x2});
    }
    if (!saw_header) throw std::runtime_error("load_csv: " + path + ": empty file");
    if (ds.pairs.empty()) throw std::runtime_error("load_csv: " + path + ": no data rows");
    return ds;
}

Dataset uefa_dataset() {
    // Meintanis (2007), seasons 2005:2006 then 2004:2005.
    static const BivariatePoint kPairs[37] = {
        {26, 20}, {63, 18}, {19, 19}, {66, 85}, {40, 40}, {49, 49}, {8, 8},
        {69, 71}, {39, 39}, {82, 48}, {72, 72}, {66, 62}, {25, 9},  {41, 3},
        {16, 75}, {18, 18}, {22, 14}, {42, 42}, {36, 52}, {34, 34}, {53, 39},
        {54, 7},  {51, 28}, {76, 64}, {64, 15}, {26, 48}, {16, 16}, {44, 13},
        {25, 14}, {55, 11}, {49, 49}, {24, 24}, {44, 30}, {42, 3},  {27, 47},
        {28, 28}, {2, 2}};
    Dataset ds;
    ds.name = "uefa";
    ds.source = "Meintanis (2007), UEFA Champions League 2004-2006";
    ds.pairs.assign(std::begin(kPairs), std::end(kPairs));
    return ds;
}

}  // namespace moglib
