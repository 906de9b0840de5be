#include "lsqfit/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "double_text.hpp"
#include "lsqfit/errors.hpp"

namespace lsqfit {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool parse_double(std::string_view field, double& out) {
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    if (field.empty()) return false;
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), last, out);
    return ec == std::errc() && ptr == last;
}

double parse_field(std::string_view field, std::size_t line_no, std::size_t index) {
    double value = 0.0;
    if (!parse_double(field, value))
        throw CsvParseError(line_no, index, "'" + std::string(field) + "' is not a number");
    if (!std::isfinite(value))
        throw CsvParseError(line_no, index, "non-finite value '" + std::string(field) + "'");
    return value;
}

}  // namespace

Dataset parse_csv(std::istream& in) {
    std::vector<Point> points;
    std::string line;
    std::size_t line_no = 0;
    bool seen_data_candidate = false;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;

        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = body.find(',', start);
            fields.push_back(trim(body.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }

        // A single leading header line ("x,y" or similar) is recognized by a
        // non-numeric first field.
        double x = 0.0;
        if (!seen_data_candidate) {
            seen_data_candidate = true;
            if (!parse_double(fields[0], x)) continue;
        }

        if (fields.size() != 2)
            throw CsvParseError(line_no, fields.size() > 2 ? 3 : 2,
                                "expected 2 comma-separated fields, got " +
                                    std::to_string(fields.size()));
        points.push_back(Point{parse_field(fields[0], line_no, 1),
                               parse_field(fields[1], line_no, 2)});
    }

    if (points.size() < 2)
        throw EmptyDatasetError("need at least 2 data rows, got " +
                                std::to_string(points.size()));
    return Dataset(std::move(points));
}

void write_csv(std::ostream& out, const Dataset& dataset) {
    out << "x,y\n";
    for (const Point& p : dataset)
        out << detail::double_text(p.x) << ',' << detail::double_text(p.y) << '\n';
}

}  // namespace lsqfit
