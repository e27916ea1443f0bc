#include "output.hpp"

#include <algorithm>

namespace fmcalc::app {

void Table::print(std::ostream& out, Format format) const {
    if (format == Format::Records) {
        auto line = [&out](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
            out << '\n';
        };
        line(headers_);
        for (const auto& r : rows_) line(r);
        return;
    }
    std::vector<std::size_t> width(headers_.size());
    for (std::size_t i = 0; i < headers_.size(); ++i) width[i] = headers_[i].size();
    for (const auto& r : rows_)
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s += cells[i];
            if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out << s << '\n';
    };
    line(headers_);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : rows_) line(r);
}

std::string compact(const DivisorB& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.coords.size(); ++i) s += (i ? "," : "") + to_string(d.coords[i]);
    return s + "]";
}

std::vector<std::string> vector_cells(const ChernVector& v) {
    return {to_string(v.n), to_string(v.x), compact(v.S), compact(v.eta), to_string(v.a), to_string(v.s)};
}

} // namespace fmcalc::app
