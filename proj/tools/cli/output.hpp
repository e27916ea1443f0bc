#pragma once

#include "fmcalc/ring.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace fmcalc::app {

enum class Format { Table, Records };

// A block of output with fixed column headers.  Records format is one
// tab-separated line per row after a header line; table format aligns columns.
class Table {
public:
    explicit Table(std::vector<std::string> headers) : headers_(std::move(headers)) {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& out, Format format) const;

private:
    std::vector<std::string> headers_;
    std::vector<std::vector<std::string>> rows_;
};

// Compact vector text "[q1,q2,...]" and the six record cells n, x, S, eta, a, s.
std::string compact(const DivisorB& d);
std::vector<std::string> vector_cells(const ChernVector& v);

} // namespace fmcalc::app
