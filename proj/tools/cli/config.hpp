#pragma once

#include "fmcalc/curves.hpp"
#include "fmcalc/ring.hpp"
#include "fmcalc/verify.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fmcalc::app {

struct ObjectSpec {
    std::string name;
    ChernVector vector;
    std::optional<NumericClass> cls;
    std::optional<std::string> curve; // name of a declared curve
    int line = 0;
};

struct Defaults {
    long precision_bits = 64;
    int order = 8;
    std::size_t cases = 1000;
    std::uint64_t seed = 1;
};

// Parsed and validated configuration.
//
// Format: '#' starts a comment; sections are "[geometry]", "[defaults]",
// "[curve NAME]" and "[object NAME]"; every other non-blank line is
// "key = value".  Rationals are "p/q" or integers, vectors are "[q1, q2, ...]"
// and the Gram matrix is a list of row vectors "[[..], [..]]".
class Config {
public:
    const BaseGeometry& geometry() const { return *geometry_; }
    const std::vector<std::pair<std::string, CurveConstraint>>& curves() const { return curves_; }
    const std::vector<ObjectSpec>& objects() const { return objects_; }
    const Defaults& defaults() const { return defaults_; }

    // Throw ConfigError naming "curves.NAME" / "objects.NAME" when undeclared.
    const CurveConstraint& curve(const std::string& name) const;
    const ObjectSpec& object(const std::string& name) const;

    friend Config parse_config(std::string_view text);

private:
    std::optional<BaseGeometry> geometry_;
    std::vector<std::pair<std::string, CurveConstraint>> curves_;
    std::vector<ObjectSpec> objects_;
    Defaults defaults_;
};

// Throws ParseError (with the 1-based line) on malformed text and ConfigError
// (with the dotted field path, and the line in the message) on invalid data.
Config parse_config(std::string_view text);

// Reads and parses a file; an unreadable file is a ParseError at line 0.
Config load_config(const std::string& path);

// Value syntax shared with the command line.
std::vector<Rational> parse_rational_list(std::string_view text);
std::vector<std::vector<Rational>> parse_matrix(std::string_view text);

} // namespace fmcalc::app
