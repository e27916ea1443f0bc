#include "config.hpp"

#include "fmcalc/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace fmcalc::app {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string at_line(int line) { return " (line " + std::to_string(line) + ")"; }

struct Entry {
    std::string value;
    int line = 0;
};

struct Section {
    std::string type;
    std::string name;
    int line = 0;
    std::map<std::string, Entry> entries;
};

// Rethrows a value-syntax error with the line it occurred on.
template <class F>
auto at(int line, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(line, e.what());
    }
}

long parse_integer(std::string_view text) {
    text = trim(text);
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ParseError(0, "expected an integer, got '" + std::string(text) + "'");
    return value;
}

bool parse_bool(std::string_view text) {
    text = trim(text);
    if (text == "true") return true;
    if (text == "false") return false;
    throw ParseError(0, "expected true or false, got '" + std::string(text) + "'");
}

std::vector<Section> split_sections(std::string_view text) {
    std::vector<Section> sections;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
            std::string_view inner = trim(line.substr(1, line.size() - 2));
            std::size_t sp = inner.find_first_of(" \t");
            Section s;
            s.line = line_no;
            s.type = std::string(inner.substr(0, sp));
            if (sp != std::string_view::npos) s.name = std::string(trim(inner.substr(sp)));
            if (s.type == "geometry" || s.type == "defaults") {
                if (!s.name.empty()) throw ParseError(line_no, "section [" + s.type + "] takes no name");
            } else if (s.type == "curve" || s.type == "object") {
                if (s.name.empty() || s.name.find_first_of(" \t") != std::string::npos)
                    throw ParseError(line_no, "section [" + s.type + "] needs a single-word name");
            } else {
                throw ParseError(line_no, "unknown section type '" + s.type + "'");
            }
            sections.push_back(std::move(s));
        } else {
            std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
            if (sections.empty()) throw ParseError(line_no, "key outside of any section");
            std::string key(trim(line.substr(0, eq)));
            std::string value(trim(line.substr(eq + 1)));
            if (key.empty()) throw ParseError(line_no, "empty key");
            if (value.empty()) throw ParseError(line_no, "empty value for '" + key + "'");
            auto& entries = sections.back().entries;
            if (entries.count(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
            entries[key] = Entry{value, line_no};
        }
        if (end == text.size()) break;
    }
    return sections;
}

std::string section_path(const Section& s) {
    if (s.type == "curve") return "curves." + s.name;
    if (s.type == "object") return "objects." + s.name;
    return s.type;
}

void check_keys(const Section& s, const std::set<std::string>& allowed) {
    for (const auto& [key, e] : s.entries)
        if (!allowed.count(key)) throw ConfigError(section_path(s) + "." + key, "unknown key" + at_line(e.line));
}

const Entry* find(const Section& s, const std::string& key) {
    auto it = s.entries.find(key);
    return it == s.entries.end() ? nullptr : &it->second;
}

const Entry& require(const Section& s, const std::string& key) {
    const Entry* e = find(s, key);
    if (!e) throw ConfigError(section_path(s) + "." + key, "missing" + at_line(s.line));
    return *e;
}

Rational rational_entry(const Entry& e) {
    return at(e.line, [&] { return parse_rational(e.value); });
}

DivisorB divisor_entry(const Section& s, const std::string& key, std::size_t rank) {
    const Entry* e = find(s, key);
    if (!e) return DivisorB::zero(rank);
    DivisorB d(at(e->line, [&] { return parse_rational_list(e->value); }));
    if (d.rank() != rank)
        throw ConfigError(section_path(s) + "." + key,
                          "expected " + std::to_string(rank) + " coordinates" + at_line(e->line));
    return d;
}

// Re-raise a constructor's ConfigError under this section's path.
[[noreturn]] void rethrow_in(const Section& s, const ConfigError& e) {
    std::string field = e.field();
    std::size_t dot = field.find('.');
    std::string leaf = dot == std::string::npos ? field : field.substr(dot + 1);
    std::string what = e.what();
    std::string msg = what.substr(std::min(what.size(), e.field().size() + 2));
    const Entry* entry = find(s, leaf);
    throw ConfigError(section_path(s) + "." + leaf, msg + at_line(entry ? entry->line : s.line));
}

} // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError(0, "expected a bracketed list, got '" + std::string(text) + "'");
    std::string_view inner = trim(text.substr(1, text.size() - 2));
    std::vector<Rational> out;
    if (inner.empty()) return out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = inner.find(',', pos);
        out.push_back(parse_rational(trim(inner.substr(pos, comma == std::string_view::npos ? inner.npos : comma - pos))));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<std::vector<Rational>> parse_matrix(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError(0, "expected a bracketed list of rows, got '" + std::string(text) + "'");
    std::string_view inner = trim(text.substr(1, text.size() - 2));
    std::vector<std::vector<Rational>> rows;
    std::size_t pos = 0;
    while (pos < inner.size()) {
        std::size_t open = inner.find('[', pos);
        if (open == std::string_view::npos || !trim(inner.substr(pos, open - pos)).empty())
            throw ParseError(0, "malformed matrix row");
        std::size_t close = inner.find(']', open);
        if (close == std::string_view::npos) throw ParseError(0, "unterminated matrix row");
        rows.push_back(parse_rational_list(inner.substr(open, close - open + 1)));
        pos = close + 1;
        std::string_view rest = trim(inner.substr(pos));
        if (rest.empty()) break;
        if (rest.front() != ',') throw ParseError(0, "expected ',' between matrix rows");
        pos = inner.size() - rest.size() + 1;
    }
    return rows;
}

const CurveConstraint& Config::curve(const std::string& name) const {
    for (const auto& [n, c] : curves_)
        if (n == name) return c;
    throw ConfigError("curves." + name, "no such curve");
}

const ObjectSpec& Config::object(const std::string& name) const {
    for (const auto& o : objects_)
        if (o.name == name) return o;
    throw ConfigError("objects." + name, "no such object");
}

Config parse_config(std::string_view text) {
    const std::vector<Section> sections = split_sections(text);
    Config cfg;

    const Section* geometry = nullptr;
    const Section* defaults = nullptr;
    std::set<std::string> curve_names, object_names;
    for (const auto& s : sections) {
        if (s.type == "geometry" || s.type == "defaults") {
            const Section*& slot = s.type == "geometry" ? geometry : defaults;
            if (slot) throw ConfigError(s.type, "section declared twice" + at_line(s.line));
            slot = &s;
        } else {
            auto& names = s.type == "curve" ? curve_names : object_names;
            if (!names.insert(s.name).second) throw ConfigError(section_path(s), "declared twice" + at_line(s.line));
        }
    }
    if (!geometry) throw ConfigError("geometry", "missing [geometry] section");

    // Geometry.
    {
        const Section& s = *geometry;
        check_keys(s, {"rank", "gram", "hb", "h", "vprime", "m0"});
        const Entry& ge = require(s, "gram");
        auto gram = at(ge.line, [&] { return parse_matrix(ge.value); });
        const Entry& he = require(s, "hb");
        auto hb = at(he.line, [&] { return parse_rational_list(he.value); });
        Rational h = rational_entry(require(s, "h"));
        Rational vprime = find(s, "vprime") ? rational_entry(*find(s, "vprime")) : Rational(0);
        Rational m0 = find(s, "m0") ? rational_entry(*find(s, "m0")) : Rational(1);
        if (const Entry* re = find(s, "rank")) {
            long rank = at(re->line, [&] { return parse_integer(re->value); });
            if (rank < 1 || static_cast<std::size_t>(rank) != hb.size())
                throw ConfigError("geometry.rank", "must be positive and match the length of hb" + at_line(re->line));
        }
        try {
            cfg.geometry_.emplace(std::move(gram), std::move(hb), h, vprime, m0);
        } catch (const ConfigError& e) {
            rethrow_in(s, e);
        }
    }
    const BaseGeometry& g = *cfg.geometry_;

    // Defaults.
    if (defaults) {
        const Section& s = *defaults;
        check_keys(s, {"precision", "order", "cases", "seed"});
        auto positive = [&](const std::string& key) -> std::optional<long> {
            const Entry* e = find(s, key);
            if (!e) return std::nullopt;
            long v = at(e->line, [&] { return parse_integer(e->value); });
            if (v < (key == "seed" ? 0 : 1)) throw ConfigError("defaults." + key, "out of range" + at_line(e->line));
            return v;
        };
        if (auto v = positive("precision")) cfg.defaults_.precision_bits = *v;
        if (auto v = positive("order")) cfg.defaults_.order = static_cast<int>(*v);
        if (auto v = positive("cases")) cfg.defaults_.cases = static_cast<std::size_t>(*v);
        if (auto v = positive("seed")) cfg.defaults_.seed = static_cast<std::uint64_t>(*v);
    }

    // Curves.
    for (const auto& s : sections) {
        if (s.type != "curve") continue;
        const Entry& te = require(s, "type");
        try {
            if (te.value == "tilt") {
                check_keys(s, {"type", "a", "b"});
                cfg.curves_.emplace_back(s.name, CurveConstraint::tilt(g.h(), rational_entry(require(s, "a")),
                                                                       rational_entry(require(s, "b"))));
            } else if (te.value == "onedim") {
                check_keys(s, {"type", "y", "z"});
                cfg.curves_.emplace_back(s.name, CurveConstraint::onedim(g.h(), rational_entry(require(s, "y")),
                                                                         rational_entry(require(s, "z"))));
            } else {
                throw ConfigError(section_path(s) + ".type", "must be tilt or onedim" + at_line(te.line));
            }
        } catch (const ConfigError& e) {
            if (e.field().rfind("curve.", 0) == 0) rethrow_in(s, e);
            throw;
        }
    }

    // Objects.
    for (const auto& s : sections) {
        if (s.type != "object") continue;
        check_keys(s, {"n", "x", "S", "eta", "a", "s", "class", "curve", "D", "S_effective", "eta_effective"});
        ObjectSpec o;
        o.name = s.name;
        o.line = s.line;
        auto scalar = [&](const char* key) { return find(s, key) ? rational_entry(*find(s, key)) : Rational(0); };
        o.vector.n = scalar("n");
        o.vector.x = scalar("x");
        o.vector.S = divisor_entry(s, "S", g.rank());
        o.vector.eta = divisor_entry(s, "eta", g.rank());
        o.vector.a = scalar("a");
        o.vector.s = scalar("s");
        if (const Entry* ce = find(s, "curve")) {
            if (!curve_names.count(ce->value))
                throw ConfigError(section_path(s) + ".curve",
                                  "references undeclared curve '" + ce->value + "'" + at_line(ce->line));
            o.curve = ce->value;
        }
        const bool has_class_flags = find(s, "D") || find(s, "S_effective") || find(s, "eta_effective");
        if (const Entry* ce = find(s, "class")) {
            NumericClass cls;
            try {
                cls.tag = parse_class_tag(ce->value);
            } catch (const ConfigError& e) {
                throw ConfigError(section_path(s) + ".class", "unknown class tag '" + ce->value + "'" + at_line(ce->line));
            }
            if (find(s, "D")) cls.D = divisor_entry(s, "D", g.rank());
            if (const Entry* e = find(s, "S_effective")) cls.S_effective = at(e->line, [&] { return parse_bool(e->value); });
            if (const Entry* e = find(s, "eta_effective"))
                cls.eta_effective = at(e->line, [&] { return parse_bool(e->value); });
            o.cls = cls;
        } else if (has_class_flags) {
            throw ConfigError(section_path(s) + ".class", "class flags given without a class tag" + at_line(s.line));
        }
        cfg.objects_.push_back(std::move(o));
    }
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace fmcalc::app
