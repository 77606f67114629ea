#include "dsn/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "dsn/error.hpp"

namespace dsn {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value, int line) {
    T out{};
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end || value.empty()) {
        throw ParseError(line, std::string(key), "malformed value '" + std::string(value) + "'");
    }
    return out;
}

double parse_real(std::string_view key, std::string_view value, int line) {
    const double v = parse_number<double>(key, value, line);
    if (!std::isfinite(v)) throw ParseError(line, std::string(key), "value must be finite");
    return v;
}

SymmetryKind parse_kind(std::string_view key, std::string_view value, int line) {
    const auto kind = parse_symmetry_kind(value);
    if (!kind) throw ParseError(line, std::string(key), "expected mirror_y or fourfold");
    return *kind;
}

// Splits "name.<id>" into name and a particle id.
std::optional<std::pair<std::string_view, int>> split_indexed(std::string_view key, int line) {
    const auto dot = key.find('.');
    if (dot == std::string_view::npos) return std::nullopt;
    const std::string_view name = key.substr(0, dot);
    const int id = parse_number<int>(key, key.substr(dot + 1), line);
    if (id < 0) throw ParseError(line, std::string(key), "particle id must be non-negative");
    return std::pair{name, id};
}

void set_initial(InitialOverride& o, std::string_view name, double v) {
    if (name == "x0") o.x0 = v;
    else if (name == "y0") o.y0 = v;
    else o.theta0 = v;
}

bool is_initial_key(std::string_view name) { return name == "x0" || name == "y0" || name == "theta0"; }

} // namespace

RuleConfig SimConfig::rule_config() const { return {symmetry, rule_probability, rule_override}; }

void set_config_value(SimConfig& cfg, std::string_view key, std::string_view value, int line) {
    if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value, line);
    else if (key == "T") cfg.T = parse_real(key, value, line);
    else if (key == "N") cfg.N = parse_number<int>(key, value, line);
    else if (key == "S") cfg.S = parse_number<int>(key, value, line);
    else if (key == "D") cfg.D = parse_number<int>(key, value, line);
    else if (key == "r") cfg.r = parse_real(key, value, line);
    else if (key == "v") cfg.v = parse_real(key, value, line);
    else if (key == "symmetry") cfg.symmetry = parse_kind(key, value, line);
    else if (key == "rule_probability") cfg.rule_probability = parse_real(key, value, line);
    else if (key == "bins") cfg.bins = parse_number<int>(key, value, line);
    else if (key == "image_width") cfg.image_width = parse_number<int>(key, value, line);
    else if (is_initial_key(key)) set_initial(cfg.initial, key, parse_real(key, value, line));
    else if (auto indexed = split_indexed(key, line)) {
        const auto [name, id] = *indexed;
        if (name == "rule_override") cfg.rule_override[id] = parse_kind(key, value, line);
        else if (is_initial_key(name)) set_initial(cfg.per_particle[id], name, parse_real(key, value, line));
        else throw ParseError(line, std::string(key), "unknown key");
    } else {
        throw ParseError(line, std::string(key), "unknown key");
    }
}

void validate_config(const SimConfig& cfg) {
    auto fail = [](const char* key, const char* what) { throw ParseError(0, key, what); };
    if (!(cfg.T > 0.0)) fail("T", "must be > 0");
    if (cfg.N < 1) fail("N", "must be >= 1");
    if (cfg.D < 1) fail("D", "must be >= 1");
    if (cfg.S < 1) fail("S", "must be >= 1");
    if (!(cfg.r > 0.0)) fail("r", "must be > 0");
    if (!(cfg.v > 0.0)) fail("v", "must be > 0");
    if (!(cfg.rule_probability >= 0.0 && cfg.rule_probability <= 1.0)) fail("rule_probability", "must lie in [0, 1]");
    if (cfg.bins < 1) fail("bins", "must be >= 1");
    if (cfg.image_width < 16) fail("image_width", "must be >= 16");
    for (const auto& [id, o] : cfg.per_particle) {
        if (id >= cfg.N) throw ParseError(0, "x0." + std::to_string(id), "particle id out of range");
    }
    for (const auto& [id, kind] : cfg.rule_override) {
        if (id >= cfg.N) throw ParseError(0, "rule_override." + std::to_string(id), "particle id out of range");
    }
}

SimConfig parse_config(std::string_view text) {
    SimConfig cfg;
    std::map<std::string, int, std::less<>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, std::string(line), "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(line_no, "", "missing key");
        if (!seen.emplace(std::string(key), line_no).second) throw ParseError(line_no, std::string(key), "duplicate key");
        set_config_value(cfg, key, value, line_no);
    }

    for (const char* required : {"T", "N", "D", "symmetry"}) {
        if (!seen.contains(required)) throw ParseError(line_no, required, "required key is missing");
    }
    try {
        validate_config(cfg);
    } catch (const ParseError& e) {
        const auto it = seen.find(e.key());
        // Strip the "line 0, key ..." prefix and re-anchor on the defining line.
        const std::string msg = e.what();
        const auto colon = msg.find(": ");
        throw ParseError(it == seen.end() ? 0 : it->second, e.key(),
                         colon == std::string::npos ? msg : msg.substr(colon + 2));
    }
    return cfg;
}

SimConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace dsn
