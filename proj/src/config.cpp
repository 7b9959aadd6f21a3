#include "hhsum/config.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "hhsum/errors.hpp"
#include "hhsum/real.hpp"

namespace hhsum {

namespace {

struct State {
    std::mutex mutex;
    EngineConfig cfg;
    bool initialized = false;
};

State& state() {
    static State s;
    return s;
}

std::atomic<std::uint64_t> g_generation{1};

void install(State& s, const EngineConfig& cfg) {
    cfg.validate();
    s.cfg = cfg;
    set_working_digits(static_cast<unsigned>(cfg.precision_digits + cfg.guard_digits));
    s.initialized = true;
    ++g_generation;
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return static_cast<std::int64_t>(d);
    } catch (const std::exception&) {
        throw DomainError("config: bad integer for " + key + ": " + v);
    }
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw DomainError("config: bad number for " + key + ": " + v);
    }
}

void set_field(EngineConfig& c, const std::string& key, const std::string& v) {
    if (key == "precision_digits")
        c.precision_digits = static_cast<int>(parse_int(key, v));
    else if (key == "oracle_max_terms")
        c.oracle_max_terms = parse_int(key, v);
    else if (key == "euler_truncation")
        c.euler_truncation = parse_int(key, v);
    else if (key == "default_tolerance")
        c.default_tolerance = parse_double(key, v);
    else if (key == "exact_terms")
        c.exact_terms = parse_int(key, v);
    else if (key == "oracle_head")
        c.oracle_head = parse_int(key, v);
    else if (key == "guard_digits")
        c.guard_digits = static_cast<int>(parse_int(key, v));
    else
        throw DomainError("config: unknown key " + key);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

void EngineConfig::validate() const {
    if (precision_digits < 15) throw DomainError("precision_digits must be >= 15");
    if (guard_digits < 0) throw DomainError("guard_digits must be >= 0");
    if (!(default_tolerance > 0.0)) throw DomainError("default_tolerance must be > 0");
    if (oracle_max_terms < 16) throw DomainError("oracle_max_terms must be >= 16");
    if (euler_truncation < 100) throw DomainError("euler_truncation must be >= 100");
    if (exact_terms < 0) throw DomainError("exact_terms must be >= 0");
    if (oracle_head < 16) throw DomainError("oracle_head must be >= 16");
}

const EngineConfig& config() {
    auto& s = state();
    std::lock_guard lock(s.mutex);
    if (!s.initialized) install(s, apply_environment(EngineConfig{}));
    return s.cfg;
}

void configure(const EngineConfig& cfg) {
    auto& s = state();
    std::lock_guard lock(s.mutex);
    install(s, cfg);
}

std::uint64_t config_generation() {
    config();
    return g_generation.load();
}

EngineConfig apply_environment(EngineConfig base) {
    if (const char* env = std::getenv("HHSUM_PRECISION"); env != nullptr && *env != '\0')
        base.precision_digits = static_cast<int>(parse_int("HHSUM_PRECISION", env));
    return base;
}

EngineConfig load_config_file(const std::string& path, EngineConfig base) {
    std::ifstream in(path);
    if (!in) throw DomainError("config: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::string head = trim(text);
    if (!head.empty() && head.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(head);
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(std::string("config: ") + e.what());
        }
        for (const auto& [key, value] : j.items()) {
            const std::string v = value.is_string() ? value.get<std::string>() : value.dump();
            set_field(base, key, v);
        }
        return base;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw DomainError("config: expected key=value, got " + line);
        set_field(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return base;
}

}  // namespace hhsum
