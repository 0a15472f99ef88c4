#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "thgame/scenarios.hpp"

namespace thgame {

/// Config-file problem with the offending line number.
class config_error : public std::runtime_error {
  public:
    config_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct ConfigScanner {
    // section -> key -> (value, line)
    std::map<std::string, std::map<std::string, std::pair<std::string, int>>> data;

    void parse(std::istream& in) {
        std::string line, section;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    throw config_error(lineno, "unterminated section header");
                section = trim(line.substr(1, line.size() - 2));
                if (section.empty()) throw config_error(lineno, "empty section name");
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw config_error(lineno, "expected 'key = value'");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) throw config_error(lineno, "empty key");
            if (value.empty()) throw config_error(lineno, "empty value for '" + key + "'");
            data[section][key] = {value, lineno};
        }
    }

    const std::pair<std::string, int>& require(const std::string& section,
                                               const std::string& key) const {
        const auto s = data.find(section);
        if (s == data.end())
            throw config_error(0, "missing section [" + section + "]");
        const auto k = s->second.find(key);
        if (k == s->second.end())
            throw config_error(0, "missing key '" + key + "' in [" + section + "]");
        return k->second;
    }

    std::optional<std::pair<std::string, int>> find(const std::string& section,
                                                    const std::string& key) const {
        const auto s = data.find(section);
        if (s == data.end()) return std::nullopt;
        const auto k = s->second.find(key);
        if (k == s->second.end()) return std::nullopt;
        return k->second;
    }
};

inline double parse_double(const std::pair<std::string, int>& entry) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(entry.first, &used);
    } catch (const std::exception&) {
        throw config_error(entry.second, "expected a number, got '" + entry.first + "'");
    }
    if (used != entry.first.size())
        throw config_error(entry.second, "trailing junk in number '" + entry.first + "'");
    return v;
}

inline long parse_long(const std::pair<std::string, int>& entry) {
    const double v = parse_double(entry);
    if (v != std::floor(v))
        throw config_error(entry.second, "expected an integer, got '" + entry.first + "'");
    return static_cast<long>(v);
}

inline bool parse_bool(const std::pair<std::string, int>& entry) {
    if (entry.first == "true" || entry.first == "1") return true;
    if (entry.first == "false" || entry.first == "0") return false;
    throw config_error(entry.second, "expected true/false, got '" + entry.first + "'");
}

inline Vec3 parse_vec3(const std::pair<std::string, int>& entry) {
    std::istringstream is(entry.first);
    Vec3 v;
    if (!(is >> v(0) >> v(1) >> v(2)))
        throw config_error(entry.second, "expected three numbers, got '" + entry.first + "'");
    std::string rest;
    if (is >> rest)
        throw config_error(entry.second, "trailing junk in vector '" + entry.first + "'");
    return v;
}

}  // namespace detail

inline Strategy parse_strategy(const std::string& s) {
    if (s == "th") return Strategy::ThAnalytical;
    if (s == "numerical") return Strategy::Numerical;
    if (s == "cw") return Strategy::CwBaseline;
    if (s == "defense") return Strategy::Defense;
    throw std::invalid_argument("unknown strategy '" + s +
                                "' (expected th|numerical|cw|defense)");
}

/// Parses the key/value run configuration (sections [orbit], [weights],
/// [pursuer], [evader], [game], [disturbance]).
inline GameConfig parse_config(std::istream& in) {
    detail::ConfigScanner sc;
    sc.parse(in);
    using detail::parse_bool;
    using detail::parse_double;
    using detail::parse_long;
    using detail::parse_vec3;

    const ReferenceOrbit orbit(parse_double(sc.require("orbit", "p")),
                               parse_double(sc.require("orbit", "e")),
                               parse_double(sc.require("orbit", "mu")));
    const GameWeights weights(parse_double(sc.require("weights", "s_r")),
                              parse_double(sc.require("weights", "r_p")),
                              parse_double(sc.require("weights", "r_e")));
    GameConfig config{orbit, weights};
    config.pursuer0.head<3>() = parse_vec3(sc.require("pursuer", "position"));
    config.pursuer0.tail<3>() = parse_vec3(sc.require("pursuer", "velocity"));
    config.evader0.head<3>() = parse_vec3(sc.require("evader", "position"));
    config.evader0.tail<3>() = parse_vec3(sc.require("evader", "velocity"));

    if (auto v = sc.find("game", "f0")) config.f0 = parse_double(*v);
    if (auto v = sc.find("game", "h_f")) config.h_f = parse_double(*v);
    if (auto v = sc.find("game", "d_c")) config.d_c = parse_double(*v);
    if (auto v = sc.find("game", "strategy")) {
        try {
            config.strategy = parse_strategy(v->first);
        } catch (const std::invalid_argument& ex) {
            throw config_error(v->second, ex.what());
        }
    }
    if (auto v = sc.find("game", "max_steps")) config.max_steps = parse_long(*v);
    if (auto v = sc.find("game", "oracle_steps"))
        config.oracle_steps = static_cast<int>(parse_long(*v));
    if (auto v = sc.find("game", "sample_every"))
        config.sample_every = static_cast<int>(parse_long(*v));
    if (auto v = sc.find("game", "gain_refresh_every"))
        config.gain_refresh_every = static_cast<int>(parse_long(*v));
    if (auto v = sc.find("disturbance", "seed"))
        config.seed = static_cast<std::uint64_t>(parse_long(*v));
    if (auto v = sc.find("disturbance", "bound"))
        config.disturbance_bound = parse_double(*v);
    if (auto v = sc.find("disturbance", "resample_each_step"))
        config.resample_disturbance = parse_bool(*v);
    config.validate();
    return config;
}

inline GameConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    return parse_config(in);
}

inline std::string serialize_config(const GameConfig& c) {
    std::ostringstream os;
    os.precision(17);
    const auto vec = [&](const auto& v) {
        std::ostringstream vs;
        vs.precision(17);
        vs << v(0) << " " << v(1) << " " << v(2);
        return vs.str();
    };
    os << "[orbit]\n"
       << "p = " << c.orbit.p() << "\n"
       << "e = " << c.orbit.e() << "\n"
       << "mu = " << c.orbit.mu() << "\n\n"
       << "[weights]\n"
       << "s_r = " << c.weights.s_r << "\n"
       << "r_p = " << c.weights.r_p << "\n"
       << "r_e = " << c.weights.r_e << "\n\n"
       << "[pursuer]\n"
       << "position = " << vec(c.pursuer0.head<3>()) << "\n"
       << "velocity = " << vec(c.pursuer0.tail<3>()) << "\n\n"
       << "[evader]\n"
       << "position = " << vec(c.evader0.head<3>()) << "\n"
       << "velocity = " << vec(c.evader0.tail<3>()) << "\n\n"
       << "[game]\n"
       << "f0 = " << c.f0 << "\n"
       << "h_f = " << c.h_f << "\n"
       << "d_c = " << c.d_c << "\n"
       << "strategy = " << strategy_name(c.strategy) << "\n"
       << "max_steps = " << c.max_steps << "\n"
       << "oracle_steps = " << c.oracle_steps << "\n"
       << "sample_every = " << c.sample_every << "\n"
       << "gain_refresh_every = " << c.gain_refresh_every << "\n\n"
       << "[disturbance]\n"
       << "seed = " << c.seed << "\n"
       << "bound = " << c.disturbance_bound << "\n"
       << "resample_each_step = " << (c.resample_disturbance ? "true" : "false")
       << "\n";
    return os.str();
}

inline constexpr const char* kTrajectoryHeader =
    "f,xp,yp,zp,xpd,ypd,zpd,xe,ye,ze,xed,yed,zed,upx,upy,upz,uex,uey,uez,dist";

/// Trajectory CSV: one decimated sample per row, transformed LVLH
/// coordinates (positions m, velocities m/rad, controls m/s^2).
inline void write_trajectory_csv(std::ostream& os, const GameResult& result) {
    os << "# transformed LVLH coordinates: positions m, velocities m/rad, "
          "controls m/s^2, f rad\n";
    os << kTrajectoryHeader << "\n";
    char buf[64];
    const auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof buf, "%.12g%c", v, sep);
        os << buf;
    };
    for (const auto& s : result.samples) {
        put(s.f, ',');
        for (int i = 0; i < 6; ++i) put(s.pursuer(i), ',');
        for (int i = 0; i < 6; ++i) put(s.evader(i), ',');
        for (int i = 0; i < 3; ++i) put(s.u_p(i), ',');
        for (int i = 0; i < 3; ++i) put(s.u_e(i), ',');
        put(s.distance, '\n');
    }
}

inline nlohmann::json metrics_json(const GameResult& r) {
    return nlohmann::json{{"captured", r.captured},
                          {"delta_f", r.delta_f},
                          {"final_distance_m", r.final_distance},
                          {"min_distance_m", r.min_distance},
                          {"cost", r.cost},
                          {"steps", r.steps},
                          {"strategy", strategy_name(r.strategy)},
                          {"seed", r.seed}};
}

}  // namespace thgame
