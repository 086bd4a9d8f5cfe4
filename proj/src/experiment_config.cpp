#include "reconf/experiment_config.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "reconf/text_io.hpp"

namespace reconf {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, sep)) parts.push_back(trim(part));
    return parts;
}

long long parse_ll(const std::string& key, const std::string& value) {
    long long out = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError("config: bad integer for " + key + ": " + value);
    }
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    return static_cast<int>(parse_ll(key, value));
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError("config: bad unsigned integer for " + key + ": " +
                          value);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError("config: bad number for " + key + ": " + value);
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("config: bad boolean for " + key + ": " + value);
}

Eigen::Vector3d parse_vec3(const std::string& key, const std::string& value) {
    const std::vector<std::string> parts = split(value, ',');
    if (parts.size() != 3) {
        throw ConfigError("config: " + key + " needs three comma-separated "
                          "values");
    }
    return {parse_double(key, parts[0]), parse_double(key, parts[1]),
            parse_double(key, parts[2])};
}

std::string vec3_to_text(const Eigen::Vector3d& v) {
    return format_double(v(0)) + "," + format_double(v(1)) + "," +
           format_double(v(2));
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& key, const std::string& value,
                          Parse parse) {
    std::vector<T> out;
    for (const std::string& part : split(value, ',')) {
        if (part.empty()) {
            throw ConfigError("config: empty element in list " + key);
        }
        out.push_back(parse(key, part));
    }
    if (out.empty()) throw ConfigError("config: empty list for " + key);
    return out;
}

}  // namespace

void ExperimentConfig::validate() const {
    try {
        geometry.validate();
        anneal.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (threshold < 1) throw ConfigError("config: threshold must be >= 1");
    if (escalation_cap < 0) {
        throw ConfigError("config: escalation_cap must be >= 0");
    }
    if (scenario_robots < 2) {
        throw ConfigError("config: scenario.robots must be >= 2");
    }
    if (scenario_resources < 1) {
        throw ConfigError("config: scenario.resources must be >= 1");
    }
    for (double p : compare_p_r) {
        if (!(p > 0.0) || p > 100.0) {
            throw ConfigError("config: compare.p_r values must be in (0, 100]");
        }
    }
    if (compare_trials < 0) {
        throw ConfigError("config: compare.trials must be >= 0");
    }
    if (compare_n_min < 2 || compare_n_max < compare_n_min) {
        throw ConfigError("config: need 2 <= compare.n_min <= compare.n_max");
    }
    if (compare_r_min < 1 || compare_r_max < compare_r_min) {
        throw ConfigError("config: need 1 <= compare.r_min <= compare.r_max");
    }
    for (int n : hindsight_team_sizes) {
        if (n < 2) {
            throw ConfigError("config: hindsight.team_sizes entries must be "
                              ">= 2");
        }
    }
    if (hindsight_trials < 0) {
        throw ConfigError("config: hindsight.trials must be >= 0");
    }
    if (hindsight_resources < 1) {
        throw ConfigError("config: hindsight.resources must be >= 1");
    }
    if (bins < 1) throw ConfigError("config: bins must be >= 1");
    if (out_dir.empty()) throw ConfigError("config: out_dir must be nonempty");
}

ExperimentConfig parse_experiment_config(const std::string& text) {
    ExperimentConfig config;
    bool delta_max_given = false;

    const std::map<std::string, std::function<void(const std::string&,
                                                   const std::string&)>>
        setters = {
            {"geometry.d_s",
             [&](const std::string& k, const std::string& v) {
                 config.geometry.d_s = parse_double(k, v);
             }},
            {"geometry.d_mc",
             [&](const std::string& k, const std::string& v) {
                 config.geometry.d_mc = parse_double(k, v);
             }},
            {"geometry.c_min",
             [&](const std::string& k, const std::string& v) {
                 config.geometry.c_min = parse_double(k, v);
             }},
            {"geometry.c_max",
             [&](const std::string& k, const std::string& v) {
                 config.geometry.c_max = parse_double(k, v);
             }},
            {"geometry.ne",
             [&](const std::string& k, const std::string& v) {
                 config.geometry.ne = parse_int(k, v);
             }},
            {"geometry.box_min",
             [&](const std::string& k, const std::string& v) {
                 config.geometry.box_min = parse_vec3(k, v);
             }},
            {"geometry.box_max",
             [&](const std::string& k, const std::string& v) {
                 config.geometry.box_max = parse_vec3(k, v);
             }},
            {"anneal.steps",
             [&](const std::string& k, const std::string& v) {
                 config.anneal.steps = parse_int(k, v);
             }},
            {"anneal.t_start",
             [&](const std::string& k, const std::string& v) {
                 config.anneal.t_start = parse_double(k, v);
             }},
            {"anneal.t_end",
             [&](const std::string& k, const std::string& v) {
                 config.anneal.t_end = parse_double(k, v);
             }},
            {"anneal.h_start",
             [&](const std::string& k, const std::string& v) {
                 config.anneal.h_start = parse_double(k, v);
             }},
            {"anneal.h_end",
             [&](const std::string& k, const std::string& v) {
                 config.anneal.h_end = parse_double(k, v);
             }},
            {"anneal.delta_max",
             [&](const std::string& k, const std::string& v) {
                 config.anneal.delta_max = parse_double(k, v);
                 delta_max_given = true;
             }},
            {"anneal.max_restarts",
             [&](const std::string& k, const std::string& v) {
                 config.anneal.max_restarts = parse_int(k, v);
             }},
            {"anneal.printed_acceptance",
             [&](const std::string& k, const std::string& v) {
                 config.anneal.printed_acceptance = parse_bool(k, v);
             }},
            {"threshold",
             [&](const std::string& k, const std::string& v) {
                 config.threshold = parse_int(k, v);
             }},
            {"escalation_cap",
             [&](const std::string& k, const std::string& v) {
                 config.escalation_cap = parse_int(k, v);
             }},
            {"scenario.robots",
             [&](const std::string& k, const std::string& v) {
                 config.scenario_robots = parse_int(k, v);
             }},
            {"scenario.resources",
             [&](const std::string& k, const std::string& v) {
                 config.scenario_resources = parse_int(k, v);
             }},
            {"compare.p_r",
             [&](const std::string& k, const std::string& v) {
                 config.compare_p_r = parse_list<double>(k, v, parse_double);
             }},
            {"compare.trials",
             [&](const std::string& k, const std::string& v) {
                 config.compare_trials = parse_int(k, v);
             }},
            {"compare.n_min",
             [&](const std::string& k, const std::string& v) {
                 config.compare_n_min = parse_int(k, v);
             }},
            {"compare.n_max",
             [&](const std::string& k, const std::string& v) {
                 config.compare_n_max = parse_int(k, v);
             }},
            {"compare.r_min",
             [&](const std::string& k, const std::string& v) {
                 config.compare_r_min = parse_int(k, v);
             }},
            {"compare.r_max",
             [&](const std::string& k, const std::string& v) {
                 config.compare_r_max = parse_int(k, v);
             }},
            {"hindsight.team_sizes",
             [&](const std::string& k, const std::string& v) {
                 config.hindsight_team_sizes =
                     parse_list<int>(k, v, parse_int);
             }},
            {"hindsight.trials",
             [&](const std::string& k, const std::string& v) {
                 config.hindsight_trials = parse_int(k, v);
             }},
            {"hindsight.resources",
             [&](const std::string& k, const std::string& v) {
                 config.hindsight_resources = parse_int(k, v);
             }},
            {"bins",
             [&](const std::string& k, const std::string& v) {
                 config.bins = parse_int(k, v);
             }},
            {"seed",
             [&](const std::string& k, const std::string& v) {
                 config.seed = parse_u64(k, v);
             }},
            {"out_dir",
             [&](const std::string&, const std::string& v) {
                 config.out_dir = v;
             }},
        };

    std::set<std::string> seen;
    std::stringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto setter = setters.find(key);
        if (setter == setters.end()) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
        }
        if (!seen.insert(key).second) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": duplicate key '" + key + "'");
        }
        setter->second(key, value);
    }

    if (!delta_max_given) {
        config.anneal.delta_max = config.geometry.d_s / 10.0;
    }
    config.validate();
    return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::runtime_error& e) {
        throw ConfigError(e.what());
    }
    return parse_experiment_config(text);
}

std::string experiment_config_to_text(const ExperimentConfig& config) {
    std::ostringstream out;
    out << "geometry.d_s = " << format_double(config.geometry.d_s) << "\n"
        << "geometry.d_mc = " << format_double(config.geometry.d_mc) << "\n"
        << "geometry.c_min = " << format_double(config.geometry.c_min) << "\n"
        << "geometry.c_max = " << format_double(config.geometry.c_max) << "\n"
        << "geometry.ne = " << config.geometry.ne << "\n"
        << "geometry.box_min = " << vec3_to_text(config.geometry.box_min)
        << "\n"
        << "geometry.box_max = " << vec3_to_text(config.geometry.box_max)
        << "\n"
        << "anneal.steps = " << config.anneal.steps << "\n"
        << "anneal.t_start = " << format_double(config.anneal.t_start) << "\n"
        << "anneal.t_end = " << format_double(config.anneal.t_end) << "\n"
        << "anneal.h_start = " << format_double(config.anneal.h_start) << "\n"
        << "anneal.h_end = " << format_double(config.anneal.h_end) << "\n"
        << "anneal.delta_max = " << format_double(config.anneal.delta_max)
        << "\n"
        << "anneal.max_restarts = " << config.anneal.max_restarts << "\n"
        << "anneal.printed_acceptance = "
        << (config.anneal.printed_acceptance ? "true" : "false") << "\n"
        << "threshold = " << config.threshold << "\n"
        << "escalation_cap = " << config.escalation_cap << "\n"
        << "scenario.robots = " << config.scenario_robots << "\n"
        << "scenario.resources = " << config.scenario_resources << "\n";
    out << "compare.p_r = ";
    for (std::size_t i = 0; i < config.compare_p_r.size(); ++i) {
        if (i) out << ",";
        out << format_double(config.compare_p_r[i]);
    }
    out << "\n"
        << "compare.trials = " << config.compare_trials << "\n"
        << "compare.n_min = " << config.compare_n_min << "\n"
        << "compare.n_max = " << config.compare_n_max << "\n"
        << "compare.r_min = " << config.compare_r_min << "\n"
        << "compare.r_max = " << config.compare_r_max << "\n";
    out << "hindsight.team_sizes = ";
    for (std::size_t i = 0; i < config.hindsight_team_sizes.size(); ++i) {
        if (i) out << ",";
        out << config.hindsight_team_sizes[i];
    }
    out << "\n"
        << "hindsight.trials = " << config.hindsight_trials << "\n"
        << "hindsight.resources = " << config.hindsight_resources << "\n"
        << "bins = " << config.bins << "\n"
        << "seed = " << config.seed << "\n"
        << "out_dir = " << config.out_dir << "\n";
    return out.str();
}

}  // namespace reconf
