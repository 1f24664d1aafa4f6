/*
   Copyright 2026 hyperpol developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

/// Experiment-spec ingestion: a JSON document (--spec) merged with
/// command-line flag overrides (flags win), then validated strictly — each
/// subcommand accepts exactly its own fields plus the common ones, and any
/// stray field is rejected by name. Angles may arrive in degrees
/// (degrees: true / --degrees); they are converted on validation so
/// everything downstream, including all output, is radians.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperpol/errors.hpp"

namespace hyperpol::cli {

enum class Command {
    Transform,
    Invert,
    Simulate,
    Sweep,
    Converge,
};

inline const char* command_name(Command cmd) {
    switch (cmd) {
        case Command::Transform: return "transform";
        case Command::Invert: return "invert";
        case Command::Simulate: return "simulate";
        case Command::Sweep: return "sweep";
        case Command::Converge: return "converge";
    }
    return "unknown";
}

struct GridSpec {
    std::optional<double> lo;
    std::optional<double> hi;
    std::optional<std::int64_t> steps;
    std::optional<std::vector<double>> list;
};

struct ProfileSpec {
    std::optional<std::string> kind;  // cosine | cosh | table
    std::optional<double> domain_lo;
    std::optional<double> domain_hi;
    std::optional<std::vector<std::pair<double, double>>> nodes;
};

struct ProcedureSpec {
    std::optional<double> q12;
    std::optional<double> q21;
};

/// Union of every field any subcommand understands; presence is tracked per
/// field so validation can insist on exactly the right subset.
struct ExperimentSpec {
    std::optional<std::string> command;

    std::optional<double> p1;
    std::optional<double> p2;
    std::optional<double> p_out1;
    std::optional<double> p_out2;

    std::optional<double> lambda1;
    std::optional<double> lambda2;
    std::optional<std::string> phase_regime;  // trig | hyper
    std::optional<double> theta1;

    ProfileSpec profile;
    GridSpec grid;

    ProcedureSpec procedure;
    std::optional<double> target1;
    std::optional<double> target2;
    std::optional<std::int64_t> size;
    std::optional<std::vector<std::int64_t>> sizes;
    std::optional<int> replicas;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> stream;
    std::optional<std::string> mode;  // exact | sampled

    std::optional<double> eps;
    std::optional<std::string> format;  // csv | json
    std::optional<std::string> out;
    std::optional<bool> degrees;
};

namespace detail {

inline double json_number(const nlohmann::json& value, const std::string& name) {
    if (!value.is_number()) {
        throw Error(Errc::InvalidSpec, "field '" + name + "' must be a number");
    }
    return value.get<double>();
}

inline std::int64_t json_integer(const nlohmann::json& value, const std::string& name) {
    if (!value.is_number_integer()) {
        throw Error(Errc::InvalidSpec, "field '" + name + "' must be an integer");
    }
    return value.get<std::int64_t>();
}

inline std::uint64_t json_unsigned(const nlohmann::json& value, const std::string& name) {
    if (!value.is_number_integer() || (value.is_number_integer() && !value.is_number_unsigned() &&
                                       value.get<std::int64_t>() < 0)) {
        throw Error(Errc::InvalidSpec, "field '" + name + "' must be a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

inline std::string json_text(const nlohmann::json& value, const std::string& name) {
    if (!value.is_string()) {
        throw Error(Errc::InvalidSpec, "field '" + name + "' must be a string");
    }
    return value.get<std::string>();
}

inline bool json_boolean(const nlohmann::json& value, const std::string& name) {
    if (!value.is_boolean()) {
        throw Error(Errc::InvalidSpec, "field '" + name + "' must be a boolean");
    }
    return value.get<bool>();
}

/// Two-element numeric array, e.g. "p": [0.25, 0.75].
inline std::pair<double, double> json_pair(const nlohmann::json& value, const std::string& name) {
    if (!value.is_array() || value.size() != 2) {
        throw Error(Errc::InvalidSpec, "field '" + name + "' must be an array of two numbers");
    }
    return {json_number(value[0], name), json_number(value[1], name)};
}

inline GridSpec parse_grid(const nlohmann::json& value) {
    if (!value.is_object()) {
        throw Error(Errc::InvalidSpec, "field 'grid' must be an object");
    }
    GridSpec grid;
    for (const auto& [key, item] : value.items()) {
        if (key == "lo") {
            grid.lo = json_number(item, "grid.lo");
        } else if (key == "hi") {
            grid.hi = json_number(item, "grid.hi");
        } else if (key == "steps") {
            grid.steps = json_integer(item, "grid.steps");
        } else if (key == "list") {
            if (!item.is_array()) {
                throw Error(Errc::InvalidSpec, "field 'grid.list' must be an array of numbers");
            }
            std::vector<double> points;
            points.reserve(item.size());
            for (const auto& entry : item) points.push_back(json_number(entry, "grid.list"));
            grid.list = std::move(points);
        } else {
            throw Error(Errc::InvalidSpec, "unknown field 'grid." + key + "'");
        }
    }
    return grid;
}

inline ProfileSpec parse_profile(const nlohmann::json& value) {
    if (!value.is_object()) {
        throw Error(Errc::InvalidSpec, "field 'profile' must be an object");
    }
    ProfileSpec profile;
    for (const auto& [key, item] : value.items()) {
        if (key == "kind") {
            profile.kind = json_text(item, "profile.kind");
        } else if (key == "domain") {
            const auto [lo, hi] = json_pair(item, "profile.domain");
            profile.domain_lo = lo;
            profile.domain_hi = hi;
        } else if (key == "nodes") {
            if (!item.is_array()) {
                throw Error(Errc::InvalidSpec,
                            "field 'profile.nodes' must be an array of [theta, value] pairs");
            }
            std::vector<std::pair<double, double>> nodes;
            nodes.reserve(item.size());
            for (const auto& entry : item) nodes.push_back(json_pair(entry, "profile.nodes"));
            profile.nodes = std::move(nodes);
        } else {
            throw Error(Errc::InvalidSpec, "unknown field 'profile." + key + "'");
        }
    }
    return profile;
}

inline ProcedureSpec parse_procedure(const nlohmann::json& value) {
    if (!value.is_object()) {
        throw Error(Errc::InvalidSpec, "field 'procedure' must be an object");
    }
    ProcedureSpec proc;
    for (const auto& [key, item] : value.items()) {
        if (key == "q12") {
            proc.q12 = json_number(item, "procedure.q12");
        } else if (key == "q21") {
            proc.q21 = json_number(item, "procedure.q21");
        } else {
            throw Error(Errc::InvalidSpec, "unknown field 'procedure." + key + "'");
        }
    }
    return proc;
}

}  // namespace detail

inline ExperimentSpec spec_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw Error(Errc::InvalidSpec, "spec document must be a JSON object");
    }
    ExperimentSpec spec;
    for (const auto& [key, value] : doc.items()) {
        if (key == "command") {
            spec.command = detail::json_text(value, key);
        } else if (key == "p") {
            const auto [a, b] = detail::json_pair(value, key);
            spec.p1 = a;
            spec.p2 = b;
        } else if (key == "p1") {
            spec.p1 = detail::json_number(value, key);
        } else if (key == "p2") {
            spec.p2 = detail::json_number(value, key);
        } else if (key == "p_out") {
            const auto [a, b] = detail::json_pair(value, key);
            spec.p_out1 = a;
            spec.p_out2 = b;
        } else if (key == "lambda") {
            const auto [a, b] = detail::json_pair(value, key);
            spec.lambda1 = a;
            spec.lambda2 = b;
        } else if (key == "regime") {
            spec.phase_regime = detail::json_text(value, key);
        } else if (key == "theta1") {
            spec.theta1 = detail::json_number(value, key);
        } else if (key == "profile") {
            spec.profile = detail::parse_profile(value);
        } else if (key == "grid") {
            spec.grid = detail::parse_grid(value);
        } else if (key == "procedure") {
            spec.procedure = detail::parse_procedure(value);
        } else if (key == "target") {
            const auto [a, b] = detail::json_pair(value, key);
            spec.target1 = a;
            spec.target2 = b;
        } else if (key == "size") {
            spec.size = detail::json_integer(value, key);
        } else if (key == "sizes") {
            if (!value.is_array()) {
                throw Error(Errc::InvalidSpec, "field 'sizes' must be an array of integers");
            }
            std::vector<std::int64_t> sizes;
            sizes.reserve(value.size());
            for (const auto& entry : value) sizes.push_back(detail::json_integer(entry, "sizes"));
            spec.sizes = std::move(sizes);
        } else if (key == "replicas") {
            const std::int64_t n = detail::json_integer(value, key);
            spec.replicas = static_cast<int>(n);
        } else if (key == "seed") {
            spec.seed = detail::json_unsigned(value, key);
        } else if (key == "stream") {
            spec.stream = detail::json_unsigned(value, key);
        } else if (key == "mode") {
            spec.mode = detail::json_text(value, key);
        } else if (key == "eps") {
            spec.eps = detail::json_number(value, key);
        } else if (key == "format") {
            spec.format = detail::json_text(value, key);
        } else if (key == "out") {
            spec.out = detail::json_text(value, key);
        } else if (key == "degrees") {
            spec.degrees = detail::json_boolean(value, key);
        } else {
            throw Error(Errc::InvalidSpec, "unknown field '" + key + "'");
        }
    }
    return spec;
}

inline ExperimentSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::InvalidSpec, "cannot open spec file: " + path);
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
        throw Error(Errc::InvalidSpec, std::string("spec file is not valid JSON: ") + e.what());
    }
    return spec_from_json(doc);
}

/// Applies flag values on top of a spec-file document. Every engaged field
/// of `over` wins; untouched fields keep the document's values.
inline void overlay(ExperimentSpec& base, const ExperimentSpec& over) {
    const auto put = [](auto& dst, const auto& src) {
        if (src.has_value()) dst = src;
    };
    put(base.command, over.command);
    put(base.p1, over.p1);
    put(base.p2, over.p2);
    put(base.p_out1, over.p_out1);
    put(base.p_out2, over.p_out2);
    put(base.lambda1, over.lambda1);
    put(base.lambda2, over.lambda2);
    put(base.phase_regime, over.phase_regime);
    put(base.theta1, over.theta1);
    put(base.profile.kind, over.profile.kind);
    put(base.profile.domain_lo, over.profile.domain_lo);
    put(base.profile.domain_hi, over.profile.domain_hi);
    put(base.profile.nodes, over.profile.nodes);
    put(base.grid.lo, over.grid.lo);
    put(base.grid.hi, over.grid.hi);
    put(base.grid.steps, over.grid.steps);
    put(base.grid.list, over.grid.list);
    put(base.procedure.q12, over.procedure.q12);
    put(base.procedure.q21, over.procedure.q21);
    put(base.target1, over.target1);
    put(base.target2, over.target2);
    put(base.size, over.size);
    put(base.sizes, over.sizes);
    put(base.replicas, over.replicas);
    put(base.seed, over.seed);
    put(base.stream, over.stream);
    put(base.mode, over.mode);
    put(base.eps, over.eps);
    put(base.format, over.format);
    put(base.out, over.out);
    put(base.degrees, over.degrees);
}

namespace detail {

inline constexpr unsigned kInTransform = 1u << 0;
inline constexpr unsigned kInInvert = 1u << 1;
inline constexpr unsigned kInSimulate = 1u << 2;
inline constexpr unsigned kInSweep = 1u << 3;
inline constexpr unsigned kInConverge = 1u << 4;
inline constexpr unsigned kInAll =
    kInTransform | kInInvert | kInSimulate | kInSweep | kInConverge;

inline unsigned command_mask(Command cmd) {
    switch (cmd) {
        case Command::Transform: return kInTransform;
        case Command::Invert: return kInInvert;
        case Command::Simulate: return kInSimulate;
        case Command::Sweep: return kInSweep;
        case Command::Converge: return kInConverge;
    }
    return 0;
}

inline void check_choice(const std::optional<std::string>& value, const char* name,
                         std::initializer_list<const char*> choices) {
    if (!value.has_value()) return;
    for (const char* choice : choices) {
        if (*value == choice) return;
    }
    std::string message = "field '" + std::string(name) + "' must be one of {";
    bool first = true;
    for (const char* choice : choices) {
        if (!first) message += ", ";
        message += choice;
        first = false;
    }
    message += "}, got '" + *value + "'";
    throw Error(Errc::InvalidSpec, message);
}

}  // namespace detail

/// Degree→radian conversion, strict field-set enforcement, and enum checks.
/// After this call the spec is radians-only and shaped exactly for `cmd`.
inline void finalize_spec(ExperimentSpec& spec, Command cmd) {
    using namespace detail;

    if (spec.command.has_value() && *spec.command != command_name(cmd)) {
        throw Error(Errc::InvalidSpec, "spec file is for command '" + *spec.command +
                                           "' but '" + command_name(cmd) + "' was invoked");
    }

    check_choice(spec.phase_regime, "regime", {"trig", "hyper"});
    check_choice(spec.profile.kind, "profile.kind", {"cosine", "cosh", "table"});
    check_choice(spec.mode, "mode", {"exact", "sampled"});
    check_choice(spec.format, "format", {"csv", "json"});

    if (spec.degrees.value_or(false)) {
        constexpr double kRadPerDeg = std::numbers::pi / 180.0;
        const auto scale = [](std::optional<double>& angle) {
            if (angle.has_value()) *angle *= kRadPerDeg;
        };
        scale(spec.theta1);
        scale(spec.grid.lo);
        scale(spec.grid.hi);
        scale(spec.profile.domain_lo);
        scale(spec.profile.domain_hi);
        if (spec.grid.list.has_value()) {
            for (double& theta : *spec.grid.list) theta *= kRadPerDeg;
        }
        if (spec.profile.nodes.has_value()) {
            for (auto& [theta, value] : *spec.profile.nodes) theta *= kRadPerDeg;
        }
    }

    const unsigned mask = command_mask(cmd);
    const struct {
        bool present;
        const char* name;
        unsigned allowed;
    } rules[] = {
        {spec.p1.has_value(), "p1", kInAll},
        {spec.p2.has_value(), "p2", kInAll},
        {spec.p_out1.has_value(), "p_out", kInInvert},
        {spec.p_out2.has_value(), "p_out", kInInvert},
        {spec.lambda1.has_value(), "lambda", kInTransform},
        {spec.lambda2.has_value(), "lambda", kInTransform},
        {spec.phase_regime.has_value(), "regime", kInTransform},
        {spec.theta1.has_value(), "theta1", kInTransform},
        {spec.profile.kind.has_value(), "profile.kind", kInSweep},
        {spec.profile.domain_lo.has_value(), "profile.domain", kInSweep},
        {spec.profile.domain_hi.has_value(), "profile.domain", kInSweep},
        {spec.profile.nodes.has_value(), "profile.nodes", kInSweep},
        {spec.grid.lo.has_value(), "grid.lo", kInSweep},
        {spec.grid.hi.has_value(), "grid.hi", kInSweep},
        {spec.grid.steps.has_value(), "grid.steps", kInSweep},
        {spec.grid.list.has_value(), "grid.list", kInSweep},
        {spec.procedure.q12.has_value(), "procedure.q12", kInSimulate | kInConverge},
        {spec.procedure.q21.has_value(), "procedure.q21", kInSimulate | kInConverge},
        {spec.target1.has_value(), "target", kInSimulate | kInConverge},
        {spec.target2.has_value(), "target", kInSimulate | kInConverge},
        {spec.size.has_value(), "size", kInSimulate},
        {spec.sizes.has_value(), "sizes", kInConverge},
        {spec.replicas.has_value(), "replicas", kInSimulate | kInConverge},
        {spec.mode.has_value(), "mode", kInSimulate | kInConverge},
        {spec.eps.has_value(), "eps", kInTransform | kInInvert | kInSimulate | kInSweep},
        {spec.seed.has_value(), "seed", kInAll},
        {spec.stream.has_value(), "stream", kInAll},
        {spec.format.has_value(), "format", kInAll},
        {spec.out.has_value(), "out", kInAll},
        {spec.degrees.has_value(), "degrees", kInAll},
    };
    for (const auto& rule : rules) {
        if (rule.present && (rule.allowed & mask) == 0) {
            throw Error(Errc::InvalidSpec, "field '" + std::string(rule.name) +
                                               "' does not belong to the '" +
                                               command_name(cmd) + "' command");
        }
    }

    if (!spec.p1.has_value()) {
        throw Error(Errc::InvalidSpec, "input probabilities are required (field 'p' or --p1)");
    }

    const bool has_procedure =
        spec.procedure.q12.has_value() || spec.procedure.q21.has_value();
    const bool has_target = spec.target1.has_value() || spec.target2.has_value();
    if (has_target && !spec.target1.has_value()) {
        throw Error(Errc::InvalidSpec, "target needs its first component (--target1)");
    }

    switch (cmd) {
        case Command::Transform: {
            if (spec.lambda1.has_value() != spec.lambda2.has_value()) {
                throw Error(Errc::InvalidSpec, "lambda1 and lambda2 must be given together");
            }
            if (spec.phase_regime.has_value() != spec.theta1.has_value()) {
                throw Error(Errc::InvalidSpec, "regime and theta1 must be given together");
            }
            const bool by_lambda = spec.lambda1.has_value();
            const bool by_phase = spec.phase_regime.has_value();
            if (by_lambda == by_phase) {
                throw Error(Errc::InvalidSpec,
                            "transform needs exactly one of (lambda1, lambda2) or (regime, theta1)");
            }
            break;
        }
        case Command::Invert: {
            if (!spec.p_out1.has_value()) {
                throw Error(Errc::InvalidSpec,
                            "output probabilities are required (field 'p_out' or --pout1)");
            }
            break;
        }
        case Command::Simulate: {
            if (!spec.size.has_value()) {
                throw Error(Errc::InvalidSpec, "ensemble size is required (--size)");
            }
            if (*spec.size < 1) {
                throw Error(Errc::InvalidSpec, "ensemble size must be >= 1");
            }
            if (spec.replicas.has_value() && *spec.replicas < 1) {
                throw Error(Errc::InvalidSpec, "replica count must be >= 1");
            }
            if (has_procedure && has_target) {
                throw Error(Errc::InvalidSpec,
                            "give either procedure q's or a target, not both");
            }
            if (!has_procedure && !has_target) {
                throw Error(Errc::InvalidSpec,
                            "simulate needs a procedure (--q12/--q21) or a target (--target1)");
            }
            break;
        }
        case Command::Sweep: {
            if (!spec.profile.kind.has_value()) {
                throw Error(Errc::InvalidSpec, "profile kind is required (--profile)");
            }
            if (*spec.profile.kind == "table") {
                if (!spec.profile.nodes.has_value()) {
                    throw Error(Errc::InvalidSpec, "table profile needs nodes (--nodes)");
                }
                if (spec.profile.domain_lo.has_value() || spec.profile.domain_hi.has_value()) {
                    throw Error(Errc::InvalidSpec,
                                "table profile takes its domain from the nodes; drop profile.domain");
                }
            } else if (spec.profile.nodes.has_value()) {
                throw Error(Errc::InvalidSpec, "profile nodes are only for the table kind");
            }
            if (spec.profile.domain_lo.has_value() != spec.profile.domain_hi.has_value()) {
                throw Error(Errc::InvalidSpec, "profile domain needs both endpoints");
            }
            const bool has_list = spec.grid.list.has_value();
            const bool any_range = spec.grid.lo.has_value() || spec.grid.hi.has_value() ||
                                   spec.grid.steps.has_value();
            const bool full_range = spec.grid.lo.has_value() && spec.grid.hi.has_value() &&
                                    spec.grid.steps.has_value();
            if (has_list && any_range) {
                throw Error(Errc::InvalidSpec, "grid takes either a theta list or lo/hi/steps, not both");
            }
            if (!has_list && !full_range) {
                throw Error(Errc::InvalidSpec,
                            "grid needs a theta list (--thetas) or all of lo, hi, steps");
            }
            if (full_range) {
                if (*spec.grid.steps < 0) {
                    throw Error(Errc::InvalidSpec, "grid steps must be >= 0");
                }
                if (*spec.grid.steps > 10'000'000) {
                    throw Error(Errc::InvalidSpec, "grid steps must be <= 10000000");
                }
                if (*spec.grid.steps > 1 && !(*spec.grid.lo < *spec.grid.hi)) {
                    throw Error(Errc::InvalidSpec, "grid needs lo < hi when steps > 1");
                }
            }
            break;
        }
        case Command::Converge: {
            if (!spec.sizes.has_value() || spec.sizes->empty()) {
                throw Error(Errc::InvalidSpec, "a non-empty size list is required (--sizes)");
            }
            for (std::size_t i = 0; i < spec.sizes->size(); ++i) {
                const std::int64_t n = (*spec.sizes)[i];
                if (n < 1 || (i > 0 && n <= (*spec.sizes)[i - 1])) {
                    throw Error(Errc::InvalidSpec,
                                "sizes must be positive and strictly increasing");
                }
            }
            if (!spec.replicas.has_value()) {
                throw Error(Errc::InvalidSpec, "replica count is required (--replicas)");
            }
            if (*spec.replicas < 1) {
                throw Error(Errc::InvalidSpec, "replica count must be >= 1");
            }
            if (has_procedure && has_target) {
                throw Error(Errc::InvalidSpec,
                            "give either procedure q's or a target, not both");
            }
            if (!has_procedure && !has_target) {
                throw Error(Errc::InvalidSpec,
                            "converge needs a procedure (--q12/--q21) or a target (--target1)");
            }
            break;
        }
    }
}

/// Parses the --nodes flag format "theta:value,theta:value,...".
inline std::vector<std::pair<double, double>> parse_node_list(const std::string& text) {
    std::vector<std::pair<double, double>> nodes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string item = text.substr(pos, next - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            throw Error(Errc::InvalidSpec,
                        "node '" + item + "' is not of the form theta:value");
        }
        try {
            std::size_t used = 0;
            const double theta = std::stod(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument(item);
            const std::string value_text = item.substr(colon + 1);
            const double value = std::stod(value_text, &used);
            if (used != value_text.size()) throw std::invalid_argument(item);
            nodes.emplace_back(theta, value);
        } catch (const std::exception&) {
            throw Error(Errc::InvalidSpec,
                        "node '" + item + "' is not of the form theta:value");
        }
        pos = next + 1;
        if (next == text.size()) break;
    }
    return nodes;
}

}  // namespace hyperpol::cli
