#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sensim/io.hpp"

namespace sensim {
namespace {

using ordered_json = nlohmann::ordered_json;

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::runtime_error("bad numeric field: '" + std::string(text) + "'");
    return value;
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::runtime_error("bad integer field: '" + std::string(text) + "'");
    return value;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

// p-quantile with linear interpolation between order statistics
double empirical_quantile(std::vector<double> values, double p) {
    if (values.empty()) throw std::invalid_argument("quantile of empty sample");
    std::sort(values.begin(), values.end());
    const double pos = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

ordered_json action_to_json(const Action& action) {
    ordered_json arr = ordered_json::array();
    for (const auto& iv : action.intervals()) arr.push_back({iv.lo, iv.hi});
    return arr;
}

Action action_from_json(const ordered_json& arr) {
    std::vector<Interval> intervals;
    for (const auto& pair : arr)
        intervals.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
    return Action(std::move(intervals));
}

std::string schedule_name(ScheduleKind kind) {
    switch (kind) {
        case ScheduleKind::Linear: return "linear";
        case ScheduleKind::Sqrt: return "sqrt";
        case ScheduleKind::CubeRoot: return "cuberoot";
    }
    return "unknown";
}

ScheduleKind schedule_from_name(const std::string& name) {
    if (name == "linear") return ScheduleKind::Linear;
    if (name == "sqrt") return ScheduleKind::Sqrt;
    if (name == "cuberoot") return ScheduleKind::CubeRoot;
    throw std::runtime_error("unknown schedule '" + name + "'");
}

RateFunction rate_from_json(const ordered_json& spec) {
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "unimodal") return RateFunction::unimodal();
    if (kind == "bimodal") return RateFunction::bimodal();
    if (kind == "constant") return RateFunction::constant(spec.at("value").get<double>());
    if (kind == "piecewise")
        return RateFunction::piecewise_constant(
            spec.at("edges").get<std::vector<double>>(),
            spec.at("values").get<std::vector<double>>());
    throw std::runtime_error("unknown rate kind '" + kind + "'");
}

ordered_json rate_to_json(const RateFunction& rate) {
    ordered_json j;
    j["kind"] = rate.name();
    return j;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string action_to_json_string(const Action& action) {
    std::string out = "[";
    for (std::size_t i = 0; i < action.intervals().size(); ++i) {
        const auto& iv = action.intervals()[i];
        if (i) out += ',';
        out += '[' + format_double(iv.lo) + ',' + format_double(iv.hi) + ']';
    }
    out += ']';
    return out;
}

Action action_from_json_string(const std::string& text) {
    return action_from_json(ordered_json::parse(text));
}

void write_trace_csv(const std::filesystem::path& path, const PolicyOutcome& outcome) {
    auto out = open_out(path);
    out << "run_id,t,K_t,action_json,reward,inst_regret,disc_regret,cum_regret\n";
    for (const auto& run : outcome.runs) {
        for (const auto& rec : run.rounds) {
            out << run.run_id << ',' << rec.t << ',' << rec.k_bins << ','
                << csv_quote(action_to_json_string(rec.action)) << ','
                << format_double(rec.reward) << ',' << format_double(rec.inst_regret)
                << ',' << format_double(rec.disc_regret) << ','
                << format_double(rec.cum_regret) << '\n';
        }
    }
}

std::vector<TraceRow> read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty trace file: " + path.string());
    std::vector<TraceRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 8)
            throw std::runtime_error("malformed trace row: " + line);
        TraceRow row;
        row.run_id = static_cast<std::uint32_t>(parse_u64(fields[0]));
        row.t = parse_u64(fields[1]);
        row.k_bins = static_cast<std::uint32_t>(parse_u64(fields[2]));
        row.action = action_from_json_string(fields[3]);
        row.reward = parse_double(fields[4]);
        row.inst_regret = parse_double(fields[5]);
        row.disc_regret = parse_double(fields[6]);
        row.cum_regret = parse_double(fields[7]);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_summary_json(const std::filesystem::path& path, const ExperimentConfig& config,
                        const ExperimentResult& result) {
    ordered_json j;
    j["experiment"] = config.name;
    j["config"] = {{"rate", rate_to_json(config.rate)},
                   {"cost", config.cost},
                   {"sensors", config.sensors},
                   {"horizon", config.horizon},
                   {"initial_bins", config.schedule.initial_bins},
                   {"schedule", schedule_name(config.schedule.kind)},
                   {"replications", config.replications},
                   {"seed", config.seed}};
    j["optimal_action"] = action_to_json(result.optimal_action);
    j["optimal_reward"] = result.optimal_reward;

    ordered_json policies = ordered_json::array();
    for (const auto& outcome : result.policies) {
        ordered_json pj;
        pj["policy"] = outcome.name;

        ordered_json checkpoints = ordered_json::array();
        const std::size_t horizon = outcome.runs.front().rounds.size();
        for (std::size_t i = 0; i < horizon; ++i) {
            std::vector<double> cums;
            cums.reserve(outcome.runs.size());
            for (const auto& run : outcome.runs) cums.push_back(run.rounds[i].cum_regret);
            double mean = 0.0;
            for (double c : cums) mean += c;
            mean /= static_cast<double>(cums.size());
            checkpoints.push_back({{"t", outcome.runs.front().rounds[i].t},
                                   {"mean_cum_regret", mean},
                                   {"lo95", empirical_quantile(cums, 0.025)},
                                   {"hi95", empirical_quantile(cums, 0.975)}});
        }
        pj["checkpoints"] = std::move(checkpoints);

        ordered_json runs = ordered_json::array();
        double final_mean = 0.0, final_sq = 0.0;
        for (const auto& run : outcome.runs) {
            const double final_cum = run.rounds.back().cum_regret;
            final_mean += final_cum;
            final_sq += final_cum * final_cum;
            const double bound = theorem_bound({run.k_lower, run.k_upper,
                                                outcome.config.prior.lambda_max,
                                                config.cost, config.sensors,
                                                config.horizon});
            runs.push_back({{"run_id", run.run_id},
                            {"final_cum_regret", final_cum},
                            {"k_lower", run.k_lower},
                            {"k_upper", run.k_upper},
                            {"theorem_bound", bound}});
        }
        const auto n = static_cast<double>(outcome.runs.size());
        final_mean /= n;
        pj["runs"] = std::move(runs);
        pj["final_mean_cum_regret"] = final_mean;
        pj["final_cum_regret_variance"] = final_sq / n - final_mean * final_mean;
        policies.push_back(std::move(pj));
    }
    j["policies"] = std::move(policies);

    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

void write_posterior_json(const std::filesystem::path& path, const std::string& policy,
                          const RunTrace& run) {
    const auto& snap = run.snapshot;
    ordered_json j;
    j["policy"] = policy;
    j["run_id"] = run.run_id;
    j["round"] = snap.round;
    j["k_bins"] = snap.k_bins;
    ordered_json bins = ordered_json::array();
    const double K = snap.k_bins;
    for (std::size_t k = 0; k < snap.bins.size(); ++k) {
        const auto& b = snap.bins[k];
        bins.push_back({{"lo", static_cast<double>(k) / K},
                        {"hi", static_cast<double>(k + 1) / K},
                        {"shape", b.shape},
                        {"rate", b.rate},
                        {"mean", b.mean},
                        {"lo95", b.lo95},
                        {"hi95", b.hi95}});
    }
    j["bins"] = std::move(bins);
    j["last_sampled_rates"] = snap.last_rates;
    j["action"] = action_to_json(snap.action);

    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

ExperimentConfig config_from_json_text(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    ExperimentConfig cfg;
    cfg.name = j.value("name", std::string("experiment"));
    cfg.rate = rate_from_json(j.at("rate"));
    cfg.cost = j.at("cost").get<double>();
    cfg.sensors = j.at("sensors").get<std::uint32_t>();
    cfg.horizon = j.at("horizon").get<std::uint64_t>();
    cfg.schedule.initial_bins = j.value("initial_bins", 4u);
    cfg.schedule.kind = schedule_from_name(j.value("schedule", std::string("cuberoot")));
    cfg.replications = j.value("replications", 10u);
    cfg.seed = j.value("seed", std::uint64_t{12345});
    if (cfg.cost < 0.0) throw std::runtime_error("cost must be nonnegative");
    if (cfg.sensors < 1) throw std::runtime_error("sensors must be >= 1");
    if (cfg.horizon < 1) throw std::runtime_error("horizon must be >= 1");

    if (!j.contains("policies") || !j.at("policies").is_array() || j.at("policies").empty())
        throw std::runtime_error("config needs a nonempty policies array");
    for (const auto& pj : j.at("policies")) {
        const std::string kind = pj.at("kind").get<std::string>();
        const double alpha = pj.value("alpha", 0.5);
        const double beta = pj.value("beta", cfg.cost > 0.0 ? 0.5 / cfg.cost : 0.5);
        const double prior_lmax = pj.value("lambda_max", 10.0 * cfg.rate.max_value());
        PolicyConfig pc;
        pc.prior = PriorParams(alpha, beta, prior_lmax);
        pc.epsilon = pj.value("epsilon", 0.01);
        if (kind == "thompson") {
            pc.kind = PolicyKind::Thompson;
        } else if (kind == "ucb") {
            pc.kind = PolicyKind::Ucb;
            pc.lambda_max_policy = pj.value("lambda_max", cfg.rate.max_value());
        } else if (kind == "mucb") {
            pc.kind = PolicyKind::MUcb;
        } else if (kind == "epsgreedy") {
            pc.kind = PolicyKind::EpsGreedy;
        } else {
            throw std::runtime_error("unknown policy kind '" + kind + "'");
        }
        cfg.policies.push_back(pc);
    }
    return cfg;
}

ExperimentConfig config_from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str());
}

std::vector<std::filesystem::path> run_and_emit(const ExperimentConfig& config,
                                                const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    const ExperimentResult result = run_experiment(config);

    std::vector<std::filesystem::path> written;
    for (const auto& outcome : result.policies) {
        const auto trace_path = out_dir / (config.name + "_" + outcome.name + ".csv");
        write_trace_csv(trace_path, outcome);
        written.push_back(trace_path);

        const auto post_path =
            out_dir / (config.name + "_" + outcome.name + "_posterior.json");
        write_posterior_json(post_path, outcome.name, outcome.runs.front());
        written.push_back(post_path);
    }
    const auto summary_path = out_dir / (config.name + "_summary.json");
    write_summary_json(summary_path, config, result);
    written.push_back(summary_path);
    return written;
}

std::vector<std::filesystem::path> replicate_paper(const std::string& experiment,
                                                   const std::filesystem::path& out_dir,
                                                   std::optional<std::uint64_t> seed) {
    const std::uint64_t s = seed.value_or(12345);
    std::vector<std::filesystem::path> written;
    if (experiment == "unimodal") {
        for (ScheduleKind kind :
             {ScheduleKind::Linear, ScheduleKind::Sqrt, ScheduleKind::CubeRoot}) {
            const auto paths = run_and_emit(unimodal_experiment(kind, s), out_dir);
            written.insert(written.end(), paths.begin(), paths.end());
        }
    } else if (experiment == "bimodal") {
        const auto paths = run_and_emit(bimodal_experiment(s), out_dir);
        written.insert(written.end(), paths.begin(), paths.end());
    } else {
        throw std::runtime_error("unknown experiment '" + experiment +
                                 "' (expected unimodal or bimodal)");
    }
    return written;
}

}  // namespace sensim
