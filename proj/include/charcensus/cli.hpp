#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charcensus/abacus.hpp"
#include "charcensus/census.hpp"
#include "charcensus/character.hpp"
#include "charcensus/partition.hpp"
#include "charcensus/report_io.hpp"
#include "charcensus/valuation.hpp"

namespace charcensus {

struct CliConfig {
    std::string format = "text";  // text | csv | json
    unsigned workers = 0;         // resolved to available parallelism when 0
    std::string output_path;      // empty writes to stdout
};

/// Comma-separated decreasing positive parts, e.g. "3,1"; "" is the empty
/// partition.
inline Partition parse_partition_literal(const std::string& text) {
    if (text.empty()) return {};
    std::vector<std::uint32_t> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        if (token.empty() || token.size() > 9 ||
            token.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed partition literal: '" + text + "'");
        parts.push_back(static_cast<std::uint32_t>(std::stoul(token)));
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed partition literal: '" + text + "'");
    }
}

namespace detail {

inline void require_census_only_csv(const CliConfig& config) {
    if (config.format == "csv")
        throw std::invalid_argument("csv format applies to census subcommands only");
}

inline std::string dump_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

inline std::string render_reports(const std::vector<CensusReport>& reports,
                                  const CliConfig& config) {
    if (config.format == "csv") return census_csv(reports);
    if (config.format == "json") return dump_json(census_json(reports));
    return census_text(reports);
}

}  // namespace detail

/// Dispatches the full command grammar. Returns 0 on success, 1 on usage
/// errors, 2 on internal invariant failures.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact symmetric-group character degrees, q-core towers, "
                 "valuations and divisibility censuses"};
    app.fallthrough();
    app.require_subcommand(1);

    CliConfig config;
    app.add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--workers", config.workers,
                   "worker threads for census subcommands (default: available parallelism)")
        ->check(CLI::PositiveNumber);
    app.add_option("--output", config.output_path, "write output to a file instead of stdout");

    std::string payload;

    // ---- partition-level commands ----
    std::string lam_text;
    std::string mu_text = "1";
    std::uint32_t q = 2;
    bool use_hook_oracle = false;

    auto* cmd_core = app.add_subcommand("core", "q-core of a partition");
    cmd_core->add_option("partition", lam_text)->required();
    cmd_core->add_option("--q", q, "modulus, at least 2")->required();
    cmd_core->callback([&] {
        detail::require_census_only_csv(config);
        const Partition core = q_core(parse_partition_literal(lam_text), q);
        payload = config.format == "json"
                      ? detail::dump_json({{"core", core.to_string()}})
                      : core.to_string() + "\n";
    });

    auto* cmd_quotient = app.add_subcommand("quotient", "q-quotient components");
    cmd_quotient->add_option("partition", lam_text)->required();
    cmd_quotient->add_option("--q", q)->required();
    cmd_quotient->callback([&] {
        detail::require_census_only_csv(config);
        const auto comps = q_quotient(parse_partition_literal(lam_text), q);
        if (config.format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& c : comps) arr.push_back(c.to_string());
            payload = detail::dump_json({{"components", arr}});
        } else {
            for (std::size_t i = 0; i < comps.size(); ++i)
                payload += (i ? " " : "") + comps[i].to_string();
            payload += '\n';
        }
    });

    auto* cmd_tower = app.add_subcommand("tower", "q-core tower, one row per line");
    cmd_tower->add_option("partition", lam_text)->required();
    cmd_tower->add_option("--q", q)->required();
    cmd_tower->callback([&] {
        detail::require_census_only_csv(config);
        const CoreTower t = core_tower(parse_partition_literal(lam_text), q);
        if (config.format == "json") {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& row : t.rows) {
                nlohmann::ordered_json r = nlohmann::ordered_json::array();
                for (const auto& node : row) r.push_back(node.to_string());
                rows.push_back(std::move(r));
            }
            payload =
                detail::dump_json({{"q", t.q}, {"rows", rows}, {"weights", weight_vector(t).w}});
        } else {
            payload = render_tower(t);
        }
    });

    auto* cmd_degree = app.add_subcommand("degree", "character degree by the hook formula");
    cmd_degree->add_option("partition", lam_text)->required();
    cmd_degree->callback([&] {
        detail::require_census_only_csv(config);
        const BigInt f = degree(parse_partition_literal(lam_text));
        payload = config.format == "json" ? detail::dump_json({{"degree", f.str()}})
                                          : f.str() + "\n";
    });

    auto* cmd_valuation =
        app.add_subcommand("valuation", "q-adic valuation of the character degree");
    cmd_valuation->add_option("partition", lam_text)->required();
    cmd_valuation->add_option("--q", q)->required();
    cmd_valuation->add_flag("--oracle", use_hook_oracle,
                            "use the hook-length route instead of the core tower");
    cmd_valuation->callback([&] {
        detail::require_census_only_csv(config);
        const Partition lam = parse_partition_literal(lam_text);
        const std::uint32_t v =
            use_hook_oracle ? degree_valuation_hooks(lam, q) : degree_valuation_macdonald(lam, q);
        payload = config.format == "json"
                      ? detail::dump_json({{"q", q},
                                           {"valuation", v},
                                           {"method", use_hook_oracle ? "hooks" : "macdonald"}})
                      : std::to_string(v) + "\n";
    });

    auto* cmd_char = app.add_subcommand("char", "character value at cycle type (mu, 1, 1, ...)");
    cmd_char->add_option("partition", lam_text)->required();
    cmd_char->add_option("--mu", mu_text, "explicit cycle lengths")->capture_default_str();
    cmd_char->callback([&] {
        detail::require_census_only_csv(config);
        const Partition lam = parse_partition_literal(lam_text);
        const BigInt chi = character(lam, CycleType(parse_partition_literal(mu_text), lam.size()));
        payload = config.format == "json" ? detail::dump_json({{"chi", chi.str()}})
                                          : chi.str() + "\n";
    });

    auto* cmd_lassalle =
        app.add_subcommand("lassalle", "integral decomposition chi = (f / (n)_k) A");
    cmd_lassalle->add_option("partition", lam_text)->required();
    cmd_lassalle->add_option("--mu", mu_text)->capture_default_str();
    cmd_lassalle->callback([&] {
        detail::require_census_only_csv(config);
        const Partition lam = parse_partition_literal(lam_text);
        const auto dec =
            lassalle_decompose(lam, CycleType(parse_partition_literal(mu_text), lam.size()));
        if (config.format == "json") {
            payload = detail::dump_json({{"f", dec.f.str()},
                                         {"falling", dec.falling.str()},
                                         {"A", dec.a.str()},
                                         {"chi", dec.chi.str()}});
        } else {
            payload = "f=" + dec.f.str() + " (n)_k=" + dec.falling.str() + " A=" + dec.a.str() +
                      " chi=" + dec.chi.str() + "\n";
        }
    });

    // ---- census commands ----
    auto* census = app.add_subcommand("census", "exhaustive statistics over all partitions of n");
    census->require_subcommand(1);

    std::uint32_t n = 0;
    std::uint64_t d = 2;
    std::uint32_t m = 0;
    std::uint32_t b = 0;
    std::vector<std::uint32_t> ns;
    std::string kind;
    const auto workers = [&] { return config.workers == 0 ? default_worker_count()
                                                          : config.workers; };

    auto* c_degrees = census->add_subcommand("degrees", "proportion with d | f_lambda");
    c_degrees->add_option("--n", n)->required();
    c_degrees->add_option("--d", d)->required();
    c_degrees->callback([&] {
        payload = detail::render_reports({degree_divisibility_census(n, d, workers())}, config);
    });

    auto* c_chars = census->add_subcommand("chars", "proportion with d | chi^lambda_mu");
    c_chars->add_option("--n", n)->required();
    c_chars->add_option("--mu", mu_text)->capture_default_str();
    c_chars->add_option("--d", d)->required();
    c_chars->callback([&] {
        payload = detail::render_reports(
            {divisibility_census(n, parse_partition_literal(mu_text), d, workers())}, config);
    });

    auto* c_thma = census->add_subcommand(
        "theorem-a", "proportion with v_q(f_lambda) <= m + (q-1) log_q n");
    c_thma->add_option("--n", n)->required();
    c_thma->add_option("--q", q)->required();
    c_thma->add_option("--m", m)->capture_default_str();
    c_thma->callback([&] {
        payload = detail::render_reports({theorem_a_census(n, q, m, workers())}, config);
    });

    auto* c_cores = census->add_subcommand("cores", "q-core count c_q(n)");
    c_cores->add_option("--n", n)->required();
    c_cores->add_option("--q", q)->required();
    c_cores->callback([&] {
        const CensusReport report = core_count_report(n, q, workers());
        if (config.format == "text") {
            payload = census_text({&report, 1});
            payload += "ctilde=" + std::to_string(core_count_max(n, q, workers())) + "\n";
        } else {
            payload = detail::render_reports({report}, config);
        }
    });

    auto* c_bound = census->add_subcommand("bound", "counting bound on p_b(n)");
    c_bound->add_option("--n", n)->required();
    c_bound->add_option("--q", q)->required();
    c_bound->add_option("--b", b)->required();
    c_bound->callback([&] {
        const BoundReport report = counting_bound(n, q, b, workers());
        if (config.format == "json") {
            payload = detail::dump_json({{"n", report.n},
                                         {"q", report.q},
                                         {"b", report.b},
                                         {"Nb", report.n_b},
                                         {"p_b", report.p_b},
                                         {"bound", report.bound.str()},
                                         {"holds", report.holds},
                                         {"binomial_step_ok", report.binomial_step_ok}});
        } else if (config.format == "csv") {
            const CensusReport row = as_report(report);
            payload = census_csv({&row, 1});
        } else {
            payload = "n=" + std::to_string(report.n) + " q=" + std::to_string(report.q) +
                      " b=" + std::to_string(report.b) + " Nb=" + std::to_string(report.n_b) +
                      " p_b=" + std::to_string(report.p_b) + " bound=" + report.bound.str() +
                      " holds=" + (report.holds ? "true" : "false") +
                      " binomial_step_ok=" + (report.binomial_step_ok ? "true" : "false") + "\n";
        }
    });

    auto* c_trend = census->add_subcommand("trend", "one report per n over an ascending list");
    c_trend->add_option("--ns", ns, "comma-separated ascending list")
        ->required()
        ->delimiter(',');
    c_trend->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"degrees", "chars", "theorem-a"}));
    c_trend->add_option("--d", d);
    c_trend->add_option("--mu", mu_text)->capture_default_str();
    c_trend->add_option("--q", q);
    c_trend->add_option("--m", m);
    c_trend->callback([&] {
        TrendQuery query = DegreesQuery{d};
        if (kind == "chars") query = CharsQuery{parse_partition_literal(mu_text), d};
        if (kind == "theorem-a") query = TheoremAQuery{q, m};
        payload = detail::render_reports(trend_report(ns, query, workers()), config);
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }

    if (config.output_path.empty()) {
        out << payload;
    } else {
        std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open output file '" << config.output_path << "'\n";
            return 1;
        }
        file << payload;
    }
    return 0;
}

}  // namespace charcensus
