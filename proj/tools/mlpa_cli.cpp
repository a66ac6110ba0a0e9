#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlpa/cache.hpp"
#include "mlpa/coarray.hpp"
#include "mlpa/core.hpp"
#include "mlpa/records.hpp"
#include "mlpa/reference_arrays.hpp"
#include "mlpa/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 66;

int emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitIo;
    }
    out << content;
    if (!out) {
        std::cerr << "error: short write to " << out_path << '\n';
        return kExitIo;
    }
    return kExitOk;
}

bool parse_int_list(const std::string& text, std::vector<int>& values) {
    values.clear();
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        size_t begin = token.find_first_not_of(" \t");
        size_t end = token.find_last_not_of(" \t");
        if (begin == std::string::npos) return false;
        token = token.substr(begin, end - begin + 1);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            return false;
        try {
            values.push_back(std::stoi(token));
        } catch (const std::exception&) {
            return false;
        }
    }
    return !values.empty();
}

struct DesignOptions {
    int elements = 0;
    int levels = 0;
    std::string objective = "unique";
    bool all_ties = false;
    std::string format = "table";
    std::optional<double> wavelength;
    int workers = 0;
    std::optional<std::string> cache_dir;
    bool no_cache = false;
};

std::vector<mlpa::OutputRecord> design_records(const mlpa::DesignResult& result,
                                               mlpa::Objective objective, bool all_ties) {
    std::vector<mlpa::OutputRecord> records;
    auto append_set = [&](const std::vector<mlpa::EvaluatedConfig>& set,
                          mlpa::Objective tag) {
        int limit = all_ties ? static_cast<int>(set.size()) : std::min<int>(1, set.size());
        for (int i = 0; i < limit; ++i)
            records.push_back(mlpa::make_record(result, set[i], tag, i + 1));
    };
    if (objective == mlpa::Objective::joint && !result.is_joint()) {
        append_set(result.unique_optima, mlpa::Objective::unique);
        append_set(result.consecutive_optima, mlpa::Objective::consecutive);
    } else {
        append_set(result.optima(objective), objective);
    }
    return records;
}

int run_design(const DesignOptions& opts) {
    auto objective = mlpa::objective_from_string(opts.objective);
    auto cache = mlpa::resolve_cache(opts.cache_dir, opts.no_cache);

    mlpa::DesignQuery query;
    query.total_elements = opts.elements;
    query.levels = opts.levels;
    query.objective = *objective;

    mlpa::DesignResult result;
    try {
        result = mlpa::cached_optimize(cache, query, opts.workers);
    } catch (const mlpa::InfeasibleQueryError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    }

    auto records = design_records(result, *objective, opts.all_ties);

    std::ostringstream out;
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["query"] = {{"N", opts.elements},
                      {"L", opts.levels},
                      {"objective", opts.objective},
                      {"all_ties", opts.all_ties}};
        j["is_joint"] = result.is_joint();
        j["max_unique"] = result.max_unique;
        j["max_consecutive"] = result.max_consecutive;
        j["evaluated_count"] = result.evaluated_count;
        j["excluded_count"] = result.excluded_count;
        j["results"] = nlohmann::ordered_json::array();
        for (const auto& record : records)
            j["results"].push_back(mlpa::record_to_json(record, opts.wavelength));
        out << j.dump(2) << '\n';
    } else if (opts.format == "csv") {
        out << mlpa::record_csv_header(opts.wavelength) << '\n';
        for (const auto& record : records)
            out << mlpa::record_csv_row(record, opts.wavelength) << '\n';
    } else {
        if (*objective == mlpa::Objective::joint && !result.is_joint())
            out << "no configuration maximizes both objectives for N=" << opts.elements
                << ", L=" << opts.levels << "; showing both argmax sets\n";
        for (const auto& record : records) out << mlpa::record_table(record, opts.wavelength);
    }
    return emit(out.str(), "-");
}

struct SweepOptions {
    int levels = 0;
    int n_min = 0;
    int n_max = 0;
    std::string out_path = "-";
    std::string format = "csv";
    int workers = 0;
    std::optional<std::string> cache_dir;
    bool no_cache = false;
};

int run_sweep(const SweepOptions& opts) {
    auto cache = mlpa::resolve_cache(opts.cache_dir, opts.no_cache);

    struct Row {
        int n;
        std::string objective;
        const mlpa::DesignResult* result;  // null when infeasible
        const mlpa::EvaluatedConfig* best;
    };
    std::vector<mlpa::DesignResult> results;
    std::vector<bool> feasible;
    for (int n = opts.n_min; n <= opts.n_max; ++n) {
        mlpa::DesignQuery query;
        query.total_elements = n;
        query.levels = opts.levels;
        query.objective = mlpa::Objective::joint;
        try {
            results.push_back(mlpa::cached_optimize(cache, query, opts.workers));
            feasible.push_back(true);
        } catch (const mlpa::InfeasibleQueryError&) {
            results.emplace_back();
            feasible.push_back(false);
        }
    }

    std::ostringstream out;
    const char* objectives[2] = {"unique", "consecutive"};
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["levels"] = opts.levels;
        j["min"] = opts.n_min;
        j["max"] = opts.n_max;
        j["rows"] = nlohmann::ordered_json::array();
        for (int n = opts.n_min; n <= opts.n_max; ++n) {
            std::size_t idx = static_cast<std::size_t>(n - opts.n_min);
            for (const char* objective_name : objectives) {
                nlohmann::ordered_json row;
                row["N"] = n;
                row["objective"] = objective_name;
                if (!feasible[idx]) {
                    row["status"] = "infeasible";
                } else {
                    const auto& result = results[idx];
                    auto objective = *mlpa::objective_from_string(objective_name);
                    const auto& best = result.recommended(objective);
                    row["status"] = "ok";
                    row["spacing"] = best.config.spacing.spacings;
                    row["partition"] = best.config.partition.counts;
                    row["l_ug"] = best.coarray.unique_count;
                    row["l_cg"] = best.coarray.consecutive_count;
                    row["v_delta"] = best.coarray.unit_spacing_count;
                    row["aperture"] = best.config.aperture;
                    row["is_joint"] = result.is_joint();
                }
                j["rows"].push_back(std::move(row));
            }
        }
        out << j.dump(2) << '\n';
    } else {
        out << "N,objective,status";
        for (int i = 1; i <= opts.levels; ++i) out << ",s" << i;
        out << ",partition,l_ug,l_cg,v_delta,aperture,is_joint\n";
        for (int n = opts.n_min; n <= opts.n_max; ++n) {
            std::size_t idx = static_cast<std::size_t>(n - opts.n_min);
            for (const char* objective_name : objectives) {
                out << n << ',' << objective_name << ',';
                if (!feasible[idx]) {
                    out << "infeasible";
                    for (int i = 0; i < opts.levels; ++i) out << ',';
                    out << ",,,,,\n";
                    continue;
                }
                const auto& result = results[idx];
                auto objective = *mlpa::objective_from_string(objective_name);
                const auto& best = result.recommended(objective);
                out << "ok";
                for (int s : best.config.spacing.spacings) out << ',' << s;
                out << ',' << mlpa::join_ints(best.config.partition.counts, ';') << ','
                    << best.coarray.unique_count << ',' << best.coarray.consecutive_count << ','
                    << best.coarray.unit_spacing_count << ',' << best.config.aperture << ','
                    << (result.is_joint() ? "true" : "false") << '\n';
            }
        }
    }
    return emit(out.str(), opts.out_path);
}

struct AnalyzeOptions {
    std::string positions_text;
    std::string format = "table";
    std::optional<double> wavelength;
};

int run_analyze(const AnalyzeOptions& opts) {
    std::vector<int> positions;
    if (!parse_int_list(opts.positions_text, positions)) {
        std::cerr << "error: --positions expects a comma-separated list of nonnegative integers\n";
        return kExitUsage;
    }
    auto report = mlpa::difference_coarray(positions);
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

    std::ostringstream out;
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["positions"] = positions;
        j["N"] = positions.size();
        j["l_ug"] = report.unique_count;
        j["l_cg"] = report.consecutive_count;
        j["v_delta"] = report.unit_spacing_count;
        j["hole_count"] = report.hole_count;
        j["max_lag"] = report.max_lag;
        j["lags"] = report.lags;
        nlohmann::ordered_json weights = nlohmann::ordered_json::object();
        for (const auto& [lag, weight] : report.weights)
            weights[std::to_string(lag)] = weight;
        j["weights"] = std::move(weights);
        if (opts.wavelength)
            j["positions_physical"] = mlpa::physical_positions(positions, *opts.wavelength);
        out << j.dump(2) << '\n';
    } else if (opts.format == "csv") {
        out << "positions,N,l_ug,l_cg,v_delta,hole_count,max_lag,lags\n";
        out << mlpa::join_ints(positions, ';') << ',' << positions.size() << ','
            << report.unique_count << ',' << report.consecutive_count << ','
            << report.unit_spacing_count << ',' << report.hole_count << ',' << report.max_lag
            << ',' << mlpa::join_ints(report.lags, ';') << '\n';
    } else {
        out << "positions: " << mlpa::join_ints(positions, ' ') << '\n';
        if (opts.wavelength) {
            out << "physical:  ";
            auto physical = mlpa::physical_positions(positions, *opts.wavelength);
            for (std::size_t i = 0; i < physical.size(); ++i) {
                if (i) out << ' ';
                out << physical[i];
            }
            out << '\n';
        }
        out << "N=" << positions.size() << " l_ug=" << report.unique_count
            << " l_cg=" << report.consecutive_count << " v_delta=" << report.unit_spacing_count
            << " holes=" << report.hole_count << " max_lag=" << report.max_lag << '\n';
        out << "lags: " << mlpa::join_ints(report.lags, ' ') << '\n';
    }
    return emit(out.str(), "-");
}

struct CompareOptions {
    std::string levels_text = "3,4";
    int n_min = 0;
    int n_max = 0;
    std::string families_text = "mlpa,nested,coprime";
    std::string out_path = "-";
    int workers = 0;
    std::optional<std::string> cache_dir;
    bool no_cache = false;
};

int run_compare(const CompareOptions& opts) {
    std::vector<int> levels;
    if (!parse_int_list(opts.levels_text, levels)) {
        std::cerr << "error: --levels-list expects a comma-separated list of integers\n";
        return kExitUsage;
    }
    for (int level : levels) {
        if (level < 2) {
            std::cerr << "error: levels must be at least 2, got " << level << '\n';
            return kExitUsage;
        }
    }

    bool want_mlpa = false, want_nested = false, want_coprime = false;
    {
        std::stringstream stream(opts.families_text);
        std::string token;
        bool any = false;
        while (std::getline(stream, token, ',')) {
            if (token == "mlpa") want_mlpa = true;
            else if (token == "nested") want_nested = true;
            else if (token == "coprime") want_coprime = true;
            else {
                std::cerr << "error: unknown family '" << token
                          << "' (expected mlpa, nested, coprime)\n";
                return kExitUsage;
            }
            any = true;
        }
        if (!any) {
            std::cerr << "error: --families expects at least one family\n";
            return kExitUsage;
        }
    }

    auto cache = mlpa::resolve_cache(opts.cache_dir, opts.no_cache);

    std::ostringstream out;
    out << "N";
    if (want_mlpa)
        for (int level : levels)
            out << ",mlpa" << level << "_unique_vdelta,mlpa" << level << "_consecutive_vdelta";
    if (want_nested) out << ",nested_n1,nested_n2,nested_vdelta";
    if (want_coprime) out << ",coprime_m,coprime_nbar,coprime_vdelta";
    out << '\n';

    for (int n = opts.n_min; n <= opts.n_max; ++n) {
        out << n;
        if (want_mlpa) {
            for (int level : levels) {
                mlpa::DesignQuery query;
                query.total_elements = n;
                query.levels = level;
                query.objective = mlpa::Objective::joint;
                try {
                    auto result = mlpa::cached_optimize(cache, query, opts.workers);
                    out << ','
                        << result.recommended(mlpa::Objective::unique)
                               .coarray.unit_spacing_count
                        << ','
                        << result.recommended(mlpa::Objective::consecutive)
                               .coarray.unit_spacing_count;
                } catch (const mlpa::InfeasibleQueryError&) {
                    out << ",,";
                }
            }
        }
        if (want_nested) {
            if (n < 2) {
                out << ",,,";
            } else {
                auto params = mlpa::nested_params_for(n);
                auto positions = mlpa::nested_positions(params.n1, params.n2);
                out << ',' << params.n1 << ',' << params.n2 << ','
                    << mlpa::unit_spacing_count(positions);
            }
        }
        if (want_coprime) {
            auto params = mlpa::coprime_params_for(n);
            if (!params) {
                out << ",,,";
            } else {
                auto positions = mlpa::coprime_positions(params->m, params->nbar);
                out << ',' << params->m << ',' << params->nbar << ','
                    << mlpa::unit_spacing_count(positions);
            }
        }
        out << '\n';
    }
    return emit(out.str(), opts.out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-level prime array design tool"};
    app.set_version_flag("--version", mlpa::kVersion);
    app.require_subcommand(1);

    DesignOptions design_opts;
    auto* design = app.add_subcommand(
        "design", "Find optimal configurations for one element budget and level count");
    design->add_option("--elements", design_opts.elements, "Total number of elements N")
        ->required();
    design->add_option("--levels", design_opts.levels, "Number of subarrays L")->required();
    design
        ->add_option("--objective", design_opts.objective,
                     "Metric to maximize: unique, consecutive or joint")
        ->check(CLI::IsMember({"unique", "consecutive", "joint"}));
    design->add_flag("--all-ties", design_opts.all_ties, "Report every tied optimum, ranked");
    design->add_option("--format", design_opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    design->add_option("--wavelength", design_opts.wavelength,
                       "Also report physical positions at d = wavelength / 2");
    design->add_option("--workers", design_opts.workers,
                       "Worker threads, 0 for hardware concurrency");
    design->add_option("--cache-dir", design_opts.cache_dir,
                       "Result cache directory (also via MLPA_CACHE_DIR)");
    design->add_flag("--no-cache", design_opts.no_cache, "Bypass the result cache");

    SweepOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Optimal designs for a range of element budgets");
    sweep->add_option("--levels", sweep_opts.levels, "Number of subarrays L")->required();
    sweep->add_option("--min", sweep_opts.n_min, "Smallest N")->required();
    sweep->add_option("--max", sweep_opts.n_max, "Largest N")->required();
    sweep->add_option("--out", sweep_opts.out_path, "Output path, - for stdout");
    sweep->add_option("--format", sweep_opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--workers", sweep_opts.workers,
                      "Worker threads, 0 for hardware concurrency");
    sweep->add_option("--cache-dir", sweep_opts.cache_dir,
                      "Result cache directory (also via MLPA_CACHE_DIR)");
    sweep->add_flag("--no-cache", sweep_opts.no_cache, "Bypass the result cache");

    AnalyzeOptions analyze_opts;
    auto* analyze =
        app.add_subcommand("analyze", "Difference coarray report for an arbitrary geometry");
    analyze
        ->add_option("--positions", analyze_opts.positions_text,
                     "Comma-separated element positions in units of d")
        ->required();
    analyze->add_option("--format", analyze_opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    analyze->add_option("--wavelength", analyze_opts.wavelength,
                        "Also report physical positions at d = wavelength / 2");

    CompareOptions compare_opts;
    auto* compare = app.add_subcommand(
        "compare", "Unit-spacing counts of MLPA optima against nested and coprime arrays");
    compare->add_option("--levels-list", compare_opts.levels_text,
                        "Comma-separated MLPA level counts");
    compare->add_option("--min", compare_opts.n_min, "Smallest N")->required();
    compare->add_option("--max", compare_opts.n_max, "Largest N")->required();
    compare->add_option("--families", compare_opts.families_text,
                        "Comma-separated families: mlpa, nested, coprime");
    compare->add_option("--out", compare_opts.out_path, "Output path, - for stdout");
    compare->add_option("--workers", compare_opts.workers,
                        "Worker threads, 0 for hardware concurrency");
    compare->add_option("--cache-dir", compare_opts.cache_dir,
                        "Result cache directory (also via MLPA_CACHE_DIR)");
    compare->add_flag("--no-cache", compare_opts.no_cache, "Bypass the result cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (design->parsed()) return run_design(design_opts);
        if (sweep->parsed()) return run_sweep(sweep_opts);
        if (analyze->parsed()) return run_analyze(analyze_opts);
        if (compare->parsed()) return run_compare(compare_opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
