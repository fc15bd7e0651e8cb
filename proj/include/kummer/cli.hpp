#ifndef KUMMER_CLI_HPP
#define KUMMER_CLI_HPP

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <kummer/assembly.hpp>
#include <kummer/localization.hpp>
#include <kummer/reference_table.hpp>
#include <kummer/symfun.hpp>

namespace kummer::cli
{

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;
inline constexpr int invalid_config = 2;
inline constexpr int genericity = 3;
} // namespace exit_code

enum class Command { compute, verify, hilbert, genus };
enum class OutputFormat { table, json, csv };

struct RunConfig {
    Command command = Command::compute;
    int n_max = reference_max_n;
    int k = 0;
    SurfaceKind surface = SurfaceKind::p2;
    std::optional<std::pair<long, long>> weights;
    OutputFormat format = OutputFormat::table;
    std::optional<std::string> out;
    std::string genus_name;
};

// Thrown for configurations that parse but make no sense.
class config_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// "A,B" with both integers.
inline std::pair<long, long> parse_weights(const std::string &text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw config_error("--weights expects A,B; got '" + text + "'");
    }
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const std::string a_text = text.substr(0, comma);
        const std::string b_text = text.substr(comma + 1);
        const long a = std::stol(a_text, &used_a);
        const long b = std::stol(b_text, &used_b);
        if (used_a != a_text.size() || used_b != b_text.size()) {
            throw config_error("trailing characters");
        }
        return {a, b};
    } catch (const std::logic_error &) {
        throw config_error("--weights expects two integers A,B; got '" + text + "'");
    }
}

// Entries shown for A^[[n]]: the odd-part numbers are validated to vanish and
// are left out.
inline std::vector<std::pair<std::string, std::string>> displayed_entries(const KummerResult &r)
{
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto &[mu, value] : r.chern.numbers) {
        if (!mu.has_odd_part()) {
            rows.emplace_back(chern_key(mu), value.get_str());
        }
    }
    return rows;
}

inline std::string render_kummer(const std::vector<KummerResult> &results, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::table:
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto &r = results[i];
            if (i != 0) {
                os << "\n";
            }
            os << "# A^[[" << r.n << "]]  dimension " << r.dimension << "  surface " << r.surface << "\n";
            for (const auto &[key, value] : displayed_entries(r)) {
                os << key << " | " << value << "\n";
            }
            for (const auto &note : r.advisories) {
                os << "# advisory: " << note << "\n";
            }
        }
        break;
    case OutputFormat::json: {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto &r : results) {
            nlohmann::ordered_json numbers = nlohmann::ordered_json::object();
            for (const auto &[key, value] : displayed_entries(r)) {
                numbers[key] = value;
            }
            doc.push_back({{"n", r.n}, {"dimension", r.dimension}, {"surface", r.surface}, {"chern_numbers", numbers}});
        }
        os << doc.dump(2) << "\n";
        break;
    }
    case OutputFormat::csv:
        os << "n,partition_key,value\n";
        for (const auto &r : results) {
            for (const auto &[key, value] : displayed_entries(r)) {
                os << r.n << "," << key << "," << value << "\n";
            }
        }
        break;
    }
    return os.str();
}

// Re-renders a JSON dump produced by render_kummer.
inline std::string rerender_kummer_json(const std::string &text)
{
    const auto doc = nlohmann::ordered_json::parse(text);
    std::vector<KummerResult> results;
    for (const auto &item : doc) {
        KummerResult r;
        r.n = item.at("n").get<int>();
        r.dimension = item.at("dimension").get<int>();
        r.surface = item.at("surface").get<std::string>();
        r.chern.degree = r.dimension;
        for (const auto &[key, value] : item.at("chern_numbers").items()) {
            r.chern.numbers.emplace(parse_chern_key(key), Rational(value.get<std::string>()));
        }
        results.push_back(std::move(r));
    }
    return render_kummer(results, OutputFormat::json);
}

namespace detail
{

inline std::vector<KummerResult> compute_kummer(const RunConfig &config)
{
    return with_generic_model(config.surface, config.n_max, config.weights,
                              [&](const SurfaceModel &model) { return kummer_results(model, config.n_max); });
}

// n = 2..n_max, or just the point A^[[1]] when n_max = 1.
inline std::vector<KummerResult> reported_range(std::vector<KummerResult> all)
{
    if (all.size() > 1) {
        all.erase(all.begin());
    }
    return all;
}

inline int emit(const RunConfig &config, const std::string &text, std::ostream &out, std::ostream &err)
{
    if (!config.out) {
        out << text;
        return exit_code::ok;
    }
    std::ofstream file(*config.out, std::ios::binary);
    if (!file || !(file << text)) {
        err << "error: cannot write " << *config.out << "\n";
        return exit_code::invalid_config;
    }
    return exit_code::ok;
}

// Maps library exceptions onto exit codes.
template <typename Fn>
int guarded(std::ostream &err, Fn fn)
{
    try {
        return fn();
    } catch (const config_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::invalid_config;
    } catch (const genericity_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::genericity;
    } catch (const validation_error &e) {
        err << "validation failed: " << e.what() << "\n";
        return exit_code::mismatch;
    }
}

} // namespace detail

inline int cmd_compute(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    return detail::guarded(err, [&] {
        if (config.n_max < 1) {
            throw config_error("--n-max must be at least 1");
        }
        const auto results = detail::reported_range(detail::compute_kummer(config));
        return detail::emit(config, render_kummer(results, config.format), out, err);
    });
}

inline int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err,
                      const ReferenceTable &reference = published_reference())
{
    return detail::guarded(err, [&] {
        if (config.n_max < 1 || config.n_max > reference_max_n) {
            throw config_error("verify needs 1 <= --n-max <= " + std::to_string(reference_max_n));
        }
        const auto results = detail::compute_kummer(config);

        std::map<std::pair<int, std::string>, std::string> computed;
        for (const auto &r : results) {
            if (r.n < 2) {
                continue;
            }
            for (auto &[key, value] : displayed_entries(r)) {
                computed.emplace(std::pair{r.n, key}, value);
            }
        }

        std::ostringstream report;
        std::size_t checked = 0;
        std::size_t matched = 0;
        for (const auto &e : reference) {
            if (e.n > config.n_max) {
                continue;
            }
            ++checked;
            const auto it = computed.find({e.n, std::string(e.key)});
            const std::string got = it == computed.end() ? "<missing>" : it->second;
            if (got == e.value) {
                ++matched;
            } else {
                report << "mismatch n=" << e.n << " " << e.key << ": expected " << e.value << ", got " << got << "\n";
            }
            if (it != computed.end()) {
                computed.erase(it);
            }
        }
        for (const auto &[where, value] : computed) {
            report << "mismatch n=" << where.first << " " << where.second << ": expected <absent>, got " << value << "\n";
        }
        const bool all_match = matched == checked && computed.empty();
        report << matched << " of " << checked << " entries match\n";
        const int written = detail::emit(config, report.str(), out, err);
        if (written != exit_code::ok) {
            return written;
        }
        return all_match ? exit_code::ok : exit_code::mismatch;
    });
}

inline int cmd_hilbert(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    return detail::guarded(err, [&] {
        if (config.k < 0) {
            throw config_error("--k must be nonnegative");
        }
        const int k = config.k;
        return with_generic_model(config.surface, k, config.weights, [&](const SurfaceModel &model) {
            const ChernTable table = hilbert_chern_numbers(model, k);
            const std::size_t count = fixed_points(model, k).size();
            const bool euler_ok = table.top() == Rational(static_cast<unsigned long>(count));
            const std::string verdict = euler_ok ? "ok" : "FAILED";

            std::ostringstream os;
            switch (config.format) {
            case OutputFormat::table:
                os << "# " << model.name() << "^[" << k << "]  dimension " << 2 * k << "\n";
                for (const auto &[mu, value] : table.numbers) {
                    os << chern_key(mu) << " | " << value.get_str() << "\n";
                }
                os << "# fixed points: " << count << "\n";
                os << "# euler check (top Chern number = fixed-point count): " << verdict << "\n";
                break;
            case OutputFormat::json: {
                nlohmann::ordered_json numbers = nlohmann::ordered_json::object();
                for (const auto &[mu, value] : table.numbers) {
                    numbers[chern_key(mu)] = value.get_str();
                }
                nlohmann::ordered_json doc = {{"k", k},
                                              {"dimension", 2 * k},
                                              {"surface", model.name()},
                                              {"chern_numbers", numbers},
                                              {"fixed_points", std::to_string(count)},
                                              {"euler_check", verdict}};
                os << doc.dump(2) << "\n";
                break;
            }
            case OutputFormat::csv:
                os << "k,partition_key,value\n";
                for (const auto &[mu, value] : table.numbers) {
                    os << k << "," << chern_key(mu) << "," << value.get_str() << "\n";
                }
                break;
            }
            const int written = detail::emit(config, os.str(), out, err);
            if (written != exit_code::ok) {
                return written;
            }
            return euler_ok ? exit_code::ok : exit_code::mismatch;
        });
    });
}

inline int cmd_genus(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    return detail::guarded(err, [&] {
        const auto preset = parse_genus_preset(config.genus_name);
        if (!preset) {
            throw config_error("unknown genus '" + config.genus_name + "' (todd, euler, signature)");
        }
        if (config.n_max < 1) {
            throw config_error("--n-max must be at least 1");
        }
        const auto results = detail::reported_range(detail::compute_kummer(config));
        const auto ell = genus_log_coefficients(*preset, results.back().dimension);

        std::ostringstream os;
        switch (config.format) {
        case OutputFormat::table:
            for (const auto &r : results) {
                os << "n = " << r.n << ": " << evaluate_genus(r.chern, ell).get_str() << "\n";
            }
            break;
        case OutputFormat::json: {
            nlohmann::ordered_json doc = nlohmann::ordered_json::array();
            for (const auto &r : results) {
                doc.push_back({{"n", r.n}, {"genus", config.genus_name}, {"value", evaluate_genus(r.chern, ell).get_str()}});
            }
            os << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv:
            os << "n,genus,value\n";
            for (const auto &r : results) {
                os << r.n << "," << config.genus_name << "," << evaluate_genus(r.chern, ell).get_str() << "\n";
            }
            break;
        }
        return detail::emit(config, os.str(), out, err);
    });
}

inline int dispatch(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    switch (config.command) {
    case Command::compute:
        return cmd_compute(config, out, err);
    case Command::verify:
        return cmd_verify(config, out, err);
    case Command::hilbert:
        return cmd_hilbert(config, out, err);
    case Command::genus:
        return cmd_genus(config, out, err);
    }
    return exit_code::invalid_config;
}

// Parses argv (without the program name) and runs the selected command.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Chern numbers of generalised Kummer varieties by torus localization", "kummer-chern"};
    app.require_subcommand(1);

    RunConfig config;
    std::string surface = "p2";
    std::string weights;
    std::string format = "table";
    std::string out_path;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--surface", surface, "toric surface used for localization")
            ->check(CLI::IsMember({"p2", "p1xp1"}));
        sub->add_option("--weights", weights, "torus parameters A,B (no retry if given)");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--out", out_path, "write output to FILE instead of stdout");
    };

    auto *compute = app.add_subcommand("compute", "Chern numbers of A^[[n]] for n = 2..n_max");
    compute->add_option("--n-max", config.n_max, "largest n")->required()->check(CLI::PositiveNumber);
    add_common(compute);

    auto *verify = app.add_subcommand("verify", "compare against the published table (n <= 8)");
    verify->add_option("--n-max", config.n_max, "largest n")->capture_default_str()->check(CLI::Range(1, reference_max_n));
    add_common(verify);

    auto *hilbert = app.add_subcommand("hilbert", "Chern numbers of the Hilbert scheme X^[k]");
    hilbert->add_option("--k", config.k, "number of points")->required()->check(CLI::NonNegativeNumber);
    add_common(hilbert);

    auto *genus = app.add_subcommand("genus", "evaluate a genus on A^[[n]]");
    genus->add_option("--name", config.genus_name, "todd | euler | signature")->required();
    genus->add_option("--n-max", config.n_max, "largest n")->required()->check(CLI::PositiveNumber);
    add_common(genus);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::invalid_config;
    }

    if (compute->parsed()) {
        config.command = Command::compute;
    } else if (verify->parsed()) {
        config.command = Command::verify;
    } else if (hilbert->parsed()) {
        config.command = Command::hilbert;
    } else {
        config.command = Command::genus;
    }
    config.surface = *parse_surface(surface);
    config.format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv : OutputFormat::table;
    if (!out_path.empty()) {
        config.out = out_path;
    }
    if (!weights.empty()) {
        try {
            config.weights = parse_weights(weights);
        } catch (const config_error &e) {
            err << "error: " << e.what() << "\n";
            return exit_code::invalid_config;
        }
    }
    return dispatch(config, out, err);
}

} // namespace kummer::cli

#endif
