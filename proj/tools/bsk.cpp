#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bsk/dg.hpp"
#include "bsk/json_io.hpp"
#include "bsk/orders.hpp"

namespace {

constexpr const char* kSchema = "basic-set-kit/1";

// Relative --out paths resolve against BSK_OUTPUT_DIR when it is set.
std::string resolve_out(const std::string& out) {
    std::filesystem::path path(out);
    if (path.is_relative()) {
        if (const char* base = std::getenv("BSK_OUTPUT_DIR"))
            path = std::filesystem::path(base) / path;
    }
    return path.string();
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    const std::string path = resolve_out(out);
    std::ofstream stream(path, std::ios::binary);
    if (!stream)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    stream << text;
}

std::string csv_quote(const std::string& field) {
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

struct ChargeFlags {
    int e = 0;
    std::vector<int> s;
    std::vector<std::string> u{"uglov"};
};

bsk::ChargeParams make_params(const ChargeFlags& flags) {
    if (flags.u.size() == 1 && flags.u[0] == "uglov")
        return bsk::ChargeParams::uglov(flags.e, flags.s);
    std::vector<bsk::Rational> u;
    for (const std::string& text : flags.u)
        u.push_back(bsk::parse_rational(text));
    return bsk::ChargeParams(flags.e, flags.s, u);
}

bsk::Json params_json(int n, int level, const bsk::ChargeParams& params) {
    return bsk::Json{{"n", n}, {"level", level}, {"charge", bsk::json_of(params)}};
}

std::string dump(const bsk::Json& j) { return j.dump(2) + "\n"; }

std::string describe_charge(const bsk::ChargeParams& params) {
    std::ostringstream text;
    text << "e=" << params.e() << " s=(";
    for (std::size_t i = 0; i < params.s().size(); ++i)
        text << (i ? "," : "") << params.s()[i];
    text << ") u=(";
    for (std::size_t i = 0; i < params.u().size(); ++i)
        text << (i ? "," : "") << bsk::format_rational(params.u()[i]);
    text << ")";
    return text.str();
}

int run_enumerate(int n, int level, bool compositions, const std::string& format,
                  const std::string& out) {
    const bsk::Kind kind = compositions ? bsk::Kind::composition : bsk::Kind::partition;
    const auto all = bsk::enumerate_multipartitions(n, level, kind);

    std::ostringstream text;
    if (format == "json") {
        bsk::Json elements = bsk::Json::array();
        for (const auto& mp : all)
            elements.push_back(bsk::json_of(mp));
        text << dump(bsk::Json{{"schema", kSchema},
                               {"subcommand", "enumerate"},
                               {"params",
                                bsk::Json{{"n", n},
                                          {"level", level},
                                          {"kind", compositions ? "compositions" : "partitions"}}},
                               {"count", all.size()},
                               {"elements", elements}});
    } else if (format == "csv") {
        text << "multipartition\n";
        for (const auto& mp : all)
            text << csv_quote(bsk::label_of(mp)) << "\n";
    } else {
        for (const auto& mp : all)
            text << bsk::label_of(mp) << "\n";
        text << "count: " << all.size() << "\n";
    }
    emit(out, text.str());
    return 0;
}

int run_a_table(int n, int level, const ChargeFlags& flags, bool compositions,
                const std::string& format, const std::string& out) {
    const bsk::ChargeParams params = make_params(flags);
    if (params.level() != level)
        throw std::invalid_argument("a-table: level does not match multicharge length");
    const bsk::Kind kind = compositions ? bsk::Kind::composition : bsk::Kind::partition;
    const auto all = bsk::enumerate_multipartitions(n, level, kind);

    std::ostringstream text;
    if (format == "json") {
        bsk::Json rows = bsk::Json::array();
        for (const auto& mp : all)
            rows.push_back(bsk::Json{{"multipartition", bsk::json_of(mp)},
                                     {"a", bsk::json_of(bsk::a_function(mp, params))}});
        text << dump(bsk::Json{{"schema", kSchema},
                               {"subcommand", "a-table"},
                               {"params", params_json(n, level, params)},
                               {"rows", rows}});
    } else if (format == "csv") {
        text << "multipartition,a\n";
        for (const auto& mp : all)
            text << csv_quote(bsk::label_of(mp)) << ","
                 << bsk::format_rational(bsk::a_function(mp, params)) << "\n";
    } else {
        for (const auto& mp : all)
            text << bsk::label_of(mp) << " "
                 << bsk::format_rational(bsk::a_function(mp, params)) << "\n";
    }
    emit(out, text.str());
    return 0;
}

int run_check(const std::string& name, int n, int level, const ChargeFlags& flags, int jobs,
              const std::string& format, const std::string& out) {
    const bsk::ChargeParams params = make_params(flags);
    const bsk::SweepReport report =
        name == "check-prop54"
            ? bsk::check_prop_5_4(n, level, params, jobs)
            : bsk::check_theorem_5_6(n, level, params.e(), params.s(), params.u(), jobs);

    std::ostringstream summary;
    summary << name << ": n=" << n << " level=" << level << " " << describe_charge(params) << "\n"
            << "pairs tested: " << report.pairs_tested << "\n"
            << "matchings found: " << report.pairs_matched << "\n"
            << "order held: " << report.pairs_held << "\n";
    if (report.counterexample) {
        const auto& cex = *report.counterexample;
        summary << "counterexample: lambda=" << bsk::label_of(cex.lambda)
                << " lambda'=" << bsk::label_of(cex.lambda_prime)
                << " a(lambda)=" << bsk::format_rational(cex.a_lambda)
                << " a(lambda')=" << bsk::format_rational(cex.a_lambda_prime) << "\n"
                << "FAIL\n";
    } else {
        summary << "PASS\n";
    }

    const bsk::Json doc{{"schema", kSchema},
                        {"subcommand", name},
                        {"params", params_json(n, level, params)},
                        {"report", bsk::json_of(report)}};
    if (format == "json") {
        emit(out, dump(doc));
    } else {
        emit("", summary.str());
        if (!out.empty())
            emit(out, dump(doc));
    }
    return report.pass() ? 0 : 1;
}

int run_uglov(int n, int level, int e, const std::vector<int>& s, int k, bool paths,
              const std::string& format, const std::string& out) {
    if (k != 1)
        throw std::invalid_argument("uglov: only k = 1 is supported");
    const bsk::UglovSet set = bsk::uglov_multipartitions(n, level, e, s);

    std::ostringstream text;
    if (format == "json") {
        bsk::Json elements = bsk::Json::array();
        for (const auto& mp : set.elements)
            elements.push_back(bsk::json_of(mp));
        bsk::Json doc{{"schema", kSchema},
                      {"subcommand", "uglov"},
                      {"params", bsk::Json{{"n", n}, {"level", level}, {"e", e}, {"s", s}}},
                      {"count", set.elements.size()},
                      {"elements", elements}};
        if (paths) {
            bsk::Json all_paths = bsk::Json::array();
            for (const auto& path : set.paths) {
                bsk::Json steps = bsk::Json::array();
                for (const auto& step : path)
                    steps.push_back(bsk::json_of(step));
                all_paths.push_back(steps);
            }
            doc["paths"] = all_paths;
        }
        text << dump(doc);
    } else {
        for (std::size_t i = 0; i < set.elements.size(); ++i) {
            text << bsk::label_of(set.elements[i]);
            if (paths) {
                text << "  via";
                for (const auto& step : set.paths[i])
                    text << " " << step.residue << ":" << bsk::json_of(step.node).dump();
                if (set.paths[i].empty())
                    text << " (empty)";
            }
            text << "\n";
        }
        text << "count: " << set.elements.size() << "\n";
    }
    emit(out, text.str());
    return 0;
}

int run_verify(const std::string& matrix_path, const std::string& f_spec, bool integral_steps,
               const ChargeFlags& flags, const std::string& format, const std::string& out) {
    std::ifstream matrix_stream(matrix_path);
    if (!matrix_stream)
        throw std::invalid_argument("cannot open matrix file '" + matrix_path + "'");
    bsk::Json matrix_json;
    try {
        matrix_json = bsk::Json::parse(matrix_stream);
    } catch (const bsk::Json::parse_error& err) {
        throw std::invalid_argument("matrix file '" + matrix_path + "': " + err.what());
    }
    const bsk::DecompMatrix matrix = bsk::decomp_matrix_from_json(matrix_json);

    bsk::OrderingFunction f;
    f.mode = integral_steps ? bsk::OrderingFunction::Mode::positive_integer_step
                            : bsk::OrderingFunction::Mode::rational_less;
    if (f_spec == "a") {
        if (flags.s.empty())
            throw std::invalid_argument("verify-basic-set: --f a requires --e and --s");
        const bsk::ChargeParams params = make_params(flags);
        for (const std::string& label : matrix.rows) {
            bsk::Json parsed;
            try {
                parsed = bsk::Json::parse(label);
            } catch (const bsk::Json::parse_error&) {
                throw std::invalid_argument("verify-basic-set: row label '" + label +
                                            "' is not a multipartition");
            }
            const bsk::Multipartition mp = bsk::multipartition_from_json(parsed);
            f.values[label] = bsk::a_function(mp, params);
        }
    } else {
        std::ifstream f_stream(f_spec);
        if (!f_stream)
            throw std::invalid_argument("cannot open ordering file '" + f_spec + "'");
        bsk::Json f_json;
        try {
            f_json = bsk::Json::parse(f_stream);
        } catch (const bsk::Json::parse_error& err) {
            throw std::invalid_argument("ordering file '" + f_spec + "': " + err.what());
        }
        if (!f_json.is_object())
            throw std::invalid_argument("ordering file must be an object of label -> rational");
        for (const auto& [label, value] : f_json.items())
            f.values[label] = bsk::rational_from_json(value);
    }

    const bsk::BasicSetReport report = bsk::verify_basic_set(matrix, f);

    std::ostringstream text;
    if (format == "json") {
        text << dump(bsk::Json{{"schema", kSchema},
                               {"subcommand", "verify-basic-set"},
                               {"params",
                                bsk::Json{{"matrix", matrix_path},
                                          {"f", f_spec},
                                          {"mode", integral_steps ? "positive-integer-step"
                                                                  : "rational-less"}}},
                               {"report", bsk::json_of(report)}});
    } else {
        text << "verify-basic-set: " << matrix_path << " (" << report.nonzero_entries
             << " nonzero entries)\n";
        for (const auto& violation : report.violations) {
            if (violation.type == bsk::BasicSetViolation::Type::diagonal)
                text << "diagonal violation: d[" << violation.row << "][" << violation.col
                     << "] = " << violation.entry << " (expected 1)\n";
            else
                text << "order violation: d[" << violation.row << "][" << violation.col
                     << "] = " << violation.entry << " but f(" << violation.col
                     << ") is not below f(" << violation.row << ")\n";
        }
        text << "note: " << report.assumption << "\n" << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    emit(out, text.str());
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"basic-set-kit: exact multipartition combinatorics for canonical basic sets"};
    app.require_subcommand(1);

    int n = 0;
    int level = 1;
    int jobs = 0;
    int seed = 0;
    int k = 1;
    ChargeFlags charge;
    bool compositions = false;
    bool paths = false;
    bool integral_steps = false;
    std::string format;
    std::string out;
    std::string matrix_path;
    std::string f_spec = "a";

    std::map<const CLI::App*, std::string> default_format;
    const auto add_common = [&](CLI::App* cmd, const std::string& fallback) {
        default_format[cmd] = fallback;
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", out, "output path (relative paths resolve via BSK_OUTPUT_DIR)");
    };
    const auto add_charge = [&](CLI::App* cmd, bool with_u) {
        cmd->add_option("--e", charge.e, "quantum characteristic e >= 1")->required();
        cmd->add_option("--s", charge.s, "multicharge (one integer per component)")
            ->required()
            ->delimiter(',')
            ->expected(-1);
        if (with_u)
            cmd->add_option("--u", charge.u,
                            "shift vector: \"uglov\" or one p/q rational per component")
                ->delimiter(',')
                ->expected(-1);
    };
    const auto add_sweep = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
        cmd->add_option("--seed", seed,
                        "seed for randomized checks (unused: both sweeps are exhaustive)");
    };

    CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list all multipartitions of n");
    cmd_enumerate->add_option("--n", n, "total size")->required();
    cmd_enumerate->add_option("--level", level, "number of components")->required();
    cmd_enumerate->add_flag("--compositions", compositions, "enumerate compositions instead");
    add_common(cmd_enumerate, "json");

    CLI::App* cmd_a_table = app.add_subcommand("a-table", "tabulate a-function values");
    cmd_a_table->add_option("--n", n, "total size")->required();
    cmd_a_table->add_option("--level", level, "number of components")->required();
    cmd_a_table->add_flag("--compositions", compositions, "tabulate compositions instead");
    add_charge(cmd_a_table, true);
    add_common(cmd_a_table, "csv");

    CLI::App* cmd_prop54 = app.add_subcommand(
        "check-prop54", "sweep all pairs: precedence matching forces a-function descent");
    cmd_prop54->add_option("--n", n, "total size")->required();
    cmd_prop54->add_option("--level", level, "number of components")->required();
    add_charge(cmd_prop54, true);
    add_sweep(cmd_prop54);
    add_common(cmd_prop54, "text");

    CLI::App* cmd_thm56 = app.add_subcommand(
        "check-thm56", "sweep all pairs: DG compatibility forces a-function descent");
    cmd_thm56->add_option("--n", n, "total size")->required();
    cmd_thm56->add_option("--level", level, "number of components")->required();
    add_charge(cmd_thm56, true);
    add_sweep(cmd_thm56);
    add_common(cmd_thm56, "text");

    CLI::App* cmd_uglov =
        app.add_subcommand("uglov", "Uglov multipartitions reachable by good-node additions");
    cmd_uglov->add_option("--n", n, "total size")->required();
    cmd_uglov->add_option("--level", level, "number of components")->required();
    cmd_uglov->add_option("--k", k, "numerator of the charge slope (must be 1)");
    cmd_uglov->add_flag("--paths", paths, "include one good-node path per element");
    add_charge(cmd_uglov, false);
    add_common(cmd_uglov, "json");

    CLI::App* cmd_verify =
        app.add_subcommand("verify-basic-set", "check unitriangularity of a decomposition matrix");
    cmd_verify->add_option("--matrix", matrix_path, "decomposition matrix JSON file")->required();
    cmd_verify->add_option("--f", f_spec, "ordering: \"a\" or a JSON file of label -> rational");
    cmd_verify->add_flag("--integral-steps", integral_steps,
                         "require f(F) - f(E) to be a positive integer");
    cmd_verify->add_option("--e", charge.e, "quantum characteristic (for --f a)");
    cmd_verify->add_option("--s", charge.s, "multicharge (for --f a)")
        ->delimiter(',')
        ->expected(-1);
    cmd_verify->add_option("--u", charge.u, "shift vector (for --f a)")
        ->delimiter(',')
        ->expected(-1);
    add_common(cmd_verify, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        for (const auto& [cmd, fallback] : default_format) {
            if (cmd->parsed() && cmd->count("--format") == 0)
                format = fallback;
        }
        if (cmd_enumerate->parsed())
            return run_enumerate(n, level, compositions, format, out);
        if (cmd_a_table->parsed())
            return run_a_table(n, level, charge, compositions, format, out);
        if (cmd_prop54->parsed())
            return run_check("check-prop54", n, level, charge, jobs, format, out);
        if (cmd_thm56->parsed())
            return run_check("check-thm56", n, level, charge, jobs, format, out);
        if (cmd_uglov->parsed())
            return run_uglov(n, level, charge.e, charge.s, k, paths, format, out);
        if (cmd_verify->parsed())
            return run_verify(matrix_path, f_spec, integral_steps, charge, format, out);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
