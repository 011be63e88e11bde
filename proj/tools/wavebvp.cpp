// Command-line front end: solve singular BVPs by orthogonal-polynomial
// wavelet collocation, run error-versus-resolution studies, compare the ten
// family/approach combinations, and approximate functions in a wavelet basis.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wavebvp/metrics.hpp"
#include "wavebvp/sbvp.hpp"
#include "wavebvp/solver.hpp"
#include "wavebvp/wavelet.hpp"

namespace {

using namespace wavebvp;

constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

std::string format_num(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::vector<double> benchmark_grid() {
    std::vector<double> g{0.0};
    for (int i = 1; i <= 15; i += 2) g.push_back(i / 16.0);
    g.push_back(1.0);
    return g;
}

std::vector<double> parse_points(const std::string& text) {
    if (text.rfind("grid:", 0) == 0) {
        const int n = std::stoi(text.substr(5));
        if (n < 2) throw std::invalid_argument("grid:N needs N >= 2");
        return uniform_grid(n);
    }
    std::vector<double> pts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) pts.push_back(std::stod(item));
    if (pts.empty()) throw std::invalid_argument("empty point list");
    return pts;
}

std::vector<double> parse_guess(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
    return values;
}

struct CommonOptions {
    std::string problem_name;
    std::string problem_file;
    std::string family_name = "legendre";
    double alpha = 1.0;
    bool alpha_given = false;
    std::string approach_name = "newton";
    int level = 2;
    double tol = 1e-12;
    int max_iter = 50;
    std::string guess_text;
    std::string points_text;
    std::string format = "table";
    std::string output = "stdout";
};

void add_problem_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--problem", opt.problem_name, "builtin problem name");
    cmd->add_option("--problem-file", opt.problem_file, "JSON problem description");
}

void add_method_flags(CLI::App* cmd, CommonOptions& opt, bool with_family = true) {
    if (with_family) {
        cmd->add_option("--family", opt.family_name,
                        "chebyshev|hermite|laguerre|legendre|gegenbauer (default legendre)");
    }
    cmd->add_option("--alpha", opt.alpha, "Gegenbauer parameter")->each([&opt](const std::string&) {
        opt.alpha_given = true;
    });
}

void add_solver_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--tol", opt.tol, "iterate-update stopping tolerance (default 1e-12)");
    cmd->add_option("--max-iter", opt.max_iter, "iteration cap (default 50)");
    cmd->add_option("--guess", opt.guess_text, "initial iterate: constant or comma list");
}

void add_output_flags(CLI::App* cmd, CommonOptions& opt, const std::string& default_format) {
    opt.format = default_format;
    cmd->add_option("--format", opt.format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--output", opt.output, "output path or 'stdout'");
}

Problem load_problem(const CommonOptions& opt) {
    if (!opt.problem_name.empty() && !opt.problem_file.empty())
        throw std::invalid_argument("--problem and --problem-file are mutually exclusive");
    if (!opt.problem_name.empty()) return builtin(opt.problem_name);
    if (!opt.problem_file.empty()) {
        std::ifstream in(opt.problem_file, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open problem file: " + opt.problem_file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return from_json(buffer.str());
    }
    throw std::invalid_argument("no problem given: use --problem or --problem-file");
}

Family load_family(const CommonOptions& opt) {
    const Family family = family_from_name(opt.family_name, opt.alpha);
    if (opt.alpha_given && family.tag != FamilyTag::Gegenbauer)
        throw std::invalid_argument("--alpha applies only to the Gegenbauer family");
    validate_family(family);
    return family;
}

Approach load_approach(const CommonOptions& opt) {
    if (opt.approach_name == "newton") return Approach::Newton;
    if (opt.approach_name == "qa") return Approach::QA;
    throw std::invalid_argument("--approach must be 'qa' or 'newton'");
}

SolverConfig load_config(const CommonOptions& opt, Approach approach) {
    SolverConfig config;
    config.approach = approach;
    config.tol = opt.tol;
    config.max_iter = opt.max_iter;
    if (!opt.guess_text.empty()) config.initial_guess = parse_guess(opt.guess_text);
    return config;
}

std::string method_label(const Family& family, Approach approach) {
    return family.abbrev() + (approach == Approach::Newton ? std::string("WNA") : std::string("WQA"));
}

class Output {
public:
    explicit Output(const std::string& target) {
        if (target != "stdout") {
            file_.open(target, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file: " + target);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    const auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            os << row[j];
            if (j + 1 < row.size()) os << std::string(width[j] - row[j].size() + 2, ' ');
        }
        os << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t j = 0; j < header.size(); ++j) os << header[j] << (j + 1 < header.size() ? "," : "");
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) os << row[j] << (j + 1 < row.size() ? "," : "");
        os << "\n";
    }
}

// ------------------------------------------------------------------- solve

int run_solve(const CommonOptions& opt) {
    const Problem problem = load_problem(opt);
    const Family family = load_family(opt);
    const Approach approach = load_approach(opt);
    const WaveletBasis basis = build_basis(family, opt.level);
    const Solution solution = solve(problem, basis, load_config(opt, approach));

    const std::vector<double> points =
        opt.points_text.empty() ? benchmark_grid() : parse_points(opt.points_text);

    std::vector<std::string> header{"t", "y"};
    if (problem.has_exact()) {
        header.push_back("exact");
        header.push_back("abs_error");
    }
    std::vector<std::vector<std::string>> rows;
    double linf = 0.0, l2 = 0.0;
    for (double t : points) {
        const double y = solution.value(t);
        std::vector<std::string> row{format_num(t), format_num(y)};
        if (problem.has_exact()) {
            const double exact = problem.exact_value(t);
            const double err = std::abs(y - exact);
            linf = std::max(linf, err);
            l2 += err * err;
            row.push_back(format_num(exact));
            row.push_back(format_num(err));
        }
        rows.push_back(std::move(row));
    }
    l2 = std::sqrt(l2);

    Output out(opt.output);
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["problem"] = problem.name;
        doc["method"] = method_label(family, approach);
        doc["J"] = opt.level;
        doc["converged"] = solution.converged;
        doc["iterations"] = solution.iterations;
        doc["residual_norm"] = solution.residual_norm;
        doc["rows"] = nlohmann::json::array();
        for (std::size_t i = 0; i < points.size(); ++i) {
            nlohmann::json row;
            row["t"] = points[i];
            row["y"] = solution.value(points[i]);
            if (problem.has_exact()) {
                row["exact"] = problem.exact_value(points[i]);
                row["abs_error"] = std::abs(solution.value(points[i]) - problem.exact_value(points[i]));
            }
            doc["rows"].push_back(row);
        }
        if (problem.has_exact()) {
            doc["linf"] = linf;
            doc["l2"] = l2;
        }
        out.stream() << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        write_csv(out.stream(), header, rows);
    } else {
        write_table(out.stream(), header, rows);
        out.stream() << "converged: " << (solution.converged ? "yes" : "no")
                     << "  iterations: " << solution.iterations
                     << "  residual_norm: " << format_num(solution.residual_norm) << "\n";
        if (problem.has_exact())
            out.stream() << "linf: " << format_num(linf) << "  l2: " << format_num(l2) << "\n";
    }
    return solution.converged ? 0 : kExitNotConverged;
}

// ------------------------------------------------------------- convergence

int run_convergence(const CommonOptions& opt, int j_min, int j_max) {
    const Problem problem = load_problem(opt);
    const Family family = load_family(opt);
    const Approach approach = load_approach(opt);
    const ConvergenceStudy study =
        convergence_study(problem, family, approach, j_min, j_max, load_config(opt, approach));

    const std::string err_name = study.successive ? "succ_diff" : "linf";
    const std::string err2_name = study.successive ? "succ_diff_l2" : "l2";
    std::vector<std::string> header{"J", "M", err_name, err2_name, "iterations"};
    std::vector<std::vector<std::string>> rows;
    for (const ConvergenceRow& row : study.rows) {
        rows.push_back({std::to_string(row.level), std::to_string(row.size), format_num(row.error_linf),
                        format_num(row.error_l2), std::to_string(row.iterations)});
    }

    Output out(opt.output);
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["problem"] = problem.name;
        doc["method"] = method_label(family, approach);
        doc["successive"] = study.successive;
        doc["rows"] = nlohmann::json::array();
        for (const ConvergenceRow& row : study.rows) {
            doc["rows"].push_back({{"J", row.level},
                                   {"M", row.size},
                                   {err_name, row.error_linf},
                                   {err2_name, row.error_l2},
                                   {"iterations", row.iterations}});
        }
        out.stream() << doc.dump(2) << "\n";
    } else if (opt.format == "table") {
        write_table(out.stream(), header, rows);
    } else {
        write_csv(out.stream(), header, rows);
    }
    return 0;
}

// ----------------------------------------------------------------- compare

int run_compare(const CommonOptions& opt) {
    const Problem problem = load_problem(opt);
    validate_family(Family::gegenbauer(opt.alpha));
    const std::vector<double> points =
        opt.points_text.empty() ? benchmark_grid() : parse_points(opt.points_text);

    const std::vector<Family> families{Family::chebyshev(), Family::gegenbauer(opt.alpha),
                                       Family::legendre(), Family::laguerre(), Family::hermite()};
    const std::vector<Approach> approaches{Approach::Newton, Approach::QA};

    std::vector<std::string> header{"t"};
    std::vector<std::vector<double>> columns;
    bool any_failed = false;
    for (Approach approach : approaches) {
        for (const Family& family : families) {
            header.push_back(method_label(family, approach));
            std::vector<double> column;
            try {
                const Solution solution = solve(problem, build_basis(family, opt.level),
                                                load_config(opt, approach));
                if (!solution.converged) throw std::runtime_error("did not converge");
                for (double t : points) column.push_back(solution.value(t));
            } catch (const std::exception& e) {
                std::cerr << "method " << header.back() << " failed: " << e.what() << "\n";
                column.assign(points.size(), std::nan(""));
                any_failed = true;
            }
            columns.push_back(std::move(column));
        }
    }
    if (problem.has_exact()) {
        header.push_back("Exact");
        std::vector<double> column;
        for (double t : points) column.push_back(problem.exact_value(t));
        columns.push_back(std::move(column));
    }

    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<std::string> row{format_num(points[i])};
        for (const auto& column : columns) row.push_back(format_num(column[i]));
        rows.push_back(std::move(row));
    }

    Output out(opt.output);
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["problem"] = problem.name;
        doc["J"] = opt.level;
        doc["rows"] = nlohmann::json::array();
        for (std::size_t i = 0; i < points.size(); ++i) {
            nlohmann::json row;
            row["t"] = points[i];
            for (std::size_t c = 0; c < columns.size(); ++c) row[header[c + 1]] = columns[c][i];
            doc["rows"].push_back(row);
        }
        out.stream() << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        write_csv(out.stream(), header, rows);
    } else {
        write_table(out.stream(), header, rows);
    }
    return any_failed ? kExitNotConverged : 0;
}

// ------------------------------------------------------------- approximate

int run_approximate(const CommonOptions& opt, const std::string& function_text, bool unweighted) {
    const Family family = load_family(opt);
    const Expr f = parse(function_text);
    if (f.uses_y()) throw std::invalid_argument("--function must be an expression in t only");

    const WaveletBasis basis = build_basis(family, opt.level);
    const auto fn = [&f](double t) { return eval(f, t, 0.0); };
    const CoefficientVector coeffs = project(fn, basis, !unweighted);

    std::vector<std::string> header{"t", "f", "reconstruction", "abs_error"};
    std::vector<std::vector<std::string>> rows;
    for (double t : uniform_grid(65)) {
        const double fv = fn(t);
        const double rv = reconstruct(coeffs, basis, t);
        rows.push_back({format_num(t), format_num(fv), format_num(rv), format_num(std::abs(rv - fv))});
    }

    Output out(opt.output);
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["function"] = function_text;
        doc["family"] = family.name();
        doc["J"] = opt.level;
        doc["coefficients"] = coeffs;
        doc["rows"] = nlohmann::json::array();
        for (double t : uniform_grid(65)) {
            const double fv = fn(t);
            const double rv = reconstruct(coeffs, basis, t);
            doc["rows"].push_back(
                {{"t", t}, {"f", fv}, {"reconstruction", rv}, {"abs_error", std::abs(rv - fv)}});
        }
        out.stream() << doc.dump(2) << "\n";
    } else if (opt.format == "table") {
        write_table(out.stream(), header, rows);
    } else {
        write_csv(out.stream(), header, rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal-polynomial wavelet collocation for singular boundary value problems"};
    app.require_subcommand(1);

    CommonOptions solve_opt, conv_opt, cmp_opt, approx_opt;
    int j_min = 1, j_max = 4;
    std::string function_text;
    bool unweighted = false;

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve one problem with one method");
    add_problem_flags(solve_cmd, solve_opt);
    add_method_flags(solve_cmd, solve_opt);
    solve_cmd->add_option("--approach", solve_opt.approach_name, "qa|newton (default newton)");
    solve_cmd->add_option("--J", solve_opt.level, "resolution level (default 2, M = 2^J)");
    add_solver_flags(solve_cmd, solve_opt);
    solve_cmd->add_option("--points", solve_opt.points_text, "comma list or grid:N (default: benchmark grid 0,1/16,3/16,...,15/16,1)");
    add_output_flags(solve_cmd, solve_opt, "table");

    CLI::App* conv_cmd = app.add_subcommand("convergence", "error-versus-resolution sweep");
    add_problem_flags(conv_cmd, conv_opt);
    add_method_flags(conv_cmd, conv_opt);
    conv_cmd->add_option("--approach", conv_opt.approach_name, "qa|newton (default newton)");
    conv_cmd->add_option("--J-min", j_min, "lowest resolution level (default 1)");
    conv_cmd->add_option("--J-max", j_max, "highest resolution level (default 4)");
    add_solver_flags(conv_cmd, conv_opt);
    add_output_flags(conv_cmd, conv_opt, "csv");

    CLI::App* cmp_cmd = app.add_subcommand("compare", "all five families under both approaches");
    add_problem_flags(cmp_cmd, cmp_opt);
    add_method_flags(cmp_cmd, cmp_opt, /*with_family=*/false);
    cmp_cmd->add_option("--J", cmp_opt.level, "resolution level (default 2)");
    add_solver_flags(cmp_cmd, cmp_opt);
    cmp_cmd->add_option("--points", cmp_opt.points_text, "comma list or grid:N (default: benchmark grid 0,1/16,3/16,...,15/16,1)");
    add_output_flags(cmp_cmd, cmp_opt, "table");

    CLI::App* approx_cmd = app.add_subcommand("approximate", "project a function onto a wavelet basis");
    approx_cmd->add_option("--function", function_text, "expression in t")->required();
    add_method_flags(approx_cmd, approx_opt);
    approx_cmd->add_option("--J", approx_opt.level, "resolution level (default 2)");
    approx_cmd->add_flag("--unweighted", unweighted, "plain integrals instead of the weighted projection");
    add_output_flags(approx_cmd, approx_opt, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_opt);
        if (conv_cmd->parsed()) return run_convergence(conv_opt, j_min, j_max);
        if (cmp_cmd->parsed()) return run_compare(cmp_opt);
        if (approx_cmd->parsed()) return run_approximate(approx_opt, function_text, unweighted);
    } catch (const ParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
