// Command-line front end: evaluate exposed functions, verify named
// identities, scan parameter grids, emit machine-readable reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "eisenzeta/classical.hpp"
#include "eisenzeta/eisenstein.hpp"
#include "eisenzeta/lerch.hpp"
#include "eisenzeta/parallel.hpp"
#include "eisenzeta/qseries.hpp"
#include "eisenzeta/registry.hpp"

using json = nlohmann::ordered_json;
using namespace eisenzeta;

namespace {

double now_seconds() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

json complex_json(cplx v) { return json::array({v.real(), v.imag()}); }

using ParamMap = std::map<std::string, std::string>;

double want_num(const ParamMap& p, const std::string& key, double dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : std::stod(it->second);
}

cplx want_cplx(const ParamMap& p, const std::string& key, cplx dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : parse_complex(it->second);
}

std::string want_str(const ParamMap& p, const std::string& key, std::string dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : it->second;
}

// One evaluated quantity; eval targets may emit several named values.
struct EvalRow {
    std::string name;
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    long long terms_used = 0;
};

std::vector<EvalRow> eval_target(const std::string& target, const ParamMap& p,
                                 const Truncation& t) {
    auto one = [](const char* name, const EvalResult& r) {
        return std::vector<EvalRow>{{name, r.value, r.error_estimate, r.terms_used}};
    };
    EisensteinParams ep{want_cplx(p, "s", {6.0, 0.0}), want_num(p, "alpha", 0.0),
                        want_num(p, "beta", 0.0),      want_num(p, "mu", 0.0),
                        want_num(p, "nu", 0.0),        want_cplx(p, "tau", {1.0, 0.0})};

    if (target == "f_qform") return one("f_qform", f_qform(ep, t));
    if (target == "f_brute") {
        const int radius = static_cast<int>(want_num(p, "radius", 400));
        const BruteResult b = f_brute(ep, radius);
        const std::string which = want_str(p, "branch", "mean");
        if (which == "plus") return one("f_brute_plus", b.plus);
        if (which == "minus") return one("f_brute_minus", b.minus);
        return one("f_brute_mean", b.mean);
    }
    if (target == "asymptotic") {
        const int J = static_cast<int>(want_num(p, "J", 1));
        const AsymptoticSJ sj = asymptotic_SJ(ep, {J, 0}, t);
        return {{"main", sj.main, 0.0, 0}, {"series", sj.series, 0.0, 0}};
    }
    if (target == "remainder")
        return one("remainder",
                   remainder_subtraction(ep, {static_cast<int>(want_num(p, "J", 1)), 0}, t));
    if (target == "remainder_mb")
        return one("remainder_mb",
                   remainder_mellin_barnes(ep, {static_cast<int>(want_num(p, "J", 1)), 0}, t));
    if (target == "psi_lerch")
        return one("psi_lerch", psi_lerch({want_cplx(p, "r", {2.0, 0.0}),
                                           want_num(p, "gamma", 1.0),
                                           want_num(p, "kappa", 0.0)},
                                          t));
    if (target == "psi_bilateral")
        return one("psi_bilateral",
                   psi_bilateral(want_cplx(p, "r", {2.0, 0.0}), want_num(p, "gamma", 0.0),
                                 want_num(p, "kappa", 0.0),
                                 want_str(p, "branch", "plus") == "minus" ? Branch::minus
                                                                          : Branch::plus,
                                 t));
    if (target == "hurwitz_zeta")
        return one("hurwitz_zeta",
                   hurwitz_zeta(want_cplx(p, "r", {2.0, 0.0}), want_num(p, "a", 1.0), t));
    if (target == "exp_zeta")
        return one("exp_zeta",
                   exp_zeta(want_cplx(p, "r", {2.0, 0.0}), want_num(p, "kappa", 0.0), t));
    if (target == "gamma_fn")
        return {{"gamma_fn", gamma_fn(want_cplx(p, "s", {0.5, 0.0})), 0.0, 0}};
    if (target == "e_of") return {{"e_of", e_of(want_cplx(p, "s", {0.0, 0.0})), 0.0, 0}};
    if (target == "s_eval") {
        SArgs a{want_cplx(p, "r", {2.0, 0.0}), want_num(p, "gamma", 0.0),
                want_num(p, "delta", 0.0),     want_num(p, "kappa", 0.0),
                want_num(p, "lambda", 0.0),    want_cplx(p, "z", {0.0, 1.0}),
                want_num(p, "dual", 0.0) != 0.0};
        return one("s_eval", s_eval(a, t));
    }
    if (target == "E")
        return one("E", eisenstein_E(static_cast<int>(want_num(p, "weight", 4)),
                                     want_cplx(p, "z", {0.0, 1.0}), t));
    if (target == "wp") {
        const LatticePoint pt{want_num(p, "alpha", 0.3), want_num(p, "beta", 0.4),
                              want_cplx(p, "z", {0.0, 1.0})};
        const WpRoute route =
            want_str(p, "route", "qform") == "lattice" ? WpRoute::lattice : WpRoute::qform;
        return one("wp", wp(pt, route, t, static_cast<int>(want_num(p, "radius", 1500))));
    }
    if (target == "wzeta")
        return one("wzeta", wzeta({want_num(p, "alpha", 0.3), want_num(p, "beta", 0.4),
                                   want_cplx(p, "z", {0.0, 1.0})},
                                  t));
    if (target == "wsigma") {
        const SigmaForms sf = wsigma({want_num(p, "alpha", 0.3), want_num(p, "beta", 0.4),
                                      want_cplx(p, "z", {0.0, 1.0})},
                                     t);
        return {{"log_form", sf.log_form, 0.0, 0},
                {"product_form", sf.product_form, 0.0, 0}};
    }
    throw std::domain_error("unknown eval target: " + target);
}

const std::vector<std::string>& eval_targets() {
    static const std::vector<std::string> names = {
        "f_qform",   "f_brute",       "asymptotic",   "remainder", "remainder_mb",
        "psi_lerch", "psi_bilateral", "hurwitz_zeta", "exp_zeta",  "gamma_fn",
        "e_of",      "s_eval",        "E",            "wp",        "wzeta",
        "wsigma"};
    return names;
}

json params_json(const ParamMap& p) {
    json out = json::object();
    for (const auto& [k, v] : p) out[k] = v;
    return out;
}

json verify_report_json(const VerifyReport& rep) {
    json rows = json::array();
    for (const VerifyRow& row : rep.rows) {
        json r;
        r["params"] = row.params;
        r["lhs"] = complex_json(row.lhs);
        r["rhs"] = complex_json(row.rhs);
        r["residual"] = row.residual;
        r["threshold"] = row.threshold;
        r["passed"] = row.passed;
        if (!row.note.empty()) r["note"] = row.note;
        r["wall_time"] = row.wall_time;
        rows.push_back(std::move(r));
    }
    json out;
    out["target"] = rep.target;
    out["description"] = rep.description;
    out["threshold"] = rep.threshold;
    out["passed"] = rep.passed;
    out["max_residual"] = rep.max_residual;
    out["rows"] = std::move(rows);
    return out;
}

enum class Format { json_fmt, csv_fmt, text_fmt };

void print_eval_rows(const std::vector<EvalRow>& rows, Format fmt) {
    if (fmt == Format::csv_fmt) {
        std::cout << "name,value_re,value_im,error_estimate,terms_used\n";
        for (const EvalRow& r : rows)
            std::cout << r.name << "," << r.value.real() << "," << r.value.imag() << ","
                      << r.error_estimate << "," << r.terms_used << "\n";
        return;
    }
    for (const EvalRow& r : rows) {
        std::cout << r.name << " = " << r.value.real()
                  << (r.value.imag() < 0 ? " - " : " + ") << std::abs(r.value.imag()) << "i";
        if (r.error_estimate > 0) std::cout << "  (err <= " << r.error_estimate << ")";
        if (r.terms_used > 0) std::cout << "  [" << r.terms_used << " terms]";
        std::cout << "\n";
    }
}

void print_verify_text(const VerifyReport& rep, bool verbose) {
    std::cout << (rep.passed ? "PASS " : "FAIL ") << rep.target << "  max residual "
              << rep.max_residual << " (threshold " << rep.threshold << ", "
              << rep.rows.size() << " rows)\n";
    for (const VerifyRow& row : rep.rows) {
        if (!verbose && row.passed) continue;
        std::cout << "  " << (row.passed ? " ok " : "FAIL") << "  " << row.params
                  << "  residual=" << row.residual << " threshold=" << row.threshold;
        if (!row.note.empty()) std::cout << "  [" << row.note << "]";
        std::cout << "\n";
    }
}

void print_verify_csv(const std::vector<VerifyReport>& reps) {
    std::cout << "target,params,lhs_re,lhs_im,rhs_re,rhs_im,residual,threshold,passed\n";
    for (const VerifyReport& rep : reps)
        for (const VerifyRow& row : rep.rows)
            std::cout << rep.target << ",\"" << row.params << "\"," << row.lhs.real() << ","
                      << row.lhs.imag() << "," << row.rhs.real() << "," << row.rhs.imag()
                      << "," << row.residual << "," << row.threshold << ","
                      << (row.passed ? 1 : 0) << "\n";
}

// grid: every key maps to the list of values it takes
using Grid = std::vector<std::pair<std::string, std::vector<std::string>>>;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Grid grid_from(const ParamMap& params, const std::string& grid_file) {
    Grid grid;
    if (!grid_file.empty()) {
        std::ifstream in(grid_file);
        if (!in) throw std::domain_error("cannot open grid file: " + grid_file);
        json spec = json::parse(in);
        for (auto it = spec.begin(); it != spec.end(); ++it) {
            std::vector<std::string> vals;
            for (const auto& v : it.value())
                vals.push_back(v.is_string() ? v.get<std::string>() : v.dump());
            grid.emplace_back(it.key(), std::move(vals));
        }
    }
    for (const auto& [k, v] : params) grid.emplace_back(k, split_list(v));
    return grid;
}

long long grid_size(const Grid& grid) {
    long long n = 1;
    for (const auto& [k, vals] : grid) {
        if (vals.empty()) return 0;
        n *= static_cast<long long>(vals.size());
    }
    return n;
}

ParamMap grid_point(const Grid& grid, long long index) {
    ParamMap out;
    for (const auto& [k, vals] : grid) {
        out[k] = vals[static_cast<size_t>(index % vals.size())];
        index /= static_cast<long long>(vals.size());
    }
    return out;
}

ParamMap collect_extras(const std::vector<std::string>& extras) {
    ParamMap out;
    for (size_t i = 0; i < extras.size(); ++i) {
        std::string key = extras[i];
        if (key.rfind("--", 0) != 0)
            throw std::domain_error("expected --key value pairs, got: " + key);
        key = key.substr(2);
        const auto eq = key.find('=');
        if (eq != std::string::npos) {
            out[key.substr(0, eq)] = key.substr(eq + 1);
        } else {
            if (i + 1 >= extras.size()) throw std::domain_error("missing value for --" + key);
            out[key] = extras[++i];
        }
    }
    return out;
}

int run_verify_set(const std::vector<std::string>& targets, const ParamMap& params,
                   const Truncation& trunc, int workers, const std::string& format,
                   bool verbose_rows, const std::string& verb_label, double t_start) {
    std::vector<VerifyReport> reports;
    for (const std::string& name : targets)
        reports.push_back(run_verify(name, params, trunc, workers));

    bool all_passed = true;
    double max_res = 0.0;
    for (const VerifyReport& rep : reports) {
        all_passed = all_passed && rep.passed;
        max_res = std::max(max_res, rep.max_residual);
    }
    if (format == "json") {
        json out;
        out["schema_version"] = 1;
        out["command"] = {{"verb", verb_label},
                          {"target", targets.size() == 1 ? targets.front() : "all"},
                          {"params", params_json(params)},
                          {"tol", trunc.tol},
                          {"max_terms", trunc.max_terms}};
        json results = json::array();
        for (const VerifyReport& rep : reports) results.push_back(verify_report_json(rep));
        out["results"] = std::move(results);
        out["summary"] = {{"passed", all_passed},
                          {"max_residual", max_res},
                          {"wall_time", now_seconds() - t_start}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        print_verify_csv(reports);
    } else {
        for (const VerifyReport& rep : reports) print_verify_text(rep, verbose_rows);
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eisenzeta: generalized Eisenstein series evaluation and identity "
                 "verification"};
    app.require_subcommand(1);

    std::string format = "text";
    double tol = 1e-12;
    long long max_terms = 200000;
    int workers = default_workers();
    double contour = 40.0;
    app.add_option("--tol", tol, "relative tolerance")->capture_default_str();
    app.add_option("--max-terms", max_terms, "series term budget")->capture_default_str();
    app.add_option("--workers", workers, "scan worker count")->capture_default_str();
    app.add_option("--contour", contour, "contour half-length for quadrature")
        ->capture_default_str();
    app.add_flag_callback("--json", [&] { format = "json"; }, "JSON report");
    app.add_flag_callback("--csv", [&] { format = "csv"; }, "CSV report");
    app.add_flag_callback("--text", [&] { format = "text"; }, "plain text report");

    std::string eval_name, verify_name, scan_verb, scan_name, grid_file;
    bool verify_all = false;
    bool verbose_rows = false;

    auto add_shared = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "relative tolerance");
        cmd->add_option("--max-terms", max_terms, "series term budget");
        cmd->add_option("--workers", workers, "scan worker count");
        cmd->add_option("--contour", contour, "contour half-length for quadrature");
        cmd->add_flag_callback("--json", [&] { format = "json"; }, "JSON report");
        cmd->add_flag_callback("--csv", [&] { format = "csv"; }, "CSV report");
        cmd->add_flag_callback("--text", [&] { format = "text"; }, "plain text report");
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an exposed function");
    add_shared(eval_cmd);
    eval_cmd->add_option("target", eval_name, "one of the exposed evaluators")->required();
    eval_cmd->allow_extras();

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a named identity");
    add_shared(verify_cmd);
    verify_cmd->add_option("target", verify_name, "registered identity");
    verify_cmd->add_flag("--all", verify_all, "run every registered identity");
    verify_cmd->add_flag("--rows", verbose_rows, "print every row, not just failures");
    verify_cmd->allow_extras();

    CLI::App* scan_cmd = app.add_subcommand("scan", "Cartesian product of eval/verify runs");
    add_shared(scan_cmd);
    scan_cmd->add_option("verb", scan_verb, "eval or verify")->required();
    scan_cmd->add_option("target", scan_name, "target name, or 'all' with verify");
    scan_cmd->add_option("--grid", grid_file, "JSON grid file: lists per parameter");
    scan_cmd->add_flag("--rows", verbose_rows, "print every row");
    scan_cmd->allow_extras();

    CLI11_PARSE(app, argc, argv);

    Truncation trunc;
    try {
        trunc = Truncation(max_terms, tol, contour);
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    const double t_start = now_seconds();

    try {
        if (eval_cmd->parsed()) {
            const ParamMap params = collect_extras(eval_cmd->remaining());
            // unknown target is a usage error before any computation
            const auto& known = eval_targets();
            if (std::find(known.begin(), known.end(), eval_name) == known.end()) {
                std::cerr << "usage error: unknown eval target '" << eval_name << "'\n";
                return 2;
            }
            std::vector<EvalRow> rows;
            json error_entry;
            int exit_code = 0;
            try {
                rows = eval_target(eval_name, params, trunc);
            } catch (const std::exception& e) {
                error_entry = json{{"error", e.what()}};
                exit_code = 2;
            }
            if (format == "json") {
                json out;
                out["schema_version"] = 1;
                out["command"] = {{"verb", "eval"},
                                  {"target", eval_name},
                                  {"params", params_json(params)},
                                  {"tol", trunc.tol},
                                  {"max_terms", trunc.max_terms}};
                json results = json::array();
                for (const EvalRow& r : rows)
                    results.push_back({{"name", r.name},
                                       {"value", complex_json(r.value)},
                                       {"error_estimate", r.error_estimate},
                                       {"terms_used", r.terms_used}});
                if (!error_entry.is_null()) results.push_back(error_entry);
                out["results"] = std::move(results);
                out["summary"] = {{"count", rows.size()},
                                  {"wall_time", now_seconds() - t_start}};
                std::cout << out.dump(2) << "\n";
            } else {
                if (!error_entry.is_null())
                    std::cerr << "error: " << error_entry["error"].get<std::string>() << "\n";
                print_eval_rows(rows, format == "csv" ? Format::csv_fmt : Format::text_fmt);
            }
            return exit_code;
        }

        if (verify_cmd->parsed()) {
            const ParamMap params = collect_extras(verify_cmd->remaining());
            std::vector<std::string> targets;
            if (verify_all) {
                targets = verify_targets();
            } else {
                if (verify_name.empty()) {
                    std::cerr << "usage error: verify needs a target or --all\n";
                    return 2;
                }
                if (!is_verify_target(verify_name)) {
                    std::cerr << "usage error: unknown verify target '" << verify_name
                              << "'\n";
                    return 2;
                }
                targets.push_back(verify_name);
            }
            return run_verify_set(targets, params, trunc, workers, format, verbose_rows,
                                  "verify", t_start);
        }

        if (scan_cmd->parsed()) {
            const ParamMap raw = collect_extras(scan_cmd->remaining());
            if (scan_verb != "eval" && scan_verb != "verify") {
                std::cerr << "usage error: scan verb must be eval or verify\n";
                return 2;
            }
            if (scan_verb == "verify" && (scan_name == "all" || scan_name == "--all")) {
                // the acceptance run: every registered identity at its defaults
                return run_verify_set(verify_targets(), {}, trunc, workers, format,
                                      verbose_rows, "scan verify", t_start);
            }

            if (scan_name.empty()) {
                std::cerr << "usage error: scan needs a target\n";
                return 2;
            }
            const bool is_verify = scan_verb == "verify";
            if (is_verify && !is_verify_target(scan_name)) {
                std::cerr << "usage error: unknown verify target '" << scan_name << "'\n";
                return 2;
            }
            if (!is_verify) {
                const auto& known = eval_targets();
                if (std::find(known.begin(), known.end(), scan_name) == known.end()) {
                    std::cerr << "usage error: unknown eval target '" << scan_name << "'\n";
                    return 2;
                }
            }

            const Grid grid = grid_from(raw, grid_file);
            const long long n = grid_size(grid);
            struct Slot {
                ParamMap point;
                std::vector<EvalRow> eval_rows;
                VerifyReport verify_rep;
                std::string error;
                double wall = 0.0;
            };
            std::vector<Slot> slots(static_cast<size_t>(n));
            parallel_for(n, workers, [&](long long i) {
                Slot& slot = slots[static_cast<size_t>(i)];
                slot.point = grid_point(grid, i);
                const double t0 = now_seconds();
                try {
                    if (is_verify)
                        slot.verify_rep = run_verify(scan_name, slot.point, trunc, 1);
                    else
                        slot.eval_rows = eval_target(scan_name, slot.point, trunc);
                } catch (const std::exception& e) {
                    slot.error = e.what();
                }
                slot.wall = now_seconds() - t0;
            });

            bool any_failed = false;
            double max_res = 0.0;
            json results = json::array();
            for (const Slot& slot : slots) {
                json entry;
                entry["params"] = params_json(slot.point);
                if (!slot.error.empty()) {
                    entry["error"] = slot.error;
                    any_failed = true;
                } else if (is_verify) {
                    entry["report"] = verify_report_json(slot.verify_rep);
                    any_failed = any_failed || !slot.verify_rep.passed;
                    max_res = std::max(max_res, slot.verify_rep.max_residual);
                } else {
                    json vals = json::array();
                    for (const EvalRow& r : slot.eval_rows)
                        vals.push_back({{"name", r.name},
                                        {"value", complex_json(r.value)},
                                        {"error_estimate", r.error_estimate},
                                        {"terms_used", r.terms_used}});
                    entry["values"] = std::move(vals);
                }
                entry["wall_time"] = slot.wall;
                results.push_back(std::move(entry));
            }
            if (format == "json") {
                json out;
                out["schema_version"] = 1;
                out["command"] = {{"verb", "scan " + scan_verb},
                                  {"target", scan_name},
                                  {"grid_points", n}};
                out["results"] = std::move(results);
                out["summary"] = {{"count", n},
                                  {"passed", !any_failed},
                                  {"max_residual", max_res},
                                  {"wall_time", now_seconds() - t_start}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "scan " << scan_verb << " " << scan_name << ": " << n
                          << " points, " << (any_failed ? "FAIL" : "PASS")
                          << ", max residual " << max_res << "\n";
                for (long long i = 0; i < n; ++i) {
                    const Slot& slot = slots[static_cast<size_t>(i)];
                    if (!slot.error.empty()) {
                        std::cout << "  point " << i << ": error: " << slot.error << "\n";
                    } else if (is_verify && (verbose_rows || !slot.verify_rep.passed)) {
                        print_verify_text(slot.verify_rep, verbose_rows);
                    } else if (!is_verify && verbose_rows) {
                        print_eval_rows(slot.eval_rows, Format::text_fmt);
                    }
                }
            }
            return any_failed ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
