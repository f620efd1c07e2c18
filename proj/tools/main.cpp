// Command-line front end: zeta evaluation, exact negative-integer values,
// infinite-product identity verification, and convergence studies.
//
// Exit codes: 0 success, 2 usage/parse errors, 3 pole or region errors.
// All stdout output is deterministic byte-for-byte for a fixed invocation;
// wall-clock timing is only ever reported on stderr (--timing).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetaccel/constants.hpp"
#include "zetaccel/exact.hpp"
#include "zetaccel/products.hpp"
#include "zetaccel/transform.hpp"
#include "zetaccel/zeta.hpp"

using json = nlohmann::ordered_json;
using namespace zetaccel;

namespace {

enum class Format { human, jsonl, csv };

struct Output {
    std::string buffer;
    void line(const std::string& s) {
        buffer += s;
        buffer += '\n';
    }
};

std::string fmt_sig(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

std::string fmt_est(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

std::string fmt_complex(Complex z, int digits) {
    if (z.imag() == 0.0) return fmt_sig(z.real(), digits);
    return fmt_sig(z.real(), digits) + "," + fmt_sig(z.imag(), digits);
}

Complex parse_complex(const std::string& text) {
    std::size_t pos = 0;
    const double re = std::stod(text, &pos);
    if (pos == text.size()) return {re, 0.0};
    if (text[pos] != ',')
        throw CLI::ValidationError("s", "expected \"re\" or \"re,im\"");
    std::size_t pos2 = 0;
    const std::string rest = text.substr(pos + 1);
    const double im = std::stod(rest, &pos2);
    if (pos2 != rest.size())
        throw CLI::ValidationError("s", "expected \"re\" or \"re,im\"");
    return {re, im};
}

// "a..b" inclusive range, or comma list, or single value.
std::vector<std::int64_t> parse_multi(const std::string& text) {
    std::vector<std::int64_t> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::int64_t a = std::stoll(text.substr(0, dots));
        const std::int64_t b = std::stoll(text.substr(dots + 2));
        if (b < a) throw CLI::ValidationError("range", "end below start");
        for (std::int64_t v = a; v <= b; ++v) out.push_back(v);
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!piece.empty()) out.push_back(std::stoll(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("range", "empty list");
    return out;
}

const char* kCsvHeader = "command,s_re,s_im,c,k,N,value_re,value_im,est_error,elapsed_ms";

struct CsvRow {
    std::string command, s_re, s_im, c, k, N, value_re, value_im, est_error;
    std::string elapsed_ms = "0";
    std::string str() const {
        return command + "," + s_re + "," + s_im + "," + c + "," + k + "," + N +
               "," + value_re + "," + value_im + "," + est_error + "," + elapsed_ms;
    }
};

void emit(Output& out, const std::string& out_file) {
    std::fwrite(out.buffer.data(), 1, out.buffer.size(), stdout);
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        f.write(out.buffer.data(),
                static_cast<std::streamsize>(out.buffer.size()));
    }
}

struct CommonOpts {
    bool use_json = false;
    bool use_csv = false;
    int digits = 15;
    std::string out_file;
    bool timing = false;

    Format format() const {
        if (use_json) return Format::jsonl;
        if (use_csv) return Format::csv;
        return Format::human;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_flag("--json", o.use_json, "machine-readable JSON lines");
    cmd->add_flag("--csv", o.use_csv, "CSV with fixed column order");
    cmd->add_option("--digits", o.digits, "significant digits for decimal output")
        ->check(CLI::Range(1, 17));
    cmd->add_option("--out", o.out_file, "duplicate stdout to FILE");
    cmd->add_flag("--timing", o.timing, "report wall time on stderr");
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report_timing(const CommonOpts& o, const Stopwatch& sw) {
    if (o.timing) std::fprintf(stderr, "elapsed_ms=%.3f\n", sw.ms());
}

// ---- zeta ----

struct ZetaArgs {
    std::string s_text;
    double tol = 1e-10;
    std::optional<int> c_override;
    std::optional<int> k_override;
    std::optional<std::int64_t> n_override;
    CommonOpts common;
};

int run_zeta(const ZetaArgs& args) {
    Stopwatch sw;
    const Complex s = parse_complex(args.s_text);

    EvalPlan plan = [&] {
        if (args.c_override && args.k_override && args.n_override) {
            return EvalPlan{Modulus(*args.c_override), *args.k_override,
                            *args.n_override, args.tol};
        }
        EvalPlan p = args.c_override
                         ? plan_heuristic_for(Modulus(*args.c_override), s, args.tol)
                         : plan_heuristic(s, args.tol);
        if (args.k_override) {
            p.depth = *args.k_override;
            if (!args.n_override) {
                const double target =
                    0.25 * args.tol * std::abs(eta_factor(p.c, s));
                const std::int64_t n = blocks_for_target(p.c, p.depth, s, target);
                p.blocks = n > 0 ? n : p.blocks;
            }
        }
        if (args.n_override) p.blocks = *args.n_override;
        return p;
    }();

    const SeriesEvaluation ev = zeta_with_plan(s, plan);
    report_timing(args.common, sw);

    Output out;
    const int d = args.common.digits;
    switch (args.common.format()) {
        case Format::human: {
            std::string line = "zeta(" + fmt_complex(s, d) + ") = " +
                               fmt_complex(ev.value, d) +
                               "  est_error=" + fmt_est(ev.est_error) + "  c=" +
                               std::to_string(ev.plan.c.value()) + " k=" +
                               std::to_string(ev.plan.depth) + " N=" +
                               std::to_string(ev.plan.blocks);
            if (ev.conditional) line += "  [conditional regime]";
            out.line(line);
            break;
        }
        case Format::jsonl: {
            json rec;
            rec["command"] = "zeta";
            rec["inputs"] = {{"s", args.s_text}, {"tol", fmt_est(args.tol)}};
            rec["value"] = fmt_complex(ev.value, d);
            rec["est_error"] = ev.est_error;
            rec["conditional"] = ev.conditional;
            rec["metadata"] = {{"c", ev.plan.c.value()},
                               {"k", ev.plan.depth},
                               {"N", ev.plan.blocks},
                               {"elapsed_ms", 0}};
            out.line(rec.dump());
            break;
        }
        case Format::csv: {
            out.line(kCsvHeader);
            CsvRow row;
            row.command = "zeta";
            row.s_re = fmt_sig(s.real(), d);
            row.s_im = fmt_sig(s.imag(), d);
            row.c = std::to_string(ev.plan.c.value());
            row.k = std::to_string(ev.plan.depth);
            row.N = std::to_string(ev.plan.blocks);
            row.value_re = fmt_sig(ev.value.real(), d);
            row.value_im = fmt_sig(ev.value.imag(), d);
            row.est_error = fmt_est(ev.est_error);
            out.line(row.str());
            break;
        }
    }
    emit(out, args.common.out_file);
    return 0;
}

// ---- exact ----

struct ExactArgs {
    std::int64_t m = 0;
    int c = 2;
    bool check = false;
    CommonOpts common;
};

int run_exact(const ExactArgs& args) {
    Stopwatch sw;
    const Rational v = zeta_neg_int(args.m, Modulus(args.c));
    std::optional<Rational> oracle;
    if (args.check) oracle = bernoulli_oracle(args.m);
    report_timing(args.common, sw);

    Output out;
    switch (args.common.format()) {
        case Format::human: {
            std::string line = v.str();
            if (oracle) line += (v == *oracle) ? " MATCH" : " MISMATCH oracle=" + oracle->str();
            out.line(line);
            break;
        }
        case Format::jsonl: {
            json rec;
            rec["command"] = "exact";
            rec["inputs"] = {{"m", args.m}, {"c", args.c}};
            rec["value"] = v.str();
            rec["est_error"] = 0.0;
            if (oracle) {
                rec["oracle"] = oracle->str();
                rec["check"] = (v == *oracle) ? "MATCH" : "MISMATCH";
            }
            rec["metadata"] = {{"c", args.c}, {"elapsed_ms", 0}};
            out.line(rec.dump());
            break;
        }
        case Format::csv: {
            out.line(kCsvHeader);
            CsvRow row;
            row.command = "exact";
            row.c = std::to_string(args.c);
            row.value_re = v.str();
            row.est_error = "0";
            std::string line = row.str();
            if (oracle) {
                line += ",";
                line += (v == *oracle) ? "MATCH" : "MISMATCH";
            }
            out.line(line);
            break;
        }
    }
    emit(out, args.common.out_file);
    return 0;
}

// ---- verify ----

struct VerifyArgs {
    std::string identity;
    std::int64_t blocks = 100000;
    std::optional<double> tol;
    bool full_table = false;
    CommonOpts common;
};

// Table rows: doubling block indices from 1, then the last 10 blocks.
std::vector<std::int64_t> table_rows(std::int64_t blocks, bool full) {
    std::vector<std::int64_t> rows;
    if (full) {
        for (std::int64_t b = 1; b <= blocks; ++b) rows.push_back(b);
        return rows;
    }
    for (std::int64_t b = 1; b < blocks - 10; b *= 2) rows.push_back(b);
    for (std::int64_t b = std::max<std::int64_t>(1, blocks - 10); b <= blocks; ++b)
        rows.push_back(b);
    return rows;
}

int run_verify(const VerifyArgs& args) {
    Stopwatch sw;
    const IdentityId id = identity_from_string(args.identity);
    const IdentityInfo& info = identity_info(id);
    const double tol = args.tol.value_or(info.default_tol);
    const VerifyResult res = verify_identity(id, args.blocks, tol);
    report_timing(args.common, sw);

    const auto rows = table_rows(args.blocks, args.full_table);
    Output out;
    const int d = args.common.digits;
    const auto gap_at = [&](std::int64_t b) {
        return std::abs(res.report.log_partial[static_cast<std::size_t>(b - 1)] -
                        res.report.target_log);
    };

    switch (args.common.format()) {
        case Format::human: {
            out.line("identity=" + std::string(info.name) + " c=" +
                     std::to_string(info.c) + " s=" + fmt_sig(info.s, 3) +
                     " target_log=" + fmt_sig(res.report.target_log, d));
            out.line("block log_partial gap");
            for (std::int64_t b : rows) {
                out.line(std::to_string(b) + " " +
                         fmt_sig(res.report.log_partial[static_cast<std::size_t>(b - 1)], d) +
                         " " + fmt_est(gap_at(b)));
            }
            out.line(std::string(res.pass ? "PASS" : "FAIL") + " gap=" +
                     fmt_est(res.report.abs_gap) + " tol=" + fmt_est(tol));
            break;
        }
        case Format::jsonl: {
            for (std::int64_t b : rows) {
                json rec;
                rec["command"] = "verify.block";
                rec["block"] = b;
                rec["log_partial"] =
                    res.report.log_partial[static_cast<std::size_t>(b - 1)];
                rec["gap"] = gap_at(b);
                out.line(rec.dump());
            }
            json rec;
            rec["command"] = "verify";
            rec["inputs"] = {{"identity", info.name},
                             {"N", args.blocks},
                             {"tol", fmt_est(tol)}};
            rec["value"] = fmt_sig(res.report.log_partial.back(), d);
            rec["target_log"] = res.report.target_log;
            rec["est_error"] = res.report.abs_gap;
            rec["pass"] = res.pass;
            rec["monotone"] = res.monotone;
            rec["metadata"] = {{"c", info.c},
                               {"N", args.blocks},
                               {"elapsed_ms", 0}};
            out.line(rec.dump());
            break;
        }
        case Format::csv: {
            out.line(kCsvHeader);
            for (std::int64_t b : rows) {
                CsvRow row;
                row.command = "verify.block";
                row.s_re = fmt_sig(info.s, d);
                row.c = std::to_string(info.c);
                row.N = std::to_string(b);
                row.value_re = fmt_sig(
                    res.report.log_partial[static_cast<std::size_t>(b - 1)], d);
                row.est_error = fmt_est(gap_at(b));
                out.line(row.str());
            }
            CsvRow row;
            row.command = "verify";
            row.s_re = fmt_sig(info.s, d);
            row.c = std::to_string(info.c);
            row.N = std::to_string(args.blocks);
            row.value_re = fmt_sig(res.report.log_partial.back(), d);
            row.est_error = fmt_est(res.report.abs_gap);
            out.line(row.str());
            out.line(res.pass ? "# PASS" : "# FAIL");
            break;
        }
    }
    emit(out, args.common.out_file);
    return 0;
}

// ---- study ----

struct StudyArgs {
    std::string s_text;
    std::string c_list = "2,3";
    std::string k_list;
    std::string n_list;
    int jobs = 1;
    CommonOpts common;
};

struct StudyCell {
    std::int64_t c, k, n;
    bool ok = false;
    std::string error;
    Complex value;
    double est = 0.0;
    bool conditional = false;
};

StudyCell eval_cell(Complex s, std::int64_t c, std::int64_t k, std::int64_t n) {
    StudyCell cell{c, k, n, false, "", {0, 0}, 0.0, false};
    try {
        const SeriesEvaluation ev = zeta_with_plan(
            s, EvalPlan{Modulus(static_cast<int>(c)), static_cast<int>(k), n, 1e-9});
        cell.ok = true;
        cell.value = ev.value;
        cell.est = ev.est_error;
        cell.conditional = ev.conditional;
    } catch (const std::exception& e) {
        cell.error = e.what();
    }
    return cell;
}

int run_study(const StudyArgs& args) {
    Stopwatch sw;
    const Complex s = parse_complex(args.s_text);
    const auto cs = parse_multi(args.c_list);
    const auto ks = parse_multi(args.k_list);
    const auto ns = parse_multi(args.n_list);

    std::vector<StudyCell> cells;
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> grid;
    for (auto c : cs)
        for (auto k : ks)
            for (auto n : ns) grid.emplace_back(c, k, n);

    if (args.jobs > 1) {
        // Cells are independent; results land in input order, so the
        // output does not depend on scheduling.
        cells.resize(grid.size());
        std::vector<std::future<void>> futs;
        std::size_t next = 0;
        const std::size_t stride = static_cast<std::size_t>(args.jobs);
        for (std::size_t w = 0; w < stride; ++w) {
            futs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < grid.size(); i += stride) {
                    const auto [c, k, n] = grid[i];
                    cells[i] = eval_cell(s, c, k, n);
                }
            }));
            ++next;
        }
        for (auto& f : futs) f.get();
    } else {
        for (const auto& [c, k, n] : grid) cells.push_back(eval_cell(s, c, k, n));
    }

    // Reference: the successful cell with the deepest operator, then the
    // most blocks, then the smallest modulus.
    const StudyCell* ref = nullptr;
    for (const auto& cell : cells) {
        if (!cell.ok) continue;
        if (!ref || std::tuple(cell.k, cell.n, -cell.c) >
                        std::tuple(ref->k, ref->n, -ref->c))
            ref = &cell;
    }
    report_timing(args.common, sw);

    Output out;
    const int d = args.common.digits;
    switch (args.common.format()) {
        case Format::human: {
            out.line("study s=" + fmt_complex(s, d) +
                     (ref ? " reference c=" + std::to_string(ref->c) + " k=" +
                                std::to_string(ref->k) + " N=" + std::to_string(ref->n)
                          : " (no reference: all cells failed)"));
            out.line("c k N value est_error abs_diff regime");
            for (const auto& cell : cells) {
                std::string line = std::to_string(cell.c) + " " +
                                   std::to_string(cell.k) + " " +
                                   std::to_string(cell.n) + " ";
                if (!cell.ok) {
                    line += "- - - error:" + cell.error;
                } else {
                    const double diff = ref ? std::abs(cell.value - ref->value) : 0.0;
                    line += fmt_complex(cell.value, d) + " " + fmt_est(cell.est) +
                            " " + fmt_est(diff) + " " +
                            (cell.conditional ? "conditional" : "-");
                }
                out.line(line);
            }
            break;
        }
        case Format::jsonl: {
            for (const auto& cell : cells) {
                json rec;
                rec["command"] = "study";
                rec["inputs"] = {{"s", args.s_text},
                                 {"c", cell.c},
                                 {"k", cell.k},
                                 {"N", cell.n}};
                if (!cell.ok) {
                    rec["error"] = cell.error;
                } else {
                    rec["value"] = fmt_complex(cell.value, d);
                    rec["est_error"] = cell.est;
                    rec["abs_diff"] =
                        ref ? std::abs(cell.value - ref->value) : 0.0;
                    rec["conditional"] = cell.conditional;
                    rec["is_reference"] = (&cell == ref);
                }
                rec["metadata"] = {{"elapsed_ms", 0}};
                out.line(rec.dump());
            }
            break;
        }
        case Format::csv: {
            out.line(std::string(kCsvHeader) + ",abs_diff,regime");
            for (const auto& cell : cells) {
                CsvRow row;
                row.command = "study";
                row.s_re = fmt_sig(s.real(), d);
                row.s_im = fmt_sig(s.imag(), d);
                row.c = std::to_string(cell.c);
                row.k = std::to_string(cell.k);
                row.N = std::to_string(cell.n);
                std::string extra;
                if (!cell.ok) {
                    extra = ",error:region";
                } else {
                    row.value_re = fmt_sig(cell.value.real(), d);
                    row.value_im = fmt_sig(cell.value.imag(), d);
                    row.est_error = fmt_est(cell.est);
                    extra = "," + fmt_est(ref ? std::abs(cell.value - ref->value) : 0.0) +
                            "," + (cell.conditional ? "conditional" : "");
                }
                out.line(row.str() + extra);
            }
            break;
        }
    }
    emit(out, args.common.out_file);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann zeta evaluation by accelerated c-periodic series"};
    app.require_subcommand(1);

    ZetaArgs zeta_args;
    auto* zeta_cmd = app.add_subcommand("zeta", "evaluate zeta(s)");
    zeta_cmd->add_option("--s", zeta_args.s_text, "s as \"re\" or \"re,im\"")
        ->required();
    zeta_cmd->add_option("--tol", zeta_args.tol, "absolute error target");
    int c_tmp = 0, k_tmp = 0;
    std::int64_t n_tmp = 0;
    auto* c_opt = zeta_cmd->add_option("--c", c_tmp, "modulus override (>= 2)");
    auto* k_opt = zeta_cmd->add_option("--k", k_tmp, "operator depth override");
    auto* n_opt = zeta_cmd->add_option("--N", n_tmp, "block count override");
    add_common(zeta_cmd, zeta_args.common);

    ExactArgs exact_args;
    auto* exact_cmd = app.add_subcommand("exact", "exact zeta(-m) as a rational");
    exact_cmd->add_option("--m", exact_args.m, "nonnegative integer m")
        ->required()
        ->check(CLI::NonNegativeNumber);
    exact_cmd->add_option("--c", exact_args.c, "modulus (result is c-independent)");
    exact_cmd->add_flag("--check", exact_args.check,
                        "also run the Bernoulli oracle and compare");
    add_common(exact_cmd, exact_args.common);

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "verify a Wallis-type product identity");
    verify_cmd
        ->add_option("--identity", verify_args.identity,
                     "wallis|first|second|gen1|gen2|gen3|gen4")
        ->required();
    verify_cmd->add_option("--N", verify_args.blocks, "number of blocks");
    double tol_tmp = 0.0;
    auto* tol_opt = verify_cmd->add_option("--tol", tol_tmp, "pass threshold");
    verify_cmd->add_flag("--full-table", verify_args.full_table,
                         "emit every block row (default: downsampled)");
    add_common(verify_cmd, verify_args.common);

    StudyArgs study_args;
    auto* study_cmd =
        app.add_subcommand("study", "error/estimate grid over (c, k, N)");
    study_cmd->add_option("--s", study_args.s_text, "s as \"re\" or \"re,im\"")
        ->required();
    study_cmd->add_option("--c", study_args.c_list, "moduli list, e.g. 2,3");
    study_cmd->add_option("--k", study_args.k_list, "depth list or a..b range")
        ->required();
    study_cmd->add_option("--N", study_args.n_list, "block counts list or range")
        ->required();
    study_cmd->add_option("--jobs", study_args.jobs, "parallel cell workers")
        ->check(CLI::Range(1, 64));
    add_common(study_cmd, study_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*zeta_cmd) {
            if (*c_opt) zeta_args.c_override = c_tmp;
            if (*k_opt) zeta_args.k_override = k_tmp;
            if (*n_opt) zeta_args.n_override = n_tmp;
            return run_zeta(zeta_args);
        }
        if (*exact_cmd) return run_exact(exact_args);
        if (*verify_cmd) {
            if (*tol_opt) verify_args.tol = tol_tmp;
            return run_verify(verify_args);
        }
        if (*study_cmd) return run_study(study_args);
    } catch (const pole_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const region_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
