#include "fibsum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibsum/audit.hpp"
#include "fibsum/bench.hpp"
#include "fibsum/sequences.hpp"
#include "fibsum/verify.hpp"

namespace fibsum::cli {

namespace {

using IF = IdentityFamily;

// Sends the rendered report to --out or to `out`.
int emit(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err) {
    if (!config.output_path) {
        out << text;
        out.flush();
        return out ? exit_code::kOk : exit_code::kIo;
    }
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open " << *config.output_path << " for writing\n";
        return exit_code::kIo;
    }
    file << text;
    file.close();
    if (!file) {
        err << "error: failed writing " << *config.output_path << '\n';
        return exit_code::kIo;
    }
    return exit_code::kOk;
}

// Quote cells that a spreadsheet would round (more than 15 digits).
std::string table_cell(const mpz_class& v) {
    std::string s = v.get_str();
    const auto digits = s.size() - (s.front() == '-' ? 1 : 0);
    return digits > 15 ? csv_quote(s) : s;
}

const char* suite_verdict(const SuiteResult& r) { return r.passed() ? "PASS" : "FAIL"; }

}  // namespace

std::vector<IdentityFamily> expand_families(std::span<const std::string> names) {
    std::set<IdentityFamily> out;
    auto add_range = [&out](IF first, IF last) {
        for (auto f : all_families()) {
            if (f >= first && f <= last) {
                out.insert(f);
            }
        }
    };
    for (const auto& raw : names) {
        std::string name = raw;
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
        if (name == "ALL") {
            add_range(IF::REMARK1_1, IF::LEMMA7);
        } else if (name == "REMARK1") {
            add_range(IF::REMARK1_1, IF::REMARK1_12);
        } else if (name == "PROP1") {
            add_range(IF::PROP1_811, IF::PROP1_814);
        } else if (name == "T4") {
            add_range(IF::T4_EVEN, IF::T4_ODD);
        } else if (auto f = parse_family(name)) {
            out.insert(*f);
        } else {
            throw ConfigError("unknown identity family '" + raw + "'");
        }
    }
    return {out.begin(), out.end()};
}

void validate(const RunConfig& config) {
    if (config.n_max < 0) {
        throw ConfigError("--n-max must be non-negative");
    }
    if (config.p_max < 0) {
        throw ConfigError("--p-max must be non-negative");
    }
    if (!config.unsafe_no_caps) {
        if (config.n_max > kNMaxCap) {
            throw ConfigError("--n-max above " + std::to_string(kNMaxCap) + " needs --unsafe-no-caps");
        }
        if (config.p_max > kPMaxCap) {
            throw ConfigError("--p-max above " + std::to_string(kPMaxCap) + " needs --unsafe-no-caps");
        }
    }
    if (config.command == Command::Bench) {
        if (config.n_max < kBenchNFloor) {
            throw ConfigError("bench needs --n-max >= " + std::to_string(kBenchNFloor));
        }
        for (auto f : config.families) {
            if (!benchmarkable(f)) {
                throw ConfigError("family " + std::string(family_name(f)) + " is not benchmarkable (use T2 or T3)");
            }
        }
    }
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    validate(config);
    const auto suites = run_transform_suites(config.n_max);
    const auto passed = static_cast<std::size_t>(
        std::count_if(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.passed(); }));

    std::ostringstream os;
    switch (config.format) {
        case OutputFormat::Json: {
            auto doc = nlohmann::ordered_json::array();
            for (const auto& r : suites) {
                doc.push_back({{"suite", r.name}, {"checks", r.checks}, {"failures", r.failures},
                               {"verdict", suite_verdict(r)}});
            }
            os << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            os << "suite,checks,failures,verdict\n";
            for (const auto& r : suites) {
                os << r.name << ',' << r.checks << ',' << r.failures << ',' << suite_verdict(r) << '\n';
            }
            break;
        case OutputFormat::Text:
            os << std::left << std::setw(14) << "suite" << std::right << std::setw(10) << "checks" << std::setw(10)
               << "failures" << "  verdict\n";
            for (const auto& r : suites) {
                os << std::left << std::setw(14) << r.name << std::right << std::setw(10) << r.checks
                   << std::setw(10) << r.failures << "  " << suite_verdict(r) << '\n';
            }
            os << passed << '/' << suites.size() << " suites PASS (n_max=" << config.n_max << ")\n";
            break;
    }
    if (int rc = emit(config, os.str(), out, err); rc != exit_code::kOk) {
        return rc;
    }
    if (passed != suites.size()) {
        err << "verify: " << suites.size() - passed << " suite(s) failed\n";
        return exit_code::kFailure;
    }
    return exit_code::kOk;
}

int cmd_audit(const RunConfig& config, std::ostream& out, std::ostream& err) {
    validate(config);
    const auto families =
        config.families.empty() ? std::vector<IdentityFamily>(all_families().begin(), all_families().end())
                                : config.families;
    const AuditReport report = audit(families, {0, config.n_max}, {0, config.p_max}, config.parallel);

    std::ostringstream os;
    write_audit_report(report, config.format, os);
    if (int rc = emit(config, os.str(), out, err); rc != exit_code::kOk) {
        return rc;
    }
    err << "audit: " << report.entries.size() << " entries, " << report.pass_count() << " PASS, "
        << report.fail_count() << " FAIL\n";
    if (report.has_engine_error()) {
        err << "audit: the two Fibonacci-power oracles disagree; this is a software fault\n";
        return exit_code::kFailure;
    }
    return report.all_pass() ? exit_code::kOk : exit_code::kPrintedFormFail;
}

int cmd_tables(const RunConfig& config, std::ostream& out, std::ostream& err) {
    validate(config);
    const CoeffTable q = build_coeff_table(CoeffKind::Q, config.n_max);
    const CoeffTable s = build_coeff_table(CoeffKind::S, config.n_max);

    std::ostringstream os;
    switch (config.format) {
        case OutputFormat::Json: {
            nlohmann::ordered_json doc;
            for (const CoeffTable* t : {&q, &s}) {
                auto rows = nlohmann::ordered_json::array();
                for (const auto& row : t->rows()) {
                    auto cells = nlohmann::ordered_json::array();
                    for (const auto& v : row) {
                        cells.push_back(v.get_str());
                    }
                    rows.push_back(std::move(cells));
                }
                doc[coeff_kind_name(t->kind())] = std::move(rows);
            }
            os << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            for (const CoeffTable* t : {&q, &s}) {
                for (std::int64_t n = 0; n <= t->n_max(); ++n) {
                    os << coeff_kind_name(t->kind()) << ',' << n;
                    for (const auto& v : t->row(n)) {
                        os << ',' << table_cell(v);
                    }
                    os << '\n';
                }
            }
            break;
        case OutputFormat::Text:
            for (const CoeffTable* t : {&q, &s}) {
                os << coeff_kind_name(t->kind()) << '\n';
                for (std::int64_t n = 0; n <= t->n_max(); ++n) {
                    os << "  n=" << n << ':';
                    for (const auto& v : t->row(n)) {
                        os << ' ' << v.get_str();
                    }
                    os << '\n';
                }
            }
            break;
    }
    return emit(config, os.str(), out, err);
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
    RunConfig effective = config;
    if (effective.families.empty()) {
        effective.families = {IF::T2};
    }
    validate(effective);

    std::vector<std::pair<IdentityFamily, std::int64_t>> series;
    for (auto f : effective.families) {
        for (std::int64_t p = 0; p <= effective.p_max; ++p) {
            if (applicable(f, 0, p)) {
                series.emplace_back(f, p);
            }
        }
    }
    if (series.empty()) {
        throw ConfigError("no applicable p in 0.." + std::to_string(effective.p_max) + " for the chosen families");
    }
    std::vector<std::int64_t> ns;
    for (std::int64_t n = kBenchNFloor; n <= effective.n_max; n *= 2) {
        ns.push_back(n);
    }

    // All values must agree before any timing is reported.
    for (const auto& [f, p] : series) {
        for (std::int64_t n : ns) {
            const PowerSum ps = power_sum_of(f, p);
            if (ExactScalar(fib_power_sum_oracle(n, ps.power, ps.sign)) != closed_form_rhs(f, n, p)) {
                err << "bench: closed form " << family_name(f) << " disagrees with the oracle at n=" << n
                    << " p=" << p << "; no timings reported\n";
                return exit_code::kFailure;
            }
        }
    }

    std::vector<BenchPoint> points;
    for (const auto& [f, p] : series) {
        for (std::int64_t n : ns) {
            points.push_back(bench_point(f, n, p));
        }
    }

    std::ostringstream os;
    switch (effective.format) {
        case OutputFormat::Json: {
            auto doc = nlohmann::ordered_json::array();
            for (const auto& pt : points) {
                doc.push_back({{"family", std::string(family_name(pt.family))},
                               {"n", pt.n},
                               {"p", pt.p},
                               {"oracle_seconds", pt.oracle_seconds},
                               {"closed_form_seconds", pt.closed_seconds},
                               {"speedup", pt.speedup()},
                               {"equal", pt.equal}});
            }
            os << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            os << "family,n,p,oracle_seconds,closed_form_seconds,speedup,equal\n";
            for (const auto& pt : points) {
                os << family_name(pt.family) << ',' << pt.n << ',' << pt.p << ',' << pt.oracle_seconds << ','
                   << pt.closed_seconds << ',' << pt.speedup() << ',' << (pt.equal ? "true" : "false") << '\n';
            }
            break;
        case OutputFormat::Text:
            os << std::left << std::setw(8) << "family" << std::right << std::setw(4) << "p" << std::setw(8) << "n"
               << std::setw(14) << "oracle_us" << std::setw(14) << "closed_us" << std::setw(10) << "speedup"
               << "  equal\n";
            os << std::fixed;
            for (const auto& pt : points) {
                os << std::left << std::setw(8) << family_name(pt.family) << std::right << std::setw(4) << pt.p
                   << std::setw(8) << pt.n << std::setw(14) << std::setprecision(1) << pt.oracle_seconds * 1e6
                   << std::setw(14) << pt.closed_seconds * 1e6 << std::setw(10) << pt.speedup() << "  "
                   << (pt.equal ? "true" : "false") << '\n';
            }
            break;
    }
    return emit(effective, os.str(), out, err);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact binomial-transform and Fibonacci-power identity checker", "fibsum"};
    app.require_subcommand(1);

    RunConfig config;
    std::vector<std::string> family_names;
    std::string format = "text";
    std::string out_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--families", family_names, "Identity tags or groups (all, REMARK1, PROP1, T4, ...)")
            ->delimiter(',');
        sub->add_option("--n-max", config.n_max, "Largest n");
        sub->add_option("--p-max", config.p_max, "Largest p");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", out_path, "Write the report to this file instead of standard output");
        sub->add_flag("--parallel", config.parallel, "Evaluate audit cells on several threads");
        sub->add_flag("--unsafe-no-caps", config.unsafe_no_caps, "Lift the n-max/p-max caps");
    };
    CLI::App* verify = app.add_subcommand("verify", "Run the transform property suites");
    CLI::App* audit_cmd = app.add_subcommand("audit", "Audit identities against the oracles");
    CLI::App* tables = app.add_subcommand("tables", "Print the q and s coefficient tables");
    CLI::App* bench = app.add_subcommand("bench", "Time closed forms against direct summation");
    for (auto* sub : {verify, audit_cmd, tables, bench}) {
        add_common(sub);
    }

    std::vector<std::string> argv_storage{"fibsum"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_code::kUsage;
    }

    try {
        if (format == "json") {
            config.format = OutputFormat::Json;
        } else if (format == "csv") {
            config.format = OutputFormat::Csv;
        }
        if (!out_path.empty()) {
            config.output_path = out_path;
        }
        if (!family_names.empty()) {
            config.families = expand_families(family_names);
        }
        if (verify->parsed()) {
            config.command = Command::Verify;
            return cmd_verify(config, out, err);
        }
        if (audit_cmd->parsed()) {
            config.command = Command::Audit;
            return cmd_audit(config, out, err);
        }
        if (tables->parsed()) {
            config.command = Command::Tables;
            return cmd_tables(config, out, err);
        }
        config.command = Command::Bench;
        return cmd_bench(config, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    }
}

}  // namespace fibsum::cli
