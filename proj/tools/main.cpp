// Command-line front end: knot invariants, single-k obstruction reports,
// k-range scans, and whole-catalog batch runs, in text or JSON.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "untwist/untwist.hpp"

namespace {

using namespace untwist;

struct CommandConfig {
    std::string knot_name;
    std::string inline_seifert;
    std::string catalog_path;
    std::string format = "text";
    std::int64_t k = 0;
    std::optional<std::int64_t> k_min;
    std::optional<std::int64_t> k_max;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open catalog file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<KnotRecord> load_catalog(const CommandConfig& cfg) {
    if (!cfg.catalog_path.empty())
        return parse_catalog(read_file(cfg.catalog_path));
    if (const char* env = std::getenv("KNOT_CATALOG"))
        return parse_catalog(read_file(env));
    return bundled_catalog();
}

struct Selected {
    std::string name;
    SeifertMatrix seifert;
};

Selected select_knot(const CommandConfig& cfg,
                     const std::vector<KnotRecord>& catalog) {
    if (!cfg.knot_name.empty()) {
        const KnotRecord* rec = find_knot(catalog, cfg.knot_name);
        if (!rec) throw Error("unknown knot '" + cfg.knot_name + "'");
        return Selected{rec->name, rec->seifert};
    }
    nlohmann::json rows;
    try {
        rows = nlohmann::json::parse(cfg.inline_seifert);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed inline Seifert matrix: ") + e.what());
    }
    return Selected{"inline", SeifertMatrix(detail::matrix_from_json(rows))};
}

void print_report_text(const ObstructionReport& r, std::ostream& os) {
    os << "knot: " << r.knot << "\n";
    os << "k: " << r.k << "\n";
    if (r.alexander.passed()) {
        os << "alexander: pass  alpha = " << to_string(*r.alexander.alpha)
           << "\n";
    } else {
        os << "alexander: FAIL  coefficient " << r.alexander.failing->value
           << " at exponent " << r.alexander.failing->exponent
           << " is not divisible by k\n";
    }
    os << "cyclicity: " << (r.cyclicity.passed ? "pass" : "FAIL")
       << "  invariant factors [";
    for (std::size_t i = 0; i < r.cyclicity.invariant_factors.size(); ++i)
        os << (i ? ", " : "") << r.cyclicity.invariant_factors[i];
    os << "]\n";
    switch (r.linking.status) {
        case LinkingStatus::Skipped:
            os << "linking: skipped\n";
            break;
        case LinkingStatus::Pass:
        case LinkingStatus::Fail:
            os << "linking: "
               << (r.linking.status == LinkingStatus::Pass ? "pass" : "FAIL")
               << "  d = " << *r.linking.d << ", doubled knot form ("
               << r.linking.knot_form->n << ", " << r.linking.knot_form->a
               << "), candidate form (" << r.linking.candidate_form->n << ", "
               << r.linking.candidate_form->a << ")\n";
            break;
    }
    if (r.verdict == Verdict::NotObstructed) {
        os << "verdict: not obstructed (necessary conditions hold)\n";
        os << "algebraic unknotting number bound: " << *r.ua << "\n";
        os << r.notes << "\n";
    } else {
        os << "verdict: obstructed\n";
    }
}

void print_report_line(const ObstructionReport& r, const std::string& format,
                       std::ostream& os) {
    if (format == "json") {
        os << report_to_json(r).dump() << "\n";
    } else {
        os << r.knot << " k=" << r.k << ": ";
        if (r.verdict == Verdict::NotObstructed) {
            os << "not obstructed (necessary conditions hold), ua bound "
               << *r.ua << "\n";
        } else {
            os << "obstructed (";
            if (!r.alexander.passed())
                os << "alexander";
            else if (!r.cyclicity.passed)
                os << "cyclicity";
            else
                os << "linking";
            os << ")\n";
        }
    }
}

int run_invariants(const CommandConfig& cfg) {
    Selected sel = select_knot(cfg, load_catalog(cfg));
    KnotInvariants inv = compute_invariants(sel.seifert);
    if (cfg.format == "json") {
        std::cout << invariants_to_json(inv).dump() << "\n";
    } else {
        std::cout << "knot: " << sel.name << "\n";
        std::cout << "alexander: " << to_string(inv.alexander) << "\n";
        std::cout << "determinant at -1: " << inv.alexander_at_minus_one << "\n";
        std::cout << "double cover invariant factors: [";
        for (std::size_t i = 0; i < inv.dbc_invariant_factors.size(); ++i)
            std::cout << (i ? ", " : "") << inv.dbc_invariant_factors[i];
        std::cout << "]\n";
    }
    return 0;
}

int run_obstruct(const CommandConfig& cfg) {
    Selected sel = select_knot(cfg, load_catalog(cfg));
    ObstructionReport report = evaluate(sel.seifert, Int(cfg.k), sel.name);
    if (cfg.format == "json")
        std::cout << report_to_json(report).dump() << "\n";
    else
        print_report_text(report, std::cout);
    return 0;
}

int run_scan(const CommandConfig& cfg) {
    Selected sel = select_knot(cfg, load_catalog(cfg));
    auto reports = scan(sel.seifert, Int(*cfg.k_min), Int(*cfg.k_max), sel.name);
    for (const auto& r : reports) print_report_line(r, cfg.format, std::cout);
    return 0;
}

int run_batch(const CommandConfig& cfg) {
    std::vector<KnotRecord> catalog = load_catalog(cfg);
    const std::int64_t lo = cfg.k_min ? *cfg.k_min : cfg.k;
    const std::int64_t hi = cfg.k_max ? *cfg.k_max : cfg.k;
    for (const KnotRecord& rec : catalog) {
        auto reports = scan(rec.seifert, Int(lo), Int(hi), rec.name);
        for (const auto& r : reports) print_report_line(r, cfg.format, std::cout);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knot invariants and untwisting-move obstructions from Seifert matrices"};
    app.require_subcommand(1);

    CommandConfig cfg;
    auto add_common = [&](CLI::App* cmd, bool selector) {
        cmd->add_option("--catalog", cfg.catalog_path,
                        "catalog file (JSON lines); overrides KNOT_CATALOG");
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        if (selector) {
            auto* knot = cmd->add_option("--knot", cfg.knot_name,
                                         "knot name from the catalog");
            auto* inline_m = cmd->add_option("--seifert", cfg.inline_seifert,
                                             "inline Seifert matrix as JSON");
            knot->excludes(inline_m);
        }
    };
    auto add_k = [&](CLI::App* cmd) {
        cmd->add_option("--k", cfg.k, "twisting coefficient (nonzero)")
            ->required()
            ->check([](const std::string& value) {
                return value == "0" ? "k must be nonzero" : std::string();
            });
    };
    auto add_k_range = [&](CLI::App* cmd, bool required) {
        auto* lo = cmd->add_option("--k-min", cfg.k_min, "scan range lower end");
        auto* hi = cmd->add_option("--k-max", cfg.k_max, "scan range upper end");
        lo->needs(hi);
        hi->needs(lo);
        if (required) {
            lo->required();
            hi->required();
        }
    };

    CLI::App* invariants =
        app.add_subcommand("invariants", "classical invariants of a knot");
    add_common(invariants, true);

    CLI::App* obstruct = app.add_subcommand(
        "obstruct", "evaluate the untwisting obstructions for one k");
    add_common(obstruct, true);
    add_k(obstruct);

    CLI::App* scan_cmd =
        app.add_subcommand("scan", "evaluate a range of twisting coefficients");
    add_common(scan_cmd, true);
    add_k_range(scan_cmd, true);

    CLI::App* batch = app.add_subcommand(
        "batch", "evaluate every catalog knot for one k or a k range");
    add_common(batch, false);
    batch->add_option("--k", cfg.k, "twisting coefficient (nonzero)")
        ->check([](const std::string& value) {
            return value == "0" ? "k must be nonzero" : std::string();
        });
    add_k_range(batch, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(invariants) || app.got_subcommand(obstruct) ||
            app.got_subcommand(scan_cmd)) {
            if (cfg.knot_name.empty() == cfg.inline_seifert.empty()) {
                std::cerr << "exactly one of --knot or --seifert is required\n";
                return 2;
            }
        }
        if (app.got_subcommand(scan_cmd) && *cfg.k_min > *cfg.k_max) {
            std::cerr << "--k-min must not exceed --k-max\n";
            return 2;
        }
        if (app.got_subcommand(batch)) {
            const bool has_single = batch->count("--k") > 0;
            const bool has_range = cfg.k_min.has_value();
            if (has_single == has_range) {
                std::cerr << "batch requires either --k or --k-min/--k-max\n";
                return 2;
            }
            if (has_range && *cfg.k_min > *cfg.k_max) {
                std::cerr << "--k-min must not exceed --k-max\n";
                return 2;
            }
        }

        if (app.got_subcommand(invariants)) return run_invariants(cfg);
        if (app.got_subcommand(obstruct)) return run_obstruct(cfg);
        if (app.got_subcommand(scan_cmd)) return run_scan(cfg);
        return run_batch(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
