// Command line front end.  Every number printed is an exact fraction;
// exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ramify2/composita.hpp"
#include "ramify2/errors.hpp"
#include "ramify2/group_catalog.hpp"
#include "ramify2/pipeline.hpp"
#include "ramify2/ref_tables.hpp"
#include "ramify2/slope_content.hpp"
#include "ramify2/towers.hpp"

namespace {

using namespace ramify2;

std::string resolve_catalog(const std::string& from_flag) {
    if (!from_flag.empty()) return from_flag;
    if (const char* env = std::getenv("RAMIFY2_CATALOG"); env && *env)
        return env;
    throw domain_error("no catalog given: pass --catalog or set RAMIFY2_CATALOG");
}

void print_caps(const caps_result& r) {
    std::cout << "degree " << r.degree << " caps ("
              << (r.mode == caps_mode::paper ? "paper" : "exhaustive")
              << " mode):\n";
    for (const cap_entry& e : r.buckets) {
        std::cout << "  " << e.bucket << "  " << format_rational(e.value)
                  << "  " << e.witness << "  " << e.content.format() << "\n";
    }
    for (const cap_divergence& d : r.divergences) {
        std::cout << "  divergence at " << d.bucket << ": curated "
                  << format_rational(d.curated) << ", exhaustive "
                  << format_rational(d.exhaustive) << "\n";
    }
    for (const value_flag& f : r.flags) {
        std::cout << "  published value differs: " << f.scenario
                  << ": computed " << format_rational(f.computed)
                  << ", published " << format_rational(f.published) << "\n";
    }
}

void print_trace(const elimination_trace& t) {
    for (const elimination_verdict& v : t.verdicts) {
        std::cout << v.label() << " order " << v.order << ": "
                  << elim_stage_name(v.stage);
        if (!v.detail.empty()) std::cout << " - " << v.detail;
        std::cout << "\n";
    }
    auto survivors = t.at_stage(elim_stage::survivor);
    std::cout << "survivors:";
    if (survivors.empty()) {
        std::cout << " none";
    } else {
        for (const elimination_verdict* v : survivors)
            std::cout << " " << v->label();
    }
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 2-adic ramification bounds and the degree 9-15 "
                 "group elimination"};
    app.require_subcommand(1);

    auto* gms_cmd = app.add_subcommand("gms", "Galois mean slope of a content");
    std::string gms_content;
    int gms_prime = 2;
    gms_cmd->add_option("content", gms_content, "slope content, e.g. [3,4,5]_1")
        ->required();
    gms_cmd->add_option("-p", gms_prime, "residue characteristic");

    auto* compose_cmd =
        app.add_subcommand("compose", "compositum bound of several contents");
    std::vector<std::string> compose_contents;
    int compose_max_wild = -1;
    compose_cmd->add_option("contents", compose_contents, "slope contents")
        ->required()
        ->expected(-1);
    compose_cmd->add_option("--max-wild", compose_max_wild,
                            "cap on the number of wild slopes");

    auto* check_cmd = app.add_subcommand(
        "check", "verify a claimed compositum bound against two factors");
    std::string check_a, check_b, check_beta;
    check_cmd->add_option("a", check_a, "first factor")->required();
    check_cmd->add_option("b", check_b, "second factor")->required();
    check_cmd->add_option("beta", check_beta, "claimed bound")->required();

    auto* tower_cmd =
        app.add_subcommand("tower", "discriminant recursion along a wild tower");
    int tower_p = 2;
    std::string tower_e = "1", tower_f = "1", tower_c0 = "0";
    std::string tower_nu = "max";
    int tower_steps = 0;
    tower_cmd->add_option("-p", tower_p, "residue characteristic");
    tower_cmd->add_option("-e", tower_e, "base ramification index (tame)");
    tower_cmd->add_option("-f", tower_f, "base residue degree");
    tower_cmd->add_option("--c0", tower_c0, "base discriminant exponent");
    tower_cmd->add_option("--nu", tower_nu,
                          "comma list of exponents, or min / max");
    tower_cmd->add_option("--steps", tower_steps,
                          "number of degree-p steps (for --nu min/max)");

    auto* bound_cmd =
        app.add_subcommand("bound", "group order bound for a mean slope");
    std::string bound_gms;
    bound_cmd->add_option("--gms", bound_gms, "2-adic mean slope, e.g. 71/16")
        ->required();

    auto* caps_cmd =
        app.add_subcommand("caps", "per-bucket mean slope caps for a degree");
    int caps_degree = 0;
    std::string caps_mode_name = "paper";
    caps_cmd->add_option("--degree", caps_degree, "global degree, 9..15")
        ->required();
    caps_cmd->add_option("--mode", caps_mode_name, "paper or exhaustive")
        ->check(CLI::IsMember({"paper", "exhaustive"}));

    auto* elim_cmd =
        app.add_subcommand("eliminate", "staged elimination for one degree");
    int elim_degree = 0;
    std::string elim_catalog, elim_format = "text";
    elim_cmd->add_option("--degree", elim_degree, "degree, 9..15")->required();
    elim_cmd->add_option("--catalog", elim_catalog,
                         "group catalog file (default $RAMIFY2_CATALOG)");
    elim_cmd->add_option("--format", elim_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* report_cmd =
        app.add_subcommand("report", "full run over degrees 9-15, as JSON");
    std::string report_catalog, report_out;
    report_cmd->add_option("--catalog", report_catalog,
                           "group catalog file (default $RAMIFY2_CATALOG)");
    report_cmd->add_option("--out", report_out, "write the JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gms_cmd->parsed()) {
            slope_content c = slope_content::parse(gms_content, gms_prime);
            std::cout << format_rational(c.gms()) << "\n";
        } else if (compose_cmd->parsed()) {
            std::vector<slope_content> parts;
            for (const std::string& text : compose_contents)
                parts.push_back(slope_content::parse(text));
            std::optional<int> cap;
            if (compose_cmd->count("--max-wild")) cap = compose_max_wild;
            std::cout << compose_many(parts, cap).format() << "\n";
        } else if (check_cmd->parsed()) {
            slope_content a = slope_content::parse(check_a);
            slope_content b = slope_content::parse(check_b);
            slope_content beta = slope_content::parse(check_beta);
            if (!check_compositum_bounds(a, b, beta)) {
                std::cout << "violation\n";
                return 1;
            }
            std::cout << "ok\n";
        } else if (tower_cmd->parsed()) {
            tower_spec spec;
            spec.prime = tower_p;
            spec.base_e = bigint(tower_e);
            spec.base_f = bigint(tower_f);
            spec.c0 = bigint(tower_c0);
            if (tower_nu == "min" || tower_nu == "max") {
                if (tower_steps < 1)
                    throw domain_error("--nu min/max needs --steps >= 1");
                for (int i = 0; i < tower_steps; ++i) {
                    if (tower_nu == "min")
                        spec.steps.emplace_back(nu_min_t{});
                    else
                        spec.steps.emplace_back(nu_max_t{});
                }
            } else {
                std::stringstream items(tower_nu);
                std::string item;
                while (std::getline(items, item, ','))
                    spec.steps.emplace_back(bigint(item));
                if (tower_steps > 0 &&
                    tower_steps != static_cast<int>(spec.steps.size()))
                    throw domain_error("--steps disagrees with the --nu list");
            }
            tower_trace trace = simulate_tower(spec);
            std::cout << "c0 = " << trace.exponents.at(0) << "\n";
            for (std::size_t i = 0; i < trace.nus.size(); ++i) {
                std::cout << "step " << i + 1 << ": nu = " << trace.nus[i]
                          << ", c = " << trace.exponents[i + 1]
                          << ", S = " << format_rational(trace.slopes[i])
                          << "\n";
            }
        } else if (bound_cmd->parsed()) {
            std::cout << order_bound_for_gms(parse_rational(bound_gms)) << "\n";
        } else if (caps_cmd->parsed()) {
            caps_mode mode = caps_mode_name == "paper" ? caps_mode::paper
                                                       : caps_mode::exhaustive;
            print_caps(gms_caps_for_degree(caps_degree, mode));
        } else if (elim_cmd->parsed()) {
            group_catalog cat =
                group_catalog::load_file(resolve_catalog(elim_catalog));
            elimination_trace trace = eliminate(elim_degree, cat);
            if (elim_format == "json")
                std::cout << to_json(trace) << "\n";
            else
                print_trace(trace);
        } else if (report_cmd->parsed()) {
            group_catalog cat =
                group_catalog::load_file(resolve_catalog(report_catalog));
            run_report rep = report(cat);
            std::string json = to_json(rep);
            if (report_out.empty()) {
                std::cout << json << "\n";
            } else {
                std::ofstream out(report_out);
                if (!out) throw error("cannot write " + report_out);
                out << json << "\n";
                std::cout << "report written to " << report_out << " (theorem "
                          << (rep.theorem_reproduced ? "reproduced"
                                                     : "NOT reproduced")
                          << ")\n";
            }
            // a run that fails to reproduce the theorem is a failure
            if (!rep.theorem_reproduced) return 1;
        }
    } catch (const ramify2::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
