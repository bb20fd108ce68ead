// qpoin: normal-order expressions in the q-deformed Poincare algebra,
// build the Pauli-Lubanski vector and spin Casimir, compute the little
// algebras, and run the machine-verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "qpoincare/hopf.hpp"
#include "qpoincare/little.hpp"
#include "qpoincare/parse.hpp"
#include "qpoincare/pauli_lubanski.hpp"
#include "qpoincare/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qpoin;

namespace {

constexpr const char* kVersion = "0.1.0";

json report_json(const std::string& suite, uint64_t seed,
                 const std::vector<CheckResult>& checks) {
    json j;
    j["suite"] = suite;
    j["version"] = kVersion;
    j["seed"] = seed;
    j["checks"] = json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"id", c.id},
                               {"status", status_name(c.status)},
                               {"witness", c.witness},
                               {"ms", c.ms}});
    }
    return j;
}

void print_report_text(const std::string& suite,
                       const std::vector<CheckResult>& checks) {
    int passed = 0;
    for (const auto& c : checks) {
        std::cout << (c.status == Status::Pass ? "pass" : status_name(c.status))
                  << "  " << c.id;
        if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
        std::cout << "\n";
        if (c.status == Status::Pass) ++passed;
    }
    std::cout << suite << ": " << passed << "/" << checks.size()
              << " checks passed\n";
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (c.status != Status::Pass) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for the q-deformed Poincare algebra"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string expr1, expr2;
    auto* cmd_norm = app.add_subcommand("normalize",
                                        "normal-order an expression");
    cmd_norm->add_option("expr", expr1, "expression")->required();

    auto* cmd_comm = app.add_subcommand("commutator",
                                        "commutator of two expressions");
    cmd_comm->add_option("x", expr1)->required();
    cmd_comm->add_option("y", expr2)->required();

    auto* cmd_star = app.add_subcommand("star", "the *-involution");
    cmd_star->add_option("expr", expr1)->required();

    auto* cmd_cop = app.add_subcommand(
        "coproduct", "coproduct of a Lorentz-algebra expression");
    cmd_cop->add_option("expr", expr1)->required();

    auto* cmd_pl = app.add_subcommand(
        "pl", "components of the Pauli-Lubanski vector");
    auto* cmd_cas = app.add_subcommand("casimir", "the spin Casimir");

    std::string little_case = "massive";
    auto* cmd_little = app.add_subcommand("little", "little algebras");
    cmd_little->add_option("--case", little_case, "massive or massless")
        ->check(CLI::IsMember({"massive", "massless"}))
        ->capture_default_str();

    VerifyOptions opts;
    std::string suite = "all";
    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("--suite", suite, "suite name")
        ->check(CLI::IsMember(suite_names()))
        ->capture_default_str();
    cmd_verify->add_option("--seed", opts.seed, "random seed")
        ->capture_default_str();
    cmd_verify->add_option("--trials", opts.trials, "confluence fuzz trials")
        ->capture_default_str();
    cmd_verify
        ->add_option("--qvalues", opts.qvalues,
                     "q grid for spin-representation residuals")
        ->delimiter(',');

    auto* cmd_fuzz = app.add_subcommand("fuzz", "confluence fuzzer");
    cmd_fuzz->add_option("--seed", opts.seed)->capture_default_str();
    cmd_fuzz->add_option("--trials", opts.trials)->capture_default_str();
    cmd_fuzz->add_option("--max-len", opts.max_len)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool as_json = format == "json";
    try {
        if (cmd_norm->parsed()) {
            Element e = parse(expr1);
            if (as_json) {
                std::cout << json{{"input", expr1},
                                  {"normal_form", print(e)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << print(e) << "\n";
            }
        } else if (cmd_comm->parsed()) {
            Element e = commutator(parse(expr1), parse(expr2));
            if (as_json) {
                std::cout << json{{"commutator", print(e)}}.dump(2) << "\n";
            } else {
                std::cout << print(e) << "\n";
            }
        } else if (cmd_star->parsed()) {
            Element e = star(parse(expr1));
            if (as_json) {
                std::cout << json{{"star", print(e)}}.dump(2) << "\n";
            } else {
                std::cout << print(e) << "\n";
            }
        } else if (cmd_cop->parsed()) {
            Tensor2 t = coproduct(parse(expr1));
            if (as_json) {
                std::cout << json{{"coproduct", t.str()}}.dump(2) << "\n";
            } else {
                std::cout << t.str() << "\n";
            }
        } else if (cmd_pl->parsed()) {
            const PauliLubanski& pl = pauli_lubanski();
            if (as_json) {
                json j;
                for (int nu = 0; nu < 4; ++nu)
                    j["W_" + std::string(mu_name(nu))] = print(pl.at(nu));
                std::cout << j.dump(2) << "\n";
            } else {
                for (int nu = 0; nu < 4; ++nu)
                    std::cout << "W_" << mu_name(nu) << " = "
                              << print(pl.at(nu)) << "\n";
            }
        } else if (cmd_cas->parsed()) {
            const Element& omega = spin_casimir();
            if (as_json) {
                std::cout << json{{"spin_casimir", print(omega)}}.dump(2)
                          << "\n";
            } else {
                std::cout << print(omega) << "\n";
            }
        } else if (cmd_little->parsed()) {
            LittleAlgebraReport rep = little_case == "massive"
                                          ? little_algebra_massive()
                                          : little_algebra_massless();
            if (as_json) {
                json j = report_json("little/" + rep.case_tag, opts.seed,
                                     rep.checks);
                json gens = json::object();
                for (const auto& [name, e] : rep.generators)
                    gens[name] = print(e);
                j["generators"] = gens;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& [name, e] : rep.generators)
                    std::cout << name << " = " << print(e) << "\n";
                print_report_text("little/" + rep.case_tag, rep.checks);
            }
            return rep.all_pass() ? 0 : 1;
        } else if (cmd_verify->parsed()) {
            auto checks = run_suite(suite, opts);
            if (as_json) {
                std::cout << report_json(suite, opts.seed, checks).dump(2)
                          << "\n";
            } else {
                print_report_text(suite, checks);
            }
            return all_pass(checks) ? 0 : 1;
        } else if (cmd_fuzz->parsed()) {
            auto checks = run_suite("fuzz", opts);
            if (as_json) {
                std::cout << report_json("fuzz", opts.seed, checks).dump(2)
                          << "\n";
            } else {
                print_report_text("fuzz", checks);
            }
            return all_pass(checks) ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
