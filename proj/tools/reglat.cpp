// reglat: verification and classification of regular diagonal quadratic forms.
//
// Exit codes: 0 pass/confirmed, 1 refuted/failed, 2 usage or parse error,
// 3 internal instability (local-set threshold or binary-search precision).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "reglat/acceptance.hpp"

using namespace reglat;
using nlohmann::json;

namespace {

json verdict_json(const DiagonalLattice& L, const RegularityVerdict& v) {
    json j{{"lattice", L.to_string()},
           {"kind", v.confirmed() ? "ConfirmedUpTo" : "RefutedAt"},
           {"value", v.value}};
    if (v.refuted()) {
        json certs = json::array();
        for (const auto& c : v.witness.certificates) {
            json chain = json::array();
            for (const auto& step : c.chain)
                chain.push_back({{"coeffs", step.coeffs}, {"target", step.target}});
            certs.push_back({{"p", c.p},
                             {"chain", chain},
                             {"residues", c.residues},
                             {"modulus", c.modulus},
                             {"verified", c.verify()}});
        }
        j["witness"] = {{"n", v.witness.n}, {"certificates", certs}};
    }
    return j;
}

json record_json(const ClassificationRecord& rec) {
    json j = verdict_json(rec.lattice, rec.verdict);
    if (rec.verdict.confirmed()) j["minimal"] = rec.minimal;
    if (!rec.note.empty()) j["note"] = rec.note;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular diagonal quadratic form engine"};
    app.require_subcommand(1);

    std::string lattice_text, cache_dir;
    i64 bound = 100000;
    bool as_json = false;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    app.add_option("--cache-dir", cache_dir, "sieve cache directory (or env REGLAT_CACHE)");
    app.add_option("--jobs", jobs, "worker threads for bulk commands");
    app.add_option("--bound", bound, "search/sieve bound B");
    app.add_flag("--json", as_json, "machine-readable output");

    auto* local_set = app.add_subcommand("local-set", "local representation set Q(L_p)");
    i64 prime = 2;
    local_set->add_option("--lattice", lattice_text)->required();
    local_set->add_option("--prime", prime)->required();

    auto* regular = app.add_subcommand("regular", "bounded regularity verdict");
    regular->add_option("--lattice", lattice_text)->required();

    auto* psi_cmd = app.add_subcommand("psi", "least member of S not represented by the lattice");
    std::string sdelta, genus_of;
    psi_cmd->add_option("--lattice", lattice_text)->required();
    psi_cmd->add_option("--sdelta", sdelta, "S(d2,d3,d5) as d2,d3,d5");
    psi_cmd->add_option("--genus", genus_of, "S = Q(gen(<lattice>))");

    auto* lambda_cmd = app.add_subcommand("lambda", "Watson transformation");
    lambda_cmd->add_option("--lattice", lattice_text)->required();
    lambda_cmd->add_option("--prime", prime)->required();

    auto* redundant = app.add_subcommand("redundant", "is n redundant in L?");
    i64 nval = 1;
    std::string mode = "local";
    redundant->add_option("--lattice", lattice_text)->required();
    redundant->add_option("--n", nval)->required();
    redundant->add_option("--mode", mode)->check(CLI::IsMember({"local", "empirical"}));

    auto* minimalize_cmd = app.add_subcommand("minimalize", "greedy redundant-coefficient removal");
    minimalize_cmd->add_option("--lattice", lattice_text)->required();

    auto* table_cmd = app.add_subcommand("table", "emit a paper table as JSON");
    int which = 1;
    table_cmd->add_option("--which", which)->required()->check(CLI::Range(1, 6));

    auto* classify_cmd = app.add_subcommand("classify", "quaternary scan over a ternary section");
    std::string ternary_text;
    i64 a4max = 100;
    classify_cmd->add_option("--ternary", ternary_text)->required();
    classify_cmd->add_option("--a4-max", a4max)->required();

    auto* rank5_cmd = app.add_subcommand("rank5", "quinary scan over a rank-4 prefix");
    std::string prefix_text;
    i64 a5max = 100;
    rank5_cmd->add_option("--prefix", prefix_text)->required();
    rank5_cmd->add_option("--a5-max", a5max)->required();

    auto* asets_cmd = app.add_subcommand("asets", "A_+-(p) prime sets");
    asets_cmd->add_option("--prime", prime)->required();

    auto* newcheck = app.add_subcommand("newcheck", "forced-basis newness verifier");
    std::string probes_text;
    newcheck->add_option("--lattice", lattice_text)->required();
    newcheck->add_option("--probes", probes_text)->required();

    auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");
    std::string only, report_path;
    verify->add_option("--only", only, "run a single named check");
    verify->add_option("--report", report_path, "write the JSON report here");

    // global flags (--bound, --json, ...) may follow the subcommand
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!cache_dir.empty()) SieveCache::instance().set_directory(cache_dir);

    try {
        if ((*local_set || *lambda_cmd || *asets_cmd) && !is_prime(prime))
            throw ParseError("--prime expects a prime number");
        if (*local_set) {
            DiagonalLattice L = DiagonalLattice::parse(lattice_text);
            std::cout << local_rep_set(L, prime).to_json_string() << "\n";
            return 0;
        }
        if (*regular) {
            DiagonalLattice L = DiagonalLattice::parse(lattice_text);
            auto v = regular_verdict(L, bound);
            if (as_json)
                std::cout << verdict_json(L, v).dump() << "\n";
            else if (v.confirmed())
                std::cout << "CONFIRMED <= " << v.value << "\n";
            else
                std::cout << "REFUTED at " << v.value << "\n";
            return v.confirmed() ? 0 : 1;
        }
        if (*psi_cmd) {
            DiagonalLattice K = DiagonalLattice::parse(lattice_text);
            std::optional<i64> r;
            if (!sdelta.empty()) {
                DiagonalLattice d = DiagonalLattice::parse(sdelta);
                if (d.rank() != 3) throw ParseError("--sdelta needs three entries");
                DeltaTriple dt{d.coeff(0), d.coeff(1), d.coeff(2)};
                r = psi([&](i64 n) { return in_S(dt, n); }, K, bound);
            } else if (!genus_of.empty()) {
                DiagonalLattice J = DiagonalLattice::parse(genus_of);
                r = psi([&](i64 n) { return genus_represents(J, n); }, K, bound);
            } else {
                throw ParseError("psi needs --sdelta or --genus");
            }
            if (r)
                std::cout << *r << "\n";
            else
                std::cout << "EXCEEDS " << bound << "\n";
            return 0;
        }
        if (*lambda_cmd) {
            DiagonalLattice L = DiagonalLattice::parse(lattice_text);
            auto c = watson_case_for(L, prime);
            if (!c) {
                std::cout << "NOT-APPLICABLE\n";
                return 1;
            }
            DiagonalLattice M = lambda_transform(L, *c);
            if (as_json)
                std::cout << json{{"case", c->name()}, {"modulus", c->modulus},
                                  {"result", M.to_string()}}.dump()
                          << "\n";
            else
                std::cout << "case " << c->name() << " (mod " << c->modulus << "): "
                          << M.to_string() << "\n";
            return 0;
        }
        if (*redundant) {
            DiagonalLattice L = DiagonalLattice::parse(lattice_text);
            bool r = is_redundant(L, nval, bound,
                                  mode == "local" ? RedundancyMode::Local
                                                  : RedundancyMode::Empirical);
            std::cout << (r ? "REDUNDANT" : "NOT-REDUNDANT") << "\n";
            return r ? 0 : 1;
        }
        if (*minimalize_cmd) {
            DiagonalLattice L = DiagonalLattice::parse(lattice_text);
            std::cout << minimalize(L, bound).to_string() << "\n";
            return 0;
        }
        if (*table_cmd) {
            json out;
            switch (which) {
                case 1: {
                    out = json::array();
                    for (const auto& row : tables::table1())
                        out.push_back({{"lattice", row.t},
                                       {"irregular", row.irregular},
                                       {"seven_adic", row.seven_adic}});
                    break;
                }
                case 2: {
                    out = json::array();
                    for (const auto& [t, v] : tables::table2())
                        out.push_back({{"lattice", t}, {"t", v}});
                    break;
                }
                case 3: {
                    out = json::array();
                    for (const auto& [t, v] : tables::table3())
                        out.push_back({{"lattice", t}, {"u", v}});
                    break;
                }
                case 4: {
                    out = json::array();
                    for (const auto& row : tables::table4()) {
                        json fams = json::array();
                        for (const auto& f : row.families)
                            fams.push_back({{"c", f.c}, {"p", f.p},
                                            {"alpha", f.alpha}, {"beta", f.beta}});
                        out.push_back({{"ternary", row.t}, {"families", fams},
                                       {"constants", row.constants}});
                    }
                    break;
                }
                case 5: {
                    out = json::array();
                    for (const auto& b : tables::table5())
                        out.push_back({{"name", b.name}, {"indices", b.indices}});
                    break;
                }
                case 6: {
                    out = json::array();
                    for (const auto& row : tables::table6())
                        out.push_back({{"ternary", row.t},
                                       {"a4", {{"alpha", row.e4_alpha}, {"beta", row.e4_beta}}},
                                       {"a5", {{"alpha", row.e5_alpha}, {"beta", row.e5_beta}}},
                                       {"s", tables::table6_s_values()}});
                    break;
                }
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*classify_cmd) {
            DiagonalLattice t = DiagonalLattice::parse(ternary_text);
            if (t.rank() != 3) throw ParseError("--ternary needs three entries");
            for (const auto& rec :
                 classify_quaternaries({t.coeff(0), t.coeff(1), t.coeff(2)}, a4max, bound))
                std::cout << record_json(rec).dump() << "\n";
            return 0;
        }
        if (*rank5_cmd) {
            DiagonalLattice prefix = DiagonalLattice::parse(prefix_text);
            for (const auto& rec : search_rank5(prefix, a5max, bound))
                std::cout << record_json(rec).dump() << "\n";
            return 0;
        }
        if (*asets_cmd) {
            auto s = a_sets(prime);
            std::cout << json{{"p", prime},
                              {"A+", s.plus},
                              {"A-", s.minus},
                              {"A'+", s.plus_prime},
                              {"A'-", s.minus_prime}}
                             .dump()
                      << "\n";
            return 0;
        }
        if (*newcheck) {
            DiagonalLattice L = DiagonalLattice::parse(lattice_text);
            DiagonalLattice probes = DiagonalLattice::parse(probes_text);
            bool r = forced_new_check(L, probes.coeffs());
            std::cout << (r ? "NEW-BY-FORCED-BASIS" : "NOT-FORCED") << "\n";
            return r ? 0 : 1;
        }
        if (*verify) {
            if (!only.empty()) {
                bool known = false;
                for (const auto& c : acceptance::all_checks())
                    if (c.name == only) known = true;
                if (!known) throw ParseError("unknown check '" + only + "'");
            }
            auto report = acceptance::run_suite(bound, jobs, only);
            for (const auto& r : report.results)
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
                          << static_cast<i64>(r.ms) << " ms)"
                          << (r.pass ? "" : "  " + r.actual) << "\n";
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                out << report.to_json().dump(2) << "\n";
            }
            std::cout << (report.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
            return report.all_pass() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonPositiveCoefficient& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyLattice& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StabilityNotReached& e) {
        std::cerr << "internal instability: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionUnstable& e) {
        std::cerr << "internal instability: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
