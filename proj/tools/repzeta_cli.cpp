// Command-line front end: every computation and verification as a
// subcommand with machine-readable JSON output (default) or aligned text.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "repzeta/arith.hpp"
#include "repzeta/counting.hpp"
#include "repzeta/igusa.hpp"
#include "repzeta/io.hpp"
#include "repzeta/weyl.hpp"

using namespace repzeta;
using nlohmann::json;

namespace {

json json_int(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str()); // decimal string once past 64 bits
}

json json_coeff_list(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& c : v) arr.push_back(json_int(c));
    return arr;
}

struct Report {
    std::string command;
    json inputs = json::object();
    std::string outcome = "pass"; // pass | fail | report
    json payload = json::object();
};

void print_text(const json& value, const std::string& indent) {
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items()) {
            if (sub.is_object() || sub.is_array()) {
                std::cout << indent << key << ":\n";
                print_text(sub, indent + "  ");
            } else {
                std::cout << indent << key << ": " << (sub.is_string() ? sub.get<std::string>() : sub.dump())
                          << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const auto& sub : value) {
            if (sub.is_object() || sub.is_array()) {
                print_text(sub, indent + "  ");
                std::cout << "\n";
            } else {
                std::cout << indent << (sub.is_string() ? sub.get<std::string>() : sub.dump()) << "\n";
            }
        }
    } else {
        std::cout << indent << value.dump() << "\n";
    }
}

int emit(const Report& report, const std::string& format) {
    if (format == "text") {
        std::cout << report.command << ": " << report.outcome << "\n";
        print_text(report.payload, "");
    } else {
        json out;
        out["command"] = report.command;
        out["inputs"] = report.inputs;
        out["outcome"] = report.outcome;
        out["payload"] = report.payload;
        std::cout << out.dump(2) << "\n";
    }
    return report.outcome == "fail" ? 1 : 0;
}

Family parse_family(const std::string& name) {
    if (name == "F") return Family::F;
    if (name == "G") return Family::G;
    if (name == "H") return Family::H;
    throw CLI::ValidationError("--family", "family must be F, G or H");
}

struct Check {
    std::string name;
    bool pass;
};

void run_identities_suite(int max_n, std::vector<Check>& checks) {
    for (int n = 1; n <= std::min(max_n, 5); ++n)
        for (auto kind : {IdentityKind::q_binomial, IdentityKind::binomial_A,
                          IdentityKind::multinomial_B, IdentityKind::typeH})
            checks.push_back({std::string("identity ") + identity_name(kind) + " n=" +
                                  std::to_string(n),
                              verify_identity(kind, n)});
}

std::vector<GroupScheme> schemes_up_to(int max_n) {
    std::vector<GroupScheme> out;
    for (int n = 1; n <= max_n; ++n) {
        out.emplace_back(Family::F, n, 0);
        out.emplace_back(Family::F, n, 1);
        out.emplace_back(Family::G, n);
        out.emplace_back(Family::H, n);
    }
    return out;
}

void run_schemes_suite(int max_n, std::vector<Check>& checks) {
    for (const auto& g : schemes_up_to(max_n)) {
        checks.push_back({"additive=multiplicative " + g.label(),
                          rat_equal(local_zeta_additive(g).value,
                                    local_zeta_multiplicative(g).value)});
        checks.push_back({"functional-equation " + g.label(), check_functional_equation(g)});
        checks.push_back({"pole-set " + g.label(), pole_set(g) == pole_set_from_denominator(g)});
    }
    for (int n = 1; n <= max_n; ++n)
        checks.push_back({"H-reduction n=" + std::to_string(n), check_H_reduction(n)});
}

void run_weyl_suite(int max_n, std::vector<Check>& checks) {
    const int cap = std::min(max_n, 4);
    for (int n = 1; n <= cap; ++n) {
        bool reiner = true, formulas = true;
        for (const auto& I : SubsetIndex::all(n)) {
            reiner = reiner && verify_reiner(n, I);
            for (int delta : {0, 1}) formulas = formulas && verify_f_formulas(n, delta, I);
        }
        checks.push_back({"descent-class length/sign gf n=" + std::to_string(n), reiner});
        checks.push_back({"descent-class f-polynomials n=" + std::to_string(n), formulas});
        checks.push_back({"joint distribution B n=" + std::to_string(n),
                          verify_joint_distribution_B(n)});
        checks.push_back({"S_n distribution n=" + std::to_string(n), verify_Sn_distribution(n)});
        checks.push_back({"L-distribution n=" + std::to_string(n),
                          verify_distribution_L(n) == MatchReport::match});
        auto oracle = length_oracle_bfs(n);
        bool lengths = true;
        for (const auto& w : enumerate_signed_perms(n))
            lengths = lengths && stats(w).length == oracle.at(w);
        checks.push_back({"window length vs BFS n=" + std::to_string(n), lengths});
    }
}

void run_counting_suite(int max_n, int jobs, std::vector<Check>& checks) {
    for (int q : {2, 3}) {
        for (const auto& space :
             {MatrixSpaceKind::alt(2), MatrixSpaceKind::alt(4), MatrixSpaceKind::mat(1),
              MatrixSpaceKind::mat(2), MatrixSpaceKind::sym(1), MatrixSpaceKind::sym(2)}) {
            auto table = rank_count_enumerate(space, q, jobs);
            bool ok = true;
            for (int i = 0; i <= space.n(); ++i) {
                int rank =
                    space.tag == MatrixSpaceKind::Tag::Alt ? 2 * (space.n() - i) : space.n() - i;
                long enumerated = table.count(rank) ? table.at(rank) : 0;
                ok = ok && rank_count_closed(space, i, q) == enumerated;
            }
            checks.push_back({"rank counts " + space.label() + " q=" + std::to_string(q), ok});
        }
    }
    const int n = std::min(max_n, 2);
    for (const auto& g : {GroupScheme(Family::F, n, 0), GroupScheme(Family::G, n),
                          GroupScheme(Family::H, n)}) {
        bool ok = true;
        for (long p : {2L, 3L})
            for (const auto& I : SubsetIndex::all(n)) {
                if (I.size() == 0) continue;
                std::vector<std::vector<int>> choices =
                    I.size() == 1 ? std::vector<std::vector<int>>{{1}, {2}}
                                  : std::vector<std::vector<int>>{{1, 1}};
                for (const auto& r : choices)
                    ok = ok && count_type_closed(g, I, r, p) ==
                                   Int(count_type_enumerate(g, I, r, p, jobs));
            }
        checks.push_back({"type counts closed=enumerated " + g.label(), ok});
    }
}

void run_igusa_suite(int max_n, int jobs, std::vector<Check>& checks) {
    struct Case {
        PvsKind kind;
        long p;
    };
    for (const auto& c : {Case{PvsKind::alt_pfaffian(2), 2}, Case{PvsKind::mat_det(1), 3},
                          Case{PvsKind::mat_det(2), 2}, Case{PvsKind::sym_det(2), 3}}) {
        auto series = igusa_closed(c.kind).series_coeffs(Var::u, 2);
        std::array<Rat, kNumVars> point;
        point.fill(Rat(0));
        point[static_cast<int>(Var::q)] = Rat(c.p);
        bool ok = true;
        for (int k = 0; k <= 2; ++k)
            ok = ok &&
                 igusa_coeff_oracle(c.kind, c.p, k, jobs) == series[static_cast<size_t>(k)].eval_rat(point);
        checks.push_back(
            {"oracle vs closed " + c.kind.label() + " p=" + std::to_string(c.p), ok});
    }
    for (int n = 1; n <= max_n; ++n) {
        checks.push_back({"sym-alt shift n=" + std::to_string(n), verify_sym_alt_relation(n)});
        checks.push_back({"bs-candidates n=" + std::to_string(n), verify_bs_candidates(n)});
    }
    for (const auto& g : schemes_up_to(max_n))
        checks.push_back({"pole translation " + g.label(), verify_pole_translation(g)});
}

void run_arith_suite(int max_n, std::vector<Check>& checks) {
    auto phi = euler_phi_table(200);
    auto heis = global_coeffs_from_local(GroupScheme(Family::G, 1), 200);
    checks.push_back({"Heisenberg coefficients = totient (bound 200)", heis.coeffs == phi});
    for (int n = 1; n <= std::min(max_n, 3); ++n)
        for (const auto& g : {GroupScheme(Family::F, n, 0), GroupScheme(Family::F, n, 1),
                              GroupScheme(Family::G, n)}) {
            auto via_local = global_coeffs_from_local(g, 100);
            auto via_conv = dirichlet_from_quotients(quotient_pairs(g).convolvable, 100);
            checks.push_back({"cross-route " + g.label(),
                              via_local.coeffs == via_conv.coeffs && via_local.multiplicative()});
        }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact representation zeta functions of the group schemes F, G, H"};
    app.require_subcommand(1);

    std::string family_name_arg = "G", format = "json", suite = "all", form = "both";
    int n = 1, delta = 0, order = 2, jobs = 1;
    long q_value = 2, p_value = 2, bound = 100;

    auto add_shared = [&](CLI::App* cmd, bool wants_family) {
        if (wants_family) {
            cmd->add_option("--family", family_name_arg, "group scheme family: F, G or H");
            cmd->add_option("--n", n, "rank parameter n")->check(CLI::PositiveNumber);
            cmd->add_option("--delta", delta, "delta in {0,1}, family F only");
        }
        cmd->add_option("--format", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--jobs", jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);
    };

    auto* local_zeta = app.add_subcommand("local-zeta", "local Euler factor in (q, t)");
    add_shared(local_zeta, true);
    local_zeta->add_option("--form", form, "additive, multiplicative or both")
        ->check(CLI::IsMember({"additive", "multiplicative", "both"}));

    auto* coeffs_cmd = app.add_subcommand("global-coeffs", "Dirichlet coefficients over Q");
    coeffs_cmd->alias("coeffs");
    add_shared(coeffs_cmd, true);
    coeffs_cmd->add_option("--bound", bound, "largest index")->check(CLI::PositiveNumber);
    bool csv = false;
    coeffs_cmd->add_flag("--csv", csv, "emit n,value rows instead of JSON");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    add_shared(verify_cmd, false);
    verify_cmd->add_option("--suite", suite, "identities|schemes|weyl|counting|igusa|arith|all")
        ->check(CLI::IsMember({"identities", "schemes", "weyl", "counting", "igusa", "arith", "all"}));
    int max_n = 3;
    verify_cmd->add_option("--max-n", max_n, "largest rank parameter")->check(CLI::PositiveNumber);

    auto* weyl_cmd = app.add_subcommand("weyl-stats", "statistics table for B_n");
    add_shared(weyl_cmd, true);

    auto* conj_cmd = app.add_subcommand("conjecture-L", "L-statistic descent-class comparison");
    add_shared(conj_cmd, true);

    auto* counts_cmd = app.add_subcommand("counts", "rank and type counts: closed vs enumerated");
    add_shared(counts_cmd, true);
    counts_cmd->add_option("--p", p_value, "residue prime")->check(CLI::PositiveNumber);
    counts_cmd->add_option("--order", order, "largest level N")->check(CLI::NonNegativeNumber);
    long rank_q = 0;
    counts_cmd->add_option("--q", rank_q, "also emit the rank table of the matched space at q");

    auto* igusa_cmd = app.add_subcommand("igusa", "local integral oracle vs closed form");
    add_shared(igusa_cmd, true);
    igusa_cmd->add_option("--p", p_value, "residue prime")->check(CLI::PositiveNumber);
    igusa_cmd->add_option("--order", order, "largest u-order k")->check(CLI::NonNegativeNumber);

    auto* stats_q = app.add_subcommand("local-coeffs", "local coefficient table at q");
    add_shared(stats_q, true);
    stats_q->add_option("--q", q_value, "prime power")->check(CLI::PositiveNumber);
    stats_q->add_option("--order", order, "largest t-order")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2
    }

    try {
        Report report;
        if (app.got_subcommand(local_zeta)) {
            GroupScheme g(parse_family(family_name_arg), n, delta);
            report.command = "local-zeta";
            report.inputs = {{"family", family_name_arg}, {"n", n}, {"delta", g.delta}};
            RatFun mult = local_zeta_multiplicative(g).value;
            if (form != "additive") report.payload["multiplicative"] = to_string(mult);
            if (form != "multiplicative") {
                RatFun add = local_zeta_additive(g).value;
                report.payload["additive"] = to_string(add);
                if (form == "both") report.payload["equal"] = rat_equal(add, mult);
            }
            report.payload["zeta"] = to_string(mult);
        } else if (app.got_subcommand(coeffs_cmd)) {
            GroupScheme g(parse_family(family_name_arg), n, delta);
            report.command = "global-coeffs";
            report.inputs = {{"family", family_name_arg}, {"n", n}, {"delta", g.delta},
                             {"bound", bound}};
            auto table = global_coeffs_from_local(g, bound);
            if (csv) {
                std::cout << "n,r\n";
                for (long idx = 1; idx <= table.bound(); ++idx)
                    std::cout << idx << "," << table.at(idx).get_str() << "\n";
                return 0;
            }
            report.payload["coefficients"] = json_coeff_list(table.coeffs);
        } else if (app.got_subcommand(verify_cmd)) {
            report.command = "verify";
            report.inputs = {{"suite", suite}, {"max_n", max_n}};
            std::vector<Check> checks;
            if (suite == "identities" || suite == "all") run_identities_suite(max_n, checks);
            if (suite == "schemes" || suite == "all") run_schemes_suite(max_n, checks);
            if (suite == "weyl" || suite == "all") run_weyl_suite(max_n, checks);
            if (suite == "counting" || suite == "all") run_counting_suite(max_n, jobs, checks);
            if (suite == "igusa" || suite == "all") run_igusa_suite(max_n, jobs, checks);
            if (suite == "arith" || suite == "all") run_arith_suite(max_n, checks);
            json rows = json::array();
            bool all_pass = true;
            for (const auto& c : checks) {
                rows.push_back({{"check", c.name}, {"pass", c.pass}});
                all_pass = all_pass && c.pass;
            }
            report.payload["checks"] = rows;
            report.payload["total"] = checks.size();
            report.outcome = all_pass ? "pass" : "fail";
        } else if (app.got_subcommand(weyl_cmd)) {
            report.command = "weyl-stats";
            report.inputs = {{"n", n}};
            json rows = json::array();
            for (const auto& w : enumerate_signed_perms(n)) {
                StatRecord s = stats(w);
                rows.push_back({{"window", w.label()},
                                {"l", s.length},
                                {"neg", s.neg},
                                {"D", s.descents},
                                {"sigma", s.sigma},
                                {"rmaj", s.rmaj},
                                {"L", s.L}});
            }
            report.payload["stats"] = rows;
        } else if (app.got_subcommand(conj_cmd)) {
            report.command = "conjecture-L";
            report.inputs = {{"n", n}};
            json rows = json::array();
            bool proved_ok = true;
            for (const auto& [label, entry] : conjecture_L_report(n)) {
                rows.push_back({{"I", label},
                                {"match", entry.match},
                                {"proved_case", entry.proved_case},
                                {"f_H", entry.lhs},
                                {"descent_sum", entry.rhs}});
                if (entry.proved_case && !entry.match) proved_ok = false;
            }
            report.payload["comparisons"] = rows;
            report.outcome = proved_ok ? "report" : "fail";
        } else if (app.got_subcommand(counts_cmd)) {
            GroupScheme g(parse_family(family_name_arg), n, delta);
            report.command = "counts";
            report.inputs = {{"family", family_name_arg}, {"n", n}, {"delta", g.delta},
                             {"p", p_value}, {"order", order}};
            json rows = json::array();
            bool all_match = true;
            if (rank_q >= 2) {
                MatrixSpaceKind space = g.family == Family::F
                                            ? MatrixSpaceKind::alt(g.matrix_size())
                                            : (g.family == Family::G ? MatrixSpaceKind::mat(g.n)
                                                                     : MatrixSpaceKind::sym(g.n));
                auto table = rank_count_enumerate(space, static_cast<int>(rank_q), jobs);
                json rank_rows = json::array();
                for (int i = 0; i <= space.n(); ++i) {
                    int rank = space.tag == MatrixSpaceKind::Tag::Alt ? 2 * (space.n() - i)
                                                                      : space.n() - i;
                    long enumerated = table.count(rank) ? table.at(rank) : 0;
                    Int closed = rank_count_closed(space, i, rank_q);
                    bool match = closed == Int(enumerated);
                    all_match = all_match && match;
                    rank_rows.push_back({{"space", space.label()},
                                         {"q", rank_q},
                                         {"rank", rank},
                                         {"closed", json_int(closed)},
                                         {"enumerated", enumerated},
                                         {"match", match}});
                }
                report.payload["ranks"] = rank_rows;
            }
            for (const auto& I : SubsetIndex::all(n)) {
                if (I.size() == 0) continue;
                std::function<void(std::vector<int>&, int)> walk = [&](std::vector<int>& r, int pos) {
                    if (pos == I.size()) {
                        int N = 0;
                        for (int v : r) N += v;
                        Int closed = count_type_closed(g, I, r, p_value);
                        long enumerated = count_type_enumerate(g, I, r, p_value, jobs);
                        bool match = closed == Int(enumerated);
                        all_match = all_match && match;
                        json profile = json::array();
                        for (int v : type_profile(I, r)) profile.push_back(v);
                        rows.push_back({{"I", I.label()},
                                        {"p", p_value},
                                        {"N", N},
                                        {"profile", profile},
                                        {"closed", json_int(closed)},
                                        {"enumerated", enumerated},
                                        {"match", match}});
                        return;
                    }
                    for (int v = 1; v <= order; ++v) {
                        r.push_back(v);
                        int used = 0;
                        for (int x : r) used += x;
                        if (used <= order) walk(r, pos + 1);
                        r.pop_back();
                    }
                };
                std::vector<int> r;
                walk(r, 0);
            }
            report.payload["rows"] = rows;
            report.outcome = all_match ? "pass" : "fail";
        } else if (app.got_subcommand(igusa_cmd)) {
            GroupScheme g(parse_family(family_name_arg), n, delta);
            PvsKind kind = matched_pvs(g);
            report.command = "igusa";
            report.inputs = {{"family", family_name_arg}, {"n", n}, {"p", p_value},
                             {"order", order}};
            auto series = igusa_closed(kind).series_coeffs(Var::u, order);
            std::array<Rat, kNumVars> point;
            point.fill(Rat(0));
            point[static_cast<int>(Var::q)] = Rat(p_value);
            json rows = json::array();
            bool all_match = true;
            const bool report_only = kind.tag == PvsKind::Tag::SymDet && p_value == 2;
            for (int k = 0; k <= order; ++k) {
                Rat oracle = igusa_coeff_oracle(kind, p_value, k, jobs);
                Rat closed = series[static_cast<size_t>(k)].eval_rat(point);
                bool match = oracle == closed;
                if (!report_only) all_match = all_match && match;
                rows.push_back({{"kind", kind.label()},
                                {"p", p_value},
                                {"k", k},
                                {"oracle", oracle.get_str()},
                                {"closed_coeff", closed.get_str()},
                                {"match", match}});
            }
            report.payload["rows"] = rows;
            report.payload["closed_form"] = to_string(igusa_closed(kind));
            report.outcome = report_only ? "report" : (all_match ? "pass" : "fail");
        } else if (app.got_subcommand(stats_q)) {
            GroupScheme g(parse_family(family_name_arg), n, delta);
            report.command = "local-coeffs";
            report.inputs = {{"family", family_name_arg}, {"n", n}, {"delta", g.delta},
                             {"q", q_value}, {"order", order}};
            report.payload["coefficients"] = json_coeff_list(local_coefficients(g, q_value, order));
        }
        return emit(report, format);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
