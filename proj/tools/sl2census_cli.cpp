// Command-line front end: census runs, formula evaluation, verification
// suites and report emission.  Reports go to stdout; diagnostics go to
// stderr as one machine-parsable line.  Exit codes: 0 all matches/passes,
// 1 mathematical mismatch, 2 invalid input, 3 work budget exceeded.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sl2census/io.hpp"

namespace {

using namespace sl2;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

uint64_t default_work_budget() {
    if (const char* env = std::getenv("SL2CENSUS_WORK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return CensusOptions{}.work_budget;
}

struct CommonArgs {
    int p = 3;
    int k = 1;
    int r = 2;
    int threads = 1;
    uint64_t work_budget = default_work_budget();
    std::string format = "json";
};

void add_field_options(CLI::App* cmd, CommonArgs& a, bool with_r = true) {
    cmd->add_option("--p", a.p, "field characteristic (odd prime)");
    cmd->add_option("--k", a.k, "extension degree");
    if (with_r) cmd->add_option("--r", a.r, "rank of the free group");
    cmd->add_option("--threads", a.threads, "worker threads");
    cmd->add_option("--work-budget", a.work_budget,
                    "work gate in matrix multiplications (env SL2CENSUS_WORK_BUDGET)");
    cmd->add_option("--format", a.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

int run_census_cmd(const CommonArgs& a, const std::string& mode_name) {
    CensusMode mode = mode_name == "brute"     ? CensusMode::Brute
                      : mode_name == "formula" ? CensusMode::Formula
                                               : CensusMode::Both;
    FieldCtx F = FieldCtx::make(a.p, a.k);
    if (a.r < 2 && mode != CensusMode::Brute)
        throw RankTooSmallError("closed forms need r >= 2; use --mode brute for r = 1");

    StrataCensus c;
    if (mode == CensusMode::Formula) {
        c.p = a.p;
        c.k = a.k;
        c.q = F.q();
        c.r = a.r;
        for (StratumLabel s : kAllLabels) c.cell(s).stab = stratum_stabilizer_order(F, s);
    } else {
        CensusOptions opt;
        opt.threads = a.threads;
        opt.work_budget = a.work_budget;
        c = census(F, a.r, opt);
    }

    CensusFormulaSide formula;
    bool have_formula = a.r >= 2;
    if (have_formula) formula = census_formula_side(F, a.r);

    bool match = true;
    if (mode == CensusMode::Both)
        match = census_matches(c, formula);
    else if (mode == CensusMode::Brute && have_formula)
        match = Int(c.total_orbits) == formula.total_orbits;

    if (a.format == "json")
        std::cout << census_to_json(c, mode, have_formula ? &formula : nullptr).dump(2) << "\n";
    else if (a.format == "csv")
        std::cout << census_to_csv(c, mode, have_formula ? &formula : nullptr);
    else
        std::cout << census_to_text(c, mode, have_formula ? &formula : nullptr);
    return match ? kExitOk : kExitMismatch;
}

int run_verify_cmd(const CommonArgs& a, std::vector<std::string> suites, uint64_t seed) {
    FieldCtx F = FieldCtx::make(a.p, a.k);
    CensusOptions opt;
    opt.threads = a.threads;
    opt.work_budget = a.work_budget;
    if (suites.empty()) suites = {"partition", "uniform", "nomixing", "galois", "borel"};

    bool all_pass = true;
    Json out = Json::array();
    for (const std::string& name : suites) {
        SuiteReport rep;
        if (name == "uniform")
            rep = verify_uniform(F, a.r, opt);
        else if (name == "nomixing")
            rep = verify_nomixing(F, a.r, opt);
        else if (name == "galois")
            rep = verify_galois(F, a.r, opt);
        else if (name == "borel")
            rep = verify_borel(F, a.r, opt);
        else if (name == "partition")
            rep = verify_partition(F, a.r, seed, 100000, opt);
        else
            throw Error("unknown suite: " + name);
        all_pass = all_pass && rep.pass;
        if (a.format == "json")
            out.push_back(suite_to_json(rep));
        else
            std::cout << suite_to_text(rep) << "\n";
    }
    if (a.format == "json") std::cout << out.dump(2) << "\n";
    return all_pass ? kExitOk : kExitMismatch;
}

int run_poly_cmd(const CountPoly& poly, bool have_eval, long long at) {
    if (have_eval) {
        std::cout << poly.eval_int(Int(at)).str() << "\n";
    } else {
        std::cout << poly_to_json(poly).dump() << "\n";
    }
    return kExitOk;
}

int run_classify_cmd(const CommonArgs& a, bool witness) {
    FieldCtx F = FieldCtx::make(a.p, a.k);
    Json input;
    try {
        input = Json::parse(std::cin);
    } catch (const std::exception& e) {
        throw Error(std::string("invalid JSON on stdin: ") + e.what());
    }
    Rep rho = rep_from_json(F, input);
    StratumLabel label = classify(rho);
    Json out;
    out["label"] = label_name(label);
    if (witness) {
        auto g = normal_form_witness(rho, label);
        if (g)
            out["witness"] = ext_mat_to_json(*g);
        else
            out["witness"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_euler_cmd(int r, const std::string& format) {
    EulerTable t = euler_table(r);
    if (format == "text") {
        std::cout << "chi(total)        = " << t.chi.str() << "\n"
                  << "chi(smooth)       = " << t.chi_smooth.str() << "\n"
                  << "chi(sing)         = " << t.chi_sing.str() << "\n"
                  << "chi(sing smooth)  = " << t.chi_sing_smooth.str() << "\n"
                  << "chi(sing sing)    = " << t.chi_sing_sing.str() << "\n";
    } else {
        Json j;
        j["chi"] = (int64_t)t.chi;
        j["chi_smooth"] = (int64_t)t.chi_smooth;
        j["chi_sing"] = (int64_t)t.chi_sing;
        j["chi_sing_smooth"] = (int64_t)t.chi_sing_smooth;
        j["chi_sing_sing"] = (int64_t)t.chi_sing_sing;
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stratified census of SL2(F_q) representation orbits"};
    app.require_subcommand(1);

    CommonArgs a;

    auto* census_cmd = app.add_subcommand("census", "enumerate and stratify Hom(F_r, SL2(F_q))");
    std::string mode = "both";
    add_field_options(census_cmd, a);
    census_cmd->add_option("--mode", mode, "brute, formula or both")
        ->check(CLI::IsMember({"brute", "formula", "both"}));

    auto* verify_cmd = app.add_subcommand("verify", "run brute-force verification suites");
    std::vector<std::string> suites;
    uint64_t seed = 0;
    add_field_options(verify_cmd, a);
    verify_cmd->add_option("--suite", suites,
                           "partition, uniform, nomixing, galois, borel (repeatable)");
    verify_cmd->add_option("--seed", seed, "seed for randomized checks");

    auto* epoly_cmd = app.add_subcommand("epoly", "E-polynomial coefficients or evaluation");
    std::string family = "free";
    int rank = 2;
    long long eval_at = 0;
    epoly_cmd->add_option("--family", family)->check(CLI::IsMember({"free", "abelian"}));
    epoly_cmd->add_option("--r", rank, "rank")->required();
    auto* epoly_eval = epoly_cmd->add_option("--eval", eval_at, "evaluate at q");

    auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial");
    std::string pfamily = "free";
    int prank = 2;
    int guard = 0;
    long long peval_at = 0;
    poincare_cmd->add_option("--family", pfamily)->check(CLI::IsMember({"free", "abelian"}));
    poincare_cmd->add_option("--r", prank, "rank")->required();
    poincare_cmd->add_option("--guard", guard, "series guard degree (default 8r)");
    auto* poincare_eval = poincare_cmd->add_option("--eval", peval_at, "evaluate at t");

    auto* order_cmd = app.add_subcommand("order", "|GL_n| / |SL_n| as a polynomial in q");
    std::string ofamily = "SL";
    int osize = 2;
    long long oeval_at = 0;
    order_cmd->add_option("--family", ofamily)->check(CLI::IsMember({"SL", "GL"}));
    order_cmd->add_option("--n", osize, "matrix size")->required();
    auto* order_eval = order_cmd->add_option("--eval", oeval_at, "evaluate at q");

    auto* classify_cmd = app.add_subcommand("classify", "classify one tuple read from stdin");
    bool witness = false;
    classify_cmd->add_option("--p", a.p, "field characteristic (odd prime)");
    classify_cmd->add_option("--k", a.k, "extension degree");
    classify_cmd->add_flag("--witness", witness, "emit a normal-form conjugator");

    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristics table");
    int erank = 2;
    std::string eformat = "json";
    euler_cmd->add_option("--r", erank, "rank")->required();
    euler_cmd->add_option("--format", eformat)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: InvalidInput: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (census_cmd->parsed()) return run_census_cmd(a, mode);
        if (verify_cmd->parsed()) return run_verify_cmd(a, suites, seed);
        if (epoly_cmd->parsed()) {
            EFamily f = family == "free" ? EFamily::Free : EFamily::Abelian;
            return run_poly_cmd(e_poly(f, rank), !epoly_eval->empty(), eval_at);
        }
        if (poincare_cmd->parsed()) {
            EFamily f = pfamily == "free" ? EFamily::Free : EFamily::Abelian;
            return run_poly_cmd(poincare_poly(f, prank, guard), !poincare_eval->empty(),
                                peval_at);
        }
        if (order_cmd->parsed()) {
            MatrixFamily f = ofamily == "SL" ? MatrixFamily::SL : MatrixFamily::GL;
            return run_poly_cmd(group_order_poly(f, osize), !order_eval->empty(), oeval_at);
        }
        if (classify_cmd->parsed()) return run_classify_cmd(a, witness);
        if (euler_cmd->parsed()) return run_euler_cmd(erank, eformat);
    } catch (const WorkBudgetExceededError& e) {
        std::cerr << "error: WorkBudgetExceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: InvalidInput: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
