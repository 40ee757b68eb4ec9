// ostat: tables, exact verifications, proof-inequality scans and
// distribution exploration for order-statistic correlations.
//
// Exit status: 0 when every check passes, 1 on any failed check, 2 on a
// usage error.

#include "ostat/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <thread>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

int emit(const ostat::ReportDocument& doc, const GlobalOptions& g) {
    const std::string text = g.format == "json" ? ostat::to_json(doc) : ostat::to_csv(doc);
    if (g.out.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        std::ofstream file(g.out, std::ios::binary);
        if (!file) {
            std::cerr << "ostat: cannot write " << g.out << "\n";
            return kExitFailure;
        }
        file << text;
    }
    if (!doc.all_passed()) {
        std::cerr << "ostat: " << doc.summary.failed << " of " << doc.summary.passed + doc.summary.failed
                  << " checks failed\n";
        return kExitFailure;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moments, correlations and exact verification for order statistics"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", ostat::kToolVersion);

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "Write the report to this path instead of stdout");
    app.add_option("--seed", g.seed, "Random seed (mc, explore --method mc, verify lemma)");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

    // table
    ostat::TableOptions table;
    std::string gold_dir;
    auto* table_cmd = app.add_subcommand("table", "h(k) and rho(k) for k = 1..n-t");
    table_cmd->add_option("--n", table.n, "Sample size");
    table_cmd->add_option("--t", table.t, "Index gap");
    table_cmd->add_option("--dist", table.dist, "Distribution name");
    table_cmd->add_option("--precision", table.precision, "Decimal places");
    table_cmd->add_option("--gold", gold_dir, "Regenerate the published-table fixtures into this directory");

    // verify
    ostat::VerifyOptions verify;
    int n_min = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Exact verification over a range of n");
    verify_cmd->add_option("target", verify.target, "thm1|edge|thm2|identities|bounds|lemma|uniform-shape")
        ->required();
    verify_cmd->add_option("--n-max", verify.n_max, "Largest n");
    verify_cmd->add_option("--n-min", n_min, "Smallest n (default: smallest valid for the target)");
    verify_cmd->add_option("--cases", verify.lemma_cases, "Random cases for the lemma target");

    // proofcheck
    std::string ineq_name;
    int m_min = -1, m_max = -1, t_min = -1, t_max = -1, k_min = -1, k_max = -1, x_min = -1, x_max = -1;
    auto* proof_cmd = app.add_subcommand("proofcheck", "Big-integer positivity scan of a proof inequality");
    proof_cmd->add_option("ineq", ineq_name, "I3-even|I3-odd|I10-even|I10-odd|P19")->required();
    proof_cmd->add_option("--m-min", m_min);
    proof_cmd->add_option("--m-max", m_max);
    proof_cmd->add_option("--t-min", t_min);
    proof_cmd->add_option("--t-max", t_max);
    proof_cmd->add_option("--k-min", k_min);
    proof_cmd->add_option("--k-max", k_max);
    proof_cmd->add_option("--x-min", x_min);
    proof_cmd->add_option("--x-max", x_max);

    // explore
    ostat::ExploreOptions explore;
    std::string explore_n = "3..8", explore_t, method = "quad";
    std::uint64_t samples = 100000, batch_size = 1000;
    auto* explore_cmd = app.add_subcommand("explore", "Peak location and uniform comparison for any distribution");
    explore_cmd->add_option("--dist", explore.dist, "Distribution name");
    explore_cmd->add_option("--n", explore_n, "Sample-size range a..b");
    explore_cmd->add_option("--t", explore_t, "Gap range a..b (default: all)");
    explore_cmd->add_option("--method", method)->check(CLI::IsMember({"quad", "mc"}));
    explore_cmd->add_option("--samples", samples, "Monte Carlo replications");
    explore_cmd->add_option("--batch-size", batch_size, "Replications per Monte Carlo batch");
    explore_cmd->add_option("--precision", explore.precision, "Decimal places");

    // mc
    ostat::McOptions mc;
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of corr(X_(k), X_(k+t))");
    mc_cmd->add_option("--dist", mc.dist, "Distribution name");
    mc_cmd->add_option("--n", mc.n);
    mc_cmd->add_option("--k", mc.k);
    mc_cmd->add_option("--t", mc.t);
    mc_cmd->add_option("--samples", samples, "Replications");
    mc_cmd->add_option("--batch-size", batch_size, "Replications per batch");
    mc_cmd->add_option("--precision", mc.precision, "Decimal places");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*table_cmd) {
            if (!gold_dir.empty()) {
                auto files = ostat::write_gold_fixtures(gold_dir);
                for (const auto& p : files.fixtures) std::cerr << "wrote " << p.string() << "\n";
                std::cerr << "wrote " << files.notes.string() << "\n";
                return 0;
            }
            return emit(ostat::cmd_table(table), g);
        }
        if (*verify_cmd) {
            verify.jobs = g.jobs;
            verify.seed = g.seed;
            if (n_min > 0) verify.n_min = n_min;
            return emit(ostat::cmd_verify(verify), g);
        }
        if (*proof_cmd) {
            auto id = ostat::parse_ineq_id(ineq_name);
            if (!id) throw ostat::UsageError("unknown inequality id: " + ineq_name);
            auto spec = ostat::default_ineq_spec(*id);
            auto set = [](int& field, int value) {
                if (value >= 0) field = value;
            };
            set(spec.m.lo, m_min);
            set(spec.m.hi, m_max);
            set(spec.t.lo, t_min);
            set(spec.t.hi, t_max);
            set(spec.k.lo, k_min);
            set(spec.k.hi, k_max);
            set(spec.x.lo, x_min);
            set(spec.x.hi, x_max);
            return emit(ostat::cmd_proofcheck(spec, g.jobs), g);
        }
        if (*explore_cmd) {
            explore.n = ostat::parse_int_range(explore_n);
            if (!explore_t.empty()) explore.t = ostat::parse_int_range(explore_t);
            explore.method = method == "mc" ? ostat::ExploreMethod::mc : ostat::ExploreMethod::quad;
            explore.mc = {samples, g.seed, batch_size};
            explore.jobs = g.jobs;
            if (explore.method == ostat::ExploreMethod::mc && samples < ostat::kMinMeaningfulSamples)
                std::cerr << "ostat: warning: fewer than " << ostat::kMinMeaningfulSamples
                          << " samples; standard errors are unreliable\n";
            return emit(ostat::cmd_explore(explore), g);
        }
        if (*mc_cmd) {
            mc.mc = {samples, g.seed, batch_size};
            mc.jobs = g.jobs;
            if (samples < ostat::kMinMeaningfulSamples)
                std::cerr << "ostat: warning: fewer than " << ostat::kMinMeaningfulSamples
                          << " samples; standard errors are unreliable\n";
            return emit(ostat::cmd_mc(mc), g);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "ostat: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "ostat: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "ostat: error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
