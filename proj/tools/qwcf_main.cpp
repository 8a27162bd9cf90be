// Command-line front end: honest outcomes, cheating bounds, fair/balanced
// operating points over a fiber link, the derived strong-flip construction,
// and the library's invariant checks.

#include "qwcf/adversary.hpp"
#include "qwcf/checks.hpp"
#include "qwcf/config.hpp"
#include "qwcf/protocol.hpp"
#include "qwcf/report.hpp"
#include "qwcf/solver.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qwcf;
using Json = nlohmann::ordered_json;

struct CommonFlags {
    std::string config_path;
    std::string out;
    std::string format;
    int truncation = 0;
    bool oracle = false;

    CLI::Option* o_out = nullptr;
    CLI::Option* o_format = nullptr;
    CLI::Option* o_truncation = nullptr;
    CLI::Option* o_oracle = nullptr;
};

void attach_common(CLI::App* sub, CommonFlags& f) {
    sub->add_option("--config", f.config_path, "JSON config file");
    f.o_out = sub->add_option("--out", f.out, "output path, \"-\" for stdout");
    f.o_format = sub->add_option("--format", f.format, "csv, json, or table")
                     ->check(CLI::IsMember({"csv", "json", "table"}));
    f.o_truncation =
        sub->add_option("--truncation", f.truncation, "photon-number cap");
    f.o_oracle = sub->add_flag(
        "--oracle", f.oracle, "cross-check closed forms against the simulator");
}

RunConfig load_config(const CommonFlags& f) {
    RunConfig cfg;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path, std::ios::binary);
        if (!in)
            throw ConfigError("cannot open config file: " + f.config_path);
        std::ostringstream text;
        text << in.rdbuf();
        cfg = parse_config(text.str());
    }
    if (f.o_out->count()) cfg.out = f.out;
    if (f.o_format->count()) cfg.format = f.format;
    if (f.o_truncation->count()) {
        if (f.truncation < 1)
            throw ConfigError("--truncation must be at least 1");
        cfg.truncation = f.truncation;
    }
    if (f.o_oracle->count()) cfg.oracle = true;
    return cfg;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open output file: " + cfg.out);
    out << text;
}

std::string kv_table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::string out;
    for (const auto& [k, v] : rows) {
        out += k;
        out += std::string(width - k.size() + 2, ' ');
        out += v;
        out += '\n';
    }
    return out;
}

std::string csv_line(const std::vector<std::string>& header,
                     const std::vector<std::string>& row) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i];
    }
    out += '\n';
    return out;
}

ProtocolParams resolve_params(const RunConfig& cfg) {
    const double x = cfg.x;
    if (!(x > 0.0 && x < 1.0))
        throw ConfigError("x must lie strictly inside (0, 1)");
    if ((cfg.y && !(*cfg.y >= 0.0 && *cfg.y <= 1.0)) ||
        (cfg.z && !(*cfg.z >= 0.0 && *cfg.z <= 1.0)))
        throw ConfigError("y and z must lie in [0, 1]");
    const double y = cfg.y ? *cfg.y : fair_y(x);
    const double z = cfg.z ? *cfg.z : no_abort_z(x, y);
    return {x, y, z};
}

void require_unit_detector(const RunConfig& cfg) {
    if (!(cfg.detector_eff >= 0.0 && cfg.detector_eff <= 1.0))
        throw ConfigError("detector efficiency must lie in [0, 1]");
}

int run_honest(const RunConfig& cfg) {
    const ProtocolParams params = resolve_params(cfg);
    const OutcomeDistribution closed = honest_closed_form(params, cfg.losses);

    int code = 0;
    double deviation = 0.0;
    OutcomeDistribution sim{};
    if (cfg.oracle) {
        sim = honest_simulated(params, cfg.losses,
                               make_basis(3, cfg.truncation));
        deviation = std::max({std::abs(sim.p_alice_wins - closed.p_alice_wins),
                              std::abs(sim.p_bob_wins - closed.p_bob_wins),
                              std::abs(sim.p_abort - closed.p_abort)});
        if (deviation > 1e-10) code = 1;
    }

    if (cfg.format == "json") {
        Json j;
        j["x"] = params.x;
        j["y"] = params.y;
        j["z"] = params.z;
        j["p_alice_wins"] = closed.p_alice_wins;
        j["p_bob_wins"] = closed.p_bob_wins;
        j["p_abort"] = closed.p_abort;
        if (cfg.oracle) {
            j["simulated"] = {{"p_alice_wins", sim.p_alice_wins},
                              {"p_bob_wins", sim.p_bob_wins},
                              {"p_abort", sim.p_abort}};
            j["deviation"] = deviation;
        }
        emit(cfg, j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::vector<std::string> header{"x", "y", "z", "p_alice_wins",
                                        "p_bob_wins", "p_abort"};
        std::vector<std::string> row{
            format_sig12(params.x),          format_sig12(params.y),
            format_sig12(params.z),          format_sig12(closed.p_alice_wins),
            format_sig12(closed.p_bob_wins), format_sig12(closed.p_abort)};
        if (cfg.oracle) {
            header.insert(header.end(), {"p_alice_sim", "p_bob_sim",
                                         "p_abort_sim", "deviation"});
            row.insert(row.end(), {format_sig12(sim.p_alice_wins),
                                   format_sig12(sim.p_bob_wins),
                                   format_sig12(sim.p_abort),
                                   format_sig12(deviation)});
        }
        emit(cfg, csv_line(header, row));
    } else {
        std::vector<std::pair<std::string, std::string>> rows{
            {"x", format_sig12(params.x)},
            {"y", format_sig12(params.y)},
            {"z", format_sig12(params.z)},
            {"p_alice_wins", format_sig12(closed.p_alice_wins)},
            {"p_bob_wins", format_sig12(closed.p_bob_wins)},
            {"p_abort", format_sig12(closed.p_abort)},
        };
        if (cfg.oracle) {
            rows.emplace_back("simulator deviation", format_sig12(deviation));
            rows.emplace_back("simulator check", code == 0 ? "ok" : "FAILED");
        }
        emit(cfg, kv_table(rows));
    }
    return code;
}

int run_cheat(const RunConfig& cfg) {
    const ProtocolParams params = resolve_params(cfg);
    const double p_d_bob = bob_cheat(params, cfg.losses);
    const LossyCheatResult alice = alice_cheat_lossy(params, cfg.losses);
    const double alice_ideal = alice_cheat_lossless(params);

    int code = 0;
    double oracle_probability = 0.0, deviation = 0.0, fidelity = 0.0;
    if (cfg.oracle) {
        auto basis = make_basis(2, cfg.truncation);
        const BruteforceResult brute =
            alice_cheat_bruteforce(params, cfg.losses, basis);
        const QuantumState analytic =
            alice_optimal_state(params, cfg.losses, basis);
        oracle_probability = brute.probability;
        deviation = std::abs(brute.probability - alice.probability);
        fidelity =
            (analytic.matrix() * brute.state.matrix()).trace().real();
        if (deviation > 1e-9 || fidelity < 1.0 - 1e-8) code = 1;
    }

    if (cfg.format == "json") {
        Json j;
        j["x"] = params.x;
        j["y"] = params.y;
        j["z"] = params.z;
        j["p_d_alice"] = alice.probability;
        j["p_d_bob"] = p_d_bob;
        j["l_one"] = alice.l_one;
        j["p_d_alice_lossless"] = alice_ideal;
        if (cfg.oracle) {
            j["oracle"] = {{"probability", oracle_probability},
                           {"deviation", deviation},
                           {"fidelity", fidelity}};
        }
        emit(cfg, j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::vector<std::string> header{"x",         "y",     "z",
                                        "p_d_alice", "p_d_bob", "l_one"};
        std::vector<std::string> row{
            format_sig12(params.x), format_sig12(params.y),
            format_sig12(params.z), format_sig12(alice.probability),
            format_sig12(p_d_bob),  std::to_string(alice.l_one)};
        if (cfg.oracle) {
            header.insert(header.end(),
                          {"p_d_oracle", "deviation", "fidelity"});
            row.insert(row.end(), {format_sig12(oracle_probability),
                                   format_sig12(deviation),
                                   format_sig12(fidelity)});
        }
        emit(cfg, csv_line(header, row));
    } else {
        std::vector<std::pair<std::string, std::string>> rows{
            {"x", format_sig12(params.x)},
            {"y", format_sig12(params.y)},
            {"z", format_sig12(params.z)},
            {"p_d_alice", format_sig12(alice.probability)},
            {"p_d_bob", format_sig12(p_d_bob)},
            {"l_one (attack photon number)", std::to_string(alice.l_one)},
            {"p_d_alice lossless", format_sig12(alice_ideal)},
        };
        if (cfg.oracle) {
            rows.emplace_back("oracle probability",
                              format_sig12(oracle_probability));
            rows.emplace_back("oracle deviation", format_sig12(deviation));
            rows.emplace_back("oracle fidelity", format_sig12(fidelity));
            rows.emplace_back("oracle check", code == 0 ? "ok" : "FAILED");
        }
        emit(cfg, kv_table(rows));
    }
    return code;
}

int run_solve(const RunConfig& cfg) {
    if (!cfg.z)
        throw ConfigError("solve requires z (--z or config key \"z\")");
    require_unit_detector(cfg);
    const LossBudget losses =
        link_budget(cfg.link, cfg.detector_eff, cfg.detector_eff);
    const SolveResult r = solve_fair_balanced(*cfg.z, losses);

    if (cfg.format == "json") {
        emit(cfg, solve_to_json(r, cfg.link.distance_km));
    } else if (cfg.format == "csv") {
        SweepRow row;
        row.d_km = cfg.link.distance_km;
        row.result = r;
        emit(cfg, sweep_to_csv({row}));
    } else {
        emit(cfg, kv_table({
                      {"d_km", format_sig12(cfg.link.distance_km)},
                      {"x", format_sig12(r.x)},
                      {"y", format_sig12(r.y)},
                      {"z", format_sig12(r.z)},
                      {"p_h", format_sig12(r.p_h)},
                      {"p_ab", format_sig12(r.p_ab)},
                      {"p_d_quantum", format_sig12(r.p_d_quantum)},
                      {"p_d_classical", format_sig12(r.p_d_classical)},
                      {"l_one", std::to_string(r.l_one)},
                      {"advantage", format_bool(r.advantage)},
                      {"iterations", std::to_string(r.iterations)},
                  }));
    }
    return 0;
}

int run_sweep(const RunConfig& cfg) {
    if (!cfg.z)
        throw ConfigError("sweep requires z (--z or config key \"z\")");
    if (cfg.distances_km.empty())
        throw ConfigError(
            "sweep requires distances (--distances or config key \"distances_km\")");
    require_unit_detector(cfg);
    if (cfg.distances_km.front() < 0.0)
        throw ConfigError("distances must be nonnegative");
    const std::vector<SweepRow> rows =
        sweep(cfg.distances_km, *cfg.z, cfg.detector_eff, cfg.link);
    if (cfg.format == "json")
        emit(cfg, sweep_to_json(rows));
    else if (cfg.format == "csv")
        emit(cfg, sweep_to_csv(rows));
    else
        emit(cfg, sweep_to_table(rows));
    return 0;
}

int run_scf(const RunConfig& cfg) {
    const ScfResult r = scf_solve();
    if (cfg.format == "json") {
        emit(cfg, scf_to_json(r));
    } else if (cfg.format == "csv") {
        emit(cfg, csv_line({"x", "y", "z", "p", "epsilon", "bias"},
                           {format_sig12(r.x), format_sig12(r.y),
                            format_sig12(r.z), format_sig12(r.p),
                            format_sig12(r.epsilon), format_sig12(r.bias)}));
    } else {
        emit(cfg, kv_table({
                      {"x", format_sig12(r.x)},
                      {"y", format_sig12(r.y)},
                      {"z", format_sig12(r.z)},
                      {"p (honest win)", format_sig12(r.p)},
                      {"epsilon (cheat excess)", format_sig12(r.epsilon)},
                      {"bias", format_sig12(r.bias)},
                  }));
    }
    return 0;
}

int run_verify(const RunConfig& cfg) {
    const std::vector<CheckResult> results = run_all_checks();
    int failed = 0;
    if (cfg.format == "json") {
        Json arr = Json::array();
        for (const CheckResult& r : results) {
            arr.push_back({{"name", r.name},
                           {"pass", r.pass},
                           {"detail", r.detail}});
            if (!r.pass) ++failed;
        }
        emit(cfg, arr.dump(2) + "\n");
    } else {
        std::string out;
        for (const CheckResult& r : results) {
            out += r.pass ? "PASS  " : "FAIL  ";
            out += r.name;
            out += " — ";
            out += r.detail;
            out += '\n';
            if (!r.pass) ++failed;
        }
        std::ostringstream tail;
        tail << (results.size() - failed) << "/" << results.size()
             << " checks passed\n";
        out += tail.str();
        emit(cfg, out);
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-photon weak coin flipping over a lossy link: honest "
                 "outcomes, cheating bounds, operating points, and checks"};
    app.require_subcommand(1);

    CommonFlags honest_f, cheat_f, solve_f, sweep_f, scf_f, verify_f;
    double x = 0, y = 0, z = 0, detector_eff = 0, distance = 0;
    std::vector<double> distances;

    CLI::App* honest = app.add_subcommand(
        "honest", "Honest outcome distribution (closed form, optionally simulated)");
    attach_common(honest, honest_f);
    CLI::Option* honest_x = honest->add_option("--x", x, "sender split");
    CLI::Option* honest_y = honest->add_option("--y", y, "receiver split");
    CLI::Option* honest_z = honest->add_option("--z", z, "verification split");

    CLI::App* cheat = app.add_subcommand(
        "cheat", "Optimal cheating probabilities for both parties");
    attach_common(cheat, cheat_f);
    CLI::Option* cheat_x = cheat->add_option("--x", x, "sender split");
    CLI::Option* cheat_y = cheat->add_option("--y", y, "receiver split");
    CLI::Option* cheat_z = cheat->add_option("--z", z, "verification split");

    CLI::App* solve = app.add_subcommand(
        "solve", "Fair and balanced operating point at one distance");
    attach_common(solve, solve_f);
    CLI::Option* solve_z = solve->add_option("--z", z, "verification split");
    CLI::Option* solve_eff =
        solve->add_option("--detector-eff", detector_eff, "detector efficiency");
    CLI::Option* solve_d =
        solve->add_option("--distance", distance, "link distance in km");

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Operating points across a list of distances");
    attach_common(sweep_cmd, sweep_f);
    CLI::Option* sweep_z = sweep_cmd->add_option("--z", z, "verification split");
    CLI::Option* sweep_eff = sweep_cmd->add_option("--detector-eff", detector_eff,
                                                   "detector efficiency");
    CLI::Option* sweep_list = sweep_cmd->add_option(
        "--distances", distances, "distances in km, strictly ascending");

    CLI::App* scf = app.add_subcommand(
        "scf", "Strong-flip construction derived from the balanced weak flip");
    attach_common(scf, scf_f);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run every library invariant check");
    attach_common(verify, verify_f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(honest)) {
            RunConfig cfg = load_config(honest_f);
            if (honest_x->count()) cfg.x = x;
            if (honest_y->count()) cfg.y = y;
            if (honest_z->count()) cfg.z = z;
            return run_honest(cfg);
        }
        if (app.got_subcommand(cheat)) {
            RunConfig cfg = load_config(cheat_f);
            if (cheat_x->count()) cfg.x = x;
            if (cheat_y->count()) cfg.y = y;
            if (cheat_z->count()) cfg.z = z;
            return run_cheat(cfg);
        }
        if (app.got_subcommand(solve)) {
            RunConfig cfg = load_config(solve_f);
            if (solve_z->count()) cfg.z = z;
            if (solve_eff->count()) cfg.detector_eff = detector_eff;
            if (solve_d->count()) cfg.link.distance_km = distance;
            return run_solve(cfg);
        }
        if (app.got_subcommand(sweep_cmd)) {
            RunConfig cfg = load_config(sweep_f);
            if (sweep_z->count()) cfg.z = z;
            if (sweep_eff->count()) cfg.detector_eff = detector_eff;
            if (sweep_list->count()) {
                for (std::size_t i = 1; i < distances.size(); ++i)
                    if (!(distances[i] > distances[i - 1]))
                        throw ConfigError("--distances must be strictly ascending");
                cfg.distances_km = distances;
            }
            return run_sweep(cfg);
        }
        if (app.got_subcommand(scf)) return run_scf(load_config(scf_f));
        if (app.got_subcommand(verify)) return run_verify(load_config(verify_f));
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2; // no subcommand (require_subcommand should prevent this)
}
