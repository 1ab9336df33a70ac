// Command-line front end: frame checks, transform round trips, norms, and the
// numerical audit suite. Exit codes: 0 all asserted checks pass, 1 a check
// failed (report still written), 2 invalid input or configuration.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shearlet/experiments.hpp"
#include "shearlet/fft.hpp"
#include "shearlet/frame.hpp"
#include "shearlet/lattice.hpp"
#include "shearlet/report.hpp"
#include "shearlet/spaces.hpp"
#include "shearlet/transform.hpp"

namespace {

using namespace shearlet;

constexpr double kUnsetReal = std::numeric_limits<double>::quiet_NaN();

struct RunConfig {
    int grid = 128;
    bool grid_set = false;
    int jmax = -1;      // -1: floor(log4 grid)
    int absorbed = -1;  // -1: automatic
    std::uint64_t seed = 42;
    std::string system;  // smooth | cone; empty picks the command default
    std::string family = "ab";
    double alpha = 0.3, p = 2.0, q = 2.0;
    double alpha1 = kUnsetReal, alpha2 = kUnsetReal;
    double p1 = kUnsetReal, p2 = kUnsetReal, q1 = kUnsetReal, q2 = kUnsetReal;
    std::string direction;
    int jlo = 1, jhi = 4;
    int nseeds = 20;
    double tol = 1e-8;
    std::string input, out, format = "json", config;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void apply_config_file(RunConfig& rc) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(rc.config));
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw config_error("config file must hold a JSON object");
    try {
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            const std::string& k = it.key();
            const nlohmann::json& v = it.value();
            if (k == "grid") {
                rc.grid = v.get<int>();
                rc.grid_set = true;
            } else if (k == "jmax") {
                rc.jmax = v.get<int>();
            } else if (k == "absorbed") {
                rc.absorbed = v.get<int>();
            } else if (k == "seed") {
                rc.seed = v.get<std::uint64_t>();
            } else if (k == "system") {
                rc.system = v.get<std::string>();
            } else if (k == "family") {
                rc.family = v.get<std::string>();
            } else if (k == "alpha") {
                rc.alpha = v.get<double>();
            } else if (k == "p") {
                rc.p = v.get<double>();
            } else if (k == "q") {
                rc.q = v.get<double>();
            } else if (k == "alpha1") {
                rc.alpha1 = v.get<double>();
            } else if (k == "alpha2") {
                rc.alpha2 = v.get<double>();
            } else if (k == "p1") {
                rc.p1 = v.get<double>();
            } else if (k == "p2") {
                rc.p2 = v.get<double>();
            } else if (k == "q1") {
                rc.q1 = v.get<double>();
            } else if (k == "q2") {
                rc.q2 = v.get<double>();
            } else if (k == "direction") {
                rc.direction = v.get<std::string>();
            } else if (k == "jlo") {
                rc.jlo = v.get<int>();
            } else if (k == "jhi") {
                rc.jhi = v.get<int>();
            } else if (k == "nseeds") {
                rc.nseeds = v.get<int>();
            } else if (k == "tol") {
                rc.tol = v.get<double>();
            } else if (k == "input") {
                rc.input = v.get<std::string>();
            } else if (k == "out") {
                rc.out = v.get<std::string>();
            } else if (k == "format") {
                rc.format = v.get<std::string>();
            } else {
                throw config_error("unknown config key: " + k);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("config value has wrong type: ") + e.what());
    }
    if (rc.system != "" && rc.system != "smooth" && rc.system != "cone") {
        throw config_error("system must be smooth or cone");
    }
    if (rc.family != "ab" && rc.family != "dyadic") {
        throw config_error("family must be ab or dyadic");
    }
    if (rc.format != "json" && rc.format != "csv") {
        throw config_error("format must be json or csv");
    }
}

System system_of(const RunConfig& rc, const char* fallback) {
    const std::string& s = rc.system.empty() ? std::string(fallback) : rc.system;
    return s == "cone" ? System::ConeProjected : System::SmoothParseval;
}

Family family_of(const RunConfig& rc) {
    return rc.family == "dyadic" ? Family::Dyadic : Family::ABShear;
}

int resolved_jmax(const RunConfig& rc, int N) {
    return rc.jmax >= 0 ? rc.jmax : default_j_max(N);
}

int emit(const AuditReport& rep, const RunConfig& rc) {
    std::string text = rc.format == "csv" ? to_csv(rep) : to_json(rep);
    if (!rc.out.empty()) {
        write_text_file(rc.out, text);
    } else {
        std::fwrite(text.data(), 1, text.size(), stdout);
    }
    return rep.pass ? 0 : 1;
}

const char* system_name(System s) {
    return s == System::ConeProjected ? "cone" : "smooth";
}

// ---- frame ----

int cmd_frame_check(const RunConfig& rc) {
    System sys = system_of(rc, "smooth");
    FrequencyGrid grid = FrequencyGrid::make(rc.grid, resolved_jmax(rc, rc.grid));
    PartitionReport pr = partition_of_unity(sys, grid);

    AuditReport r;
    r.name = "frame_check";
    r.statement = sys == System::SmoothParseval
                      ? "the squared analysis windows sum to one at every grid frequency"
                      : "the squared cone-projected windows sum to one away from the seam rays";
    r.seed = 0;
    r.tolerance = rc.tol;
    r.param("system", system_name(sys));
    r.param_int("grid", grid.N);
    r.param_int("j_max", grid.j_max);
    r.param_int("absorbed", pr.absorbed ? 1 : 0);
    if (sys == System::SmoothParseval) {
        r.table.push_back({"max_deviation", 0, 0, pr.max_dev, rc.tol, pr.max_dev / rc.tol});
        r.result("max_deviation", pr.max_dev);
        r.pass = pr.max_dev <= rc.tol;
    } else {
        r.table.push_back({"max_deviation_nonseam", 0, 0, pr.max_dev_nonseam, rc.tol,
                           pr.max_dev_nonseam / rc.tol});
        r.table.push_back({"max_deviation_seam", 0, 0, pr.max_dev_seam, 0.0, 0.0});
        r.table.push_back({"max_deviation_total", 0, 0, pr.max_dev, 0.0, 0.0});
        r.result("max_deviation_nonseam", pr.max_dev_nonseam);
        r.result("max_deviation_seam", pr.max_dev_seam);
        r.pass = pr.max_dev_nonseam <= rc.tol;
    }
    return emit(r, rc);
}

int cmd_frame_overlap(const RunConfig& rc) {
    int jm = rc.jmax >= 0 ? rc.jmax : 5;
    OverlapReport orep = overlap_count(jm);

    AuditReport r;
    r.name = "frame_overlap";
    r.statement =
        "each directional band window overlaps at most 11 other bands within one scale "
        "of its own";
    r.seed = 0;
    r.tolerance = 11.0;
    r.param_int("j_max", jm);
    for (const auto& b : orep.bands) {
        std::ostringstream id;
        id << "j" << b.j << "_l" << b.l;
        double cnt = double(b.interacting.size());
        r.table.push_back({id.str(), b.j, b.l, cnt, 11.0, cnt / 11.0});
    }
    r.result("max_count", orep.max_count);
    r.pass = orep.max_count <= 11;
    return emit(r, rc);
}

// ---- transform ----

int cmd_transform_analyze(const RunConfig& rc) {
    if (rc.input.empty()) throw config_error("transform analyze requires --input");
    PeriodicSignal f = load_signal(rc.input);
    System sys = system_of(rc, "smooth");
    CoefficientMap cm = analyze(f, sys, resolved_jmax(rc, f.N), rc.absorbed);
    std::string text = coefficients_to_json(cm);
    if (!rc.out.empty()) {
        write_text_file(rc.out, text);
    } else {
        std::fwrite(text.data(), 1, text.size(), stdout);
    }
    return 0;
}

int cmd_transform_synthesize(const RunConfig& rc) {
    if (rc.input.empty()) throw config_error("transform synthesize requires --input");
    if (rc.out.empty()) throw config_error("transform synthesize requires --out");
    auto entries = coefficient_entries_from_json(read_file(rc.input));
    System sys = system_of(rc, "smooth");
    CoefficientMap cm =
        coefficients_from_entries(sys, rc.grid, resolved_jmax(rc, rc.grid), entries, rc.absorbed);
    save_signal(synthesize(cm), rc.out);
    return 0;
}

int cmd_transform_roundtrip(const RunConfig& rc) {
    System sys = system_of(rc, "smooth");
    int N = rc.grid;
    PeriodicSignal f;
    if (rc.input.empty()) {
        std::mt19937_64 rng(rc.seed);
        f = PeriodicSignal::from_spectrum(random_spectrum(N, rng));
    } else {
        f = load_signal(rc.input);
        N = f.N;
    }
    int jm = resolved_jmax(rc, N);
    bool absorbed = rc.absorbed < 0 ? default_absorbed(N, jm) : rc.absorbed != 0;

    CoefficientMap cm = analyze(f, sys, jm, rc.absorbed);
    PeriodicSignal g = synthesize(cm);

    // exactness target: output spectrum must equal input times the window-sum
    // multiplier, whether or not the family is complete on this grid
    RealGrid mult(N, N, 0.0);
    for (const BandId& b : system_bands(sys, jm)) {
        int top = (absorbed && b.j == jm) ? jm : -1;
        RealGrid m = sample_window(b, N, top);
        for (size_t t = 0; t < mult.size(); ++t) mult.v[t] += m.v[t] * m.v[t];
    }
    double num = 0.0, den = 0.0, e_in = 0.0, dev_in = 0.0;
    for (int i = 0; i < N; ++i) {
        for (int k = 0; k < N; ++k) {
            cd want = f.spec(i, k) * mult(i, k);
            num += std::norm(g.spec(i, k) - want);
            den += std::norm(want);
            dev_in += std::norm(g.spec(i, k) - f.spec(i, k));
            e_in += std::norm(f.spec(i, k));
        }
    }
    double rel_mult = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
    double rel_input = e_in > 0.0 ? std::sqrt(dev_in / e_in) : std::sqrt(dev_in);
    double parseval =
        e_in > 0.0 ? std::fabs(cm.weighted_energy() - signal_energy(f)) / e_in : 0.0;

    AuditReport r;
    r.name = "roundtrip";
    r.statement =
        "analysis followed by synthesis equals the window-sum multiplier exactly, and the "
        "identity when the window family is complete";
    r.seed = rc.seed;
    r.tolerance = rc.tol;
    r.param("system", system_name(sys));
    r.param_int("grid", N);
    r.param_int("j_max", jm);
    r.param_int("absorbed", absorbed ? 1 : 0);
    r.table.push_back({"vs_multiplier", 0, 0, rel_mult, rc.tol, rel_mult / rc.tol});
    bool complete = sys == System::SmoothParseval && absorbed;
    if (complete) {
        r.table.push_back({"vs_input", 0, 0, rel_input, rc.tol, rel_input / rc.tol});
        r.table.push_back({"weighted_parseval", 0, 0, parseval, rc.tol, parseval / rc.tol});
    } else {
        r.table.push_back({"vs_input", 0, 0, rel_input, 0.0, 0.0});
        r.table.push_back({"weighted_parseval", 0, 0, parseval, 0.0, 0.0});
    }
    r.result("vs_multiplier", rel_mult);
    r.result("vs_input", rel_input);
    r.result("weighted_parseval", parseval);
    r.pass = rel_mult <= rc.tol && (!complete || (rel_input <= rc.tol && parseval <= rc.tol));
    return emit(r, rc);
}

// ---- norm ----

int cmd_norm(const RunConfig& rc) {
    if (rc.input.empty()) throw config_error("norm requires --input");
    PeriodicSignal f = load_signal(rc.input);
    System sys = system_of(rc, "cone");
    SpaceParams sp{rc.alpha, rc.p, rc.q, family_of(rc)};
    double value = function_norm(f, sp, sys);

    AuditReport r;
    r.name = "norm";
    r.statement = "mixed-norm size of a band-limited signal in the requested scale family";
    r.seed = 0;
    r.tolerance = 0.0;
    r.param("family", rc.family);
    r.param_real("alpha", sp.alpha);
    r.param_real("p", sp.p);
    r.param_real("q", sp.q);
    r.param("system", system_name(sys));
    r.param_int("grid", f.N);
    r.param_int("j_max", default_j_max(f.N));
    r.table.push_back({"value", 0, 0, value, 0.0, 0.0});
    r.result("value", value);
    r.pass = true;
    return emit(r, rc);
}

// ---- experiments ----

int cmd_experiment(const std::string& which, const RunConfig& rc) {
    AuditReport rep;
    if (which == "lemma71") {
        rep = audit_lemma71(rc.jmax >= 0 ? rc.jmax : 6);
    } else if (which == "orth") {
        std::vector<int> js;
        for (int j = 1; j <= 4 && pow4(j + 1) <= int64_t(rc.grid); ++j) js.push_back(j);
        rep = audit_almost_orthogonality(rc.grid, js, {3, 5});
    } else if (which == "decay") {
        std::vector<int> js;
        for (int j = 1; j <= 3 && pow4(j) <= int64_t(rc.grid); ++j) js.push_back(j);
        rep = audit_shearlet_wavelet_decay(rc.grid, js);
    } else if (which == "bounds") {
        rep = audit_operator_bounds(rc.grid, {SpaceParams{rc.alpha, rc.p, rc.q, family_of(rc)}},
                                    rc.seed);
    } else if (which == "embed") {
        std::string dir = rc.direction.empty() ? "dyadic_to_ab" : rc.direction;
        bool d2a = dir == "dyadic_to_ab";
        double a1 = std::isnan(rc.alpha1) ? (d2a ? 3.0 : 0.5) : rc.alpha1;
        double a2 = std::isnan(rc.alpha2) ? (d2a ? 0.1 : 0.5) : rc.alpha2;
        rep = audit_embeddings(rc.grid, a1, a2, rc.p, rc.q, dir, rc.seed);
    } else if (which == "fading") {
        std::string dir = rc.direction.empty() ? "ab_to_dyadic" : rc.direction;
        bool a2d = dir == "ab_to_dyadic";
        double a1 = std::isnan(rc.alpha1) ? (a2d ? 0.1 : 1.3) : rc.alpha1;
        double a2 = std::isnan(rc.alpha2) ? (a2d ? 0.8 : 0.05) : rc.alpha2;
        double p1 = std::isnan(rc.p1) ? 2.0 : rc.p1;
        double p2 = std::isnan(rc.p2) ? 2.0 : rc.p2;
        double q1 = std::isnan(rc.q1) ? 2.0 : rc.q1;
        double q2 = std::isnan(rc.q2) ? 2.0 : rc.q2;
        rep = audit_fading(dir, a1, a2, p1, p2, q1, q2, rc.jlo, rc.jhi,
                           rc.grid_set ? rc.grid : 0);
    } else if (which == "peetre") {
        rep = audit_peetre(rc.grid, rc.seed);
    } else if (which == "sstar") {
        rep = audit_sstar(rc.grid, rc.nseeds, rc.seed);
    } else if (which == "fs") {
        rep = audit_fs(rc.grid, rc.seed);
    } else {
        throw config_error("unknown experiment: " + which);
    }
    return emit(rep, rc);
}

}  // namespace

namespace shearlet_cli {

int run(int argc, char** argv) {
    RunConfig rc;
    CLI::App app{"cone-adapted shearlet frames: transforms, norms, and numerical audits"};
    app.fallthrough();
    app.require_subcommand(1);

    auto* grid_opt = app.add_option("--grid", rc.grid, "grid side length, power of two (default 128)");
    app.add_option("--jmax", rc.jmax, "largest scale (default floor(log4 grid))");
    app.add_option("--absorbed", rc.absorbed, "absorb the top scale: 0|1 (default automatic)");
    app.add_option("--seed", rc.seed, "random seed (default 42)");
    app.add_option("--system", rc.system, "window system: smooth|cone")
        ->check(CLI::IsMember({"smooth", "cone"}));
    app.add_option("--family", rc.family, "scale family for norms: ab|dyadic")
        ->check(CLI::IsMember({"ab", "dyadic"}));
    app.add_option("--alpha", rc.alpha, "smoothness exponent (default 0.3)");
    app.add_option("--p", rc.p, "outer integrability (default 2)");
    app.add_option("--q", rc.q, "inner integrability (default 2)");
    app.add_option("--alpha1", rc.alpha1, "isotropic-side smoothness (embed/fading)");
    app.add_option("--alpha2", rc.alpha2, "directional-side smoothness (embed/fading)");
    app.add_option("--p1", rc.p1, "isotropic-side p (fading)");
    app.add_option("--p2", rc.p2, "directional-side p (fading)");
    app.add_option("--q1", rc.q1, "isotropic-side q (fading)");
    app.add_option("--q2", rc.q2, "directional-side q (fading)");
    app.add_option("--direction", rc.direction, "embedding direction: dyadic_to_ab|ab_to_dyadic")
        ->check(CLI::IsMember({"dyadic_to_ab", "ab_to_dyadic"}));
    app.add_option("--jlo", rc.jlo, "first scale of the atom family (default 1)");
    app.add_option("--jhi", rc.jhi, "last scale of the atom family (default 4)");
    app.add_option("--nseeds", rc.nseeds, "number of random sequences (default 20)");
    app.add_option("--tol", rc.tol, "tolerance for asserted checks (default 1e-8)");
    app.add_option("--input", rc.input, "input file (grid or coefficient JSON)");
    app.add_option("--out", rc.out, "output file (default: report to stdout)");
    app.add_option("--format", rc.format, "report format: json|csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--config", rc.config, "JSON config file; keys override flags");

    auto* frame = app.add_subcommand("frame", "window family checks");
    frame->fallthrough();
    frame->require_subcommand(1);
    auto* frame_check = frame->add_subcommand("check", "partition-of-unity deviation");
    auto* frame_overlap = frame->add_subcommand("overlap", "support overlap counts");

    auto* transform = app.add_subcommand("transform", "coefficient transforms");
    transform->fallthrough();
    transform->require_subcommand(1);
    auto* tr_analyze = transform->add_subcommand("analyze", "signal -> coefficient JSON");
    auto* tr_synth = transform->add_subcommand("synthesize", "coefficient JSON -> signal");
    auto* tr_round = transform->add_subcommand("roundtrip", "analyze then synthesize, report error");

    auto* norm = app.add_subcommand("norm", "function-space norm of a signal");

    auto* experiment = app.add_subcommand("experiment", "numerical audits");
    experiment->fallthrough();
    experiment->require_subcommand(1);
    const char* audit_names[] = {"lemma71", "orth",   "decay", "bounds", "embed",
                                 "fading",  "peetre", "sstar", "fs"};
    const char* audit_help[] = {
        "singular-value floor of the shear-scale matrices",
        "cross-band convolution envelopes",
        "band kernel against isotropic low-pass decay",
        "analysis/synthesis norm comparability",
        "scale-family embedding constants",
        "normalized atom fading rates",
        "maximal function domination chain",
        "smoothed majorant equivalence",
        "stacked maximal inequality",
    };
    std::vector<CLI::App*> audits;
    for (int i = 0; i < 9; ++i) {
        audits.push_back(experiment->add_subcommand(audit_names[i], audit_help[i]));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        rc.grid_set = grid_opt->count() > 0;
        if (!rc.config.empty()) apply_config_file(rc);

        if (frame_check->parsed()) return cmd_frame_check(rc);
        if (frame_overlap->parsed()) return cmd_frame_overlap(rc);
        if (tr_analyze->parsed()) return cmd_transform_analyze(rc);
        if (tr_synth->parsed()) return cmd_transform_synthesize(rc);
        if (tr_round->parsed()) return cmd_transform_roundtrip(rc);
        if (norm->parsed()) return cmd_norm(rc);
        for (int i = 0; i < 9; ++i) {
            if (audits[size_t(i)]->parsed()) return cmd_experiment(audit_names[i], rc);
        }
        throw config_error("no command selected");
    } catch (const config_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

}  // namespace shearlet_cli

int main(int argc, char** argv) { return shearlet_cli::run(argc, argv); }
