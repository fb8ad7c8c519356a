// Command-line front end: rank-one component queries, the rank-two
// classifier and its fixed-determinant variant, atlas diagrams and the
// verification battery.
//
// Exit codes: 0 success, 1 usage error, 2 hypothesis violation,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gonalbn/render.hpp"
#include "gonalbn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitVerification = 3;

int write_out(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return kExitUsage;
    }
    out << payload;
    return kExitOk;
}

bool format_ok(const std::string& fmt, bool atlas_cmd) {
    if (atlas_cmd) return fmt == "ascii" || fmt == "svg" || fmt == "json" || fmt == "text";
    return fmt == "text" || fmt == "json" || fmt == "csv";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brill-Noether component calculator for general gonal curves"};
    app.require_subcommand(1);

    std::int64_t g = 0, d = 0, i = 3, rho_r = 1, g_max = 12;
    int nu = 3, r = 1, nu_max = 4, pad = 3;
    std::string format = "text";
    std::string out_path;
    bool serial = false;

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        if (with_format) cmd->add_option("--format", format, "text|json|csv");
        cmd->add_option("--out", out_path, "write output to a file");
    };

    auto* wrd = app.add_subcommand("wrd", "rank-one component list");
    wrd->add_option("--g", g, "genus")->required();
    wrd->add_option("--nu", nu, "gonality")->required();
    wrd->add_option("--d", d, "degree")->required();
    wrd->add_option("--r", r, "section count minus one")->required();
    add_common(wrd);

    auto* b3 = app.add_subcommand("b3", "rank-two speciality-3 classifier");
    b3->add_option("--g", g, "genus")->required();
    b3->add_option("--nu", nu, "gonality")->required();
    b3->add_option("--d", d, "degree")->required();
    add_common(b3);

    auto* fixdet = app.add_subcommand("fixdet", "fixed-determinant classifier");
    fixdet->add_option("--g", g, "genus")->required();
    fixdet->add_option("--nu", nu, "gonality")->required();
    fixdet->add_option("--d", d, "degree")->required();
    add_common(fixdet);

    auto* atlas_cmd = app.add_subcommand("atlas", "degree-axis component atlas");
    atlas_cmd->add_option("--g", g, "genus")->required();
    atlas_cmd->add_option("--nu", nu, "gonality")->required();
    format = "text";
    atlas_cmd->add_option("--format", format, "ascii|svg|json|text");
    atlas_cmd->add_option("--out", out_path, "write output to a file");

    auto* verify = app.add_subcommand("verify", "oracle grid and invariant suites");
    verify->add_option("--gmax", g_max, "largest genus in the grid")->required();
    verify->add_option("--numax", nu_max, "largest gonality in the grid");
    verify->add_option("--pad", pad, "oracle window pad");
    verify->add_flag("--serial", serial, "disable the parallel path");
    verify->add_option("--out", out_path, "write the JSON report to a file");

    auto* rho = app.add_subcommand("rho", "expected-dimension calculator");
    rho->add_option("--g", g, "genus")->required();
    rho->add_option("--d", d, "degree")->required();
    rho->add_option("--i", i, "speciality (default 3)");
    rho->add_option("--r", rho_r, "classical section count minus one (default 1)");
    add_common(rho);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    using namespace gonalbn;
    try {
        if (wrd->parsed()) {
            if (!format_ok(format, false)) {
                std::cerr << "unsupported format for wrd: " << format << "\n";
                return kExitUsage;
            }
            Rank1Query q{g, nu, d, r, components_w(g, nu, d, r)};
            std::string payload = format == "json" ? to_json(q).dump(2) + "\n"
                                  : format == "csv" ? render_csv(q)
                                                    : render_text(q);
            return write_out(payload, out_path);
        }
        if (b3->parsed() || fixdet->parsed()) {
            if (!format_ok(format, false)) {
                std::cerr << "unsupported format: " << format << "\n";
                return kExitUsage;
            }
            if (!gonality_hypothesis_ok(g, nu)) {
                std::cerr << "hypothesis violation: requires g >= 4 and 3 <= nu with "
                             "2*nu < g+3\n";
                return kExitHypothesis;
            }
            std::string payload;
            if (b3->parsed()) {
                const ClassifierReport rep = classify_b3(g, nu, d);
                payload = format == "json" ? to_json(rep).dump(2) + "\n"
                          : format == "csv" ? render_csv(rep)
                                            : render_text(rep);
            } else {
                const FixedDetReport rep = classify_fixed_determinant(g, nu, d);
                payload = format == "json" ? to_json(rep).dump(2) + "\n"
                          : format == "csv" ? render_csv(rep)
                                            : render_text(rep);
            }
            return write_out(payload, out_path);
        }
        if (atlas_cmd->parsed()) {
            if (!format_ok(format, true)) {
                std::cerr << "unsupported format for atlas: " << format << "\n";
                return kExitUsage;
            }
            if (!gonality_hypothesis_ok(g, nu)) {
                std::cerr << "hypothesis violation: requires g >= 4 and 3 <= nu with "
                             "2*nu < g+3\n";
                return kExitHypothesis;
            }
            const Atlas a = atlas(g, nu);
            std::string payload = format == "json"  ? to_json(a).dump(2) + "\n"
                                  : format == "svg" ? render_svg_atlas(a)
                                  : format == "ascii" ? render_ascii_atlas(a)
                                                      : render_text(a);
            return write_out(payload, out_path);
        }
        if (verify->parsed()) {
            if (g_max < 4) {
                std::cerr << "usage error: --gmax must be >= 4\n";
                return kExitUsage;
            }
            if (nu_max < 3) {
                std::cerr << "usage error: --numax must be >= 3\n";
                return kExitUsage;
            }
            const VerificationReport rep =
                run_verification(g_max, nu_max, pad, !serial);
            const std::string payload = to_json(rep).dump(2) + "\n";
            if (!out_path.empty()) {
                const int rc = write_out(payload, out_path);
                if (rc != kExitOk) return rc;
                std::cout << render_text(rep);
            } else {
                std::cout << payload;
                std::cerr << render_text(rep);
            }
            return rep.pass() ? kExitOk : kExitVerification;
        }
        if (rho->parsed()) {
            if (!format_ok(format, false)) {
                std::cerr << "unsupported format for rho: " << format << "\n";
                return kExitUsage;
            }
            const std::int64_t k = section_threshold(g, d, i);
            const std::int64_t rk2 = rank2_expected_dim(g, d, i);
            const std::int64_t classical = classical_rho(g, rho_r, d);
            const std::int64_t fixed = rank2_fixed_det_expected_dim(g, d);
            std::string payload;
            if (format == "json") {
                nlohmann::json j{{"g", g},   {"d", d},         {"i", i},
                                 {"k_i", k}, {"rho_rank2", rk2}, {"r", rho_r},
                                 {"rho_classical", classical}, {"rho_fixed_det_k3", fixed}};
                payload = j.dump(2) + "\n";
            } else if (format == "csv") {
                std::ostringstream os;
                os << "g,d,i,k_i,rho_rank2,r,rho_classical,rho_fixed_det_k3\n"
                   << g << ',' << d << ',' << i << ',' << k << ',' << rk2 << ','
                   << rho_r << ',' << classical << ',' << fixed << "\n";
                payload = os.str();
            } else {
                std::ostringstream os;
                os << "k_" << i << " = " << k << "\n"
                   << "rho_rank2(i=" << i << ") = " << rk2 << "\n"
                   << "rho_classical(r=" << rho_r << ") = " << classical << "\n"
                   << "rho_fixed_det(k3) = " << fixed << "\n";
                payload = os.str();
            }
            return write_out(payload, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        const std::string what = e.what();
        return what.rfind("hypothesis violation", 0) == 0 ? kExitHypothesis : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
