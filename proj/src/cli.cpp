#include "qgb/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "qgb/gbcheck.hpp"
#include "qgb/json_io.hpp"
#include "qgb/render.hpp"
#include "qgb/segre.hpp"
#include "qgb/veronese.hpp"

namespace qgb {

namespace {

Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw Error("cannot parse rational value: " + s);
    }
}

ParamAssignment parse_assignment(const std::vector<std::string>& items, ParamSet& params) {
    ParamAssignment assign;
    for (const std::string& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("--assign expects name=value: " + item);
        const std::string name = item.substr(0, eq);
        bool known = false;
        for (std::size_t k = 0; k < params.size(); ++k)
            if (params.name(static_cast<ParamId>(k)) == name) {
                assign.set(static_cast<ParamId>(k), parse_rational(item.substr(eq + 1)));
                known = true;
                break;
            }
        if (!known) throw Error("unknown parameter in --assign: " + name);
    }
    return assign;
}

bool color_enabled() {
    const char* v = std::getenv("QGROBNER_COLOR");
    return v != nullptr && std::string(v) == "1";
}

std::string json_bytes(const Json& j) {
    return j.dump(2) + "\n";
}

int deliver(const std::string& bytes, const std::string& output_path, std::ostream& out,
            std::ostream& err) {
    if (output_path.empty()) {
        out << bytes;
        return 0;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) {
        err << "cannot open output file: " << output_path << "\n";
        return 2;
    }
    f << bytes;
    return 0;
}

struct EmitOptions {
    std::string format = "text";
    std::vector<std::string> assign;
    std::string output;
};

void add_emit_options(CLI::App* cmd, EmitOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--assign", opts.assign,
                    "Evaluate coefficients at name=rational (repeatable)");
    cmd->add_option("--output", opts.output, "Write output bytes to a file");
}

std::string present_text(const VeronesePresentation& vp, const ParamSet& params,
                         const RenderOptions& ropts) {
    std::string out;
    out += "# R1\n" + render_presentation(vp.r1, params, ropts);
    out += "# R2\n" + render_presentation(vp.r2, params, ropts);
    out += "# R1'\n" + render_presentation(vp.r1_prime, params, ropts);
    return out;
}

Json presentation_json_any(const Presentation& p, const ParamSet& params,
                           const ParamAssignment* assign) {
    return assign ? presentation_to_json_assigned(p, params, *assign)
                  : presentation_to_json(p, params);
}

Json matrix_json_any(const DeformationMatrix& m, const ParamSet& params,
                     const ParamAssignment* assign) {
    return assign ? matrix_to_json_assigned(m, params, *assign) : matrix_to_json(m, params);
}

/// veronese-present / veronese-kernel / veronese-matrix payloads.
std::string veronese_bytes(const std::string& kind, int n, int d, const EmitOptions& opts) {
    ParamSet params;
    QuantumSpace space(n, DeformationMatrix::generic(n, params));
    Veronese ver(space, d);

    std::optional<ParamAssignment> assign;
    if (!opts.assign.empty()) assign = parse_assignment(opts.assign, params);
    RenderOptions ropts{color_enabled(), assign ? &*assign : nullptr};

    if (opts.format == "text") {
        if (kind == "present") return present_text(ver.presentation(), params, ropts);
        if (kind == "kernel") return render_presentation(ver.kernel_gb(), params, ropts);
        return render_matrix(ver.derived_matrix(), params, ropts);
    }
    Json j;
    j["n"] = n;
    j["d"] = d;
    j["N"] = ver.big_n();
    const ParamAssignment* ap = assign ? &*assign : nullptr;
    if (kind == "present") {
        const VeronesePresentation vp = ver.presentation();
        j["r1"] = presentation_json_any(vp.r1, params, ap);
        j["r2"] = presentation_json_any(vp.r2, params, ap);
        j["r1_prime"] = presentation_json_any(vp.r1_prime, params, ap);
    } else if (kind == "kernel") {
        j.update(presentation_json_any(ver.kernel_gb(), params, ap));
    } else {
        j["matrix"] = matrix_json_any(ver.derived_matrix(), params, ap);
    }
    return json_bytes(j);
}

std::string segre_bytes(const std::string& kind, int n, int m, const EmitOptions& opts) {
    ParamSet params;
    QuantumSpace x(n, DeformationMatrix::generic(n, params));
    QuantumSpace y(m, DeformationMatrix::generic(m, params, "qp"));
    Segre segre(x, y);

    std::optional<ParamAssignment> assign;
    if (!opts.assign.empty()) assign = parse_assignment(opts.assign, params);
    RenderOptions ropts{color_enabled(), assign ? &*assign : nullptr};

    if (opts.format == "text") {
        if (kind == "kernel") return render_presentation(segre.kernel_gb(), params, ropts);
        return render_matrix(segre.matrix(), params, ropts);
    }
    Json j;
    j["n"] = n;
    j["m"] = m;
    j["N"] = segre.big_n();
    const ParamAssignment* ap = assign ? &*assign : nullptr;
    if (kind == "kernel")
        j.update(presentation_json_any(segre.kernel_gb(), params, ap));
    else
        j["matrix"] = matrix_json_any(segre.matrix(), params, ap);
    return json_bytes(j);
}

std::string koszul_bytes(int n, const EmitOptions& opts) {
    ParamSet params;
    QuantumSpace space(n, DeformationMatrix::generic(n, params));
    const Presentation dual = space.koszul_dual();

    std::optional<ParamAssignment> assign;
    if (!opts.assign.empty()) assign = parse_assignment(opts.assign, params);
    RenderOptions ropts{color_enabled(), assign ? &*assign : nullptr};

    if (opts.format == "text") return render_presentation(dual, params, ropts);
    Json j;
    j["n"] = n;
    j.update(presentation_json_any(dual, params, assign ? &*assign : nullptr));
    return json_bytes(j);
}

std::uint64_t to_u64(const BigInt& b) {
    return b.convert_to<std::uint64_t>();
}

std::vector<CertificationReport> certify_veronese(int n, int d) {
    ParamSet params;
    QuantumSpace space(n, DeformationMatrix::generic(n, params));
    Veronese ver(space, d);
    const std::uint64_t expected = to_u64(binomial(n + 3 * d, n));
    const std::string suffix = "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";

    QuantumSpace derived(ver.big_n(), ver.derived_matrix());
    std::vector<CertificationReport> reports;
    reports.push_back(certify_quadratic_gb(
        RewriteSystem::quantum_system(derived, ver.kernel_gb()), expected,
        "veronese-kernel" + suffix));

    const LiftedKernel lifted = ver.lifted_kernel_gb();
    Presentation all = lifted.re1;
    all.relations.insert(all.relations.end(), lifted.re2.relations.begin(),
                         lifted.re2.relations.end());
    reports.push_back(certify_quadratic_gb(
        RewriteSystem::free_system(ver.big_n() + 1, all), expected, "lifted-kernel" + suffix));
    return reports;
}

CertificationReport certify_segre(int n, int m) {
    ParamSet params;
    QuantumSpace x(n, DeformationMatrix::generic(n, params));
    QuantumSpace y(m, DeformationMatrix::generic(m, params, "qp"));
    Segre segre(x, y);
    const std::uint64_t expected = to_u64(binomial(n + 3, 3) * binomial(m + 3, 3));
    QuantumSpace derived(segre.big_n(), segre.matrix());
    return certify_quadratic_gb(RewriteSystem::quantum_system(derived, segre.kernel_gb()),
                                expected,
                                "segre-kernel(n=" + std::to_string(n) + ",m=" +
                                    std::to_string(m) + ")");
}

std::string report_line(const CertificationReport& r) {
    std::string out = r.pass ? "PASS " : "FAIL ";
    out += r.system_id + " [" + setting_name(r.setting) + "]";
    if (r.setting == Setting::FreeAlgebra)
        out += " overlaps=" + std::to_string(r.n_overlaps) +
               " solvable=" + std::to_string(r.n_solvable);
    out += " normal3=" + std::to_string(r.normal3_count) +
           " expected=" + std::to_string(r.expected_dim3);
    return out + "\n";
}

struct Fixture {
    std::string name;
    bool segre;  // veronese otherwise
    int n;
    int dm;  // d for veronese, m for segre
};

const std::vector<Fixture>& fixture_list() {
    static const std::vector<Fixture> fixtures = {
        {"twisted_cubic", false, 1, 3},
        {"rational_normal_curve_d4", false, 1, 4},
        {"veronese_surface", false, 2, 2},
        {"segre_quadric", true, 1, 1},
        {"segre_threefold", true, 2, 1},
    };
    return fixtures;
}

Json fixture_json(const Fixture& fx) {
    ParamSet params;
    Json j;
    j["example"] = fx.name;
    j["n"] = fx.n;
    if (fx.segre) {
        QuantumSpace x(fx.n, DeformationMatrix::generic(fx.n, params));
        QuantumSpace y(fx.dm, DeformationMatrix::generic(fx.dm, params, "qp"));
        Segre segre(x, y);
        j["m"] = fx.dm;
        j["N"] = segre.big_n();
        j["matrix"] = matrix_to_json(segre.matrix(), params);
        j["kernel"] = presentation_to_json(segre.kernel_gb(), params);
    } else {
        QuantumSpace space(fx.n, DeformationMatrix::generic(fx.n, params));
        Veronese ver(space, fx.dm);
        j["d"] = fx.dm;
        j["N"] = ver.big_n();
        j["matrix"] = matrix_to_json(ver.derived_matrix(), params);
        j["kernel"] = presentation_to_json(ver.kernel_gb(), params);
    }
    return j;
}

int run_examples(const std::string& dir, bool write, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    bool ok = true;
    for (const Fixture& fx : fixture_list()) {
        const fs::path path = fs::path(dir) / (fx.name + ".json");
        const std::string bytes = json_bytes(fixture_json(fx));
        if (write) {
            std::ofstream f(path, std::ios::binary);
            if (!f) {
                err << "cannot write " << path.string() << "\n";
                return 2;
            }
            f << bytes;
            out << "wrote " << path.string() << "\n";
            continue;
        }
        std::ifstream f(path, std::ios::binary);
        if (!f) {
            out << "MISSING " << path.string() << "\n";
            ok = false;
            continue;
        }
        std::stringstream buf;
        buf << f.rdbuf();
        if (buf.str() == bytes) {
            out << "ok " << fx.name << "\n";
        } else {
            out << "MISMATCH " << fx.name << "\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum spaces, Veronese and Segre kernels, and their certification"};
    app.name("qgrobner");
    app.require_subcommand(1);

    int n = 0, d = 1, m = 0;
    EmitOptions opts;
    std::string eval_target;
    std::string fixtures_dir = "fixtures";
    bool fixtures_write = false;

    auto* vp = app.add_subcommand("veronese-present",
                                  "Quadratic presentation (R1, R2, R1') of the d-Veronese");
    vp->add_option("--n", n, "Number of generators minus one")->required();
    vp->add_option("--d", d, "Veronese degree")->required();
    add_emit_options(vp, opts);

    auto* vk = app.add_subcommand("veronese-kernel",
                                  "Reduced Groebner basis of ker(v_{n,d})");
    vk->add_option("--n", n)->required();
    vk->add_option("--d", d)->required();
    add_emit_options(vk, opts);

    auto* vm = app.add_subcommand("veronese-matrix",
                                  "Derived (N+1)x(N+1) deformation matrix g");
    vm->add_option("--n", n)->required();
    vm->add_option("--d", d)->required();
    add_emit_options(vm, opts);

    auto* sm = app.add_subcommand("segre-matrix", "Kronecker deformation matrix q (x) q'");
    sm->add_option("--n", n)->required();
    sm->add_option("--m", m, "Second factor size minus one")->required();
    add_emit_options(sm, opts);

    auto* sk = app.add_subcommand("segre-kernel",
                                  "Reduced Groebner basis of ker(s_{n,m})");
    sk->add_option("--n", n)->required();
    sk->add_option("--m", m)->required();
    add_emit_options(sk, opts);

    auto* kd = app.add_subcommand("koszul-dual", "Koszul dual presentation of A^n_q");
    kd->add_option("--n", n)->required();
    add_emit_options(kd, opts);

    auto* ct = app.add_subcommand(
        "certify", "Diamond-Lemma / dimension certification of the closed-form bases");
    ct->add_option("--n", n)->required();
    auto* ct_d = ct->add_option("--d", d, "Certify the Veronese and lifted kernels");
    auto* ct_m = ct->add_option("--m", m, "Certify the Segre kernel");
    ct->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));
    ct->add_option("--output", opts.output);

    auto* ev = app.add_subcommand("eval",
                                  "Construct a target and evaluate all coefficients exactly");
    ev->add_option("--target", eval_target, "What to construct")
        ->required()
        ->check(CLI::IsMember({"veronese-kernel", "veronese-matrix", "segre-kernel",
                               "segre-matrix", "koszul-dual"}));
    ev->add_option("--n", n)->required();
    ev->add_option("--d", d);
    ev->add_option("--m", m);
    ev->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));
    ev->add_option("--assign", opts.assign)->required();
    ev->add_option("--output", opts.output);

    auto* ex = app.add_subcommand("examples",
                                  "Regenerate the example corpus and diff against it");
    ex->add_option("--dir", fixtures_dir, "Fixture directory")->capture_default_str();
    ex->add_flag("--write", fixtures_write, "Rewrite the fixture files instead of diffing");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (vp->parsed() || vk->parsed() || vm->parsed()) {
            if (n < 0 || d < 1) throw Error("veronese commands need n >= 0 and d >= 1");
            const std::string kind = vp->parsed() ? "present" : vk->parsed() ? "kernel" : "matrix";
            return deliver(veronese_bytes(kind, n, d, opts), opts.output, out, err);
        }
        if (sm->parsed() || sk->parsed()) {
            if (n < 0 || m < 0) throw Error("segre commands need n >= 0 and m >= 0");
            const std::string kind = sk->parsed() ? "kernel" : "matrix";
            return deliver(segre_bytes(kind, n, m, opts), opts.output, out, err);
        }
        if (kd->parsed()) {
            if (n < 0) throw Error("koszul-dual needs n >= 0");
            return deliver(koszul_bytes(n, opts), opts.output, out, err);
        }
        if (ct->parsed()) {
            const bool has_d = ct_d->count() > 0, has_m = ct_m->count() > 0;
            if (has_d == has_m) throw Error("certify needs exactly one of --d or --m");
            std::vector<CertificationReport> reports;
            if (has_d) {
                if (n < 0 || d < 1) throw Error("certify needs n >= 0 and d >= 1");
                reports = certify_veronese(n, d);
            } else {
                if (n < 0 || m < 0) throw Error("certify needs n >= 0 and m >= 0");
                reports.push_back(certify_segre(n, m));
            }
            std::string bytes;
            if (opts.format == "json") {
                Json arr = Json::array();
                for (const auto& r : reports) arr.push_back(report_to_json(r));
                bytes = json_bytes(arr);
            } else {
                for (const auto& r : reports) bytes += report_line(r);
            }
            const int rc = deliver(bytes, opts.output, out, err);
            if (rc != 0) return rc;
            for (const auto& r : reports)
                if (!r.pass) return 1;
            return 0;
        }
        if (ev->parsed()) {
            const bool is_segre =
                eval_target == "segre-kernel" || eval_target == "segre-matrix";
            if (is_segre) {
                if (ev->count("--m") == 0) throw Error("eval --target segre-* needs --m");
                const std::string kind = eval_target == "segre-kernel" ? "kernel" : "matrix";
                return deliver(segre_bytes(kind, n, m, opts), opts.output, out, err);
            }
            if (eval_target == "koszul-dual")
                return deliver(koszul_bytes(n, opts), opts.output, out, err);
            if (ev->count("--d") == 0) throw Error("eval --target veronese-* needs --d");
            const std::string kind = eval_target == "veronese-kernel" ? "kernel" : "matrix";
            return deliver(veronese_bytes(kind, n, d, opts), opts.output, out, err);
        }
        if (ex->parsed()) return run_examples(fixtures_dir, fixtures_write, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qgb
