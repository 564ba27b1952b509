/*
 * tfop — command-line front end for the time-frequency operator toolkit.
 *
 * Subcommands
 *   spreading    kernel JSON -> spreading JSON (+ support/norm stats)
 *   kernel       spreading JSON -> kernel JSON
 *   random-op    seeded random operator -> kernel JSON
 *   approx-gm    best Gabor-multiplier approximation sweep
 *   approx-mgm   best multi-window multiplier approximation sweep
 *   tst-build    TST spec JSON -> operator kernel JSON
 *   tst-reduce   TST spec JSON -> single / coset-sum multiplier form
 *   frame-check  Gabor frame bounds for a window and lattice
 *   riesz-check  folded Riesz diagnostics (U function or Gamma spectrum)
 *
 * Every command is deterministic for a fixed invocation: runtimes are
 * reported as 0 unless --timing is given, and the TFOP_THREADS cap never
 * changes results (work runs serially). --canonical rounds JSON payloads
 * to 12 significant digits so regenerated files compare byte-for-byte.
 */
#include <CLI11.hpp>

#include "tfop/gm.hpp"
#include "tfop/mgm.hpp"
#include "tfop/random_ops.hpp"
#include "tfop/serialize.hpp"
#include "tfop/spread.hpp"
#include "tfop/tfr.hpp"
#include "tfop/tst.hpp"
#include "tfop/window.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using tfop::CMat;
using tfop::Complex;
using tfop::CVec;
using tfop::Json;
using tfop::TFLattice;

struct Common {
    std::string out = "-";
    std::string format = "json";
    std::uint64_t seed = 0;
    bool pinv = false;
    bool strict_tst = false;
    bool canonical = false;
    bool timing = false;
};

int thread_cap() {
    const char* env = std::getenv("TFOP_THREADS");
    if (env == nullptr) return 1;
    const long v = std::strtol(env, nullptr, 10);
    return v >= 1 && v <= 1024 ? static_cast<int>(v) : 1;
}

double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

void write_text(const Common& c, const std::string& payload) {
    if (c.out == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot open for writing: " + c.out);
    f << payload;
}

void emit_json(const Common& c, Json j) {
    if (c.canonical) tfop::canonicalize(j);
    write_text(c, j.dump(1) + "\n");
}

std::string matrix_csv(const CMat& m) {
    std::string s = "row,col,re,im\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index cc = 0; cc < m.cols(); ++cc)
            s += std::to_string(r) + "," + std::to_string(cc) + "," +
                 tfop::format_double(m(r, cc).real()) + "," +
                 tfop::format_double(m(r, cc).imag()) + "\n";
    return s;
}

void emit_matrix(const Common& c, const CMat& m, Json j) {
    if (c.format == "csv") {
        write_text(c, matrix_csv(m));
    } else {
        emit_json(c, std::move(j));
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

std::vector<std::pair<int, int>> parse_lattices(const std::string& s) {
    std::vector<std::pair<int, int>> out;
    for (const std::string& part : split(s, ',')) {
        const auto xy = split(part, 'x');
        if (xy.size() != 2) throw std::runtime_error("bad lattice spec (want AxB): " + part);
        out.emplace_back(std::stoi(xy[0]), std::stoi(xy[1]));
    }
    if (out.empty()) throw std::runtime_error("no lattices given");
    return out;
}

std::vector<double> parse_widths(const std::string& s) {
    std::vector<double> out;
    for (const std::string& part : split(s, ',')) out.push_back(std::stod(part));
    if (out.empty()) throw std::runtime_error("no widths given");
    return out;
}

std::vector<std::pair<int, int>> parse_shifts(const std::string& s) {
    std::vector<std::pair<int, int>> out;
    for (const std::string& part : split(s, ';')) {
        const auto uv = split(part, ',');
        if (uv.size() != 2) throw std::runtime_error("bad shift (want u,v): " + part);
        out.emplace_back(std::stoi(uv[0]), std::stoi(uv[1]));
    }
    if (out.empty()) throw std::runtime_error("no shifts given");
    return out;
}

std::string dir_of(const std::string& path) {
    const auto slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

/** Analysis/synthesis windows: gauss of the given width unless a file overrides. */
CVec make_window(int n, double width, const std::string& file) {
    if (!file.empty()) {
        const CVec w = tfop::vector_from_json(tfop::load_json(file));
        if (w.size() != n) throw std::runtime_error("window length mismatch: " + file);
        return w;
    }
    return tfop::gauss_window(n, width);
}

// ---------------------------------------------------------------- commands

int cmd_spreading(const Common& c, const std::string& in) {
    const CMat kernel = tfop::matrix_from_json(tfop::load_json(in));
    CMat eta = tfop::spreading_from_kernel(kernel);
    const int n = static_cast<int>(eta.rows());

    Json j = tfop::matrix_to_json(eta);
    if (c.canonical) {
        // stats must describe the payload actually written, so snap first
        tfop::canonicalize(j);
        eta = tfop::matrix_from_json(j);
    }

    int support_lag = 0, support_mod = 0;
    const double peak = eta.cwiseAbs().maxCoeff();
    for (int b = 0; b < n; ++b)
        for (int nu = 0; nu < n; ++nu)
            if (std::abs(eta(b, nu)) > 1e-14 * peak) {
                support_lag = std::max(support_lag, std::abs(tfop::imod(b + n / 2, n) - n / 2));
                support_mod = std::max(support_mod, std::abs(tfop::imod(nu + n / 2, n) - n / 2));
            }

    j["stats"] = {{"l2_norm", round12(eta.norm())},
                  {"hs_norm", round12(std::sqrt(double(n)) * eta.norm())},
                  {"support_lag", support_lag},
                  {"support_mod", support_mod}};
    emit_matrix(c, eta, std::move(j));
    return 0;
}

int cmd_kernel(const Common& c, const std::string& in) {
    const CMat eta = tfop::matrix_from_json(tfop::load_json(in));
    const CMat kernel = tfop::kernel_from_spreading(eta);
    emit_matrix(c, kernel, tfop::matrix_to_json(kernel));
    return 0;
}

int cmd_random_op(const Common& c, const std::string& kind, int n, int lag_extent, int mod_extent,
                  double noise_scale) {
    tfop::Rng rng(c.seed);
    CMat eta;
    if (kind == "rect") {
        eta = tfop::random_rect_spreading(rng, n, lag_extent, mod_extent);
    } else if (kind == "perturbed-lti") {
        eta = tfop::random_perturbed_lti_spreading(rng, n, lag_extent, mod_extent, noise_scale);
    } else {
        throw std::runtime_error("unknown operator kind: " + kind);
    }
    const CMat kernel = tfop::kernel_from_spreading(eta);
    Json j = tfop::matrix_to_json(kernel);
    j["meta"] = {{"command", "random-op"},      {"kind", kind},
                 {"n", n},                      {"lag_extent", lag_extent},
                 {"mod_extent", mod_extent},    {"noise_scale", noise_scale},
                 {"seed", c.seed},              {"rng", tfop::Rng::algorithm()}};
    emit_matrix(c, kernel, std::move(j));
    return 0;
}

struct SweepRow {
    std::string scheme;
    std::string lattice;
    double width;
    long long rank;
    double err_rel;
    double err_hs;
    double bound;
    double runtime_ms;
};

std::string rows_csv(const std::vector<SweepRow>& rows) {
    std::string s = "scheme,lattice,width,rank,err_rel,err_hs,bound,runtime_ms\n";
    for (const SweepRow& r : rows)
        s += r.scheme + "," + r.lattice + "," + tfop::format_double(r.width) + "," +
             std::to_string(r.rank) + "," + tfop::format_double(r.err_rel) + "," +
             tfop::format_double(r.err_hs) + "," + tfop::format_double(r.bound) + "," +
             tfop::format_double(r.runtime_ms) + "\n";
    return s;
}

Json rows_json(const std::string& command, const std::string& op_path,
               const std::vector<SweepRow>& rows) {
    Json out;
    out["meta"] = {{"command", command}, {"op", op_path}};
    out["rows"] = Json::array();
    for (const SweepRow& r : rows)
        out["rows"].push_back({{"scheme", r.scheme},
                               {"lattice", r.lattice},
                               {"width", r.width},
                               {"rank", r.rank},
                               {"err_rel", r.err_rel},
                               {"err_hs", r.err_hs},
                               {"bound", r.bound},
                               {"runtime_ms", r.runtime_ms}});
    return out;
}

int emit_sweep(const Common& c, const std::string& command, const std::string& op_path,
               const std::vector<SweepRow>& rows, const Json& failures) {
    if (c.format == "csv") {
        write_text(c, rows_csv(rows));
    } else {
        emit_json(c, rows_json(command, op_path, rows));
    }
    if (!failures.empty()) {
        Json err;
        err["riesz_failures"] = failures;
        std::cerr << err.dump(1) << "\n";
        return 2;
    }
    return 0;
}

double elapsed_ms(const Common& c, std::chrono::steady_clock::time_point t0) {
    if (!c.timing) return 0.0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Json riesz_failure_entry(const std::string& lattice, double width, const tfop::RieszError& e) {
    return {{"lattice", lattice}, {"width", width},         {"lag", e.lag},
            {"modulation", e.modulation}, {"value", e.value}, {"threshold", e.threshold}};
}

int cmd_approx_gm(const Common& c, const std::string& op_path, const std::string& lattices,
                  const std::string& widths, const std::string& window_file, double synth_width,
                  const std::string& synth_file) {
    const CMat op = tfop::matrix_from_json(tfop::load_json(op_path));
    const int n = static_cast<int>(op.rows());
    const auto policy = c.pinv ? tfop::SingularPolicy::zero_fill : tfop::SingularPolicy::fail;

    std::vector<SweepRow> rows;
    Json failures = Json::array();
    for (const auto& [a, b] : parse_lattices(lattices)) {
        const TFLattice lat(n, a, b);
        const std::string lat_name = std::to_string(a) + "x" + std::to_string(b);
        for (double width : parse_widths(widths)) {
            const CVec g = make_window(n, width, window_file);
            const CVec h = synth_file.empty() && synth_width <= 0.0
                               ? g
                               : make_window(n, synth_width > 0.0 ? synth_width : width,
                                             synth_file);
            const auto t0 = std::chrono::steady_clock::now();
            try {
                const tfop::GmErrorReport rep = tfop::gm_error_report(op, g, h, lat, policy);
                rows.push_back({"gm", lat_name, width, lat.rank(), rep.err_rel,
                                std::sqrt(rep.err_sq), rep.bound, elapsed_ms(c, t0)});
            } catch (const tfop::RieszError& e) {
                failures.push_back(riesz_failure_entry(lat_name, width, e));
            }
        }
    }
    return emit_sweep(c, "approx-gm", op_path, rows, failures);
}

int cmd_approx_mgm(const Common& c, const std::string& op_path, const std::string& lattices,
                   const std::string& widths, const std::string& shifts_spec,
                   const std::string& window_file, double synth_width,
                   const std::string& synth_file) {
    const CMat op = tfop::matrix_from_json(tfop::load_json(op_path));
    const int n = static_cast<int>(op.rows());
    const auto policy = c.pinv ? tfop::SingularPolicy::zero_fill : tfop::SingularPolicy::fail;
    const auto shifts = parse_shifts(shifts_spec);

    std::vector<SweepRow> rows;
    Json failures = Json::array();
    for (const auto& [a, b] : parse_lattices(lattices)) {
        const TFLattice lat(n, a, b);
        const std::string lat_name = std::to_string(a) + "x" + std::to_string(b);
        for (const auto& [su, sw] : shifts)
            if (tfop::imod(su, lat.adjoint_time_step()) != 0 ||
                tfop::imod(sw, lat.adjoint_freq_step()) != 0)
                throw std::runtime_error("shift (" + std::to_string(su) + "," +
                                         std::to_string(sw) +
                                         ") is not on the adjoint lattice of " + lat_name);
        for (double width : parse_widths(widths)) {
            const CVec g = make_window(n, width, window_file);
            const CVec base = synth_file.empty() && synth_width <= 0.0
                                  ? g
                                  : make_window(n, synth_width > 0.0 ? synth_width : width,
                                                synth_file);
            std::vector<CVec> hs;
            hs.reserve(shifts.size());
            for (const auto& [su, sw] : shifts) hs.push_back(tfop::tf_shift(base, su, sw));

            const auto t0 = std::chrono::steady_clock::now();
            try {
                const tfop::MgmErrorReport rep = tfop::mgm_error_report(op, g, hs, lat, policy);

                // a-priori bound via the achieved per-quotient-point efficiency
                const CMat eta = tfop::spreading_from_kernel(op);
                const CMat res = eta - tfop::mgm_spreading(rep.masks, g, hs, lat);
                const int db = lat.adjoint_time_step();
                const int dn = lat.adjoint_freq_step();
                double worst = 0.0;
                for (int bq = 0; bq < db; ++bq)
                    for (int nq = 0; nq < dn; ++nq) {
                        double gh = 0.0, rr = 0.0;
                        for (int k = 0; k < lat.b; ++k)
                            for (int l = 0; l < lat.a; ++l) {
                                gh += std::norm(eta(bq + k * db, nq + l * dn));
                                rr += std::norm(res(bq + k * db, nq + l * dn));
                            }
                        if (gh > 0.0) worst = std::max(worst, rr / gh);
                    }
                const double bound = double(n) * eta.squaredNorm() * worst;

                rows.push_back({"mgm", lat_name, width,
                                static_cast<long long>(shifts.size()) * lat.rank(), rep.err_rel,
                                std::sqrt(rep.err_sq), bound, elapsed_ms(c, t0)});
            } catch (const tfop::RieszError& e) {
                failures.push_back(riesz_failure_entry(lat_name, width, e));
            }
        }
    }
    return emit_sweep(c, "approx-mgm", op_path, rows, failures);
}

int cmd_tst_build(const Common& c, const std::string& spec_path) {
    const tfop::TSTSpec spec =
        tfop::tst_spec_from_json(tfop::load_json(spec_path), dir_of(spec_path));
    const CMat kernel = tfop::tst_operator(spec);
    emit_matrix(c, kernel, tfop::matrix_to_json(kernel));
    return 0;
}

Json coset_json(const tfop::TstCosetGm& term, const TFLattice& lat) {
    Json j;
    j["time_residue"] = term.time_residue;
    j["time_modulus"] = term.time_modulus;
    j["freq_residue"] = term.freq_residue;
    j["freq_modulus"] = term.freq_modulus;
    j["gamma"] = tfop::vector_to_json(term.gamma);
    j["mask"] = tfop::mask_to_json(term.mask, lat);
    return j;
}

int cmd_tst_reduce(const Common& c, const std::string& spec_path, int a, int b, double width,
                   const std::string& window_file, double synth_width,
                   const std::string& synth_file, int p, int q) {
    if (c.format == "csv") throw std::runtime_error("tst-reduce supports --format json only");
    const tfop::TSTSpec spec =
        tfop::tst_spec_from_json(tfop::load_json(spec_path), dir_of(spec_path));
    const TFLattice lat(spec.n, a, b);
    const CVec g = make_window(spec.n, width, window_file);
    const CVec h = synth_file.empty() && synth_width <= 0.0
                       ? g
                       : make_window(spec.n, synth_width > 0.0 ? synth_width : width, synth_file);

    std::vector<tfop::TstCosetGm> terms;
    double residual = 0.0;
    if (p == 0 && q == 0) {
        const tfop::TstGm single = tfop::tst_to_single_gm(spec, g, h, lat, c.strict_tst);
        tfop::TstCosetGm t;
        t.time_residue = 0;
        t.time_modulus = 1;
        t.freq_residue = 0;
        t.freq_modulus = 1;
        t.gamma = single.gamma;
        t.mask = single.mask;
        terms.push_back(std::move(t));
        residual = single.residual;
    } else {
        if (p <= 0 || q <= 0) throw std::runtime_error("give both --p and --q (positive)");
        tfop::TstGmSum sum = tfop::tst_to_gm_sum(spec, g, h, lat, p, q, c.strict_tst);
        terms = std::move(sum.terms);
        residual = sum.residual;
    }

    CMat rebuilt = CMat::Zero(spec.n, spec.n);
    for (const auto& term : terms) rebuilt += tfop::gm_matrix(term.mask, g, term.gamma, lat);
    const CMat direct = tfop::tst_operator(spec);
    const double dnorm = (direct + rebuilt).norm();
    const double reduction_err = dnorm > 0.0 ? (direct - rebuilt).norm() / dnorm : 0.0;

    Json j;
    j["meta"] = {{"command", "tst-reduce"}, {"spec", spec_path}};
    j["residual"] = round12(residual);
    j["reduction_err_rel"] = round12(reduction_err);
    j["terms"] = Json::array();
    for (const auto& term : terms) j["terms"].push_back(coset_json(term, lat));
    emit_json(c, std::move(j));
    return 0;
}

int cmd_frame_check(const Common& c, int n, int a, int b, double width,
                    const std::string& window_file) {
    const TFLattice lat(n, a, b);
    const CVec g = make_window(n, width, window_file);
    const tfop::FrameInfo info = tfop::frame_info(g, lat);
    if (c.format == "csv") {
        std::string s = "n,a,b,lower,upper,condition,is_frame\n";
        s += std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + "," +
             tfop::format_double(info.lower) + "," + tfop::format_double(info.upper) + "," +
             tfop::format_double(info.condition) + "," + (info.is_frame ? "1" : "0") + "\n";
        write_text(c, s);
    } else {
        Json j;
        j["n"] = n;
        j["a"] = a;
        j["b"] = b;
        j["lower"] = round12(info.lower);
        j["upper"] = round12(info.upper);
        if (std::isfinite(info.condition))
            j["condition"] = round12(info.condition);
        else
            j["condition"] = nullptr;
        j["is_frame"] = info.is_frame;
        emit_json(c, std::move(j));
    }
    return 0;
}

int cmd_riesz_check(const Common& c, int n, int a, int b, double width,
                    const std::string& window_file, double synth_width,
                    const std::string& synth_file, const std::string& shifts_spec) {
    const TFLattice lat(n, a, b);
    const CVec g = make_window(n, width, window_file);
    const CVec h = synth_file.empty() && synth_width <= 0.0
                       ? g
                       : make_window(n, synth_width > 0.0 ? synth_width : width, synth_file);
    Json j;
    j["n"] = n;
    j["a"] = a;
    j["b"] = b;
    if (shifts_spec.empty()) {
        const tfop::RMat u = tfop::u_function(g, h, lat);
        const double lo = u.minCoeff();
        const double hi = u.maxCoeff();
        j["kind"] = "u";
        j["u_min"] = round12(lo);
        j["u_max"] = round12(hi);
        j["threshold"] = round12(1e-10 * hi);
        j["riesz"] = lo > 1e-10 * hi;
    } else {
        std::vector<CVec> hs;
        for (const auto& [su, sw] : parse_shifts(shifts_spec))
            hs.push_back(tfop::tf_shift(h, su, sw));
        const tfop::GammaField field = tfop::gamma_field(g, hs, lat);
        const double lo = tfop::gamma_min_eigenvalues(field).minCoeff();
        const double hi = tfop::gamma_max_eigenvalues(field).maxCoeff();
        j["kind"] = "gamma";
        j["windows"] = hs.size();
        j["gamma_min"] = round12(lo);
        j["gamma_max"] = round12(hi);
        j["threshold"] = round12(1e-12 * hi);
        j["riesz"] = lo > 1e-12 * hi;
    }
    if (c.format == "csv") {
        std::string s = "n,a,b,min,max,threshold,riesz\n";
        const double lo = j.contains("u_min") ? j["u_min"].get<double>() : j["gamma_min"].get<double>();
        const double hi = j.contains("u_max") ? j["u_max"].get<double>() : j["gamma_max"].get<double>();
        s += std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + "," +
             tfop::format_double(lo) + "," + tfop::format_double(hi) + "," +
             tfop::format_double(j["threshold"].get<double>()) + "," +
             (j["riesz"].get<bool>() ? "1" : "0") + "\n";
        write_text(c, s);
    } else {
        emit_json(c, std::move(j));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-frequency operator toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    (void)thread_cap();  // TFOP_THREADS caps worker threads; execution is serial, so any
                         // value yields identical bytes

    Common c;
    app.add_option("--seed", c.seed, "random seed for seeded commands")->capture_default_str();
    app.add_option("--out", c.out, "output path ('-' = stdout)")->capture_default_str();
    app.add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--pinv", c.pinv,
                 "zero-fill / pseudo-inverse at degenerate quotient points instead of failing");
    app.add_flag("--strict-tst", c.strict_tst,
                 "refuse TST prototypes that are not multiplier form (residual > 1e-8)");
    app.add_flag("--canonical", c.canonical,
                 "canonical JSON formatting (values snapped to a decimal grid 12 orders below "
                 "the payload peak; sub-grid values flush to zero)");
    app.add_flag("--timing", c.timing, "report measured runtimes (off: runtime_ms is 0)");

    int rc = 0;

    // spreading
    std::string sp_in;
    auto* sp = app.add_subcommand("spreading", "kernel -> spreading function");
    sp->add_option("--in", sp_in, "kernel JSON file")->required();
    sp->callback([&] { rc = cmd_spreading(c, sp_in); });

    // kernel
    std::string ke_in;
    auto* ke = app.add_subcommand("kernel", "spreading function -> kernel");
    ke->add_option("--in", ke_in, "spreading JSON file")->required();
    ke->callback([&] { rc = cmd_kernel(c, ke_in); });

    // random-op
    std::string ro_kind = "rect";
    int ro_n = 32, ro_lag = 3, ro_mod = 3;
    double ro_noise = 0.1;
    auto* ro = app.add_subcommand("random-op", "seeded random operator -> kernel");
    ro->add_option("--kind", ro_kind, "rect | perturbed-lti")->capture_default_str();
    ro->add_option("--n", ro_n, "signal length")->capture_default_str();
    ro->add_option("--lag-extent", ro_lag, "centered lag support size")->capture_default_str();
    ro->add_option("--mod-extent", ro_mod, "centered modulation support size")
        ->capture_default_str();
    ro->add_option("--noise-scale", ro_noise, "perturbation scale (perturbed-lti)")
        ->capture_default_str();
    ro->callback([&] { rc = cmd_random_op(c, ro_kind, ro_n, ro_lag, ro_mod, ro_noise); });

    // approx-gm
    std::string ag_op, ag_lattices, ag_widths = "1", ag_wfile, ag_sfile;
    double ag_swidth = 0.0;
    auto* ag = app.add_subcommand("approx-gm", "best Gabor-multiplier approximation sweep");
    ag->add_option("--op", ag_op, "operator kernel JSON")->required();
    ag->add_option("--lattices", ag_lattices, "comma list of AxB lattice steps")->required();
    ag->add_option("--widths", ag_widths, "comma list of gauss window widths")
        ->capture_default_str();
    ag->add_option("--window-file", ag_wfile, "analysis window JSON (overrides gauss)");
    ag->add_option("--synth-width", ag_swidth, "synthesis gauss width (default: analysis)");
    ag->add_option("--synth-file", ag_sfile, "synthesis window JSON");
    ag->callback([&] { rc = cmd_approx_gm(c, ag_op, ag_lattices, ag_widths, ag_wfile, ag_swidth,
                                          ag_sfile); });

    // approx-mgm
    std::string am_op, am_lattices, am_widths = "1", am_shifts, am_wfile, am_sfile;
    double am_swidth = 0.0;
    auto* am = app.add_subcommand("approx-mgm", "multi-window multiplier approximation sweep");
    am->add_option("--op", am_op, "operator kernel JSON")->required();
    am->add_option("--lattices", am_lattices, "comma list of AxB lattice steps")->required();
    am->add_option("--widths", am_widths, "comma list of gauss window widths")
        ->capture_default_str();
    am->add_option("--shifts", am_shifts,
                   "semicolon list of u,v adjoint-lattice synthesis shifts")
        ->required();
    am->add_option("--window-file", am_wfile, "analysis window JSON (overrides gauss)");
    am->add_option("--synth-width", am_swidth, "base synthesis gauss width (default: analysis)");
    am->add_option("--synth-file", am_sfile, "base synthesis window JSON");
    am->callback([&] {
        rc = cmd_approx_mgm(c, am_op, am_lattices, am_widths, am_shifts, am_wfile, am_swidth,
                            am_sfile);
    });

    // tst-build
    std::string tb_spec;
    auto* tb = app.add_subcommand("tst-build", "TST spec -> operator kernel");
    tb->add_option("--spec", tb_spec, "TST spec JSON")->required();
    tb->callback([&] { rc = cmd_tst_build(c, tb_spec); });

    // tst-reduce
    std::string tr_spec, tr_wfile, tr_sfile;
    int tr_a = 0, tr_b = 0, tr_p = 0, tr_q = 0;
    double tr_width = 1.0, tr_swidth = 0.0;
    auto* tr = app.add_subcommand("tst-reduce", "TST spec -> multiplier form");
    tr->add_option("--spec", tr_spec, "TST spec JSON")->required();
    tr->add_option("--a", tr_a, "lattice time step")->required();
    tr->add_option("--b", tr_b, "lattice frequency step")->required();
    tr->add_option("--width", tr_width, "gauss window width")->capture_default_str();
    tr->add_option("--window-file", tr_wfile, "analysis window JSON");
    tr->add_option("--synth-width", tr_swidth, "synthesis gauss width (default: analysis)");
    tr->add_option("--synth-file", tr_sfile, "synthesis window JSON");
    tr->add_option("--p", tr_p, "time refinement: b1 = N/(p b)");
    tr->add_option("--q", tr_q, "frequency refinement: nu1 = N/(q a)");
    tr->callback([&] {
        rc = cmd_tst_reduce(c, tr_spec, tr_a, tr_b, tr_width, tr_wfile, tr_swidth, tr_sfile,
                            tr_p, tr_q);
    });

    // frame-check
    int fc_n = 32, fc_a = 0, fc_b = 0;
    double fc_width = 1.0;
    std::string fc_wfile;
    auto* fc = app.add_subcommand("frame-check", "Gabor frame bounds for window and lattice");
    fc->add_option("--n", fc_n, "signal length")->required();
    fc->add_option("--a", fc_a, "lattice time step")->required();
    fc->add_option("--b", fc_b, "lattice frequency step")->required();
    fc->add_option("--width", fc_width, "gauss window width")->capture_default_str();
    fc->add_option("--window-file", fc_wfile, "window JSON (overrides gauss)");
    fc->callback([&] { rc = cmd_frame_check(c, fc_n, fc_a, fc_b, fc_width, fc_wfile); });

    // riesz-check
    int rz_n = 32, rz_a = 0, rz_b = 0;
    double rz_width = 1.0, rz_swidth = 0.0;
    std::string rz_wfile, rz_sfile, rz_shifts;
    auto* rz = app.add_subcommand("riesz-check", "folded Riesz diagnostics");
    rz->add_option("--n", rz_n, "signal length")->required();
    rz->add_option("--a", rz_a, "lattice time step")->required();
    rz->add_option("--b", rz_b, "lattice frequency step")->required();
    rz->add_option("--width", rz_width, "analysis gauss width")->capture_default_str();
    rz->add_option("--window-file", rz_wfile, "analysis window JSON");
    rz->add_option("--synth-width", rz_swidth, "synthesis gauss width (default: analysis)");
    rz->add_option("--synth-file", rz_sfile, "synthesis window JSON");
    rz->add_option("--shifts", rz_shifts, "adjoint shifts: check the Gamma field instead of U");
    rz->callback([&] {
        rc = cmd_riesz_check(c, rz_n, rz_a, rz_b, rz_width, rz_wfile, rz_swidth, rz_sfile,
                             rz_shifts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const tfop::RieszError& e) {
        Json err{{"error", "riesz"},
                 {"lag", e.lag},
                 {"modulation", e.modulation},
                 {"value", e.value},
                 {"threshold", e.threshold},
                 {"message", e.what()}};
        std::cerr << err.dump(1) << "\n";
        return 2;
    } catch (const tfop::StructureError& e) {
        Json err{{"error", "structure"},
                 {"residual", e.residual},
                 {"tolerance", e.tolerance},
                 {"message", e.what()}};
        std::cerr << err.dump(1) << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err{{"error", "runtime"}, {"message", e.what()}};
        std::cerr << err.dump(1) << "\n";
        return 1;
    }
    return rc;
}
