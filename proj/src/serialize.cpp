#include "tfop/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace tfop {

namespace {

void split_parts(const Eigen::Ref<const CMat>& m, Json& re, Json& im) {
    re = Json::array();
    im = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            re.push_back(m(r, c).real());
            im.push_back(m(r, c).imag());
        }
}

void read_parts(const Json& j, Eigen::Index count, std::vector<Complex>& out, const char* who) {
    if (!j.contains("re") || !j.contains("im"))
        throw std::runtime_error(std::string(who) + ": missing re/im arrays");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (static_cast<Eigen::Index>(re.size()) != count || static_cast<Eigen::Index>(im.size()) != count)
        throw std::runtime_error(std::string(who) + ": re/im length mismatch");
    out.resize(count);
    for (Eigen::Index i = 0; i < count; ++i)
        out[i] = Complex(re[i].get<double>(), im[i].get<double>());
}

}  // namespace

Json vector_to_json(const CVec& v) {
    Json j;
    j["n"] = v.size();
    split_parts(v, j["re"], j["im"]);
    return j;
}

CVec vector_from_json(const Json& j) {
    const auto n = j.at("n").get<Eigen::Index>();
    std::vector<Complex> vals;
    read_parts(j, n, vals, "vector_from_json");
    CVec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = vals[i];
    return v;
}

Json matrix_to_json(const CMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_to_json: expected square matrix");
    Json j;
    j["n"] = m.rows();
    split_parts(m, j["re"], j["im"]);
    return j;
}

CMat matrix_from_json(const Json& j) {
    const auto n = j.at("n").get<Eigen::Index>();
    std::vector<Complex> vals;
    read_parts(j, n * n, vals, "matrix_from_json");
    CMat m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = vals[r * n + c];
    return m;
}

Json mask_to_json(const CMat& mask, const TFLattice& lat) {
    if (mask.rows() != lat.time_shifts() || mask.cols() != lat.freq_shifts())
        throw std::invalid_argument("mask_to_json: mask must be M x K for the lattice");
    Json j;
    j["n"] = lat.n;
    j["a"] = lat.a;
    j["b"] = lat.b;
    split_parts(mask, j["re"], j["im"]);
    return j;
}

std::pair<CMat, TFLattice> mask_from_json(const Json& j) {
    const TFLattice lat(j.at("n").get<int>(), j.at("a").get<int>(), j.at("b").get<int>());
    const Eigen::Index rows = lat.time_shifts();
    const Eigen::Index cols = lat.freq_shifts();
    std::vector<Complex> vals;
    read_parts(j, rows * cols, vals, "mask_from_json");
    CMat m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = vals[r * cols + c];
    return {std::move(m), lat};
}

TSTSpec tst_spec_from_json(const Json& j, const std::string& base_dir) {
    TSTSpec spec;
    spec.n = j.at("n").get<int>();
    spec.b1 = j.at("b1").get<int>();
    spec.nu1 = j.at("nu1").get<int>();
    const auto& alpha = j.at("alpha");
    const auto& offsets = alpha.at("offsets");
    const auto& values = alpha.at("values");
    const auto& re = values.at("re");
    const auto& im = values.at("im");
    if (offsets.size() != re.size() || offsets.size() != im.size())
        throw std::runtime_error("tst spec: alpha offsets/values length mismatch");
    for (size_t i = 0; i < offsets.size(); ++i)
        spec.alpha.emplace_back(offsets[i].at(0).get<int>(), offsets[i].at(1).get<int>(),
                                Complex(re[i].get<double>(), im[i].get<double>()));
    const auto& phi = j.at("phi");
    if (phi.is_object() && phi.contains("file")) {
        std::string path = phi.at("file").get<std::string>();
        if (!path.empty() && path.front() != '/' && !base_dir.empty())
            path = base_dir + "/" + path;
        spec.phi = matrix_from_json(load_json(path));
    } else {
        spec.phi = matrix_from_json(phi);
    }
    if (spec.phi.rows() != spec.n)
        throw std::runtime_error("tst spec: phi size disagrees with n");
    return spec;
}

void canonicalize(Json& j) {
    if (!j.is_object()) return;
    for (auto& [key, value] : j.items()) {
        if (value.is_object()) {
            canonicalize(value);
            continue;
        }
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            for (auto& item : value) canonicalize(item);
            continue;
        }
    }
    if (!j.contains("re") || !j.contains("im")) return;
    auto& re = j.at("re");
    auto& im = j.at("im");
    double peak = 0.0;
    for (const auto& x : re) peak = std::max(peak, std::abs(x.get<double>()));
    for (const auto& x : im) peak = std::max(peak, std::abs(x.get<double>()));
    if (peak == 0.0) return;
    // Snap every value to a decimal grid 12 orders below the peak's decade.
    // A uniform absolute grid keeps values that differ by arithmetic noise
    // (<< half a grid step) on the same grid point regardless of their own
    // magnitude, so re-serialization after a lossless transform round trip
    // reproduces the bytes exactly; sub-grid values flush to exact zero.
    const double q = std::pow(10.0, std::floor(std::log10(peak)) - 12.0);
    auto snap = [q](Json& arr) {
        for (auto& x : arr) {
            const double v = std::round(x.get<double>() / q) * q;
            x = (v == 0.0) ? 0.0 : v;
        }
    };
    snap(re);
    snap(im);
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    Json j;
    in >> j;
    return j;
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(1) << "\n";
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace tfop
