#include "tfop/tst.hpp"

#include "tfop/detail.hpp"
#include "tfop/spread.hpp"
#include "tfop/tfr.hpp"

namespace tfop {

namespace {

void check_spec(const TSTSpec& spec) {
    if (spec.n <= 0) throw std::invalid_argument("tst: length must be positive");
    if (spec.phi.rows() != spec.n || spec.phi.cols() != spec.n)
        throw std::invalid_argument("tst: prototype spreading must be N x N");
    if (spec.alpha.empty()) throw std::invalid_argument("tst: empty coefficient list");
}

// relative distance of the prototype from multiplier form, plus its mask
std::pair<CMat, double> prototype_mask(const TSTSpec& spec, const CVec& g, const CVec& h,
                                       const TFLattice& lat, bool strict, double tol) {
    CMat mask = best_gm_mask_from_spreading(spec.phi, g, h, lat);
    const CMat back = gm_spreading(mask, g, h, lat);
    const double scale = spec.phi.norm();
    const double residual = scale > 0.0 ? (spec.phi - back).norm() / scale : 0.0;
    if (strict && residual > tol)
        throw StructureError("tst: prototype is not multiplier form to the required residual",
                             residual, tol);
    return {std::move(mask), residual};
}

}  // namespace

CMat tst_spreading(const TSTSpec& spec) {
    check_spec(spec);
    const int n = spec.n;
    const detail::PhaseTable w(n);
    CMat eta = CMat::Zero(n, n);
    for (const auto& [k, l, c] : spec.alpha) {
        const long long kb = static_cast<long long>(k) * spec.b1;
        const long long ln = static_cast<long long>(l) * spec.nu1;
        const int db = imod(kb, n);
        const int dn = imod(ln, n);
        for (int b = 0; b < n; ++b)
            for (int nu = 0; nu < n; ++nu)
                eta(b, nu) += c * spec.phi(imod(b - db, n), imod(nu - dn, n)) * w(-kb * (nu - ln));
    }
    return eta;
}

CMat tst_operator(const TSTSpec& spec) {
    check_spec(spec);
    const int n = spec.n;
    const CMat h_phi = kernel_from_spreading(spec.phi);
    CMat out = CMat::Zero(n, n);
    for (const auto& [k, l, c] : spec.alpha)
        out += c * (tf_shift_matrix(n, imod(static_cast<long long>(k) * spec.b1, n),
                                    imod(static_cast<long long>(l) * spec.nu1, n)) *
                    h_phi);
    return out;
}

TstGm tst_to_single_gm(const TSTSpec& spec, const CVec& g, const CVec& h, const TFLattice& lat,
                       bool strict, double tol) {
    check_spec(spec);
    if (spec.n != lat.n) throw std::invalid_argument("tst_to_single_gm: length mismatch");
    if (imod(spec.b1, lat.adjoint_time_step()) != 0 || imod(spec.nu1, lat.adjoint_freq_step()) != 0)
        throw std::invalid_argument("tst_to_single_gm: shift grid must lie on the adjoint lattice");
    auto [mask, residual] = prototype_mask(spec, g, h, lat, strict, tol);
    CVec gamma = CVec::Zero(lat.n);
    for (const auto& [k, l, c] : spec.alpha)
        gamma += c * tf_shift(h, imod(static_cast<long long>(k) * spec.b1, lat.n),
                              imod(static_cast<long long>(l) * spec.nu1, lat.n));
    TstGm out;
    out.gamma = std::move(gamma);
    out.mask = std::move(mask);
    out.residual = residual;
    return out;
}

TstGmSum tst_to_gm_sum(const TSTSpec& spec, const CVec& g, const CVec& h, const TFLattice& lat,
                       int p, int q, bool strict, double tol) {
    check_spec(spec);
    if (spec.n != lat.n) throw std::invalid_argument("tst_to_gm_sum: length mismatch");
    if (p <= 0 || q <= 0) throw std::invalid_argument("tst_to_gm_sum: p, q must be positive");
    if (static_cast<long long>(p) * lat.b * spec.b1 != lat.n ||
        static_cast<long long>(q) * lat.a * spec.nu1 != lat.n)
        throw std::invalid_argument(
            "tst_to_gm_sum: need b1 = N/(p b) and nu1 = N/(q a) exactly");

    auto [mask, residual] = prototype_mask(spec, g, h, lat, strict, tol);
    const detail::PhaseTable w(lat.n);
    const int m_count = lat.time_shifts();
    const int k_count = lat.freq_shifts();

    TstGmSum out;
    out.residual = residual;
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < p; ++j) {
            TstCosetGm term;
            term.time_residue = i;
            term.time_modulus = q;
            term.freq_residue = j;
            term.freq_modulus = p;
            term.gamma = CVec::Zero(lat.n);
            for (const auto& [k, l, c] : spec.alpha) {
                const long long phase = static_cast<long long>(l) * spec.nu1 * i * lat.a -
                                        static_cast<long long>(j) * lat.b * k * spec.b1;
                term.gamma += c * w(phase) *
                              tf_shift(h, imod(static_cast<long long>(k) * spec.b1, lat.n),
                                       imod(static_cast<long long>(l) * spec.nu1, lat.n));
            }
            term.mask = CMat::Zero(m_count, k_count);
            for (int m = i; m < m_count; m += q)
                for (int n = j; n < k_count; n += p) term.mask(m, n) = mask(m, n);
            out.terms.push_back(std::move(term));
        }
    }
    return out;
}

}  // namespace tfop
