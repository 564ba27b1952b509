#include "tfop/gm.hpp"

#include "tfop/detail.hpp"
#include "tfop/spread.hpp"
#include "tfop/tfr.hpp"

#include <cmath>

namespace tfop {

namespace {

struct FoldedFields {
    CMat b;   // folded conj(V_g h) . eta
    RMat u;   // folded |V_g h|^2
    RMat gm;  // folded |eta|^2
};

// One pass over Z_N^2 grouped by quotient class, compensated sums.
FoldedFields fold_fields(const CMat& eta, const CMat& v, const TFLattice& lat) {
    const int db = lat.adjoint_time_step();
    const int dn = lat.adjoint_freq_step();
    FoldedFields f;
    f.b = CMat(db, dn);
    f.u = RMat(db, dn);
    f.gm = RMat(db, dn);
    for (int bq = 0; bq < db; ++bq) {
        for (int nq = 0; nq < dn; ++nq) {
            detail::KahanSum accb;
            detail::KahanSumReal accu, accg;
            for (int k = 0; k < lat.b; ++k) {
                const int bb = bq + k * db;
                for (int l = 0; l < lat.a; ++l) {
                    const int nn = nq + l * dn;
                    const Complex vv = v(bb, nn);
                    accb.add(std::conj(vv) * eta(bb, nn));
                    accu.add(std::norm(vv));
                    accg.add(std::norm(eta(bb, nn)));
                }
            }
            f.b(bq, nq) = accb.value();
            f.u(bq, nq) = accu.value();
            f.gm(bq, nq) = accg.value();
        }
    }
    return f;
}

void check_window_sizes(const CVec& g, const CVec& h, const TFLattice& lat, const char* who) {
    if (g.size() != lat.n || h.size() != lat.n)
        throw std::invalid_argument(std::string(who) + ": window length mismatch with lattice");
}

}  // namespace

CMat mask_transform(const CMat& mask, const TFLattice& lat) {
    const int m_count = lat.time_shifts();
    const int k_count = lat.freq_shifts();
    if (mask.rows() != m_count || mask.cols() != k_count)
        throw std::invalid_argument("mask_transform: mask must be M x K");
    const detail::PhaseTable w(lat.n);
    const int db = lat.adjoint_time_step();
    const int dn = lat.adjoint_freq_step();
    CMat mq(db, dn);
    for (int bq = 0; bq < db; ++bq) {
        for (int nq = 0; nq < dn; ++nq) {
            detail::KahanSum acc;
            for (int m = 0; m < m_count; ++m)
                for (int n = 0; n < k_count; ++n)
                    acc.add(mask(m, n) * w(static_cast<long long>(n) * lat.b * bq -
                                           static_cast<long long>(m) * lat.a * nq));
            mq(bq, nq) = acc.value();
        }
    }
    return mq;
}

CMat mask_from_transform(const CMat& mq, const TFLattice& lat) {
    const int db = lat.adjoint_time_step();
    const int dn = lat.adjoint_freq_step();
    if (mq.rows() != db || mq.cols() != dn)
        throw std::invalid_argument("mask_from_transform: array must match the quotient grid");
    const int m_count = lat.time_shifts();
    const int k_count = lat.freq_shifts();
    const detail::PhaseTable w(lat.n);
    CMat mask(m_count, k_count);
    const double scale = 1.0 / double(m_count * k_count);
    for (int m = 0; m < m_count; ++m) {
        for (int n = 0; n < k_count; ++n) {
            detail::KahanSum acc;
            for (int bq = 0; bq < db; ++bq)
                for (int nq = 0; nq < dn; ++nq)
                    acc.add(mq(bq, nq) * w(-(static_cast<long long>(n) * lat.b * bq -
                                            static_cast<long long>(m) * lat.a * nq)));
            mask(m, n) = scale * acc.value();
        }
    }
    return mask;
}

CVec gm_apply(const CMat& mask, const CVec& g, const CVec& h, const TFLattice& lat, const CVec& f) {
    check_window_sizes(g, h, lat, "gm_apply");
    if (f.size() != lat.n) throw std::invalid_argument("gm_apply: signal length mismatch");
    const CMat c = gabor_analysis(f, g, lat);
    return gabor_synthesis(mask.cwiseProduct(c), h, lat);
}

CMat gm_matrix(const CMat& mask, const CVec& g, const CVec& h, const TFLattice& lat) {
    check_window_sizes(g, h, lat, "gm_matrix");
    const int n = lat.n;
    CMat out(n, n);
    CVec e = CVec::Zero(n);
    for (int s = 0; s < n; ++s) {
        e[s] = 1.0;
        out.col(s) = gm_apply(mask, g, h, lat, e);
        e[s] = 0.0;
    }
    return out;
}

CMat gm_spreading(const CMat& mask, const CVec& g, const CVec& h, const TFLattice& lat) {
    check_window_sizes(g, h, lat, "gm_spreading");
    const int n = lat.n;
    const CMat mq = mask_transform(mask, lat);
    const CMat v = stft(h, g);
    const int db = lat.adjoint_time_step();
    const int dn = lat.adjoint_freq_step();
    CMat eta(n, n);
    for (int b = 0; b < n; ++b)
        for (int nu = 0; nu < n; ++nu)
            eta(b, nu) = mq(b % db, nu % dn) * v(b, nu) / double(n);
    return eta;
}

RMat u_function(const CVec& g, const CVec& h, const TFLattice& lat) {
    check_window_sizes(g, h, lat, "u_function");
    const CMat v = stft(h, g);
    const int db = lat.adjoint_time_step();
    const int dn = lat.adjoint_freq_step();
    RMat u(db, dn);
    for (int bq = 0; bq < db; ++bq) {
        for (int nq = 0; nq < dn; ++nq) {
            detail::KahanSumReal acc;
            for (int k = 0; k < lat.b; ++k)
                for (int l = 0; l < lat.a; ++l)
                    acc.add(std::norm(v(bq + k * db, nq + l * dn)));
            u(bq, nq) = acc.value();
        }
    }
    return u;
}

CMat best_gm_mask_from_spreading(const CMat& eta, const CVec& g, const CVec& h,
                                 const TFLattice& lat, SingularPolicy policy) {
    check_window_sizes(g, h, lat, "best_gm_mask");
    if (eta.rows() != lat.n || eta.cols() != lat.n)
        throw std::invalid_argument("best_gm_mask: operator size mismatch with lattice");
    const CMat v = stft(h, g);
    const FoldedFields f = fold_fields(eta, v, lat);
    const double tol = 1e-10 * f.u.maxCoeff();
    CMat mq(f.u.rows(), f.u.cols());
    for (int bq = 0; bq < f.u.rows(); ++bq) {
        for (int nq = 0; nq < f.u.cols(); ++nq) {
            if (f.u(bq, nq) <= tol) {
                if (policy == SingularPolicy::fail)
                    throw RieszError("best_gm_mask: folded weight vanishes on the quotient grid",
                                     bq, nq, f.u(bq, nq), tol);
                mq(bq, nq) = 0.0;
            } else {
                mq(bq, nq) = double(lat.n) * f.b(bq, nq) / f.u(bq, nq);
            }
        }
    }
    return mask_from_transform(mq, lat);
}

CMat best_gm_mask(const CMat& op, const CVec& g, const CVec& h, const TFLattice& lat,
                  SingularPolicy policy) {
    return best_gm_mask_from_spreading(spreading_from_kernel(op), g, h, lat, policy);
}

GmErrorReport gm_error_report(const CMat& op, const CVec& g, const CVec& h, const TFLattice& lat,
                              SingularPolicy policy) {
    check_window_sizes(g, h, lat, "gm_error_report");
    const CMat eta = spreading_from_kernel(op);
    const CMat v = stft(h, g);
    const FoldedFields f = fold_fields(eta, v, lat);
    const double tol = 1e-10 * f.u.maxCoeff();

    const int db = static_cast<int>(f.u.rows());
    const int dn = static_cast<int>(f.u.cols());
    CMat mq = CMat::Zero(db, dn);
    RMat eff(db, dn);
    for (int bq = 0; bq < db; ++bq) {
        for (int nq = 0; nq < dn; ++nq) {
            const double uu = f.u(bq, nq);
            const double gg = f.gm(bq, nq);
            if (uu <= tol) {
                if (policy == SingularPolicy::fail)
                    throw RieszError("gm_error_report: folded weight vanishes on the quotient grid",
                                     bq, nq, uu, tol);
                eff(bq, nq) = gg == 0.0 ? 1.0 : 0.0;
            } else {
                mq(bq, nq) = double(lat.n) * f.b(bq, nq) / uu;
                if (gg == 0.0) {
                    eff(bq, nq) = 1.0;
                } else {
                    double e = std::norm(f.b(bq, nq)) / (gg * uu);
                    if (e > 1.0 && e < 1.0 + 1e-12) e = 1.0;  // Cauchy-Schwarz, up to rounding
                    eff(bq, nq) = e;
                }
            }
        }
    }

    GmErrorReport rep;
    rep.efficiency = eff;
    rep.mask = mask_from_transform(mq, lat);

    // exact error straight from the spreading difference
    const CMat eta_app = gm_spreading(rep.mask, g, h, lat);
    const double diff = (eta - eta_app).norm();
    const double sum = (eta + eta_app).norm();
    rep.err_sq = double(lat.n) * diff * diff;
    rep.err_rel = sum > 0.0 ? diff / sum : 0.0;
    rep.bound = double(lat.n) * eta.squaredNorm() * (1.0 - eff.minCoeff());
    return rep;
}

bool underspread_check(const CMat& eta, int t0, int xi0) {
    const int n = static_cast<int>(eta.rows());
    if (eta.cols() != n) throw std::invalid_argument("underspread_check: spreading must be square");
    if (t0 < 0 || xi0 < 0) throw std::invalid_argument("underspread_check: box extents must be >= 0");
    const double scale = eta.cwiseAbs().maxCoeff();
    const double tol = 1e-14 * scale;
    std::vector<std::pair<int, int>> offenders;
    for (int b = 0; b < n; ++b) {
        const int bc = imod(b + n / 2, n) - n / 2;
        for (int nu = 0; nu < n; ++nu) {
            const int nc = imod(nu + n / 2, n) - n / 2;
            if (std::abs(bc) <= t0 && std::abs(nc) <= xi0) continue;
            if (std::abs(eta(b, nu)) > tol) offenders.emplace_back(bc, nc);
        }
    }
    if (!offenders.empty())
        throw SupportError("underspread_check: spreading mass outside the declared box", offenders);
    return double(t0) * double(xi0) < double(n) / 4.0;
}

}  // namespace tfop
