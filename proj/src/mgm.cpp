#include "tfop/mgm.hpp"

#include "tfop/detail.hpp"
#include "tfop/spread.hpp"
#include "tfop/tfr.hpp"
#include "tfop/window.hpp"

#include <map>

namespace tfop {

namespace {

std::vector<CMat> stft_tables(const CVec& g, const std::vector<CVec>& hs, const TFLattice& lat) {
    if (hs.empty()) throw std::invalid_argument("mgm: need at least one synthesis window");
    if (g.size() != lat.n) throw std::invalid_argument("mgm: analysis window length mismatch");
    std::vector<CMat> v;
    v.reserve(hs.size());
    for (const CVec& h : hs) {
        if (h.size() != lat.n) throw std::invalid_argument("mgm: synthesis window length mismatch");
        v.push_back(stft(h, g));
    }
    return v;
}

// folded  sum eta . conj(V_j)  for every window, at every quotient point
std::vector<CMat> rhs_field(const CMat& eta, const std::vector<CMat>& v, const TFLattice& lat) {
    const int db = lat.adjoint_time_step();
    const int dn = lat.adjoint_freq_step();
    const int j_count = static_cast<int>(v.size());
    std::vector<CMat> rhs(static_cast<size_t>(db) * dn);
    for (int bq = 0; bq < db; ++bq) {
        for (int nq = 0; nq < dn; ++nq) {
            CMat b(j_count, 1);
            for (int j = 0; j < j_count; ++j) {
                detail::KahanSum acc;
                for (int k = 0; k < lat.b; ++k)
                    for (int l = 0; l < lat.a; ++l)
                        acc.add(eta(bq + k * db, nq + l * dn) *
                                std::conj(v[j](bq + k * db, nq + l * dn)));
                b(j, 0) = acc.value();
            }
            rhs[static_cast<size_t>(bq) * dn + nq] = b;
        }
    }
    return rhs;
}

GammaField gamma_from_tables(const std::vector<CMat>& v, const TFLattice& lat) {
    const int db = lat.adjoint_time_step();
    const int dn = lat.adjoint_freq_step();
    const int j_count = static_cast<int>(v.size());
    GammaField field;
    field.lag_count = db;
    field.mod_count = dn;
    field.window_count = j_count;
    field.pt.resize(static_cast<size_t>(db) * dn);
    for (int bq = 0; bq < db; ++bq) {
        for (int nq = 0; nq < dn; ++nq) {
            CMat gm(j_count, j_count);
            for (int j0 = 0; j0 < j_count; ++j0) {
                for (int j = j0; j < j_count; ++j) {
                    detail::KahanSum acc;
                    for (int k = 0; k < lat.b; ++k)
                        for (int l = 0; l < lat.a; ++l)
                            acc.add(std::conj(v[j0](bq + k * db, nq + l * dn)) *
                                    v[j](bq + k * db, nq + l * dn));
                    gm(j0, j) = acc.value();
                    gm(j, j0) = std::conj(acc.value());
                }
            }
            field.at(bq, nq) = gm;
        }
    }
    return field;
}

CMat solve_point(const CMat& gm, const CMat& rhs, SingularPolicy policy, int bq, int nq) {
    Eigen::SelfAdjointEigenSolver<CMat> es(gm);
    const auto& ev = es.eigenvalues();
    const double hi = ev.maxCoeff();
    const double cut = hi * 1e-12;
    if (ev.minCoeff() <= cut) {
        if (policy == SingularPolicy::fail)
            throw RieszError("best_mgm: Gamma singular or beyond condition 1e12 at a quotient point",
                             bq, nq, ev.minCoeff(), cut);
        // Hermitian pseudo-inverse: drop the deficient eigenspace
        CMat y = es.eigenvectors().adjoint() * rhs;
        for (int i = 0; i < y.rows(); ++i) y(i, 0) = ev[i] > cut ? y(i, 0) / ev[i] : Complex{0.0, 0.0};
        return es.eigenvectors() * y;
    }
    CMat y = es.eigenvectors().adjoint() * rhs;
    for (int i = 0; i < y.rows(); ++i) y(i, 0) /= ev[i];
    return es.eigenvectors() * y;
}

}  // namespace

GammaField gamma_field(const CVec& g, const std::vector<CVec>& hs, const TFLattice& lat) {
    return gamma_from_tables(stft_tables(g, hs, lat), lat);
}

RMat gamma_min_eigenvalues(const GammaField& field) {
    RMat out(field.lag_count, field.mod_count);
    for (int bq = 0; bq < field.lag_count; ++bq)
        for (int nq = 0; nq < field.mod_count; ++nq) {
            Eigen::SelfAdjointEigenSolver<CMat> es(field.at(bq, nq), Eigen::EigenvaluesOnly);
            out(bq, nq) = es.eigenvalues().minCoeff();
        }
    return out;
}

RMat gamma_max_eigenvalues(const GammaField& field) {
    RMat out(field.lag_count, field.mod_count);
    for (int bq = 0; bq < field.lag_count; ++bq)
        for (int nq = 0; nq < field.mod_count; ++nq) {
            Eigen::SelfAdjointEigenSolver<CMat> es(field.at(bq, nq), Eigen::EigenvaluesOnly);
            out(bq, nq) = es.eigenvalues().maxCoeff();
        }
    return out;
}

CVec mgm_apply(const std::vector<CMat>& masks, const CVec& g, const std::vector<CVec>& hs,
               const TFLattice& lat, const CVec& f) {
    if (masks.size() != hs.size()) throw std::invalid_argument("mgm_apply: one mask per window");
    CVec out = CVec::Zero(lat.n);
    for (size_t j = 0; j < hs.size(); ++j) out += gm_apply(masks[j], g, hs[j], lat, f);
    return out;
}

CMat mgm_matrix(const std::vector<CMat>& masks, const CVec& g, const std::vector<CVec>& hs,
                const TFLattice& lat) {
    if (masks.size() != hs.size()) throw std::invalid_argument("mgm_matrix: one mask per window");
    CMat out = CMat::Zero(lat.n, lat.n);
    for (size_t j = 0; j < hs.size(); ++j) out += gm_matrix(masks[j], g, hs[j], lat);
    return out;
}

CMat mgm_spreading(const std::vector<CMat>& masks, const CVec& g, const std::vector<CVec>& hs,
                   const TFLattice& lat) {
    if (masks.size() != hs.size()) throw std::invalid_argument("mgm_spreading: one mask per window");
    CMat out = CMat::Zero(lat.n, lat.n);
    for (size_t j = 0; j < hs.size(); ++j) out += gm_spreading(masks[j], g, hs[j], lat);
    return out;
}

std::vector<CMat> best_mgm(const CMat& op, const CVec& g, const std::vector<CVec>& hs,
                           const TFLattice& lat, SingularPolicy policy) {
    if (op.rows() != lat.n || op.cols() != lat.n)
        throw std::invalid_argument("best_mgm: operator size mismatch with lattice");
    const std::vector<CMat> v = stft_tables(g, hs, lat);
    const CMat eta = spreading_from_kernel(op);
    const GammaField field = gamma_from_tables(v, lat);
    const std::vector<CMat> rhs = rhs_field(eta, v, lat);

    const int db = field.lag_count;
    const int dn = field.mod_count;
    const int j_count = field.window_count;
    std::vector<CMat> mq(j_count, CMat(db, dn));
    for (int bq = 0; bq < db; ++bq) {
        for (int nq = 0; nq < dn; ++nq) {
            const CMat x = solve_point(field.at(bq, nq), rhs[static_cast<size_t>(bq) * dn + nq],
                                       policy, bq, nq);
            for (int j = 0; j < j_count; ++j) mq[j](bq, nq) = double(lat.n) * x(j, 0);
        }
    }
    std::vector<CMat> masks;
    masks.reserve(j_count);
    for (int j = 0; j < j_count; ++j) masks.push_back(mask_from_transform(mq[j], lat));
    return masks;
}

MgmErrorReport mgm_error_report(const CMat& op, const CVec& g, const std::vector<CVec>& hs,
                                const TFLattice& lat, SingularPolicy policy) {
    MgmErrorReport rep;
    rep.masks = best_mgm(op, g, hs, lat, policy);
    const CMat eta = spreading_from_kernel(op);
    const CMat eta_app = mgm_spreading(rep.masks, g, hs, lat);
    const double diff = (eta - eta_app).norm();
    const double sum = (eta + eta_app).norm();
    rep.err_sq = double(lat.n) * diff * diff;
    rep.err_rel = sum > 0.0 ? diff / sum : 0.0;
    return rep;
}

AdjointShiftReport adjoint_lattice_gamma(const CVec& g, const CVec& h, const TFLattice& lat,
                                         const std::vector<std::pair<int, int>>& shifts,
                                         const CMat& op) {
    const int n = lat.n;
    const int db = lat.adjoint_time_step();
    const int dn = lat.adjoint_freq_step();
    for (const auto& [su, sw] : shifts)
        if (imod(su, db) != 0 || imod(sw, dn) != 0)
            throw std::invalid_argument("adjoint_lattice_gamma: shifts must lie on the adjoint lattice");

    std::vector<CVec> hs;
    hs.reserve(shifts.size());
    for (const auto& [su, sw] : shifts) hs.push_back(tf_shift(h, su, sw));

    const std::vector<CMat> vt = stft_tables(g, hs, lat);
    const GammaField gamma = gamma_from_tables(vt, lat);
    const CMat v = stft(h, g);
    const detail::PhaseTable w(n);

    // A_{du,dw}(b,nu) = folded  w^{-du nu'} conj(V(b',nu')) V(b'-du, nu'-dw)
    std::map<std::pair<int, int>, CMat> a_cache;
    auto a_field = [&](int du, int dw) -> const CMat& {
        const auto key = std::make_pair(imod(du, n), imod(dw, n));
        auto it = a_cache.find(key);
        if (it != a_cache.end()) return it->second;
        CMat a(db, dn);
        for (int bq = 0; bq < db; ++bq) {
            for (int nq = 0; nq < dn; ++nq) {
                detail::KahanSum acc;
                for (int k = 0; k < lat.b; ++k) {
                    const int bp = bq + k * db;
                    for (int l = 0; l < lat.a; ++l) {
                        const int np = nq + l * dn;
                        acc.add(w(-static_cast<long long>(key.first) * np) *
                                std::conj(v(bp, np)) *
                                v(imod(bp - key.first, n), imod(np - key.second, n)));
                    }
                }
                a(bq, nq) = acc.value();
            }
        }
        return a_cache.emplace(key, std::move(a)).first->second;
    };

    const int j_count = static_cast<int>(shifts.size());
    double gamma_scale = 0.0;
    for (const CMat& m : gamma.pt) gamma_scale = std::max(gamma_scale, m.cwiseAbs().maxCoeff());

    // structured reassembly: Gamma_{j0 j} = w^{u_j (w_j - w_j0)} A_{u_j - u_j0, w_j - w_j0}
    double structure_dev = 0.0;
    GammaField structured = gamma;
    for (int j0 = 0; j0 < j_count; ++j0) {
        for (int j = 0; j < j_count; ++j) {
            const int du = shifts[j].first - shifts[j0].first;
            const int dw = shifts[j].second - shifts[j0].second;
            const Complex phase = w(static_cast<long long>(shifts[j].first) * dw);
            const CMat& a = a_field(du, dw);
            for (int bq = 0; bq < db; ++bq)
                for (int nq = 0; nq < dn; ++nq) {
                    const Complex s = phase * a(bq, nq);
                    structure_dev = std::max(structure_dev,
                                             std::abs(s - gamma.at(bq, nq)(j0, j)));
                    structured.at(bq, nq)(j0, j) = s;
                }
        }
    }

    // solve the normal equations through the twisted-structure matrices
    const CMat eta = spreading_from_kernel(op);
    const std::vector<CMat> rhs = rhs_field(eta, vt, lat);
    std::vector<CMat> mq(j_count, CMat(db, dn));
    for (int bq = 0; bq < db; ++bq)
        for (int nq = 0; nq < dn; ++nq) {
            const CMat x = solve_point(structured.at(bq, nq),
                                       rhs[static_cast<size_t>(bq) * dn + nq],
                                       SingularPolicy::fail, bq, nq);
            for (int j = 0; j < j_count; ++j) mq[j](bq, nq) = double(n) * x(j, 0);
        }

    const std::vector<CMat> direct = best_mgm(op, g, hs, lat, SingularPolicy::fail);
    double mask_dev = 0.0;
    double mask_scale = 0.0;
    for (int j = 0; j < j_count; ++j) {
        const CMat m = mask_from_transform(mq[j], lat);
        mask_dev = std::max(mask_dev, (m - direct[j]).cwiseAbs().maxCoeff());
        mask_scale = std::max(mask_scale, direct[j].cwiseAbs().maxCoeff());
    }

    AdjointShiftReport rep;
    rep.structure_dev = gamma_scale > 0.0 ? structure_dev / gamma_scale : structure_dev;
    rep.mask_dev = mask_scale > 0.0 ? mask_dev / mask_scale : mask_dev;
    return rep;
}

namespace {

CMat lattice_window_matrix(const CVec& win, const TFLattice& lat) {
    const int m_count = lat.time_shifts();
    const int k_count = lat.freq_shifts();
    CMat cols(lat.n, static_cast<long long>(m_count) * k_count);
    for (int m = 0; m < m_count; ++m)
        for (int n = 0; n < k_count; ++n)
            cols.col(static_cast<long long>(m) * k_count + n) = tf_shift(win, m * lat.a, n * lat.b);
    return cols;
}

}  // namespace

ProjectionFrameExpansion projection_frame_expand(const CMat& op, const CVec& g, const CVec& h,
                                                 const TFLattice& lat1, const TFLattice& lat2) {
    if (lat1.n != lat2.n || op.rows() != lat1.n || op.cols() != lat1.n)
        throw std::invalid_argument("projection_frame_expand: size mismatch");
    const CVec gd = dual_window(g, lat1);
    const CVec hd = dual_window(h, lat2);
    const CMat ga = lattice_window_matrix(g, lat1);
    const CMat ha = lattice_window_matrix(h, lat2);
    const CMat gt = lattice_window_matrix(gd, lat1);
    const CMat ht = lattice_window_matrix(hd, lat2);
    ProjectionFrameExpansion out;
    out.coef = ga.adjoint() * op * ha;
    out.reconstruction = gt * out.coef * ht.adjoint();
    return out;
}

}  // namespace tfop
