#include "tfop/window.hpp"

#include "tfop/detail.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace tfop {

CVec gauss_window(int n, double width) {
    if (n <= 0) throw std::invalid_argument("gauss_window: length must be positive");
    if (!(width > 0.0)) throw std::invalid_argument("gauss_window: width must be positive");
    CVec g(n);
    for (int t = 0; t < n; ++t) {
        // centered representative in [-N/2, N/2): keeps g(-t mod N) == g(t) exact
        const int tc = imod(t + n / 2, n) - n / 2;
        const double c = std::numbers::pi * width * width / double(n);
        // summing the +-r images as pairs keeps g(-t mod N) == g(t) bit-exact
        double v = std::exp(-c * double(tc) * double(tc));
        for (int r = 1; r <= 5; ++r) {
            const double xp = double(tc) + double(r) * double(n);
            const double xm = double(tc) - double(r) * double(n);
            v += std::exp(-c * xp * xp) + std::exp(-c * xm * xm);
        }
        g[t] = v;
    }
    g /= g.norm();
    return g;
}

CMat frame_operator(const CVec& g, const TFLattice& lat) {
    if (g.size() != lat.n) throw std::invalid_argument("frame_operator: window length != lattice length");
    const int n = lat.n;
    const int m_count = lat.time_shifts();
    const int k_count = lat.freq_shifts();
    const int band = lat.adjoint_time_step();  // N/b
    CMat s = CMat::Zero(n, n);
    for (int t = 0; t < n; ++t) {
        for (int j = 0; j < lat.b; ++j) {
            const int u = imod(t + static_cast<long long>(j) * band, n);
            detail::KahanSum acc;
            for (int m = 0; m < m_count; ++m) {
                const int ma = m * lat.a;
                acc.add(g[imod(t - ma, n)] * std::conj(g[imod(u - ma, n)]));
            }
            s(t, u) = double(k_count) * acc.value();
        }
    }
    return s;
}

FrameInfo frame_info(const CVec& g, const TFLattice& lat) {
    const CMat s = frame_operator(g, lat);
    Eigen::SelfAdjointEigenSolver<CMat> es(s, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    FrameInfo info;
    info.lower = lo;
    info.upper = hi;
    info.condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    info.is_frame = lo > 0.0 && info.condition <= 1e12;
    return info;
}

CVec dual_window(const CVec& g, const TFLattice& lat) {
    if (static_cast<long long>(lat.a) * lat.b > lat.n)
        throw std::invalid_argument("dual_window: lattice is undersampled (a*b > N)");
    const CMat s = frame_operator(g, lat);
    Eigen::SelfAdjointEigenSolver<CMat> es(s);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > 1e12)
        throw FrameError("dual_window: frame operator singular or ill-conditioned", lo, hi);
    const CVec y = es.eigenvectors().adjoint() * g;
    const CVec z = y.array() / es.eigenvalues().array().cast<Complex>();
    return es.eigenvectors() * z;
}

}  // namespace tfop
