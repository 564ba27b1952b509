#include "tfop/tfr.hpp"

#include "tfop/detail.hpp"

namespace tfop {

namespace {

void require_square_same(const CMat& f, const CMat& g, const char* who) {
    if (f.rows() != f.cols() || g.rows() != g.cols() || f.rows() != g.rows())
        throw std::invalid_argument(std::string(who) + ": expected square arrays of equal size");
}

}  // namespace

CVec tf_shift(const CVec& f, int b, int nu) {
    const int n = static_cast<int>(f.size());
    if (n == 0) throw std::invalid_argument("tf_shift: empty signal");
    const detail::PhaseTable w(n);
    CVec out(n);
    for (int t = 0; t < n; ++t)
        out[t] = w(static_cast<long long>(nu) * t) * f[imod(t - b, n)];
    return out;
}

CMat tf_shift_matrix(int n, int b, int nu) {
    if (n <= 0) throw std::invalid_argument("tf_shift_matrix: length must be positive");
    const detail::PhaseTable w(n);
    CMat m = CMat::Zero(n, n);
    for (int t = 0; t < n; ++t)
        m(t, imod(t - b, n)) = w(static_cast<long long>(nu) * t);
    return m;
}

CMat stft(const CVec& f, const CVec& g) {
    const int n = static_cast<int>(f.size());
    if (g.size() != n) throw std::invalid_argument("stft: signal/window length mismatch");
    CMat out(n, n);
    CVec win(n);
    for (int b = 0; b < n; ++b) {
        for (int t = 0; t < n; ++t) win[t] = f[t] * std::conj(g[imod(t - b, n)]);
        out.row(b) = detail::dft(win).transpose();
    }
    return out;
}

CVec stft_synthesis(const CMat& coef, const CVec& h) {
    const int n = static_cast<int>(h.size());
    if (coef.rows() != n || coef.cols() != n)
        throw std::invalid_argument("stft_synthesis: coefficient array must be N x N");
    CVec out = CVec::Zero(n);
    for (int b = 0; b < n; ++b) {
        const CVec row = detail::idft_unscaled(coef.row(b).transpose());
        for (int t = 0; t < n; ++t) out[t] += row[t] * h[imod(t - b, n)];
    }
    return out;
}

CMat gabor_analysis(const CVec& f, const CVec& g, const TFLattice& lat) {
    const int n = lat.n;
    if (f.size() != n || g.size() != n)
        throw std::invalid_argument("gabor_analysis: length mismatch with lattice");
    const int m_count = lat.time_shifts();
    const int k_count = lat.freq_shifts();
    CMat c(m_count, k_count);
    CVec folded(k_count);
    for (int m = 0; m < m_count; ++m) {
        const int ma = m * lat.a;
        // fold f * conj(T_{ma} g) into K bins; w^{n b t} only sees t mod K
        folded.setZero();
        for (int t = 0; t < n; ++t)
            folded[t % k_count] += f[t] * std::conj(g[imod(t - ma, n)]);
        c.row(m) = detail::dft(folded).transpose();
    }
    return c;
}

CVec gabor_synthesis(const CMat& coef, const CVec& h, const TFLattice& lat) {
    const int n = lat.n;
    if (h.size() != n) throw std::invalid_argument("gabor_synthesis: window length mismatch");
    const int m_count = lat.time_shifts();
    const int k_count = lat.freq_shifts();
    if (coef.rows() != m_count || coef.cols() != k_count)
        throw std::invalid_argument("gabor_synthesis: coefficient array must be M x K");
    CVec out = CVec::Zero(n);
    for (int m = 0; m < m_count; ++m) {
        const int ma = m * lat.a;
        const CVec u = detail::idft_unscaled(coef.row(m).transpose());
        for (int t = 0; t < n; ++t) out[t] += u[t % k_count] * h[imod(t - ma, n)];
    }
    return out;
}

CMat symplectic_dft(const CMat& f) {
    const int n = static_cast<int>(f.rows());
    if (f.cols() != n) throw std::invalid_argument("symplectic_dft: expected square array");
    // over nu: A(b,t) = sum_nu F(b,nu) w^{t nu}; over b: 1/N sum_b A(b,t) w^{-b xi}
    CMat a(n, n);
    for (int b = 0; b < n; ++b)
        a.row(b) = detail::idft_unscaled(f.row(b).transpose()).transpose();
    CMat out(n, n);
    for (int t = 0; t < n; ++t)
        out.row(t) = detail::dft(a.col(t)).transpose() / double(n);
    return out;
}

CMat twisted_conv_ref(const CMat& f, const CMat& g) {
    require_square_same(f, g, "twisted_conv_ref");
    const int n = static_cast<int>(f.rows());
    const detail::PhaseTable w(n);
    CMat out(n, n);
    for (int b = 0; b < n; ++b) {
        for (int nu = 0; nu < n; ++nu) {
            detail::KahanSum acc;
            for (int bp = 0; bp < n; ++bp) {
                const int db = imod(b - bp, n);
                for (int np = 0; np < n; ++np)
                    acc.add(f(bp, np) * g(db, imod(nu - np, n)) *
                            w(-static_cast<long long>(bp) * (nu - np)));
            }
            out(b, nu) = acc.value();
        }
    }
    return out;
}

CMat twisted_conv_fast(const CMat& f, const CMat& g) {
    require_square_same(f, g, "twisted_conv_fast");
    const int n = static_cast<int>(f.rows());
    // Row-wise over nu:  (F nat G)(b,.) = sum_{b'} F(b',.) (*) [G(b-b',.) w^{-b' .}],
    // so on the DFT side   out^(b,xi) = sum_{b'} F^(b',xi) G^(b-b', xi+b').
    CMat fh(n, n), gh(n, n);
    for (int r = 0; r < n; ++r) {
        fh.row(r) = detail::dft(f.row(r).transpose()).transpose();
        gh.row(r) = detail::dft(g.row(r).transpose()).transpose();
    }
    CMat outh(n, n);
    for (int b = 0; b < n; ++b) {
        for (int xi = 0; xi < n; ++xi) {
            detail::KahanSum acc;
            for (int bp = 0; bp < n; ++bp)
                acc.add(fh(bp, xi) * gh(imod(b - bp, n), imod(xi + bp, n)));
            outh(b, xi) = acc.value();
        }
    }
    CMat out(n, n);
    for (int b = 0; b < n; ++b)
        out.row(b) = detail::idft_unscaled(outh.row(b).transpose()).transpose() / double(n);
    return out;
}

CMat twisted_conv(const CMat& f, const CMat& g) {
    require_square_same(f, g, "twisted_conv");
    return f.rows() <= 64 ? twisted_conv_ref(f, g) : twisted_conv_fast(f, g);
}

}  // namespace tfop
