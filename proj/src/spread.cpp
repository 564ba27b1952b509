#include "tfop/spread.hpp"

#include "tfop/detail.hpp"
#include "tfop/tfr.hpp"

namespace tfop {

CMat spreading_from_kernel(const CMat& kernel) {
    const int n = static_cast<int>(kernel.rows());
    if (kernel.cols() != n) throw std::invalid_argument("spreading_from_kernel: kernel must be square");
    CMat eta(n, n);
    CVec diag(n);
    for (int b = 0; b < n; ++b) {
        for (int t = 0; t < n; ++t) diag[t] = kernel(t, imod(t - b, n));
        eta.row(b) = detail::dft(diag).transpose() / double(n);
    }
    return eta;
}

CMat kernel_from_spreading(const CMat& eta) {
    const int n = static_cast<int>(eta.rows());
    if (eta.cols() != n) throw std::invalid_argument("kernel_from_spreading: spreading must be square");
    CMat kernel(n, n);
    for (int b = 0; b < n; ++b) {
        const CVec diag = detail::idft_unscaled(eta.row(b).transpose());
        for (int t = 0; t < n; ++t) kernel(t, imod(t - b, n)) = diag[t];
    }
    return kernel;
}

CMat apply_tf_domain(const CMat& eta, const CMat& stft_coef) {
    return twisted_conv(eta, stft_coef);
}

CMat compose_spreading(const CMat& eta2, const CMat& eta1) {
    return twisted_conv(eta2, eta1);
}

}  // namespace tfop
