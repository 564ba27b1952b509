#include "tfop/random_ops.hpp"

namespace tfop {

namespace {

void check_extent(int n, int extent, const char* who) {
    if (extent < 1 || extent > n)
        throw std::invalid_argument(std::string(who) + ": extent must be in [1, N]");
}

}  // namespace

CMat random_rect_spreading(Rng& rng, int n, int lag_extent, int mod_extent) {
    if (n <= 0) throw std::invalid_argument("random_rect_spreading: length must be positive");
    check_extent(n, lag_extent, "random_rect_spreading");
    check_extent(n, mod_extent, "random_rect_spreading");
    CMat eta = CMat::Zero(n, n);
    const int b0 = -(lag_extent - 1) / 2;
    const int n0 = -(mod_extent - 1) / 2;
    for (int i = 0; i < lag_extent; ++i)
        for (int j = 0; j < mod_extent; ++j)
            eta(imod(b0 + i, n), imod(n0 + j, n)) = rng.sym();
    return eta;
}

CMat random_perturbed_lti_spreading(Rng& rng, int n, int lag_extent, int mod_extent,
                                    double noise_scale) {
    if (n <= 0) throw std::invalid_argument("random_perturbed_lti_spreading: length must be positive");
    check_extent(n, lag_extent, "random_perturbed_lti_spreading");
    check_extent(n, mod_extent, "random_perturbed_lti_spreading");
    if (noise_scale < 0.0)
        throw std::invalid_argument("random_perturbed_lti_spreading: noise scale must be >= 0");
    CMat eta = CMat::Zero(n, n);
    for (int b = 0; b < n; ++b) eta(b, 0) = rng.sym();
    const int b0 = -(lag_extent - 1) / 2;
    const int n0 = -(mod_extent - 1) / 2;
    for (int i = 0; i < lag_extent; ++i)
        for (int j = 0; j < mod_extent; ++j)
            eta(imod(b0 + i, n), imod(n0 + j, n)) += noise_scale * rng.sym();
    return eta;
}

}  // namespace tfop
