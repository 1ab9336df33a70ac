#pragma once

#include <algorithm>
#include <cmath>

// Frequency-window generators. Everything is built from one C-infinity
// transition profile, so partition/telescoping identities reduce to
// cos^2+sin^2=1 and cancellation of telescoping terms. All functions are
// pure, total, and even; evaluation is lazy (no tables).

namespace shearlet {

// 0 for t<=0, 1 for t>=1, smooth and flat at both ends
inline double transition(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double a = std::exp(-1.0 / t);
    double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

// 1-d low-pass: 1 on |w|<=1/16, 0 on |w|>=1/8. The edges are clamped so the
// support is exact; cos(pi/2) alone would leak ~6e-17 everywhere outside.
inline double meyer_low_1d(double w) {
    double a = std::fabs(w);
    if (a <= 0.0625) return 1.0;
    if (a >= 0.125) return 0.0;
    return std::cos(1.5707963267948966 * transition(16.0 * a - 1.0));
}

// radial-direction generator squared: supported on 1/16<|w|<1/2, plateau 1
inline double psi1_hat_sq(double w) {
    double lo = meyer_low_1d(w / 4.0);
    double hi = meyer_low_1d(w);
    return std::max(lo * lo - hi * hi, 0.0);
}

inline double psi1_hat(double w) { return std::sqrt(psi1_hat_sq(w)); }

// angular generator: 1 at 0, 0 outside [-1,1]; three-term and shifted-family
// partitions hold exactly by construction
inline double psi2_hat(double u) {
    double a = std::fabs(u);
    if (a >= 1.0) return 0.0;
    return std::cos(1.5707963267948966 * transition(a));
}

// separable 2-d low-pass, squared: 1 on [-1/16,1/16]^2, 0 outside [-1/8,1/8]^2
inline double big_phi_hat_sq(double x1, double x2) {
    double a = meyer_low_1d(x1);
    double b = meyer_low_1d(x2);
    return a * a * b * b;
}

// scale-band profile squared at scale j: difference of dilated low-passes.
// absorbed=true replaces the outer term by 1 (top scale extended to Nyquist).
inline double w_hat_sq_scaled(double x1, double x2, int j, bool absorbed) {
    double s = std::ldexp(1.0, -2 * j);
    double outer = absorbed ? 1.0 : big_phi_hat_sq(0.25 * s * x1, 0.25 * s * x2);
    return std::max(outer - big_phi_hat_sq(s * x1, s * x2), 0.0);
}

// base band, scale 0, no absorption
inline double w_hat_sq(double x1, double x2) { return w_hat_sq_scaled(x1, x2, 0, false); }

// coarse 1-d factor for the cone-projected system: 1 on |t|<=1/8, 0 outside 1/4
inline double phi_coarse_1d(double t) { return meyer_low_1d(t / 2.0); }

inline double phi_coarse_hat(double x1, double x2) {
    return phi_coarse_1d(x1) * phi_coarse_1d(x2);
}

// isotropic comparison family: radial low-pass 1 on |t|<=1/2, 0 on |t|>=1
inline double dyadic_low_1d(double t) { return meyer_low_1d(std::fabs(t) / 8.0); }

// coarse dyadic window at radius r: 1 on r<=1, 0 on r>=2
inline double dyadic_scaling_hat(double r) { return dyadic_low_1d(r / 2.0); }

// dyadic annulus profile: supported on 1/2<r<2; squares telescope
inline double dyadic_annulus_hat(double r) {
    double lo = dyadic_low_1d(r / 2.0);
    double hi = dyadic_low_1d(r);
    return std::sqrt(std::max(lo * lo - hi * hi, 0.0));
}

}  // namespace shearlet
