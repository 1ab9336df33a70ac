#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "shearlet/generators.hpp"

using namespace shearlet;

TEST_CASE("transition ramp") {
    CHECK(transition(-3.0) == 0.0);
    CHECK(transition(0.0) == 0.0);
    CHECK(transition(1.0) == 1.0);
    CHECK(transition(2.5) == 1.0);
    CHECK(std::fabs(transition(0.5) - 0.5) <= 1e-15);
    // complementary symmetry around t = 1/2
    for (double t : {0.1, 0.25, 0.4, 0.47}) {
        CHECK(std::fabs(transition(t) + transition(1.0 - t) - 1.0) <= 1e-14);
    }
    // monotone on [0,1]
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        double v = transition(i / 100.0);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("meyer low-pass plateau and support") {
    CHECK(meyer_low_1d(0.0) == 1.0);
    CHECK(meyer_low_1d(1.0 / 16.0) == 1.0);
    CHECK(meyer_low_1d(-1.0 / 16.0) == 1.0);
    CHECK(meyer_low_1d(1.0 / 8.0) == 0.0);
    CHECK(meyer_low_1d(0.3) == 0.0);
    CHECK(meyer_low_1d(0.1) == meyer_low_1d(-0.1));  // even
}

TEST_CASE("radial factor squares to a partition ring") {
    CHECK(psi1_hat(1.0 / 32.0) == 0.0);  // inside the hole
    CHECK(psi1_hat(1.0 / 16.0) == 0.0);
    CHECK(std::fabs(psi1_hat(3.0 / 16.0) - 1.0) <= 1e-15);  // plateau
    CHECK(psi1_hat(0.5) == 0.0);                            // outer edge
    CHECK(psi1_hat(0.75) == 0.0);
    CHECK(psi1_hat(0.2) == psi1_hat(-0.2));

    // construction identity: psi1^2 = pm(w/4)^2 - pm(w)^2 pointwise
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 10000; ++t) {
        double w = u(rng);
        double lhs = psi1_hat_sq(w) + meyer_low_1d(w) * meyer_low_1d(w);
        double rhs = meyer_low_1d(w / 4.0) * meyer_low_1d(w / 4.0);
        CHECK(std::fabs(lhs - rhs) <= 1e-15);
    }

    // dyadic telescoping: sum_j psi1^2(4^{-j} w) closes to 1 once the hole is passed
    for (double w : {0.25, 0.4, 0.2, 0.49}) {
        double s = 0.0;
        for (int j = 0; j <= 4; ++j) s += psi1_hat_sq(std::ldexp(w, -2 * j));
        CHECK(std::fabs(s - 1.0) <= 1e-12);
    }
}

TEST_CASE("angular factor") {
    CHECK(psi2_hat(0.0) == 1.0);
    CHECK(psi2_hat(1.0) == 0.0);
    CHECK(psi2_hat(-1.0) == 0.0);
    CHECK(psi2_hat(1.5) == 0.0);
    CHECK(psi2_hat(0.3) == psi2_hat(-0.3));
    // squared shifts tile the line
    CHECK(std::fabs(psi2_hat(0.3) * psi2_hat(0.3) + psi2_hat(0.7) * psi2_hat(0.7) - 1.0) <= 1e-14);
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-64.0, 64.0);
    for (int t = 0; t < 2000; ++t) {
        double x = u(rng);
        double s = 0.0;
        for (int l = int(std::floor(x)) - 1; l <= int(std::ceil(x)) + 1; ++l) {
            double v = psi2_hat(x - l);
            s += v * v;
        }
        CHECK(std::fabs(s - 1.0) <= 1e-12);
    }
}

TEST_CASE("smooth-system scale windows tile the plane") {
    CHECK(std::fabs(big_phi_hat_sq(0.0, 0.0) - 1.0) <= 1e-15);
    CHECK(big_phi_hat_sq(1.0, 1.0) == 0.0);
    CHECK(w_hat_sq(0.0, 0.0) == 0.0);  // ring window vanishes at the origin
    CHECK(std::fabs(w_hat_sq(0.25, 0.0) - 1.0) <= 1e-15);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    for (int t = 0; t < 2000; ++t) {
        double x1 = u(rng), x2 = u(rng);
        double s = big_phi_hat_sq(x1, x2);
        for (int j = 0; j <= 3; ++j) s += w_hat_sq_scaled(x1, x2, j, false);
        CHECK(std::fabs(s - 1.0) <= 1e-12);
    }

    // absorbed top scale keeps everything at and beyond its plateau
    CHECK(std::fabs(w_hat_sq_scaled(1000.0, -2000.0, 2, true) - 1.0) <= 1e-15);
    CHECK(w_hat_sq_scaled(1000.0, -2000.0, 2, false) == 0.0);
}

TEST_CASE("coarse cone window") {
    CHECK(std::fabs(phi_coarse_hat(0.0, 0.0) - 1.0) <= 1e-15);
    CHECK(std::fabs(phi_coarse_hat(0.125, -0.125) - 1.0) <= 1e-15);  // plateau |t|<=1/8
    CHECK(phi_coarse_1d(0.3) == 0.0);                                // zero outside 1/4
    CHECK(phi_coarse_hat(0.3, 0.0) == 0.0);
}

TEST_CASE("isotropic dyadic envelope") {
    CHECK(dyadic_scaling_hat(0.0) == 1.0);
    CHECK(dyadic_scaling_hat(1.0) == 1.0);
    CHECK(dyadic_scaling_hat(2.0) == 0.0);
    CHECK(dyadic_annulus_hat(0.5) == 0.0);
    CHECK(dyadic_annulus_hat(2.0) == 0.0);
    CHECK(std::fabs(dyadic_annulus_hat(1.0) - 1.0) <= 1e-15);  // scaling still 1, next level 0

    // radial telescoping: scaling^2 + sum annulus^2 over finer levels closes to 1
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(0.0, 256.0);
    for (int t = 0; t < 2000; ++t) {
        double r = u(rng);
        double s = dyadic_scaling_hat(r) * dyadic_scaling_hat(r);
        for (int nu = 1; nu <= 10; ++nu) {
            double a = dyadic_annulus_hat(std::ldexp(r, -nu));
            s += a * a;
        }
        CHECK(std::fabs(s - 1.0) <= 1e-12);
    }
}
