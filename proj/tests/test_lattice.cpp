#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "shearlet/common.hpp"
#include "shearlet/lattice.hpp"

using namespace shearlet;

namespace {
double norm2(double a, double b) { return std::hypot(a, b); }

// direct minimum of |M u| over the unit circle, dense scan
double circle_min(const Mat2& m, int samples = 200000) {
    double best = 1e300;
    for (int t = 0; t < samples; ++t) {
        double th = 3.14159265358979323846 * t / samples;  // half turn suffices
        double c = std::cos(th), s = std::sin(th);
        best = std::min(best, norm2(double(m.a) * c + double(m.b) * s,
                                    double(m.c) * c + double(m.d) * s));
    }
    return best;
}
}  // namespace

TEST_CASE("shear-scale matrices, exact entries") {
    Mat2 h11 = mat_BA(1, 1, ConeTag::Horizontal);
    CHECK(h11.a == 4);
    CHECK(h11.b == 2);
    CHECK(h11.c == 0);
    CHECK(h11.d == 2);

    Mat2 v10 = mat_BA(1, 0, ConeTag::Vertical);
    CHECK(v10.a == 2);
    CHECK(v10.b == 0);
    CHECK(v10.c == 0);
    CHECK(v10.d == 4);

    Mat2 h23 = mat_BA(2, 3, ConeTag::Horizontal);
    CHECK(h23.a == 16);
    CHECK(h23.b == 12);
    CHECK(h23.c == 0);
    CHECK(h23.d == 4);

    for (int j = 0; j <= 5; ++j) {
        for (int l : {-(1 << j), -1, 0, 2, (1 << j)}) {
            if (std::abs(l) > (1 << j)) continue;
            CHECK(mat_BA(j, l, ConeTag::Horizontal).det() == pow2(3 * j));
            CHECK(mat_BA(j, l, ConeTag::Vertical).det() == pow2(3 * j));
        }
    }
    // shears past the seam are rejected
    CHECK_THROWS_AS(mat_BA(1, 3, ConeTag::Horizontal), config_error);
    CHECK_THROWS_AS(mat_BA(0, -2, ConeTag::Vertical), config_error);
}

TEST_CASE("exact inverse") {
    for (ConeTag cone : {ConeTag::Horizontal, ConeTag::Vertical}) {
        for (int j = 0; j <= 6; ++j) {
            for (int l : {-(1 << j), -3, 0, 1, (1 << j)}) {
                if (std::abs(l) > (1 << j)) continue;
                Mat2 m = mat_BA(j, l, cone);
                RationalMat2 inv = mat_BA_inverse(j, l, cone);
                CHECK(inv.den == pow4(j));
                // m * inv.m must be den * identity, exactly in integers
                CHECK(m.a * inv.m.a + m.b * inv.m.c == inv.den);
                CHECK(m.a * inv.m.b + m.b * inv.m.d == 0);
                CHECK(m.c * inv.m.a + m.d * inv.m.c == 0);
                CHECK(m.c * inv.m.b + m.d * inv.m.d == inv.den);
            }
        }
    }
}

TEST_CASE("anisotropic cubes: measure and tiling") {
    ShearletIndex idx;
    idx.band = BandId{System::ConeProjected, ConeTag::Horizontal, 2, 1, false};
    idx.k1 = 3;
    idx.k2 = -5;
    CHECK(std::fabs(cube_of(idx).measure - 1.0 / 64.0) <= 1e-18);

    idx.band.j = 0;
    CHECK(std::fabs(cube_of(idx).measure - 1.0) <= 1e-18);

    // seam bands live on a half-step lattice: quarter-size cubes
    ShearletIndex bidx;
    bidx.band = BandId{System::SmoothParseval, ConeTag::Horizontal, 2, 4, true};
    CHECK(std::fabs(cube_of(bidx).measure - 1.0 / 256.0) <= 1e-18);

    // every point lands in exactly one cube of a fixed (j,l)
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int t = 0; t < 500; ++t) {
        int j = int(rng() % 4), l = int(rng() % (2 * pow2(j) + 1)) - int(pow2(j));
        ConeTag cone = (rng() & 1) ? ConeTag::Horizontal : ConeTag::Vertical;
        double x1 = u(rng), x2 = u(rng);
        Mat2 m = mat_BA(j, l, cone);
        double y1 = double(m.a) * x1 + double(m.b) * x2;
        double y2 = double(m.c) * x1 + double(m.d) * x2;
        int64_t k1 = int64_t(std::floor(y1)), k2 = int64_t(std::floor(y2));
        int hits = 0;
        for (int64_t d1 = -1; d1 <= 1; ++d1)
            for (int64_t d2 = -1; d2 <= 1; ++d2)
                if (cube_contains(j, l, cone, k1 + d1, k2 + d2, x1, x2)) ++hits;
        CHECK(hits == 1);
        CHECK(cube_contains(j, l, cone, k1, k2, x1, x2));
    }
}

TEST_CASE("translation lattice points and periods") {
    BandId b{System::ConeProjected, ConeTag::Horizontal, 2, 3, false};
    auto [x1, x2] = lattice_point(b, 7, 2);
    // A^{-2}B^{-3}(7,2) = ((7 - 3*2)/16, 2/4)
    CHECK(x1 == Rational(1, 16));
    CHECK(x2 == Rational(1, 2));
    CHECK(band_period(b) == 16);

    BandId seam{System::SmoothParseval, ConeTag::Horizontal, 2, 4, true};
    CHECK(band_period(seam) == 32);
    auto [s1, s2] = lattice_point(seam, 1, 0);
    CHECK(s1 == Rational(1, 32));

    BandId coarse;
    CHECK(coarse.coarse());
    CHECK(band_period(coarse) == 1);
}

TEST_CASE("smallest stretch of the matrix family") {
    struct Row {
        int j, l;
        double v;
    };
    const Row table[] = {
        {0, 0, 1.0},
        {0, 1, 0.6180339887498949},
        {1, 1, 1.7480640977950347},
        {1, 2, 1.3694832979635593},
        {2, 4, 2.8062484748656971},
        {3, -5, 6.7732194957772807},
        {6, 64, 45.253452906932658},
    };
    for (const Row& r : table) {
        double got = min_stretch(r.j, r.l);
        CHECK(std::fabs(got - r.v) <= 1e-9 * r.v);
        // shear sign cannot matter
        CHECK(std::fabs(min_stretch(r.j, -r.l) - got) <= 1e-12 * got);
    }
    // cross-check against a dense directional scan
    for (const Row& r : {Row{1, 1, 0}, Row{2, 4, 0}, Row{3, -5, 0}}) {
        double ms = min_stretch(r.j, r.l);
        double scan = circle_min(mat_BA(r.j, r.l, ConeTag::Horizontal));
        CHECK(scan >= ms * (1.0 - 1e-9));
        CHECK(scan <= ms * (1.0 + 1e-6));
    }
}

TEST_CASE("band enumeration") {
    auto smooth1 = system_bands(System::SmoothParseval, 1);
    CHECK(smooth1.size() == 13);  // coarse + 4 + 8, seams listed once
    CHECK(smooth1[0].coarse());
    int seams = 0;
    for (const BandId& b : smooth1)
        if (b.boundary) ++seams;
    CHECK(seams == 4);  // |l| = 2^j for j = 0, 1

    auto cone1 = system_bands(System::ConeProjected, 1);
    CHECK(cone1.size() == 17);  // coarse + 2 * (3 + 5), both cones keep their seam rows
    for (const BandId& b : cone1) CHECK(!b.boundary);

    // deterministic order: repeated calls agree element-wise
    auto again = system_bands(System::SmoothParseval, 1);
    for (size_t t = 0; t < smooth1.size(); ++t) {
        CHECK(smooth1[t].cone == again[t].cone);
        CHECK(smooth1[t].j == again[t].j);
        CHECK(smooth1[t].l == again[t].l);
        CHECK(smooth1[t].boundary == again[t].boundary);
    }

    // cone selection: low-frequency request yields exactly the coarse band
    auto low = enumerate_indices(System::ConeProjected, 3, {ConeTag::LowFrequency});
    CHECK(low.size() == 1);
    CHECK(low[0].coarse());

    auto horiz = enumerate_indices(System::ConeProjected, 2, {ConeTag::Horizontal});
    CHECK(horiz.size() == 17);  // 3 + 5 + 9, no coarse
    for (const BandId& b : horiz) CHECK(b.cone == ConeTag::Horizontal);
}
