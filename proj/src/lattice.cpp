#include "shearlet/lattice.hpp"

#include <cmath>

namespace shearlet {

Mat2 mat_BA(int j, int l, ConeTag cone) {
    if (j < 0) throw config_error("mat_BA: negative scale");
    int64_t lim = pow2(j);
    if (l > lim || l < -lim) throw config_error("mat_BA: shear out of range");
    int64_t a4 = pow4(j), a2 = pow2(j);
    if (cone == ConeTag::Vertical) return Mat2{a2, 0, l * a2, a4};
    return Mat2{a4, l * a2, 0, a2};  // horizontal (and seam bands, h coordinates)
}

RationalMat2 mat_BA_inverse(int j, int l, ConeTag cone) {
    if (j < 0) throw config_error("mat_BA_inverse: negative scale");
    int64_t lim = pow2(j);
    if (l > lim || l < -lim) throw config_error("mat_BA_inverse: shear out of range");
    int64_t a4 = pow4(j), a2 = pow2(j);
    if (cone == ConeTag::Vertical) return RationalMat2{Mat2{a2, 0, -l, 1}, a4};
    return RationalMat2{Mat2{1, -l, 0, a2}, a4};
}

AnisoCube cube_of(const ShearletIndex& idx) {
    const BandId& b = idx.band;
    if (b.coarse())
        return AnisoCube{Rational(idx.k1, 1), Rational(idx.k2, 1), 1.0};
    RationalMat2 inv = mat_BA_inverse(b.j, b.l, b.cone);
    int64_t div = b.lattice_div();
    Rational c1(inv.m.a * idx.k1 + inv.m.b * idx.k2, inv.den * div);
    Rational c2(inv.m.c * idx.k1 + inv.m.d * idx.k2, inv.den * div);
    double measure = std::pow(8.0, -b.j) / double(div * div);
    return AnisoCube{c1, c2, measure};
}

bool cube_contains(int j, int l, ConeTag cone, int64_t k1, int64_t k2,
                   double x1, double x2) {
    Mat2 m = mat_BA(j, l, cone);
    double y1 = double(m.a) * x1 + double(m.b) * x2;
    double y2 = double(m.c) * x1 + double(m.d) * x2;
    return double(k1) <= y1 && y1 < double(k1) + 1.0 &&
           double(k2) <= y2 && y2 < double(k2) + 1.0;
}

std::pair<Rational, Rational> lattice_point(const BandId& band, int64_t k1, int64_t k2) {
    ShearletIndex idx{band, k1, k2};
    AnisoCube c = cube_of(idx);
    return {c.corner1, c.corner2};
}

int64_t band_period(const BandId& band) {
    if (band.coarse()) return 1;
    int64_t p = pow4(band.j);
    return band.lattice_div() * p;
}

double min_stretch(int j, int l) {
    // Gram of B^l A^j has trace T = 16^j + (l^2+1) 4^j and determinant 64^j
    double a4 = std::pow(4.0, j);
    double T = a4 * a4 + (double(l) * l + 1.0) * a4;
    double det = std::pow(8.0, j);
    double disc = std::sqrt(std::max(T * T - 4.0 * det * det, 0.0));
    return std::sqrt((T - disc) / 2.0);
}

std::vector<BandId> enumerate_indices(System system, int j_max,
                                      const std::vector<ConeTag>& cones) {
    if (j_max < 0) throw config_error("enumerate_indices: negative j_max");
    std::vector<BandId> out;
    for (ConeTag cone : cones) {
        if (cone == ConeTag::LowFrequency) {
            out.push_back(BandId{system, cone, -1, 0, false});
            continue;
        }
        for (int j = 0; j <= j_max; ++j) {
            int lim = int(pow2(j));
            for (int l = -lim; l <= lim; ++l) {
                bool seam = std::abs(l) == lim;
                if (system == System::SmoothParseval && seam) {
                    // seam bands are shared; emit once, in the horizontal pass
                    if (cone != ConeTag::Horizontal) continue;
                    out.push_back(BandId{system, ConeTag::Horizontal, j, l, true});
                } else {
                    out.push_back(BandId{system, cone, j, l, false});
                }
            }
        }
    }
    return out;
}

std::vector<BandId> system_bands(System system, int j_max) {
    return enumerate_indices(system, j_max,
                             {ConeTag::LowFrequency, ConeTag::Horizontal, ConeTag::Vertical});
}

}  // namespace shearlet
