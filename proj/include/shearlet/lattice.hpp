#pragma once

#include "shearlet/common.hpp"

#include <numeric>
#include <vector>

namespace shearlet {

enum class System { ConeProjected, SmoothParseval };
enum class ConeTag { Horizontal, Vertical, LowFrequency };

// one (j,l) band of one system. j=-1 is the coarse band (cone LowFrequency).
// boundary marks |l|=2^j seam bands of the smooth system, which glue the two
// cones into a single window family on a half-step lattice (j>=1).
struct BandId {
    System system = System::SmoothParseval;
    ConeTag cone = ConeTag::LowFrequency;
    int j = -1;
    int l = 0;
    bool boundary = false;

    bool coarse() const { return j < 0; }
    // denominator of the extra lattice refinement for seam bands
    int lattice_div() const { return (boundary && j >= 1) ? 2 : 1; }
};

struct ShearletIndex {
    BandId band;
    int64_t k1 = 0, k2 = 0;
};

// exact dyadic rational, den > 0
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }
    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// row-major [[a,b],[c,d]], integer entries
struct Mat2 {
    int64_t a = 1, b = 0, c = 0, d = 1;
    int64_t det() const { return a * d - b * c; }
};

// integer matrix divided by a common power-of-two denominator
struct RationalMat2 {
    Mat2 m;
    int64_t den = 1;
};

// B^l A^j for the requested cone; exact integer entries
Mat2 mat_BA(int j, int l, ConeTag cone);

// exact inverse A^{-j} B^{-l} = m/den with den = 4^j
RationalMat2 mat_BA_inverse(int j, int l, ConeTag cone);

struct AnisoCube {
    Rational corner1, corner2;  // A^{-j}B^{-l}k
    double measure = 1.0;       // 8^{-j}
};

AnisoCube cube_of(const ShearletIndex& idx);

// x in Q_{j,l,k} with the half-open convention: B^l A^j x - k in [0,1)^2
bool cube_contains(int j, int l, ConeTag cone, int64_t k1, int64_t k2,
                   double x1, double x2);

// translation point x_k = A^{-j}B^{-l}k (boundary bands: half-step lattice)
std::pair<Rational, Rational> lattice_point(const BandId& band, int64_t k1, int64_t k2);

// phase period of the digital translation lattice: coefficients repeat with
// k mod P per coordinate. coarse 1, boundary j>=1 2*4^j, else 4^j
int64_t band_period(const BandId& band);

// smallest singular value of B^l A^j, closed form from trace/det of the Gram
double min_stretch(int j, int l);

// deterministic band enumeration, cone-major then j then l. Requesting
// LowFrequency yields the coarse band. Under SmoothParseval the seam bands
// |l|=2^j appear once, in the Horizontal pass.
std::vector<BandId> enumerate_indices(System system, int j_max,
                                      const std::vector<ConeTag>& cones);

// full canonical band list: coarse, then horizontal, then vertical
std::vector<BandId> system_bands(System system, int j_max);

}  // namespace shearlet
