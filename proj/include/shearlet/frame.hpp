#pragma once

#include "shearlet/common.hpp"
#include "shearlet/lattice.hpp"

#include <vector>

namespace shearlet {

// N x N integer-frequency lattice for 1-periodic band-limited signals.
// j_max here is the grid capacity (largest resolvable scale).
struct FrequencyGrid {
    int N = 128;
    int j_max = 3;
    static FrequencyGrid make(int N, int j_max = -1);
};

// absorbing the top scale closes the partition on the full grid; only legal
// when the top band reaches exactly to the Nyquist ring
inline bool default_absorbed(int N, int j_max) { return pow4(j_max) == N; }

ConeTag cone_of(double xi1, double xi2);

// window magnitude of one system band at one frequency. top_j is the absorbed
// top scale (-1: none). Translation phases are applied by the transform.
double window_value(const BandId& band, double xi1, double xi2, int top_j);

// pristine affine dilation of the generator: no cone cut, no absorption;
// l may be +-2^j in either cone
double affine_window_value(int j, int l, ConeTag cone, double xi1, double xi2);

// full-grid samples in FFT natural frequency order
RealGrid sample_window(const BandId& band, int N, int top_j);
RealGrid sample_affine_window(int j, int l, ConeTag cone, int N);

// exact analytic support, used for overlap counting and fast iteration.
// main-axis modulus in (rad_lo, rad_hi), other/main slope in (slope_lo,
// slope_hi), all open; smooth-system bands bound max(|xi1|,|xi2|) instead of
// the main axis alone. Seam bands glue both cones: their far-cone side
// stretches the slope interval to 2^j/(|l|-1), which at j=0 is a half-line
// (flagged unbounded).
struct SupportBox {
    bool coarse = false;       // box (-1/4,1/4)^2
    ConeTag axis = ConeTag::Horizontal;
    bool inf_norm_radial = false;
    Rational rad_lo, rad_hi;
    Rational slope_lo, slope_hi;
    bool slope_lo_unbounded = false, slope_hi_unbounded = false;
};

SupportBox support_box(const BandId& band);
SupportBox affine_support_box(int j, int l, ConeTag cone);
bool boxes_intersect(const SupportBox& a, const SupportBox& b);

struct PartitionReport {
    System system;
    int N = 0;
    int j_max = 0;
    bool absorbed = false;
    double max_dev = 0.0;
    double max_dev_nonseam = 0.0;  // cone system: excluding |xi1|=|xi2|, |xi1|>=1/8
    double max_dev_seam = 0.0;
    RealGrid residual;             // per-frequency |sum of squares - 1|
};

PartitionReport partition_of_unity(System system, const FrequencyGrid& grid);

struct BandOverlap {
    int j = 0, l = 0;
    std::vector<std::pair<int, int>> interacting;  // (i,m) with intersecting support
};

// horizontal-cone support intersections, scales up to j_max (analytic, exact)
struct OverlapReport {
    int j_max = 0;
    int max_count = 0;
    std::vector<BandOverlap> bands;
};

OverlapReport overlap_count(int j_max);

}  // namespace shearlet
