#pragma once

#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "shearlet/common.hpp"
#include "shearlet/lattice.hpp"
#include "shearlet/transform.hpp"

namespace shearlet {

enum class Family { ABShear, Dyadic };

// smoothness/integrability parameters of a coefficient or function space.
// q (and p) may be +infinity: sums become sups.
struct SpaceParams {
    double alpha = 0.0;
    double p = 2.0;
    double q = 2.0;
    Family family = Family::ABShear;
};

// r-mean with polynomial decay kernel for the smoothed coefficient majorant
struct SStarParams {
    double r = 1.0;
    double decay = 6.0;
};

// Per-band cube family carrying one nonnegative value per anisotropic cube.
// Interior cubes tile the torus 4^j x 2^j (horizontal; swapped vertical);
// seam cubes live on the half-step lattice; Dyadic blocks are square 2^nu
// grids (j stores nu).
enum class CubeKind { Coarse, Interior, Boundary, BoundarySingle, Dyadic };

struct CubeBlock {
    CubeKind kind = CubeKind::Interior;
    int j = 0;
    int l = 0;
    ConeTag cone = ConeTag::Horizontal;
    int P1 = 1, P2 = 1;
    RealGrid V;

    double measure() const { return 1.0 / (double(P1) * double(P2)); }
};

using CubeMap = std::vector<CubeBlock>;

CubeBlock make_cube_block(CubeKind kind, int j, int l, ConeTag cone);  // zeroed values
CubeBlock make_dyadic_block(int nu);

// one value per cube from a transform block (coefficients agree across the
// fibre of k's sharing a translation point, so any representative works)
CubeBlock collapse_band(const BandCoefficients& bc);
CubeMap to_cubes(const CoefficientMap& cm);

// paint x -> vals[cube containing x] over the N-grid; membership decided in
// exact integer arithmetic
RealGrid cube_field(const CubeBlock& b, const RealGrid& vals, int N);
inline RealGrid cube_field(const CubeBlock& b, int N) { return cube_field(b, b.V, N); }

// (sum |f|^p / N^2)^{1/p}; p = inf gives the max
double lp_quad(const RealGrid& f, double p);
double lp_quad(const ComplexGrid& f, double p);

double sequence_norm(const CubeMap& cm, int N, const SpaceParams& sp);
double sequence_norm(const CoefficientMap& cm, const SpaceParams& sp);

// smoothed majorant (s*)_Q = (sum_P w(Q,P) V_P^r)^{1/r}, w = (1+2^j dist)^-decay
RealGrid s_star_block(const CubeBlock& b, const SStarParams& sp);
CubeMap s_star(const CubeMap& cm, const SStarParams& sp);

// iid |N(0,1)| values on the full smooth-system cube structure up to j_max
CubeMap random_cube_map(int j_max, std::mt19937_64& rng);

// centred-square Hardy-Littlewood maximal function on the torus grid,
// dyadic ladder of box radii, exact partial sums
RealGrid hl_max(const RealGrid& f);

// out(x) = max_s |a((x - s) mod N)| / w(s)
RealGrid offset_max(const RealGrid& a, const RealGrid& w);

// wrapped offset coordinates y(n) = (n <= N/2 ? n : n - N)/N
std::pair<RealGrid, RealGrid> wrapped_offsets(int N);

// anisotropic Peetre weight (1 + |B^l A^j y|)^{2 lambda}; coarse band gets the
// isotropic weight
RealGrid peetre_weight(const BandId& b, int N, double lambda);

// sup-over-shifts maximal function of the band convolution
RealGrid peetre_max(const PeriodicSignal& f, const BandId& b, double lambda, int top_j = -1);

// Function-space quasi-norm from the frequency decomposition itself: coarse
// low-pass term plus the weighted q-stack over bands.  ABShear uses the
// unmasked shear bands of the requested system; Dyadic uses the isotropic
// annuli.
double function_norm(const PeriodicSignal& f, const SpaceParams& sp,
                     System system = System::ConeProjected);

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace shearlet
