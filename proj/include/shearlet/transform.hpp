#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "shearlet/common.hpp"
#include "shearlet/frame.hpp"
#include "shearlet/lattice.hpp"

namespace shearlet {

// Band-limited periodic signal on the unit torus, sampled at n/N.  The two
// representations are kept in lockstep: samples[n] = sum_xi spec[xi] e^{2 pi i xi.n/N}
// with xi running over the centred integer frequency window of the grid.
struct PeriodicSignal {
    int N = 0;
    ComplexGrid samples;  // spatial values, row n1, column n2
    ComplexGrid spec;     // DFT coefficients in natural FFT order

    static PeriodicSignal from_spectrum(ComplexGrid spec);
    static PeriodicSignal from_samples(ComplexGrid samples);
};

// sum_xi |spec|^2 == (1/N^2) sum_n |samples|^2
double signal_energy(const PeriodicSignal& f);

// Evaluate the trigonometric interpolant at an arbitrary point (off-grid ok).
cd eval_signal(const PeriodicSignal& f, double x1, double x2);

// Full-grid iid complex Gaussian spectrum, and a low-pass variant restricted
// to max(|xi1|,|xi2|) <= box.
ComplexGrid random_spectrum(int N, std::mt19937_64& rng);
ComplexGrid random_lowpass_spectrum(int N, int box, std::mt19937_64& rng);

double band_amp(const BandId& b);     // coefficient normalisation 8^{-j/2} (seam: extra 2^{-1/2})
double band_weight(const BandId& b);  // dual weight making synthesize the exact inverse

// One band's coefficient block.  Coefficients live on the residue torus of the
// band's translation lattice: c is P1 x P2 with k taken mod (P1, P2).  Bands whose
// window vanishes identically on the grid keep an empty block.
struct BandCoefficients {
    BandId band;
    int64_t P1 = 1, P2 = 1;
    ComplexGrid c;
    double amp = 1.0;
    double weight = 1.0;
    bool empty() const { return c.v.empty(); }
};

struct CoefficientMap {
    System system = System::SmoothParseval;
    int N = 0;
    int j_max = 0;
    bool absorbed = false;
    std::vector<BandCoefficients> bands;

    double weighted_energy() const;  // sum_b weight * sum_k |c_k|^2
    BandCoefficients* find(const BandId& b);
    const BandCoefficients* find(const BandId& b) const;
    cd coefficient(const ShearletIndex& idx) const;  // k reduced mod the block period
};

// residue period of the translation lattice intersected with Z^2
std::pair<int64_t, int64_t> band_periods(const BandId& b);

// absorbed < 0 means automatic: absorb the top scale exactly when 4^j_max == N
CoefficientMap analyze(const PeriodicSignal& f, System system, int j_max, int absorbed = -1);
PeriodicSignal synthesize(const CoefficientMap& cm);

// Builds a coefficient map with all blocks zeroed (windows still decide block
// existence), then scatters the given entries.
CoefficientMap coefficients_from_entries(System system, int N, int j_max,
                                         const std::vector<std::pair<ShearletIndex, cd>>& entries,
                                         int absorbed = -1);

// f filtered by one band window (multiplier applied once)
PeriodicSignal band_convolve(const PeriodicSignal& f, const BandId& b, int top_j = -1);

// Relative L2 defect of sum_b |m_b|^2 applied as a Fourier multiplier vs identity.
double littlewood_paley_residual(const PeriodicSignal& f, int j_max = -1);

// Checks the band-limited sampling identity: continuum convolution of two
// random functions in the band equals the weighted sum of translates over the
// band's sample lattice.  Returns the peak residual relative to the peak of
// the convolution.
double sampling_identity_residual(const BandId& b, int N, std::uint64_t seed,
                                  int top_j = -1);

// Binary grid container: magic "SHGRID01", u32 LE side length, then N^2
// row-major (re, im) float64 pairs of the spatial samples.
void save_signal(const PeriodicSignal& f, const std::string& path);
PeriodicSignal load_signal(const std::string& path);

// Sparse JSON coefficient interchange: array of {system, cone, j, l, k, re, im};
// entries with |c| < 1e-14 are dropped.
std::string coefficients_to_json(const CoefficientMap& cm);
std::vector<std::pair<ShearletIndex, cd>> coefficient_entries_from_json(const std::string& text);

}  // namespace shearlet
