#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shearlet/report.hpp"
#include "shearlet/spaces.hpp"

namespace shearlet {

// Each audit turns one quantitative claim into a measured table with an
// explicit pass flag.  All randomness is seeded and recorded; failing claims
// stay failing with the measured values on record.

// smallest singular value of B^l A^j vs the claimed 2^(j-1/2) floor, all
// scales up to j_max, all shears
AuditReport audit_lemma71(int j_max = 6);

// polynomially weighted envelopes of cross-band window convolutions;
// decay_list holds the envelope exponents
AuditReport audit_almost_orthogonality(int N, const std::vector<int>& j_list = {1, 2, 3, 4},
                                       const std::vector<int>& decay_list = {3, 5});

// |band field| convolved against the matching isotropic low-pass: height
// scaling across scales plus envelope constants
AuditReport audit_shearlet_wavelet_decay(int N, const std::vector<int>& j_list = {1, 2, 3});

// sequence_norm(analyze(f))/function_norm(f) and the synthesis-direction
// counterpart on seeded ensembles, N vs 2N
AuditReport audit_operator_bounds(int N, const std::vector<SpaceParams>& params,
                                  std::uint64_t seed = 42);

// norm ratio target/source over an atom ensemble; direction names the source
// family first: "dyadic_to_ab" or "ab_to_dyadic".  Throws config_error when
// the hypothesis inequality fails.
AuditReport audit_embeddings(int N, double alpha1, double alpha2, double p, double q,
                             const std::string& direction, std::uint64_t seed = 42);

// normalized single-atom families: source norms, fitted decay slope of the
// target norm, and the predicted exponent.  N = 0 picks the direction's
// default grid.  Throws config_error when the hypothesis inequality fails.
AuditReport audit_fading(const std::string& direction, double alpha1, double alpha2,
                         double p1, double p2, double q1, double q2,
                         int j_lo = 1, int j_hi = 4, int N = 0);

// weighted-sup maximal function vs box maximal function, and the spectral
// derivative variant, at N and 2N
AuditReport audit_peetre(int N, std::uint64_t seed = 42);

// smoothed-majorant norm equivalence plus its pointwise box-maximal bound
AuditReport audit_sstar(int N, int n_seeds = 20, std::uint64_t seed = 42);

// vector-valued box maximal inequality constants over p,q in {1.5,2,4}
AuditReport audit_fs(int N, std::uint64_t seed = 42);

// least-squares slope of y against x
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace shearlet
