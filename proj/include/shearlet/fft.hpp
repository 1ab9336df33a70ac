#pragma once

#include "shearlet/common.hpp"

// FFT conventions for 1-periodic signals sampled at x=n/N:
//   field(spec)[n]  = sum_xi spec[xi] e^{+2pi i xi.n/N}   (unnormalized backward)
//   spectrum(s)[xi] = (1/N^2) sum_n s[n] e^{-2pi i xi.n/N}
// so field(spectrum(s)) == s and Plancherel reads sum|s|^2/N^2 == sum|spec|^2.

namespace shearlet {

// raw unnormalized square transform, sign=-1 forward, sign=+1 backward
void dft2(const ComplexGrid& in, ComplexGrid& out, int sign);

ComplexGrid field_of_spectrum(const ComplexGrid& spec);
ComplexGrid spectrum_of_field(const ComplexGrid& samples);

}  // namespace shearlet
