#include "shearlet/frame.hpp"

#include "shearlet/generators.hpp"

#include <cmath>

namespace shearlet {

FrequencyGrid FrequencyGrid::make(int N, int j_max) {
    if (N < 2 || (N & (N - 1)) != 0)
        throw config_error("grid size must be a power of two");
    int cap = default_j_max(N);
    if (j_max < 0) j_max = cap;
    if (j_max > cap) throw config_error("requested scale exceeds grid capacity");
    return FrequencyGrid{N, j_max};
}

ConeTag cone_of(double xi1, double xi2) {
    double a1 = std::fabs(xi1), a2 = std::fabs(xi2);
    if (a1 >= 0.125 && a2 <= a1) return ConeTag::Horizontal;  // seam ties go horizontal
    if (a2 >= 0.125 && a1 < a2) return ConeTag::Vertical;
    return ConeTag::LowFrequency;
}

namespace {

inline double sq(double x) { return x * x; }

// radial factor of a cone-projected band along its main axis; the absorbed
// top scale extends the plateau outward so the discrete cover closes
inline double cone_radial_sq(double w, int j, bool top) {
    if (!top) return psi1_hat_sq(w);
    double m = meyer_low_1d(w);
    return std::max(1.0 - m * m, 0.0);
}

}  // namespace

double window_value(const BandId& b, double x1, double x2, int top_j) {
    if (b.coarse()) {
        if (b.system == System::SmoothParseval) return std::sqrt(big_phi_hat_sq(x1, x2));
        if (cone_of(x1, x2) != ConeTag::LowFrequency) return 0.0;
        return phi_coarse_hat(x1, x2);
    }
    double sj = std::ldexp(1.0, -2 * b.j);
    double twoj = double(pow2(b.j));
    if (b.system == System::SmoothParseval) {
        double w2 = w_hat_sq_scaled(x1, x2, b.j, b.j == top_j);
        if (w2 <= 0.0) return 0.0;
        double num, den;
        if (b.boundary) {
            if (std::fabs(x2) <= std::fabs(x1)) { num = x2; den = x1; }
            else { num = x1; den = x2; }
        } else if (b.cone == ConeTag::Horizontal) {
            num = x2; den = x1;
        } else {
            num = x1; den = x2;
        }
        if (den == 0.0) return 0.0;
        return std::sqrt(w2) * psi2_hat(twoj * (num / den) - b.l);
    }
    if (cone_of(x1, x2) != b.cone) return 0.0;
    double main = (b.cone == ConeTag::Horizontal) ? x1 : x2;
    double other = (b.cone == ConeTag::Horizontal) ? x2 : x1;
    double p1 = cone_radial_sq(sj * main, b.j, b.j == top_j);
    if (p1 <= 0.0) return 0.0;
    return std::sqrt(p1) * psi2_hat(twoj * (other / main) - b.l);
}

double affine_window_value(int j, int l, ConeTag cone, double x1, double x2) {
    double main = (cone == ConeTag::Horizontal) ? x1 : x2;
    double other = (cone == ConeTag::Horizontal) ? x2 : x1;
    if (main == 0.0) return 0.0;
    double p1 = psi1_hat_sq(std::ldexp(main, -2 * j));
    if (p1 <= 0.0) return 0.0;
    return std::sqrt(p1) * psi2_hat(double(pow2(j)) * (other / main) - l);
}

RealGrid sample_window(const BandId& b, int N, int top_j) {
    RealGrid out(N, N, 0.0);
    std::vector<double> f(N);
    for (int i = 0; i < N; ++i) f[i] = double(freq_of(i, N));

    if (b.coarse()) {
        if (b.system == System::SmoothParseval) {
            std::vector<double> low(N);
            for (int i = 0; i < N; ++i) low[i] = meyer_low_1d(f[i]);
            parallel_for(N, [&](int i) {
                for (int k = 0; k < N; ++k) out(i, k) = low[i] * low[k];
            });
        } else {
            std::vector<double> low(N);
            for (int i = 0; i < N; ++i) low[i] = phi_coarse_1d(f[i]);
            parallel_for(N, [&](int i) {
                for (int k = 0; k < N; ++k)
                    if (cone_of(f[i], f[k]) == ConeTag::LowFrequency)
                        out(i, k) = low[i] * low[k];
            });
        }
        return out;
    }

    double sj = std::ldexp(1.0, -2 * b.j);
    double twoj = double(pow2(b.j));
    if (b.system == System::SmoothParseval) {
        bool top = (b.j == top_j);
        // the scale profile is a separable telescoping difference; hoist the
        // two 1-d squared factors
        std::vector<double> inner(N), outer(N);
        for (int i = 0; i < N; ++i) {
            inner[i] = sq(meyer_low_1d(sj * f[i]));
            outer[i] = top ? 1.0 : sq(meyer_low_1d(0.25 * sj * f[i]));
        }
        parallel_for(N, [&](int i) {
            for (int k = 0; k < N; ++k) {
                double w2 = std::max(outer[i] * outer[k] - inner[i] * inner[k], 0.0);
                if (w2 <= 0.0) continue;
                double num, den;
                if (b.boundary) {
                    if (std::fabs(f[k]) <= std::fabs(f[i])) { num = f[k]; den = f[i]; }
                    else { num = f[i]; den = f[k]; }
                } else if (b.cone == ConeTag::Horizontal) {
                    num = f[k]; den = f[i];
                } else {
                    num = f[i]; den = f[k];
                }
                if (den == 0.0) continue;
                out(i, k) = std::sqrt(w2) * psi2_hat(twoj * (num / den) - b.l);
            }
        });
        return out;
    }

    bool top = (b.j == top_j);
    std::vector<double> rad(N);
    for (int i = 0; i < N; ++i)
        rad[i] = std::sqrt(cone_radial_sq(sj * f[i], b.j, top));
    if (b.cone == ConeTag::Horizontal) {
        parallel_for(N, [&](int i) {
            if (rad[i] == 0.0) return;
            for (int k = 0; k < N; ++k) {
                if (cone_of(f[i], f[k]) != ConeTag::Horizontal) continue;
                out(i, k) = rad[i] * psi2_hat(twoj * (f[k] / f[i]) - b.l);
            }
        });
    } else {
        parallel_for(N, [&](int i) {
            for (int k = 0; k < N; ++k) {
                if (rad[k] == 0.0) continue;
                if (cone_of(f[i], f[k]) != ConeTag::Vertical) continue;
                out(i, k) = rad[k] * psi2_hat(twoj * (f[i] / f[k]) - b.l);
            }
        });
    }
    return out;
}

RealGrid sample_affine_window(int j, int l, ConeTag cone, int N) {
    RealGrid out(N, N, 0.0);
    std::vector<double> f(N), rad(N);
    double sj = std::ldexp(1.0, -2 * j);
    double twoj = double(pow2(j));
    for (int i = 0; i < N; ++i) {
        f[i] = double(freq_of(i, N));
        rad[i] = psi1_hat(sj * f[i]);
    }
    if (cone == ConeTag::Horizontal) {
        parallel_for(N, [&](int i) {
            if (rad[i] == 0.0) return;
            for (int k = 0; k < N; ++k)
                out(i, k) = rad[i] * psi2_hat(twoj * (f[k] / f[i]) - l);
        });
    } else {
        parallel_for(N, [&](int i) {
            for (int k = 0; k < N; ++k) {
                if (rad[k] == 0.0) continue;
                out(i, k) = rad[k] * psi2_hat(twoj * (f[i] / f[k]) - l);
            }
        });
    }
    return out;
}

SupportBox affine_support_box(int j, int l, ConeTag cone) {
    SupportBox box;
    box.axis = cone;
    box.rad_lo = Rational(pow4(j), 16);
    box.rad_hi = Rational(pow4(j), 2);
    box.slope_lo = Rational(l - 1, pow2(j));
    box.slope_hi = Rational(l + 1, pow2(j));
    return box;
}

SupportBox support_box(const BandId& b) {
    if (b.coarse()) {
        SupportBox box;
        box.coarse = true;
        return box;
    }
    SupportBox box = affine_support_box(b.j, b.l, b.boundary ? ConeTag::Horizontal : b.cone);
    box.inf_norm_radial = (b.system == System::SmoothParseval);
    if (b.boundary) {
        // glued far-cone side: inverse slope lies in the affine window's range,
        // so the slope hull widens to 2^j/(|l|-1); at j=0 that is a half-line
        if (b.l > 0) {
            if (b.j == 0) box.slope_hi_unbounded = true;
            else box.slope_hi = Rational(pow2(b.j), b.l - 1);
        } else {
            if (b.j == 0) box.slope_lo_unbounded = true;
            else box.slope_lo = Rational(pow2(b.j), b.l + 1);
        }
    }
    return box;
}

bool boxes_intersect(const SupportBox& a, const SupportBox& b) {
    if (a.coarse || b.coarse)
        throw config_error("boxes_intersect: coarse boxes not comparable");
    if (a.axis != b.axis)
        throw config_error("boxes_intersect: mixed-axis comparison unsupported");
    Rational rlo = std::max(a.rad_lo, b.rad_lo), rhi = std::min(a.rad_hi, b.rad_hi);
    if (!(rlo < rhi)) return false;
    if ((a.slope_lo_unbounded && b.slope_lo_unbounded) ||
        (a.slope_hi_unbounded && b.slope_hi_unbounded))
        return true;
    Rational slo = a.slope_lo_unbounded
                       ? b.slope_lo
                       : (b.slope_lo_unbounded ? a.slope_lo : std::max(a.slope_lo, b.slope_lo));
    Rational shi = a.slope_hi_unbounded
                       ? b.slope_hi
                       : (b.slope_hi_unbounded ? a.slope_hi : std::min(a.slope_hi, b.slope_hi));
    return slo < shi;
}

PartitionReport partition_of_unity(System system, const FrequencyGrid& grid) {
    PartitionReport rep;
    rep.system = system;
    rep.N = grid.N;
    rep.j_max = grid.j_max;
    rep.absorbed = default_absorbed(grid.N, grid.j_max);
    int top_j = rep.absorbed ? grid.j_max : -1;
    int N = grid.N;

    RealGrid acc(N, N, 0.0);
    for (const BandId& b : system_bands(system, grid.j_max)) {
        RealGrid m = sample_window(b, N, top_j);
        parallel_for(N, [&](int i) {
            for (int k = 0; k < N; ++k) acc(i, k) += m(i, k) * m(i, k);
        });
    }

    rep.residual = RealGrid(N, N, 0.0);
    double dev_all = 0.0, dev_ns = 0.0, dev_seam = 0.0;
    for (int i = 0; i < N; ++i) {
        double x1 = double(freq_of(i, N));
        for (int k = 0; k < N; ++k) {
            double x2 = double(freq_of(k, N));
            double d = std::fabs(acc(i, k) - 1.0);
            rep.residual(i, k) = d;
            dev_all = std::max(dev_all, d);
            bool seam = std::fabs(x1) == std::fabs(x2) && std::fabs(x1) >= 0.125;
            if (system == System::ConeProjected && seam)
                dev_seam = std::max(dev_seam, d);
            else
                dev_ns = std::max(dev_ns, d);
        }
    }
    rep.max_dev = dev_all;
    rep.max_dev_nonseam = dev_ns;
    rep.max_dev_seam = dev_seam;
    return rep;
}

OverlapReport overlap_count(int j_max) {
    OverlapReport rep;
    rep.j_max = j_max;
    for (int j = 0; j <= j_max; ++j) {
        int lim = int(pow2(j));
        for (int l = -lim; l <= lim; ++l) {
            BandOverlap bo{j, l, {}};
            SupportBox self = affine_support_box(j, l, ConeTag::Horizontal);
            for (int i = std::max(0, j - 1); i <= std::min(j_max, j + 1); ++i) {
                // radial ranges at adjacent scales may be disjoint; check once
                SupportBox probe = affine_support_box(i, 0, ConeTag::Horizontal);
                Rational rlo = std::max(self.rad_lo, probe.rad_lo);
                Rational rhi = std::min(self.rad_hi, probe.rad_hi);
                if (!(rlo < rhi)) continue;
                int mlim = int(pow2(i));
                for (int m = -mlim; m <= mlim; ++m) {
                    if (i == j && m == l) continue;
                    SupportBox other = affine_support_box(i, m, ConeTag::Horizontal);
                    Rational slo = std::max(self.slope_lo, other.slope_lo);
                    Rational shi = std::min(self.slope_hi, other.slope_hi);
                    if (slo < shi) bo.interacting.emplace_back(i, m);
                }
            }
            rep.max_count = std::max(rep.max_count, int(bo.interacting.size()));
            rep.bands.push_back(std::move(bo));
        }
    }
    return rep;
}

}  // namespace shearlet
