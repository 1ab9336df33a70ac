#include "shearlet/spaces.hpp"

#include <algorithm>
#include <cmath>

#include "shearlet/fft.hpp"
#include "shearlet/frame.hpp"
#include "shearlet/generators.hpp"

namespace shearlet {

namespace {

inline bool is_inf(double x) { return std::isinf(x); }

std::pair<int, int> cube_shape(CubeKind kind, int j, ConeTag cone) {
    switch (kind) {
        case CubeKind::Coarse:
        case CubeKind::BoundarySingle:
            return {1, 1};
        case CubeKind::Boundary:
            return {int(2 * pow4(j)), int(pow2(j + 1))};
        case CubeKind::Dyadic:
            return {int(pow2(j)), int(pow2(j))};
        case CubeKind::Interior:
        default:
            if (cone == ConeTag::Horizontal) return {int(pow4(j)), int(pow2(j))};
            return {int(pow2(j)), int(pow4(j))};
    }
}

}  // namespace

CubeBlock make_cube_block(CubeKind kind, int j, int l, ConeTag cone) {
    CubeBlock b;
    b.kind = kind;
    b.j = j;
    b.l = l;
    b.cone = cone;
    auto [P1, P2] = cube_shape(kind, j, cone);
    b.P1 = P1;
    b.P2 = P2;
    b.V = RealGrid(P1, P2, 0.0);
    return b;
}

CubeBlock make_dyadic_block(int nu) {
    return make_cube_block(CubeKind::Dyadic, nu, 0, ConeTag::Horizontal);
}

CubeBlock collapse_band(const BandCoefficients& bc) {
    const BandId& id = bc.band;
    CubeKind kind = id.coarse() ? CubeKind::Coarse
                    : id.boundary ? (id.j >= 1 ? CubeKind::Boundary : CubeKind::BoundarySingle)
                                  : CubeKind::Interior;
    CubeBlock b = make_cube_block(kind, std::max(id.j, 0), id.l,
                                  id.boundary ? ConeTag::Horizontal : id.cone);
    if (bc.empty()) return b;
    int64_t P = bc.P1;
    // all k in one cube's fibre carry the same coefficient; read the
    // canonical representative
    for (int r1 = 0; r1 < b.P1; ++r1)
        for (int r2 = 0; r2 < b.P2; ++r2) {
            int64_t k1, k2;
            if (kind == CubeKind::Coarse || kind == CubeKind::BoundarySingle) {
                k1 = 0;
                k2 = 0;
            } else if (b.cone == ConeTag::Vertical) {
                k1 = r1;
                k2 = posmod(r2 + int64_t(id.l) * r1, P);
            } else {
                k1 = posmod(r1 + int64_t(id.l) * r2, P);
                k2 = r2;
            }
            b.V(r1, r2) = std::abs(bc.c(int(k1), int(k2)));
        }
    return b;
}

CubeMap to_cubes(const CoefficientMap& cm) {
    CubeMap out;
    for (const BandCoefficients& bc : cm.bands) {
        if (bc.empty()) continue;
        out.push_back(collapse_band(bc));
    }
    return out;
}

RealGrid cube_field(const CubeBlock& b, const RealGrid& vals, int N) {
    RealGrid out(N, N, 0.0);
    if (b.kind == CubeKind::Coarse || b.kind == CubeKind::BoundarySingle) {
        std::fill(out.v.begin(), out.v.end(), vals(0, 0));
        return out;
    }
    int64_t l = b.l;
    if (b.kind == CubeKind::Dyadic) {
        int64_t P1 = b.P1, P2 = b.P2;
        parallel_for(N, [&](int n1) {
            int64_t r1 = posmod(floordiv(P1 * n1, N), P1);
            for (int n2 = 0; n2 < N; ++n2)
                out(n1, n2) = vals(int(r1), int(posmod(floordiv(P2 * n2, N), P2)));
        });
        return out;
    }
    if (b.kind == CubeKind::Boundary) {
        int64_t a4 = 2 * pow4(b.j), a2 = 2 * pow2(b.j);
        parallel_for(N, [&](int n1) {
            for (int n2 = 0; n2 < N; ++n2) {
                int64_t u1 = floordiv(a4 * n1 + l * a2 * n2, N);
                int64_t u2 = floordiv(a2 * n2, N);
                out(n1, n2) = vals(int(posmod(u1 - l * u2, a4)), int(posmod(u2, a2)));
            }
        });
        return out;
    }
    int64_t a4 = pow4(b.j), a2 = pow2(b.j);
    if (b.cone == ConeTag::Horizontal) {
        parallel_for(N, [&](int n1) {
            for (int n2 = 0; n2 < N; ++n2) {
                int64_t u1 = floordiv(a4 * n1 + l * a2 * n2, N);
                int64_t u2 = floordiv(a2 * n2, N);
                out(n1, n2) = vals(int(posmod(u1 - l * u2, a4)), int(posmod(u2, a2)));
            }
        });
    } else {
        parallel_for(N, [&](int n1) {
            int64_t u1 = floordiv(a2 * n1, N);
            int64_t r1 = posmod(u1, a2);
            for (int n2 = 0; n2 < N; ++n2) {
                int64_t u2 = floordiv(a4 * n2 + l * a2 * n1, N);
                out(n1, n2) = vals(int(r1), int(posmod(u2 - l * u1, a4)));
            }
        });
    }
    return out;
}

double lp_quad(const RealGrid& f, double p) {
    if (is_inf(p)) {
        double m = 0.0;
        for (double x : f.v) m = std::max(m, std::fabs(x));
        return m;
    }
    double s = 0.0;
    for (double x : f.v) s += std::pow(std::fabs(x), p);
    return std::pow(s / double(f.size()), 1.0 / p);
}

double lp_quad(const ComplexGrid& f, double p) {
    if (is_inf(p)) {
        double m = 0.0;
        for (const cd& z : f.v) m = std::max(m, std::abs(z));
        return m;
    }
    double s = 0.0;
    for (const cd& z : f.v) s += std::pow(std::abs(z), p);
    return std::pow(s / double(f.size()), 1.0 / p);
}

namespace {
void require_valid_exponents(const SpaceParams& sp, const char* who) {
    if (!(sp.p > 0.0) || !(sp.q > 0.0))
        throw config_error(std::string(who) + ": p and q must be positive");
}
}  // namespace

double sequence_norm(const CubeMap& cm, int N, const SpaceParams& sp) {
    require_valid_exponents(sp, "sequence_norm");
    bool qinf = is_inf(sp.q);
    double wexp = sp.family == Family::ABShear ? -(sp.alpha + 0.5) : -(0.5 * sp.alpha + 0.5);
    RealGrid acc(N, N, 0.0);
    for (const CubeBlock& b : cm) {
        double w = std::pow(b.measure(), wexp);
        RealGrid vals = b.V;
        for (double& x : vals.v) x *= w;
        RealGrid painted = cube_field(b, vals, N);
        if (qinf) {
            for (size_t t = 0; t < acc.size(); ++t) acc.v[t] = std::max(acc.v[t], painted.v[t]);
        } else {
            for (size_t t = 0; t < acc.size(); ++t) acc.v[t] += std::pow(painted.v[t], sp.q);
        }
    }
    if (!qinf)
        for (double& x : acc.v) x = std::pow(x, 1.0 / sp.q);
    return lp_quad(acc, sp.p);
}

double sequence_norm(const CoefficientMap& cm, const SpaceParams& sp) {
    return sequence_norm(to_cubes(cm), cm.N, sp);
}

RealGrid s_star_block(const CubeBlock& b, const SStarParams& sp) {
    int P1 = b.P1, P2 = b.P2;
    double scale = double(pow2(std::max(b.j, 0)));
    std::vector<double> d1(size_t(P1) * P1), d2(size_t(P2) * P2);
    for (int a = 0; a < P1; ++a)
        for (int c = 0; c < P1; ++c) {
            double d = std::fabs(double(a - c)) / P1;
            d1[size_t(a) * P1 + c] = std::min(d, 1.0 - d);
        }
    for (int a = 0; a < P2; ++a)
        for (int c = 0; c < P2; ++c) {
            double d = std::fabs(double(a - c)) / P2;
            d2[size_t(a) * P2 + c] = std::min(d, 1.0 - d);
        }
    RealGrid vr = b.V;
    for (double& x : vr.v) x = std::pow(x, sp.r);
    RealGrid out(P1, P2, 0.0);
    parallel_for(P1, [&](int a) {
        for (int bq = 0; bq < P2; ++bq) {
            double s = 0.0;
            for (int c = 0; c < P1; ++c) {
                double dd1 = d1[size_t(a) * P1 + c];
                for (int d = 0; d < P2; ++d) {
                    double dist = std::hypot(dd1, d2[size_t(bq) * P2 + d]);
                    s += std::pow(1.0 + scale * dist, -sp.decay) * vr(c, d);
                }
            }
            out(a, bq) = std::pow(s, 1.0 / sp.r);
        }
    });
    return out;
}

CubeMap s_star(const CubeMap& cm, const SStarParams& sp) {
    CubeMap out;
    out.reserve(cm.size());
    for (const CubeBlock& b : cm) {
        CubeBlock sb = b;
        sb.V = s_star_block(b, sp);
        out.push_back(std::move(sb));
    }
    return out;
}

CubeMap random_cube_map(int j_max, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    auto fill = [&](CubeBlock& b) {
        for (double& x : b.V.v) x = std::fabs(nd(rng));
    };
    CubeMap m;
    m.push_back(make_cube_block(CubeKind::Coarse, -1, 0, ConeTag::LowFrequency));
    fill(m.back());
    for (int j = 0; j <= j_max; ++j) {
        int lim = int(pow2(j));
        for (ConeTag cone : {ConeTag::Horizontal, ConeTag::Vertical})
            for (int l = -lim + 1; l <= lim - 1; ++l) {
                m.push_back(make_cube_block(CubeKind::Interior, j, l, cone));
                fill(m.back());
            }
        for (int l : {-lim, lim}) {
            m.push_back(make_cube_block(j >= 1 ? CubeKind::Boundary : CubeKind::BoundarySingle,
                                        j, l, ConeTag::Horizontal));
            fill(m.back());
        }
    }
    return m;
}

RealGrid hl_max(const RealGrid& f) {
    int N = f.n1;
    int M = 3 * N;
    // double cumulative sums over a 3x3 tiling make every wrapped box sum a
    // four-corner lookup
    std::vector<double> C(size_t(M + 1) * (M + 1), 0.0);
    auto cat = [&](int i, int k) -> double& { return C[size_t(i) * (M + 1) + k]; };
    for (int i = 0; i < M; ++i)
        for (int k = 0; k < M; ++k)
            cat(i + 1, k + 1) =
                std::fabs(f(i % N, k % N)) + cat(i, k + 1) + cat(i + 1, k) - cat(i, k);

    std::vector<int> hs;
    {
        int lg = 0;
        while ((1 << (lg + 1)) <= N) ++lg;
        std::vector<int> tmp;
        for (int m = 0; m <= lg + 1; ++m) tmp.push_back(std::min(N >> (m + 1), (N - 1) / 2));
        tmp.push_back(0);
        std::sort(tmp.begin(), tmp.end());
        tmp.erase(std::unique(tmp.begin(), tmp.end()), tmp.end());
        hs = tmp;
    }

    RealGrid out(N, N, 0.0);
    parallel_for(N, [&](int i) {
        for (int h : hs) {
            int side = 2 * h + 1;
            int bi = i + N - h;
            double inv = 1.0 / (double(side) * side);
            for (int k = 0; k < N; ++k) {
                int bk = k + N - h;
                double s = cat(bi + side, bk + side) - cat(bi, bk + side) -
                           cat(bi + side, bk) + cat(bi, bk);
                out(i, k) = std::max(out(i, k), s * inv);
            }
        }
    });
    return out;
}

RealGrid offset_max(const RealGrid& a, const RealGrid& w) {
    int N = a.n1;
    RealGrid out(N, N, 0.0);
    parallel_for(N, [&](int i) {
        for (int s1 = 0; s1 < N; ++s1) {
            int i0 = i - s1;
            if (i0 < 0) i0 += N;
            const double* arow = &a.v[size_t(i0) * N];
            const double* wrow = &w.v[size_t(s1) * N];
            double* orow = &out.v[size_t(i) * N];
            for (int s2 = 0; s2 < N; ++s2) {
                double iw = 1.0 / wrow[s2];
                for (int k = 0; k < N; ++k) {
                    int k0 = k - s2;
                    if (k0 < 0) k0 += N;
                    double cand = std::fabs(arow[k0]) * iw;
                    if (cand > orow[k]) orow[k] = cand;
                }
            }
        }
    });
    return out;
}

std::pair<RealGrid, RealGrid> wrapped_offsets(int N) {
    RealGrid Y1(N, N), Y2(N, N);
    for (int i = 0; i < N; ++i) {
        double y1 = double(i <= N / 2 ? i : i - N) / N;
        for (int k = 0; k < N; ++k) {
            Y1(i, k) = y1;
            Y2(i, k) = double(k <= N / 2 ? k : k - N) / N;
        }
    }
    return {std::move(Y1), std::move(Y2)};
}

RealGrid peetre_weight(const BandId& b, int N, double lambda) {
    Mat2 M;  // identity for the coarse band
    if (!b.coarse()) M = mat_BA(b.j, b.l, b.boundary ? ConeTag::Horizontal : b.cone);
    auto [Y1, Y2] = wrapped_offsets(N);
    RealGrid w(N, N);
    for (size_t t = 0; t < w.size(); ++t) {
        double y1 = Y1.v[t], y2 = Y2.v[t];
        double b1 = double(M.a) * y1 + double(M.b) * y2;
        double b2 = double(M.c) * y1 + double(M.d) * y2;
        w.v[t] = std::pow(1.0 + std::hypot(b1, b2), 2.0 * lambda);
    }
    return w;
}

RealGrid peetre_max(const PeriodicSignal& f, const BandId& b, double lambda, int top_j) {
    PeriodicSignal conv = band_convolve(f, b, top_j);
    RealGrid a(f.N, f.N);
    for (size_t t = 0; t < a.size(); ++t) a.v[t] = std::abs(conv.samples.v[t]);
    return offset_max(a, peetre_weight(b, f.N, lambda));
}

namespace {

// fhat times the unmasked shear band window; returns false when the product
// vanishes identically (out untouched in that case)
bool affine_product(const ComplexGrid& fhat, int j, int l, ConeTag cone, ComplexGrid& out) {
    int N = fhat.n1;
    std::fill(out.v.begin(), out.v.end(), cd(0.0));
    std::vector<double> fr(N), rad(N);
    double sj = std::ldexp(1.0, -2 * j);
    double twoj = double(pow2(j));
    for (int i = 0; i < N; ++i) {
        fr[i] = double(freq_of(i, N));
        rad[i] = psi1_hat(sj * fr[i]);
    }
    bool any = false;
    if (cone == ConeTag::Horizontal) {
        for (int i = 0; i < N; ++i) {
            if (rad[i] == 0.0) continue;
            for (int k = 0; k < N; ++k) {
                const cd& z = fhat(i, k);
                if (z == cd(0.0)) continue;
                double m = rad[i] * psi2_hat(twoj * (fr[k] / fr[i]) - l);
                if (m == 0.0) continue;
                out(i, k) = z * m;
                any = true;
            }
        }
    } else {
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                if (rad[k] == 0.0) continue;
                const cd& z = fhat(i, k);
                if (z == cd(0.0)) continue;
                double m = rad[k] * psi2_hat(twoj * (fr[i] / fr[k]) - l);
                if (m == 0.0) continue;
                out(i, k) = z * m;
                any = true;
            }
    }
    return any;
}

struct BandTask {
    int j = 0, l = 0;
    ConeTag cone = ConeTag::Horizontal;
    BandId smooth_band;  // used by the SmoothParseval variant
    bool smooth = false;
};

// deterministic q-aggregation: fields computed in fixed-size chunks in
// parallel, merged in band order
void accumulate_tasks(const ComplexGrid& fhat, const std::vector<BandTask>& tasks,
                      const std::vector<double>& scales, double q, RealGrid& acc) {
    int N = fhat.n1;
    bool qinf = is_inf(q);
    const int chunk = 4;
    std::vector<RealGrid> slot(chunk);
    for (size_t base = 0; base < tasks.size(); base += chunk) {
        int cnt = int(std::min(size_t(chunk), tasks.size() - base));
        parallel_for(cnt, [&](int t) {
            const BandTask& task = tasks[base + t];
            ComplexGrid prod(N, N);
            bool any;
            if (task.smooth) {
                RealGrid m = sample_window(task.smooth_band, N, -1);
                any = false;
                for (size_t u = 0; u < prod.size(); ++u) {
                    prod.v[u] = fhat.v[u] * m.v[u];
                    if (prod.v[u] != cd(0.0)) any = true;
                }
            } else {
                any = affine_product(fhat, task.j, task.l, task.cone, prod);
            }
            if (!any) {
                slot[t] = RealGrid();
                return;
            }
            ComplexGrid field(N, N);
            dft2(prod, field, +1);
            RealGrid absf(N, N);
            double sc = scales[base + t];
            for (size_t u = 0; u < absf.size(); ++u) absf.v[u] = sc * std::abs(field.v[u]);
            slot[t] = std::move(absf);
        });
        for (int t = 0; t < cnt; ++t) {
            if (slot[t].v.empty()) continue;
            if (qinf) {
                for (size_t u = 0; u < acc.size(); ++u)
                    acc.v[u] = std::max(acc.v[u], slot[t].v[u]);
            } else if (q == 2.0) {
                for (size_t u = 0; u < acc.size(); ++u)
                    acc.v[u] += slot[t].v[u] * slot[t].v[u];
            } else {
                for (size_t u = 0; u < acc.size(); ++u)
                    acc.v[u] += std::pow(slot[t].v[u], q);
            }
        }
    }
}

}  // namespace

double function_norm(const PeriodicSignal& f, const SpaceParams& sp, System system) {
    require_valid_exponents(sp, "function_norm");
    int N = f.N;
    const ComplexGrid& fhat = f.spec;
    bool qinf = is_inf(sp.q);

    if (sp.family == Family::Dyadic) {
        ComplexGrid cs(N, N);
        for (int i = 0; i < N; ++i) {
            double x1 = double(freq_of(i, N));
            for (int k = 0; k < N; ++k)
                cs(i, k) = fhat(i, k) * dyadic_scaling_hat(std::hypot(x1, double(freq_of(k, N))));
        }
        double coarse = lp_quad(field_of_spectrum(cs), sp.p);

        int nu_max = 1;
        while (pow2(nu_max) < N) ++nu_max;  // ceil(log2 N)
        ++nu_max;
        RealGrid acc(N, N, 0.0);
        ComplexGrid prod(N, N), field(N, N);
        for (int nu = 1; nu <= nu_max; ++nu) {
            double s = std::ldexp(1.0, -nu);
            bool any = false;
            for (int i = 0; i < N; ++i) {
                double x1 = double(freq_of(i, N));
                for (int k = 0; k < N; ++k) {
                    double m = dyadic_annulus_hat(s * std::hypot(x1, double(freq_of(k, N))));
                    cd z = fhat(i, k) * m;
                    prod(i, k) = z;
                    if (z != cd(0.0)) any = true;
                }
            }
            if (!any) continue;
            dft2(prod, field, +1);
            double sc = std::pow(2.0, nu * sp.alpha);
            if (qinf) {
                for (size_t u = 0; u < acc.size(); ++u)
                    acc.v[u] = std::max(acc.v[u], sc * std::abs(field.v[u]));
            } else {
                for (size_t u = 0; u < acc.size(); ++u)
                    acc.v[u] += std::pow(sc * std::abs(field.v[u]), sp.q);
            }
        }
        if (!qinf)
            for (double& x : acc.v) x = std::pow(x, 1.0 / sp.q);
        return coarse + lp_quad(acc, sp.p);
    }

    // shear-band family
    ComplexGrid cs(N, N);
    for (int i = 0; i < N; ++i) {
        double x1 = double(freq_of(i, N));
        double c1 = system == System::ConeProjected ? phi_coarse_1d(x1) : meyer_low_1d(x1);
        for (int k = 0; k < N; ++k) {
            double x2 = double(freq_of(k, N));
            double c2 = system == System::ConeProjected ? phi_coarse_1d(x2) : meyer_low_1d(x2);
            cs(i, k) = fhat(i, k) * c1 * c2;
        }
    }
    double coarse = lp_quad(field_of_spectrum(cs), sp.p);

    double rmax = 0.0;
    for (int i = 0; i < N; ++i) {
        double x1 = double(freq_of(i, N));
        for (int k = 0; k < N; ++k)
            if (fhat(i, k) != cd(0.0))
                rmax = std::max(rmax, std::hypot(x1, double(freq_of(k, N))));
    }

    std::vector<BandTask> tasks;
    std::vector<double> scales;
    for (int j = 0; std::pow(4.0, j) / 16.0 <= rmax; ++j) {
        double sc = std::pow(8.0, j * sp.alpha);
        if (system == System::ConeProjected) {
            int lim = int(pow2(j));
            for (ConeTag cone : {ConeTag::Horizontal, ConeTag::Vertical})
                for (int l = -lim; l <= lim; ++l) {
                    tasks.push_back(BandTask{j, l, cone, {}, false});
                    scales.push_back(sc);
                }
        } else {
            for (const BandId& b : enumerate_indices(System::SmoothParseval, j,
                                                     {ConeTag::Horizontal, ConeTag::Vertical})) {
                if (b.j != j) continue;
                BandTask t;
                t.smooth = true;
                t.smooth_band = b;
                tasks.push_back(t);
                scales.push_back(sc);
            }
        }
    }
    RealGrid acc(N, N, 0.0);
    accumulate_tasks(fhat, tasks, scales, sp.q, acc);
    if (!qinf)
        for (double& x : acc.v) x = std::pow(x, 1.0 / sp.q);
    return coarse + lp_quad(acc, sp.p);
}

}  // namespace shearlet
