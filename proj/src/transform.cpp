#include "shearlet/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "shearlet/fft.hpp"

namespace shearlet {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kSparseDrop = 1e-14;
}  // namespace

PeriodicSignal PeriodicSignal::from_spectrum(ComplexGrid spec) {
    PeriodicSignal f;
    f.N = spec.n1;
    f.samples = field_of_spectrum(spec);
    f.spec = std::move(spec);
    return f;
}

PeriodicSignal PeriodicSignal::from_samples(ComplexGrid samples) {
    PeriodicSignal f;
    f.N = samples.n1;
    f.spec = spectrum_of_field(samples);
    f.samples = std::move(samples);
    return f;
}

double signal_energy(const PeriodicSignal& f) {
    double s = 0.0;
    for (const cd& z : f.spec.v) s += std::norm(z);
    return s;
}

cd eval_signal(const PeriodicSignal& f, double x1, double x2) {
    int N = f.N;
    cd acc = 0.0;
    for (int i = 0; i < N; ++i) {
        double xi1 = double(freq_of(i, N));
        for (int k = 0; k < N; ++k) {
            const cd& z = f.spec(i, k);
            if (z == cd(0.0)) continue;
            double ph = kTwoPi * (xi1 * x1 + double(freq_of(k, N)) * x2);
            acc += z * cd(std::cos(ph), std::sin(ph));
        }
    }
    return acc;
}

ComplexGrid random_spectrum(int N, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    ComplexGrid g(N, N);
    for (cd& z : g.v) {
        double re = nd(rng), im = nd(rng);
        z = cd(re, im);
    }
    return g;
}

ComplexGrid random_lowpass_spectrum(int N, int box, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    ComplexGrid g(N, N, cd(0.0));
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            if (std::abs(freq_of(i, N)) > box || std::abs(freq_of(k, N)) > box) continue;
            double re = nd(rng), im = nd(rng);
            g(i, k) = cd(re, im);
        }
    return g;
}

double band_amp(const BandId& b) {
    if (b.coarse()) return 1.0;
    double a = std::pow(8.0, -0.5 * b.j);
    if (b.boundary && b.j >= 1) a *= std::sqrt(0.5);
    return a;
}

double band_weight(const BandId& b) {
    if (b.coarse()) return 1.0;
    if (b.boundary && b.j >= 1) return std::ldexp(1.0, -b.j - 1);
    return std::ldexp(1.0, -b.j);
}

std::pair<int64_t, int64_t> band_periods(const BandId& b) {
    if (b.coarse()) return {1, 1};
    int64_t P = b.lattice_div() * pow4(b.j);
    return {P, P};
}

double CoefficientMap::weighted_energy() const {
    double tot = 0.0;
    for (const BandCoefficients& bc : bands) {
        if (bc.empty()) continue;
        double e = 0.0;
        for (const cd& z : bc.c.v) e += std::norm(z);
        tot += bc.weight * e;
    }
    return tot;
}

BandCoefficients* CoefficientMap::find(const BandId& b) {
    for (BandCoefficients& bc : bands)
        if (bc.band.system == b.system && bc.band.cone == b.cone && bc.band.j == b.j &&
            bc.band.l == b.l && bc.band.boundary == b.boundary)
            return &bc;
    return nullptr;
}

const BandCoefficients* CoefficientMap::find(const BandId& b) const {
    return const_cast<CoefficientMap*>(this)->find(b);
}

cd CoefficientMap::coefficient(const ShearletIndex& idx) const {
    const BandCoefficients* bc = find(idx.band);
    if (!bc || bc->empty()) return cd(0.0);
    return bc->c(int(posmod(idx.k1, bc->P1)), int(posmod(idx.k2, bc->P2)));
}

namespace {

// residue of an integer frequency on the band's coefficient torus
inline void band_residue(const BandId& b, int64_t P, int64_t xi1, int64_t xi2,
                         int64_t& r1, int64_t& r2) {
    int64_t tw = pow2(b.j);
    if (!b.boundary && b.cone == ConeTag::Vertical) {
        r1 = posmod(tw * xi1 - b.l * xi2, P);
        r2 = posmod(xi2, P);
    } else {
        r1 = posmod(xi1, P);
        r2 = posmod(tw * xi2 - b.l * xi1, P);
    }
}

void analyze_band(const PeriodicSignal& f, BandCoefficients& bc, int top_j) {
    const BandId& b = bc.band;
    int N = f.N;
    RealGrid m = sample_window(b, N, top_j);
    bool any = false;
    for (double x : m.v)
        if (x != 0.0) { any = true; break; }
    if (!any) return;  // block stays empty

    if (b.coarse()) {
        bc.c = ComplexGrid(1, 1, cd(0.0));
        cd s = 0.0;
        for (size_t t = 0; t < m.size(); ++t) s += f.spec.v[t] * m.v[t];
        bc.c(0, 0) = s;
        return;
    }

    int64_t P = bc.P1;
    ComplexGrid Z{int(P), int(P), cd(0.0)};
    for (int i = 0; i < N; ++i) {
        int64_t xi1 = freq_of(i, N);
        for (int k = 0; k < N; ++k) {
            double mv = m(i, k);
            if (mv == 0.0) continue;
            int64_t r1, r2;
            band_residue(b, P, xi1, freq_of(k, N), r1, r2);
            Z(int(r1), int(r2)) += f.spec(i, k) * mv;
        }
    }
    ComplexGrid c{int(P), int(P)};
    dft2(Z, c, +1);  // unnormalised inverse transform over the residue torus
    for (cd& z : c.v) z *= bc.amp;
    bc.c = std::move(c);
}

void synthesize_band(const BandCoefficients& bc, ComplexGrid& F, int top_j) {
    const BandId& b = bc.band;
    int N = F.n1;
    RealGrid m = sample_window(b, N, top_j);
    if (b.coarse()) {
        cd c0 = bc.c(0, 0) * bc.weight * bc.amp;
        for (size_t t = 0; t < m.size(); ++t) F.v[t] += c0 * m.v[t];
        return;
    }
    int64_t P = bc.P1;
    ComplexGrid S{int(P), int(P)};
    dft2(bc.c, S, -1);
    double wa = bc.weight * bc.amp;
    for (int i = 0; i < N; ++i) {
        int64_t xi1 = freq_of(i, N);
        for (int k = 0; k < N; ++k) {
            double mv = m(i, k);
            if (mv == 0.0) continue;
            int64_t r1, r2;
            band_residue(b, P, xi1, freq_of(k, N), r1, r2);
            F(i, k) += wa * mv * S(int(r1), int(r2));
        }
    }
}

}  // namespace

CoefficientMap analyze(const PeriodicSignal& f, System system, int j_max, int absorbed) {
    FrequencyGrid grid = FrequencyGrid::make(f.N, j_max);
    CoefficientMap cm;
    cm.system = system;
    cm.N = f.N;
    cm.j_max = grid.j_max;
    cm.absorbed = absorbed < 0 ? default_absorbed(f.N, grid.j_max) : absorbed != 0;
    int top_j = cm.absorbed ? grid.j_max : -1;

    for (const BandId& b : system_bands(system, grid.j_max)) {
        BandCoefficients bc;
        bc.band = b;
        auto [P1, P2] = band_periods(b);
        bc.P1 = P1;
        bc.P2 = P2;
        bc.amp = band_amp(b);
        bc.weight = band_weight(b);
        cm.bands.push_back(std::move(bc));
    }
    parallel_for(int(cm.bands.size()), [&](int t) { analyze_band(f, cm.bands[t], top_j); });
    return cm;
}

PeriodicSignal synthesize(const CoefficientMap& cm) {
    int top_j = cm.absorbed ? cm.j_max : -1;
    ComplexGrid F(cm.N, cm.N, cd(0.0));
    for (const BandCoefficients& bc : cm.bands) {
        if (bc.empty()) continue;
        synthesize_band(bc, F, top_j);
    }
    return PeriodicSignal::from_spectrum(std::move(F));
}

CoefficientMap coefficients_from_entries(System system, int N, int j_max,
                                         const std::vector<std::pair<ShearletIndex, cd>>& entries,
                                         int absorbed) {
    // analyzing the zero signal allocates a zero block exactly where the
    // band's window is nonzero on this grid
    PeriodicSignal zero = PeriodicSignal::from_spectrum(ComplexGrid(N, N, cd(0.0)));
    CoefficientMap cm = analyze(zero, system, j_max, absorbed);
    for (const auto& [idx, val] : entries) {
        BandCoefficients* bc = cm.find(idx.band);
        if (!bc || bc->empty())
            throw config_error("coefficient entry addresses a band absent from this grid");
        bc->c(int(posmod(idx.k1, bc->P1)), int(posmod(idx.k2, bc->P2))) += val;
    }
    return cm;
}

PeriodicSignal band_convolve(const PeriodicSignal& f, const BandId& b, int top_j) {
    RealGrid m = sample_window(b, f.N, top_j);
    ComplexGrid out(f.N, f.N);
    for (size_t t = 0; t < m.size(); ++t) out.v[t] = f.spec.v[t] * m.v[t];
    return PeriodicSignal::from_spectrum(std::move(out));
}

double littlewood_paley_residual(const PeriodicSignal& f, int j_max) {
    FrequencyGrid grid = FrequencyGrid::make(f.N, j_max);
    bool absorbed = default_absorbed(f.N, grid.j_max);
    int top_j = absorbed ? grid.j_max : -1;
    int N = f.N;
    RealGrid mult(N, N, 0.0);
    for (const BandId& b : system_bands(System::SmoothParseval, grid.j_max)) {
        RealGrid m = sample_window(b, N, top_j);
        for (size_t t = 0; t < m.size(); ++t) mult.v[t] += m.v[t] * m.v[t];
    }
    double num = 0.0, den = 0.0;
    for (size_t t = 0; t < f.spec.size(); ++t) {
        num += std::norm(f.spec.v[t] * (mult.v[t] - 1.0));
        den += std::norm(f.spec.v[t]);
    }
    return den == 0.0 ? 0.0 : std::sqrt(num / den);
}

double sampling_identity_residual(const BandId& b, int N, std::uint64_t seed, int top_j) {
    RealGrid m = sample_window(b, N, top_j);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;

    struct Entry {
        int i, k;
        double xi1, xi2;
        cd g, h;
    };
    std::vector<Entry> sup;
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            if (m(i, k) == 0.0) continue;
            double gr = nd(rng), gi = nd(rng), hr = nd(rng), hi = nd(rng);
            sup.push_back({i, k, double(freq_of(i, N)), double(freq_of(k, N)),
                           m(i, k) * cd(gr, gi), m(i, k) * cd(hr, hi)});
        }
    if (sup.empty()) return 0.0;

    ComplexGrid prod(N, N, cd(0.0));
    for (const Entry& e : sup) prod(e.i, e.k) = e.g * e.h;
    ComplexGrid lhs = field_of_spectrum(prod);

    // sample lattice of the band: product grid with per-axis denominators
    int64_t D1, D2;
    if (b.coarse()) {
        D1 = D2 = 1;
    } else {
        int64_t dv = b.lattice_div();
        int64_t coarse_den = dv * pow4(b.j), fine_den = dv * pow2(b.j);
        if (!b.boundary && b.cone == ConeTag::Vertical) {
            D1 = fine_den;
            D2 = coarse_den;
        } else {
            D1 = coarse_den;
            D2 = fine_den;
        }
    }

    ComplexGrid rhs(N, N, cd(0.0));
    ComplexGrid shifted(N, N, cd(0.0));
    for (int64_t r1 = 0; r1 < D1; ++r1)
        for (int64_t r2 = 0; r2 < D2; ++r2) {
            double x1 = double(r1) / double(D1), x2 = double(r2) / double(D2);
            cd gval = 0.0;
            for (const Entry& e : sup) {
                double ph = kTwoPi * (e.xi1 * x1 + e.xi2 * x2);
                gval += e.g * cd(std::cos(ph), std::sin(ph));
            }
            for (const Entry& e : sup) {
                double ph = -kTwoPi * (e.xi1 * x1 + e.xi2 * x2);
                shifted(e.i, e.k) = e.h * cd(std::cos(ph), std::sin(ph));
            }
            ComplexGrid hfield = field_of_spectrum(shifted);
            for (size_t t = 0; t < rhs.size(); ++t) rhs.v[t] += gval * hfield.v[t];
        }

    double scale = 1.0 / double(D1 * D2);
    double peak = 0.0, diff = 0.0;
    for (size_t t = 0; t < lhs.size(); ++t) {
        peak = std::max(peak, std::abs(lhs.v[t]));
        diff = std::max(diff, std::abs(lhs.v[t] - scale * rhs.v[t]));
    }
    return peak == 0.0 ? diff : diff / peak;
}

void save_signal(const PeriodicSignal& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open '" + path + "' for writing");
    out.write("SHGRID01", 8);
    std::uint32_t n = std::uint32_t(f.N);
    out.write(reinterpret_cast<const char*>(&n), 4);
    for (const cd& z : f.samples.v) {
        double re = z.real(), im = z.imag();
        out.write(reinterpret_cast<const char*>(&re), 8);
        out.write(reinterpret_cast<const char*>(&im), 8);
    }
    if (!out) throw config_error("short write to '" + path + "'");
}

PeriodicSignal load_signal(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open '" + path + "'");
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, "SHGRID01", 8) != 0)
        throw config_error("'" + path + "' is not a SHGRID01 file");
    std::uint32_t n = 0;
    in.read(reinterpret_cast<char*>(&n), 4);
    if (!in || n < 2 || (n & (n - 1)) != 0)
        throw config_error("'" + path + "': side length must be a power of two");
    int N = int(n);
    ComplexGrid s(N, N);
    for (cd& z : s.v) {
        double re = 0, im = 0;
        in.read(reinterpret_cast<char*>(&re), 8);
        in.read(reinterpret_cast<char*>(&im), 8);
        if (!in) throw config_error("'" + path + "': truncated sample payload");
        z = cd(re, im);
    }
    char extra;
    if (in.read(&extra, 1)) throw config_error("'" + path + "': trailing bytes after payload");
    return PeriodicSignal::from_samples(std::move(s));
}

namespace {

const char* cone_code(const BandId& b) {
    if (b.coarse()) return "c";
    if (b.boundary) return "b";
    return b.cone == ConeTag::Horizontal ? "h" : "v";
}

}  // namespace

std::string coefficients_to_json(const CoefficientMap& cm) {
    std::string out = "[";
    bool first = true;
    const char* sys = cm.system == System::SmoothParseval ? "smooth" : "cone";
    for (const BandCoefficients& bc : cm.bands) {
        if (bc.empty()) continue;
        for (int k1 = 0; k1 < bc.P1; ++k1)
            for (int k2 = 0; k2 < bc.P2; ++k2) {
                cd z = bc.c(k1, k2);
                if (std::abs(z) < kSparseDrop) continue;
                if (!first) out += ",";
                first = false;
                out += "\n  {\"system\":\"";
                out += sys;
                out += "\",\"cone\":\"";
                out += cone_code(bc.band);
                out += "\",\"j\":" + std::to_string(bc.band.j);
                out += ",\"l\":" + std::to_string(bc.band.l);
                out += ",\"k\":[" + std::to_string(k1) + "," + std::to_string(k2) + "]";
                out += ",\"re\":" + fmt_g17(z.real());
                out += ",\"im\":" + fmt_g17(z.imag()) + "}";
            }
    }
    out += first ? "]\n" : "\n]\n";
    return out;
}

std::vector<std::pair<ShearletIndex, cd>> coefficient_entries_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("coefficient JSON: ") + e.what());
    }
    if (!doc.is_array()) throw config_error("coefficient JSON: top level must be an array");
    std::vector<std::pair<ShearletIndex, cd>> out;
    for (const auto& e : doc) {
        try {
            ShearletIndex idx;
            std::string sys = e.at("system").get<std::string>();
            idx.band.system =
                sys == "smooth" ? System::SmoothParseval
                                : (sys == "cone" ? System::ConeProjected
                                                 : throw config_error("unknown system '" + sys + "'"));
            std::string cone = e.at("cone").get<std::string>();
            idx.band.j = e.at("j").get<int>();
            idx.band.l = e.at("l").get<int>();
            if (cone == "c") {
                idx.band.j = -1;
                idx.band.l = 0;
                idx.band.cone = ConeTag::LowFrequency;
            } else if (cone == "b") {
                idx.band.cone = ConeTag::Horizontal;
                idx.band.boundary = true;
            } else if (cone == "h") {
                idx.band.cone = ConeTag::Horizontal;
            } else if (cone == "v") {
                idx.band.cone = ConeTag::Vertical;
            } else {
                throw config_error("unknown cone '" + cone + "'");
            }
            idx.k1 = e.at("k").at(0).get<int64_t>();
            idx.k2 = e.at("k").at(1).get<int64_t>();
            double re = e.at("re").get<double>(), im = e.at("im").get<double>();
            out.emplace_back(idx, cd(re, im));
        } catch (const nlohmann::json::exception& ex) {
            throw config_error(std::string("coefficient JSON entry: ") + ex.what());
        }
    }
    return out;
}

}  // namespace shearlet
