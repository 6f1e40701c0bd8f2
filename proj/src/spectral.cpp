#include "jtlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/SVD>

namespace jtlab {

namespace {

// Rotate a vector so its first non-negligible coordinate is real positive.
void pin_phase(Vec& u) {
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (std::abs(u(i)) > 1e-12) {
            u *= std::conj(u(i)) / std::abs(u(i));
            return;
        }
    }
}

struct SvdData {
    std::vector<double> sigma;        // decreasing, length r
    std::vector<Element> tripotents;  // minimal, phase-pinned
};

// Full SVD of the coordinate matrix; minimal tripotents u_k v_k^*.
SvdData type_i_svd(const Element& z) {
    const auto& d = z.desc;
    Mat M = z.as_matrix();
    Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdData out;
    const double zero_tol = 1e-12 * std::max(1.0, svd.singularValues()(0));
    for (int k = 0; k < d.r; ++k) {
        const double s = svd.singularValues()(k);
        Vec u = svd.matrixU().col(k);
        Vec v = svd.matrixV().col(k);
        if (s > zero_tol) {
            // joint rotation, leaves u v^* unchanged but keeps output canonical
            Cplx ph(1.0, 0.0);
            for (Eigen::Index i = 0; i < u.size(); ++i)
                if (std::abs(u(i)) > 1e-12) { ph = std::conj(u(i)) / std::abs(u(i)); break; }
            u *= ph;
            v *= ph;
        } else {
            pin_phase(u);
            pin_phase(v);
        }
        Mat E = u * v.adjoint();
        out.sigma.push_back(s);
        out.tripotents.push_back(Element::from_matrix(d, E));
    }
    return out;
}

// Component moduli sorted decreasing (stable in the index for determinism).
std::vector<int> polydisc_order(const Element& z) {
    std::vector<int> idx(static_cast<size_t>(z.desc.n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
        return std::abs(z.v(i)) > std::abs(z.v(j));
    });
    return idx;
}

Element polydisc_phase_tripotent(const Element& z, int j) {
    const double m = std::abs(z.v(j));
    Element e = Element::zero(z.desc);
    e.v(j) = m > 1e-12 ? z.v(j) / m : Cplx(1.0, 0.0);
    return e;
}

} // namespace

SpectralDecomposition spectral_decompose(const Element& z, double tie_tol) {
    require_finite(z, "spectral_decompose");
    SpectralDecomposition out;

    std::vector<double> vals;
    std::vector<Element> minimal;
    if (z.desc.family == Family::TypeI) {
        SvdData svd = type_i_svd(z);
        vals = std::move(svd.sigma);
        minimal = std::move(svd.tripotents);
    } else {
        for (int j : polydisc_order(z)) {
            vals.push_back(std::abs(z.v(j)));
            minimal.push_back(polydisc_phase_tripotent(z, j));
        }
    }

    const double top = vals.empty() ? 0.0 : vals.front();
    if (tie_tol < 0.0) tie_tol = 1e-8 * std::max(1.0, top);

    size_t i = 0;
    while (i < vals.size() && vals[i] > tie_tol) {
        size_t j = i + 1;
        while (j < vals.size() && vals[j] > tie_tol && vals[j - 1] - vals[j] < tie_tol) ++j;
        double lam = 0.0;
        Element e = Element::zero(z.desc);
        for (size_t k = i; k < j; ++k) {
            lam += vals[k];
            e = e + minimal[k];
        }
        out.lambdas.push_back(lam / double(j - i));
        out.tripotents.push_back(e);
        i = j;
    }
    return out;
}

FrameDecomposition frame_decompose(const Element& z) {
    require_finite(z, "frame_decompose");
    FrameDecomposition out;
    if (z.desc.family == Family::TypeI) {
        SvdData svd = type_i_svd(z);
        out.lambdas = std::move(svd.sigma);
        out.frame.tripotents = std::move(svd.tripotents);
    } else {
        for (int j : polydisc_order(z)) {
            out.lambdas.push_back(std::abs(z.v(j)));
            out.frame.tripotents.push_back(polydisc_phase_tripotent(z, j));
        }
    }
    return out;
}

Classification classify(const Element& z, double tol) {
    Classification c;
    SpectralDecomposition sd = spectral_decompose(z);
    c.rank = sd.s();
    c.regular = (c.rank == z.desc.r);
    if (!c.regular) return c;
    if (z.desc.tube || z.desc.r == 1) {
        c.super_regular = true;
        return c;
    }
    c.super_regular = true;
    for (int i = 0; i < sd.s(); ++i)
        for (int j = i + 1; j < sd.s(); ++j) {
            const double li = sd.lambdas[size_t(i)], lj = sd.lambdas[size_t(j)];
            if (std::abs((1.0 - li * li) - (1.0 - lj * lj) * (1.0 - lj * lj)) <= tol)
                c.super_regular = false;
        }
    return c;
}

TripotentCheck tripotent_check(const Element& e, double tol) {
    require_finite(e, "tripotent_check");
    TripotentCheck out;
    const double nrm = trace_norm(e);
    out.is_tripotent = nrm > tol && trace_norm(odd_power(e, 1) - e) < tol;
    if (e.desc.family == Family::TypeI) {
        Eigen::JacobiSVD<Mat> svd{Mat(e.as_matrix())};
        out.height = int((svd.singularValues().array() > 0.5).count());
    } else {
        out.height = int((e.v.array().abs() > 0.5).count());
    }
    return out;
}

double spectral_norm(const Element& z) {
    require_finite(z, "spectral_norm");
    if (z.desc.family == Family::TypeI) {
        Eigen::JacobiSVD<Mat> svd{Mat(z.as_matrix())};
        return svd.singularValues()(0);
    }
    return z.v.size() ? z.v.cwiseAbs().maxCoeff() : 0.0;
}

std::vector<Element> sample_domain(const Descriptor& desc, std::uint64_t seed, int count,
                                   SampleMode mode) {
    if (count < 1) throw BadInput("sample_domain: count must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> target(0.1, 0.9);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

    auto gaussian_vec = [&](int len) {
        Vec g(len);
        for (int i = 0; i < len; ++i) g(i) = Cplx(gauss(rng), gauss(rng)) / std::sqrt(2.0);
        return g;
    };

    std::vector<Element> out;
    out.reserve(static_cast<size_t>(count));
    int rejections = 0;
    while (int(out.size()) < count) {
        Element z = Element::zero(desc);
        if (mode == SampleMode::rank_one) {
            const double t = target(rng);
            if (desc.family == Family::TypeI) {
                Vec u = gaussian_vec(desc.p), v = gaussian_vec(desc.q);
                u.normalize();
                v.normalize();
                z = Element::from_matrix(desc, Mat(t * u * v.adjoint()));
            } else {
                std::uniform_int_distribution<int> slot(0, desc.r - 1);
                const int j = slot(rng);
                z.v(j) = t * std::polar(1.0, angle(rng));
            }
        } else {
            z.v = gaussian_vec(desc.n);
            const double s = spectral_norm(z);
            if (s < 1e-8) {
                if (++rejections > 10000)
                    throw SamplingExhausted("sample_domain: too many rejections");
                continue;
            }
            z = (target(rng) / s) * z;
        }
        if (mode == SampleMode::super_regular && !classify(z, 1e-3).super_regular) {
            if (++rejections > 10000)
                throw SamplingExhausted("sample_domain: too many rejections");
            continue;
        }
        out.push_back(std::move(z));
    }
    return out;
}

} // namespace jtlab
