#pragma once

#include <cstdint>
#include <vector>

#include "jtlab/triple.hpp"

namespace jtlab {

// z = sum lambda_i e_i with lambda_1 > ... > lambda_s > 0 and pairwise
// orthogonal tripotents; s is the rank of z. Tied singular values are merged.
struct SpectralDecomposition {
    std::vector<double> lambdas;
    std::vector<Element> tripotents;
    int s() const { return static_cast<int>(lambdas.size()); }
};

// r pairwise orthogonal minimal tripotents.
struct Frame {
    std::vector<Element> tripotents;
};

struct FrameDecomposition {
    std::vector<double> lambdas; // decreasing, length r, zeros allowed
    Frame frame;
};

struct Classification {
    int rank = 0;
    bool regular = false;
    bool super_regular = false;
};

struct TripotentCheck {
    bool is_tripotent = false;
    int height = 0;
};

enum class SampleMode { generic, super_regular, rank_one };

// tie_tol < 0 selects the default 1e-8 * max(1, lambda_1).
SpectralDecomposition spectral_decompose(const Element& z, double tie_tol = -1.0);
FrameDecomposition frame_decompose(const Element& z);
Classification classify(const Element& z, double tol = 1e-3);
TripotentCheck tripotent_check(const Element& e, double tol = 1e-9);
double spectral_norm(const Element& z);
std::vector<Element> sample_domain(const Descriptor& desc, std::uint64_t seed, int count,
                                   SampleMode mode = SampleMode::generic);

} // namespace jtlab
