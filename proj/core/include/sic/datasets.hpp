#pragma once

#include <sic/types.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sic::data {

struct GeneratorSpec {
    std::string name;  // "sinexp", "liang", or "" for external data
    int n = 0;
    int d_x = 0;
    double noise_sd = 0.0;       // sinexp
    double sigma = 0.0;          // liang
    std::uint64_t seed = 0;
    std::uint64_t weights_seed = 0;  // liang
};

struct SyntheticDataset {
    Matrix X;                 // n x d_x
    Matrix Y;                 // n x 1
    std::vector<int> truth;   // 0-based ground-truth feature indices
    GeneratorSpec spec;
};

struct Metrics {
    double tpr = 0.0;
    double fdr = 0.0;
};

/// Correlated Gaussian design: one shared rho per row, x_j = (rho + z_j) / 2.
/// Per-coordinate variance 1/2, pairwise correlation 1/2.
Matrix gen_correlated_features(int n, int d, std::uint64_t seed);

/// Noiseless responses; exposed so tests can evaluate the formulas directly.
double sinexp_response(const Eigen::Ref<const Vector>& x);
double liang_response(const Eigen::Ref<const Vector>& x, const Vector& w);

SyntheticDataset gen_sinexp(int n, std::uint64_t seed, double noise_sd = 0.1);
SyntheticDataset gen_liang(int n, std::uint64_t seed, double sigma = 0.5,
                           std::uint64_t weights_seed = 7);

/// Weights used by gen_liang for a given weights_seed (40 iid standard normals).
Vector liang_weights(std::uint64_t weights_seed);

Metrics tpr_fdr(const std::vector<int>& selected, const std::vector<int>& truth);

/// Seeded disjoint row partition; first part holds floor(fraction * n) rows.
std::pair<SyntheticDataset, SyntheticDataset> split(const SyntheticDataset& ds,
                                                    double fraction,
                                                    std::uint64_t seed);

}  // namespace sic::data
