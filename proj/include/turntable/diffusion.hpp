#pragma once

#include "turntable/render.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace turntable {

/// Symmetric nonnegative pairwise distances with a zero diagonal.
struct DistanceMatrix {
    Eigen::MatrixXd d;

    DistanceMatrix() = default;
    explicit DistanceMatrix(Eigen::MatrixXd m); // validates and symmetrizes exactly

    std::size_t size() const { return static_cast<std::size_t>(d.rows()); }
};

/// Euclidean distances over vectorized images, summed in fixed coordinate
/// order per pair; rows are computed in parallel with bit-identical results
/// under any partition.
DistanceMatrix pairwise_distances(const Dataset& ds);

/// Euclidean distances between generic same-dimension vectors.
DistanceMatrix pairwise_distances(const std::vector<std::vector<double>>& points);

/// The angle-input path: each angle becomes the unit 2-vector (cos a, sin a)
/// and distances are Euclidean between those.
DistanceMatrix pairwise_distances(const std::vector<AngleSample>& angles);

/// Restriction of a distance matrix to a subset of indices (order preserved).
DistanceMatrix submatrix(const DistanceMatrix& d, const std::vector<int>& indices);

/// Kernel bandwidth heuristic: multiplier times the median of the off-diagonal
/// squared distances (median of an even count is the mean of the central pair).
double select_sigma(const DistanceMatrix& d, double multiplier = 1.0);

/// The two-stage normalized diffusion kernel:
///   W_ij = exp(-d_ij^2 / sigma)
///   Q_ii = (sum_j W_ij)^(-1)          K~ = Q W Q
///   Q~_ii = (sum_j K~_ij)^(-1/2)      K  = Q~ K~ Q~
/// Note the exponents: Q uses power -1, Q~ uses power -1/2.
struct KernelMatrices {
    Eigen::MatrixXd w;      // similarity, W_ii = 1
    Eigen::VectorXd q;      // first normalization diagonal
    Eigen::MatrixXd ktilde; // Q W Q
    Eigen::VectorXd qtilde; // second normalization diagonal
    Eigen::MatrixXd k;      // Q~ K~ Q~, symmetric
    double sigma = 0.0;

    std::size_t size() const { return static_cast<std::size_t>(k.rows()); }
};

KernelMatrices build_kernel(const DistanceMatrix& d, double sigma);

/// Diffusion coordinates with their eigenvalues.
struct Embedding {
    Eigen::MatrixXd coords;      // n x s, row i is z_i
    Eigen::VectorXd eigenvalues; // lambda_0 .. lambda_s, descending
    std::string u0_sign_convention;

    std::size_t n() const { return static_cast<std::size_t>(coords.rows()); }
    int s() const { return static_cast<int>(coords.cols()); }
};

/// Full symmetric eigendecomposition of K, eigenpairs sorted by descending
/// eigenvalue, each eigenvector's sign fixed so its first entry of magnitude
/// > 1e-12 is positive. Coordinates: z_i(k) = lambda_k u_k(i) / u_0(i) for
/// k = 1..s. Embeddings of (near-)repeated eigenvalues are unique only up to
/// an orthogonal mixing of the eigenspace; downstream analyses are invariant
/// to that.
Embedding spectral_embed(const KernelMatrices& km, int s = 2);

/// Euclidean distance between embedding rows i and j.
double diffusion_distance(const Embedding& e, std::size_t i, std::size_t j);

} // namespace turntable
