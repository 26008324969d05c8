#pragma once

#include "turntable/diffusion.hpp"

#include <string>
#include <vector>

namespace turntable {

enum class Metric { embedding_euclidean, measurement_euclidean, torus_wraparound };

std::string metric_id(Metric m);
Metric metric_from_id(const std::string& id);

/// Per-point local densities: value_i is proportional to the number of points
/// within distance r of point i (closed ball, self included), normalized to
/// sum to one. Self-inclusion keeps every value strictly positive.
struct DensityProfile {
    double radius = 0.0;
    Metric metric = Metric::embedding_euclidean;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

/// Euclidean metric over matrix rows (embedding coordinates or any vectors).
DensityProfile local_density(const Eigen::MatrixXd& points, double r, Metric metric);

/// Counting over precomputed distances (used for measurement vectors, where
/// the pairwise matrix already exists).
DensityProfile local_density(const DistanceMatrix& d, double r, Metric metric);

/// Wrap-around metric on [0, 2pi).
DensityProfile local_density_torus(const std::vector<double>& angles, double r);

/// max(values) / min(values); total because self-inclusion keeps min > 0.
double density_ratio(const DensityProfile& p);

struct RadiusCalibration {
    double radius = 0.0;
    double max_density = 0.0;
    double target = 0.0;
    double rel_err = 0.0;
    bool converged = false;
};

/// Finds r such that max local density over `d` matches `target_max` within
/// rel_tol: a geometric scan over the distance range followed by bisection in
/// the best bracketing interval. Deterministic.
RadiusCalibration calibrate_radius_to_max(const DistanceMatrix& d, double target_max,
                                          double rel_tol = 0.05);

} // namespace turntable
