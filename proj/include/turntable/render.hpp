#pragma once

#include "turntable/geom.hpp"
#include "turntable/scene.hpp"

#include <string>
#include <vector>

namespace turntable {

/// Viewpoint, orthographic projection and light defining one measurement
/// function. elevation pi/2 is the top view. light is a unit vector in the
/// camera frame pointing from the surface toward the light; the default
/// (0,0,-1) puts the light on the view axis.
struct CameraConfig {
    double azimuth = 0.0;
    double elevation = 0.0;
    int width = 60;
    int height = 66;
    Vec3 light = {0.0, 0.0, -1.0};
    std::array<double, 3> background = {1.0, 1.0, 1.0};
    double scale = 3.4; // model units spanned by the image height

    void validate() const;

    // Orthonormal camera basis, well defined for every elevation:
    //   right   = (-sin az, cos az, 0)
    //   up      = (-sin el cos az, -sin el sin az, cos el)
    //   forward = (-cos el cos az, -cos el sin az, -sin el)
    Vec3 right() const;
    Vec3 up() const;
    Vec3 forward() const;
};

/// Row-major, channel-interleaved RGB, values in [0,1].
struct ImageVector {
    int width = 0;
    int height = 0;
    std::vector<float> data;

    std::size_t size() const { return data.size(); }
    float at(int row, int col, int ch) const {
        return data[(static_cast<std::size_t>(row) * width + col) * 3 + ch];
    }
};

struct Dataset {
    std::vector<AngleSample> angles;
    std::vector<ImageVector> images;
    CameraConfig camera;
    std::string mesh_id;

    std::size_t size() const { return angles.size(); }
    void validate() const;
};

/// The measurement function f. Deterministic software rasterizer:
///  - the mesh is rotated by `angle` (reduced mod 2pi) about z, then projected
///    orthographically through the camera basis;
///  - coverage is tested at pixel centers with inclusive boundaries, no AA;
///  - hidden surfaces removed by a depth buffer, nearest depth wins, exact
///    depth ties keep the lower triangle index;
///  - flat Lambertian shading: face_color * max(0, normal . light), normals
///    flipped toward the camera; uncovered pixels get the background color.
ImageVector render_view(const TriMesh& mesh, double angle, const CameraConfig& cam);

/// One image per angle, order preserved. Images render in parallel; each is an
/// independent pure computation so output is identical under any partition.
Dataset render_dataset(const TriMesh& mesh, const std::vector<AngleSample>& angles,
                       const CameraConfig& cam, const std::string& mesh_id = "builtin");

/// Directory layout: manifest.tsv (index\tangle_radians\tfile), camera.cfg
/// (key=value), images as 16-bit P6 pixmaps img_%06d.ppm. Quantization to
/// 0..65535 loses at most 1/131070 per value.
void save_dataset(const Dataset& ds, const std::string& dir, const std::string& config_hash = "");
Dataset load_dataset(const std::string& dir);

/// Angles only, for datasets whose images are not needed.
std::vector<AngleSample> load_manifest_angles(const std::string& dir);

} // namespace turntable
