#pragma once

#include "turntable/geom.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace turntable {

/// One sample on the phenomenon manifold: a turntable orientation in [0, 2pi).
struct AngleSample {
    int index = 0;
    double angle = 0.0;
};

enum class AngleMode { equispaced, uniform_random };

/// Equispaced mode returns angle_i = 2*pi*i/n; uniform_random draws from a
/// seeded mt19937_64 (bit-reproducible, independent of the standard library's
/// distribution implementations).
std::vector<AngleSample> sample_angles(std::size_t n, AngleMode mode, std::uint64_t seed = 0);

/// Rigid triangle mesh with flat per-face colors.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<double, 3>> face_colors; // RGB in [0,1], one per triangle

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t triangle_count() const { return triangles.size(); }

    /// Structural invariants: index bounds, one color per face, colors in [0,1],
    /// at least one triangle with nonzero area. Throws validation_error.
    void validate() const;
};

/// Bundled low-poly asymmetric quadruped stand-in: elongated body along x,
/// head offset forward, four legs, tail. Breaks every nontrivial z-rotation
/// symmetry so the rendered measurement function is injective.
TriMesh builtin_mesh();

/// Plain-text format: `v x y z`, `f i j k` (1-based), optional `fc r g b`
/// applying to the preceding face; `#` starts a comment. Faces without an fc
/// line get mid-gray (0.5, 0.5, 0.5).
TriMesh load_mesh(const std::string& path, std::string* symmetry_warning = nullptr);
void save_mesh(const TriMesh& mesh, const std::string& path);

/// Rotates every vertex about the world z axis; triangles and colors unchanged.
TriMesh rotate_about_z(const TriMesh& mesh, double angle);

/// True iff some rotation about z with angle in (0, 2pi) maps the vertex set
/// onto itself, every vertex within `tol` of one of the originals.
bool has_z_rotation_symmetry(const TriMesh& mesh, double tol = 1e-9);

/// Symmetric Hausdorff distance between two point sets.
double hausdorff_distance(const std::vector<Vec3>& a, const std::vector<Vec3>& b);

/// Orientation (mod pi) of the mesh's long axis in the x-y plane at zero
/// rotation, from the principal direction of the vertex x-y scatter.
double long_axis_orientation(const TriMesh& mesh);

} // namespace turntable
