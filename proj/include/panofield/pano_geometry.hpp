#pragma once

#include <vector>

#include "panofield/image.hpp"
#include "panofield/vec.hpp"

namespace panofield {

// Camera-to-world rigid transform.
struct Pose {
    Vec3 position{0, 0, 0};
    Mat3 rotation = Mat3::identity();

    bool rotation_valid(double tol = 1e-6) const;
};

void validate_pose(const Pose& pose);

struct Ray {
    Vec3 origin;
    Vec3 direction;  // unit
    double t_near = 0;
    double t_far = 0;
};

// Spherical convention: Y up, +Z forward, longitude theta = 0 at +Z,
// increasing toward +X. Pixel centers sit at half-integer texture offsets:
//   theta = 2*pi*(u+0.5)/width - pi,  phi = pi/2 - pi*(v+0.5)/height
//   direction = (cos phi * sin theta, sin phi, cos phi * cos theta)

// Camera-frame unit direction through pixel center (u, v).
Vec3 pixel_to_direction(double u, double v, int width, int height);

// Continuous pixel coordinates of a unit direction; u wraps modulo width.
// At the poles u collapses to width/2 by convention.
void direction_to_pixel(const Vec3& d, int width, int height, double& u, double& v);

// Bilinear sample of an equirect image at continuous pixel coordinates
// (wrap in u, clamp in v).
Vec3f sample_equirect(const ImageRgb& img, double u, double v);

// Bilinear sample of a square face raster, clamped at the edges.
Vec3f sample_face(const ImageRgb& face, double x, double y);

// Cube face selection by dominant axis; a, b in [-1, 1] are the in-face
// coordinates (left-to-right, top-to-bottom).
int direction_to_face(const Vec3& d, double& a, double& b);
Vec3 face_to_direction(int face, double a, double b);

EquirectImage skybox_to_equirect(const SkyboxFaces& faces, int out_width);
SkyboxFaces equirect_to_skybox(const EquirectImage& img, int face_size);

// One ray per pixel, row-major order, origin at the pose position.
std::vector<Ray> panorama_rays(const Pose& pose, int width, int height, double t_near,
                               double t_far);

// Solid angle subtended by a pixel in row v (all pixels of a row share it).
double pixel_solid_angle(int v, int width, int height);

}  // namespace panofield
