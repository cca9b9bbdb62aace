#include "panofield/pano_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "panofield/errors.hpp"

namespace panofield {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

bool Pose::rotation_valid(double tol) const {
    Mat3 rtr = rotation.transposed() * rotation;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double expect = i == j ? 1.0 : 0.0;
            if (std::abs(rtr(i, j) - expect) > tol) return false;
        }
    return std::abs(rotation.det() - 1.0) <= tol;
}

void validate_pose(const Pose& pose) {
    if (!pose.position.finite())
        throw Error(ErrorCode::InvalidPose, "non-finite position");
    for (double v : pose.rotation.m)
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidPose, "non-finite rotation");
    if (!pose.rotation_valid())
        throw Error(ErrorCode::InvalidPose, "rotation is not a proper orthonormal matrix");
}

void validate_equirect(const EquirectImage& img) {
    if (img.width != 2 * img.height || img.height <= 0)
        throw Error(ErrorCode::DimensionMismatch, "equirect image must be 2:1");
    for (float v : img.data)
        if (!(v >= 0.f && v <= 1.f))
            throw Error(ErrorCode::InvalidInput, "equirect channel outside [0,1]");
}

void validate_skybox(const SkyboxFaces& faces) {
    if (faces.face_size <= 0) throw Error(ErrorCode::InvalidInput, "empty skybox");
    for (int f = 0; f < 6; ++f) {
        const ImageRgb& img = faces.faces[f];
        if (img.width != faces.face_size || img.height != faces.face_size)
            throw Error(ErrorCode::DimensionMismatch,
                        std::string("skybox face size mismatch on ") + skybox_face_name(f));
    }
}

Vec3 pixel_to_direction(double u, double v, int width, int height) {
    if (width != 2 * height || width <= 0)
        throw Error(ErrorCode::InvalidInput, "panorama must be 2:1");
    if (u < 0 || u >= width || v < 0 || v >= height)
        throw Error(ErrorCode::InvalidInput, "pixel index out of range");
    double theta = 2.0 * kPi * (u + 0.5) / width - kPi;
    double phi = kPi / 2.0 - kPi * (v + 0.5) / height;
    double cp = std::cos(phi);
    return {cp * std::sin(theta), std::sin(phi), cp * std::cos(theta)};
}

void direction_to_pixel(const Vec3& d, int width, int height, double& u, double& v) {
    double n = d.norm();
    if (!(n > 1e-12)) throw Error(ErrorCode::InvalidInput, "zero direction");
    double y = std::clamp(d.y / n, -1.0, 1.0);
    double phi = std::asin(y);
    v = (kPi / 2.0 - phi) * height / kPi - 0.5;
    if (std::abs(d.x) < 1e-15 && std::abs(d.z) < 1e-15) {
        u = width / 2.0;  // pole: longitude undefined
        return;
    }
    double theta = std::atan2(d.x, d.z);
    u = (theta + kPi) * width / (2.0 * kPi) - 0.5;
    if (u < 0) u += width;
    if (u >= width) u -= width;
}

Vec3f sample_equirect(const ImageRgb& img, double u, double v) {
    const int w = img.width, h = img.height;
    double x = u, y = std::clamp(v, 0.0, double(h - 1));
    int x0 = static_cast<int>(std::floor(x));
    int y0 = static_cast<int>(std::floor(y));
    double fx = x - x0, fy = y - y0;
    int x1 = x0 + 1, y1 = std::min(y0 + 1, h - 1);
    auto wrap = [w](int xi) {
        xi %= w;
        return xi < 0 ? xi + w : xi;
    };
    x0 = wrap(x0);
    x1 = wrap(x1);
    Vec3f c00 = img.pixel(x0, y0), c10 = img.pixel(x1, y0);
    Vec3f c01 = img.pixel(x0, y1), c11 = img.pixel(x1, y1);
    Vec3f top = c00 * float(1 - fx) + c10 * float(fx);
    Vec3f bot = c01 * float(1 - fx) + c11 * float(fx);
    return top * float(1 - fy) + bot * float(fy);
}

Vec3f sample_face(const ImageRgb& face, double x, double y) {
    const int n = face.width;
    double cx = std::clamp(x, 0.0, double(n - 1));
    double cy = std::clamp(y, 0.0, double(n - 1));
    int x0 = static_cast<int>(std::floor(cx));
    int y0 = static_cast<int>(std::floor(cy));
    double fx = cx - x0, fy = cy - y0;
    int x1 = std::min(x0 + 1, n - 1), y1 = std::min(y0 + 1, n - 1);
    Vec3f c00 = face.pixel(x0, y0), c10 = face.pixel(x1, y0);
    Vec3f c01 = face.pixel(x0, y1), c11 = face.pixel(x1, y1);
    Vec3f top = c00 * float(1 - fx) + c10 * float(fx);
    Vec3f bot = c01 * float(1 - fx) + c11 * float(fx);
    return top * float(1 - fy) + bot * float(fy);
}

namespace {

// Per-face basis: dir = axis + a*right + b*down, a,b in [-1,1].
struct FaceBasis {
    Vec3 axis, right, down;
};

const FaceBasis kFaces[6] = {
    {{0, 0, 1}, {1, 0, 0}, {0, -1, 0}},   // front  (+Z)
    {{0, 0, -1}, {-1, 0, 0}, {0, -1, 0}}, // back   (-Z)
    {{-1, 0, 0}, {0, 0, 1}, {0, -1, 0}},  // left   (-X)
    {{1, 0, 0}, {0, 0, -1}, {0, -1, 0}},  // right  (+X)
    {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},    // up     (+Y)
    {{0, -1, 0}, {1, 0, 0}, {0, 0, -1}},  // down   (-Y)
};

}  // namespace

int direction_to_face(const Vec3& d, double& a, double& b) {
    double ax = std::abs(d.x), ay = std::abs(d.y), az = std::abs(d.z);
    int face;
    if (ax >= ay && ax >= az)
        face = d.x >= 0 ? kRight : kLeft;
    else if (ay >= az)
        face = d.y >= 0 ? kUp : kDown;
    else
        face = d.z >= 0 ? kFront : kBack;
    const FaceBasis& fb = kFaces[face];
    double k = d.dot(fb.axis);  // == max |component| > 0
    a = d.dot(fb.right) / k;
    b = d.dot(fb.down) / k;
    return face;
}

Vec3 face_to_direction(int face, double a, double b) {
    const FaceBasis& fb = kFaces[face];
    return (fb.axis + fb.right * a + fb.down * b).normalized();
}

EquirectImage skybox_to_equirect(const SkyboxFaces& faces, int out_width) {
    validate_skybox(faces);
    if (out_width < 2 || out_width % 2 != 0)
        throw Error(ErrorCode::InvalidInput, "output width must be even and positive");
    const int w = out_width, h = out_width / 2;
    const int n = faces.face_size;
    EquirectImage out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            Vec3 d = pixel_to_direction(x, y, w, h);
            double a, b;
            int face = direction_to_face(d, a, b);
            double fx = (a + 1.0) * 0.5 * n - 0.5;
            double fy = (b + 1.0) * 0.5 * n - 0.5;
            out.set_pixel(x, y, sample_face(faces.faces[face], fx, fy));
        }
    }
    return out;
}

SkyboxFaces equirect_to_skybox(const EquirectImage& img, int face_size) {
    validate_equirect(img);
    if (face_size < 4) throw Error(ErrorCode::InvalidInput, "face size must be at least 4");
    SkyboxFaces out(face_size);
    for (int face = 0; face < 6; ++face) {
        ImageRgb& raster = out.faces[face];
        for (int y = 0; y < face_size; ++y) {
            for (int x = 0; x < face_size; ++x) {
                double a = 2.0 * (x + 0.5) / face_size - 1.0;
                double b = 2.0 * (y + 0.5) / face_size - 1.0;
                Vec3 d = face_to_direction(face, a, b);
                double u, v;
                direction_to_pixel(d, img.width, img.height, u, v);
                raster.set_pixel(x, y, sample_equirect(img, u, v));
            }
        }
    }
    return out;
}

std::vector<Ray> panorama_rays(const Pose& pose, int width, int height, double t_near,
                               double t_far) {
    validate_pose(pose);
    if (!(t_near >= 0) || !(t_far > t_near))
        throw Error(ErrorCode::InvalidInput, "require 0 <= t_near < t_far");
    std::vector<Ray> rays;
    rays.reserve(size_t(width) * height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            Ray r;
            r.origin = pose.position;
            r.direction = pose.rotation * pixel_to_direction(x, y, width, height);
            r.t_near = t_near;
            r.t_far = t_far;
            rays.push_back(r);
        }
    return rays;
}

double pixel_solid_angle(int v, int width, int height) {
    double phi_hi = kPi / 2.0 - kPi * double(v) / height;
    double phi_lo = kPi / 2.0 - kPi * double(v + 1) / height;
    return (2.0 * kPi / width) * (std::sin(phi_hi) - std::sin(phi_lo));
}

}  // namespace panofield
