#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "panofield/errors.hpp"
#include "panofield/vec.hpp"

namespace panofield {

// RGB raster, row-major, channels in [0,1].
struct ImageRgb {
    int width = 0;
    int height = 0;
    std::vector<float> data;  // height * width * 3

    ImageRgb() = default;
    ImageRgb(int w, int h, float fill = 0.f) : width(w), height(h), data(size_t(w) * h * 3, fill) {}

    float& at(int x, int y, int c) { return data[(size_t(y) * width + x) * 3 + c]; }
    float at(int x, int y, int c) const { return data[(size_t(y) * width + x) * 3 + c]; }

    Vec3f pixel(int x, int y) const {
        size_t i = (size_t(y) * width + x) * 3;
        return {data[i], data[i + 1], data[i + 2]};
    }
    void set_pixel(int x, int y, const Vec3f& rgb) {
        size_t i = (size_t(y) * width + x) * 3;
        data[i] = rgb.x;
        data[i + 1] = rgb.y;
        data[i + 2] = rgb.z;
    }
    size_t pixel_count() const { return size_t(width) * height; }
};

// Full 360x180 panorama; width must be twice the height.
using EquirectImage = ImageRgb;

void validate_equirect(const EquirectImage& img);

// Per-pixel metric depth in meters along the pixel ray; 0 marks invalid.
struct DepthPanorama {
    int width = 0;
    int height = 0;
    std::vector<float> data;  // height * width

    DepthPanorama() = default;
    DepthPanorama(int w, int h, float fill = 0.f) : width(w), height(h), data(size_t(w) * h, fill) {}

    float& at(int x, int y) { return data[size_t(y) * width + x]; }
    float at(int x, int y) const { return data[size_t(y) * width + x]; }
    size_t pixel_count() const { return size_t(width) * height; }
};

struct MaskImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;

    MaskImage() = default;
    MaskImage(int w, int h, uint8_t fill = 0) : width(w), height(h), data(size_t(w) * h, fill) {}

    uint8_t& at(int x, int y) { return data[size_t(y) * width + x]; }
    uint8_t at(int x, int y) const { return data[size_t(y) * width + x]; }
    size_t count_set() const {
        size_t n = 0;
        for (uint8_t v : data) n += (v != 0);
        return n;
    }
};

enum SkyboxFace { kFront = 0, kBack, kLeft, kRight, kUp, kDown };

inline const char* skybox_face_name(int f) {
    static const char* names[6] = {"front", "back", "left", "right", "up", "down"};
    return names[f];
}

// Six square RGB faces sharing one edge size.
struct SkyboxFaces {
    int face_size = 0;
    std::array<ImageRgb, 6> faces;

    SkyboxFaces() = default;
    explicit SkyboxFaces(int size, float fill = 0.f) : face_size(size) {
        for (auto& f : faces) f = ImageRgb(size, size, fill);
    }
};

void validate_skybox(const SkyboxFaces& faces);

}  // namespace panofield
