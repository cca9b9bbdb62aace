#include "panofield/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

namespace panofield {

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

uint8_t quantize8(float v) {
    float q = std::round(std::clamp(v, 0.f, 1.f) * 255.f);
    return static_cast<uint8_t>(q);
}

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

void open_read(PngReader& r, FILE* f, const std::string& path, int& width, int& height) {
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!r.png) throw Error(ErrorCode::IoFailure, "png_create_read_struct failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw Error(ErrorCode::IoFailure, "png_create_info_struct failed");
    if (setjmp(png_jmpbuf(r.png))) throw Error(ErrorCode::IoFailure, "failed to decode " + path);
    png_init_io(r.png, f);
    png_read_info(r.png, r.info);
    width = static_cast<int>(png_get_image_width(r.png, r.info));
    height = static_cast<int>(png_get_image_height(r.png, r.info));
}

FILE* open_file(const std::string& path, const char* mode) {
    FILE* f = std::fopen(path.c_str(), mode);
    if (!f) {
        ErrorCode code = mode[0] == 'r' ? ErrorCode::MissingFile : ErrorCode::IoFailure;
        throw Error(code, "cannot open " + path);
    }
    return f;
}

}  // namespace

ImageRgb read_png_rgb8(const std::string& path) {
    FilePtr f(open_file(path, "rb"));
    PngReader r;
    int width = 0, height = 0;
    open_read(r, f.get(), path, width, height);

    // Normalize any input layout to 8-bit RGB.
    png_set_expand(r.png);
    png_set_strip_16(r.png);
    png_set_strip_alpha(r.png);
    png_set_gray_to_rgb(r.png);
    png_read_update_info(r.png, r.info);
    if (png_get_channels(r.png, r.info) != 3)
        throw Error(ErrorCode::IoFailure, "unexpected channel count in " + path);

    ImageRgb img(width, height);
    std::vector<uint8_t> row(size_t(width) * 3);
    for (int y = 0; y < height; ++y) {
        png_read_row(r.png, row.data(), nullptr);
        for (int x = 0; x < width; ++x)
            for (int c = 0; c < 3; ++c)
                img.at(x, y, c) = static_cast<float>(row[size_t(x) * 3 + c]) / 255.f;
    }
    png_read_end(r.png, nullptr);
    return img;
}

void write_png_rgb8(const std::string& path, const ImageRgb& img) {
    FilePtr f(open_file(path, "wb"));
    PngWriter w;
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!w.png) throw Error(ErrorCode::IoFailure, "png_create_write_struct failed");
    w.info = png_create_info_struct(w.png);
    if (!w.info) throw Error(ErrorCode::IoFailure, "png_create_info_struct failed");
    if (setjmp(png_jmpbuf(w.png))) throw Error(ErrorCode::IoFailure, "failed to encode " + path);

    png_init_io(w.png, f.get());
    png_set_IHDR(w.png, w.info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);

    std::vector<uint8_t> row(size_t(img.width) * 3);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x)
            for (int c = 0; c < 3; ++c) row[size_t(x) * 3 + c] = quantize8(img.at(x, y, c));
        png_write_row(w.png, row.data());
    }
    png_write_end(w.png, nullptr);
}

DepthPanorama read_png_depth16(const std::string& path) {
    FilePtr f(open_file(path, "rb"));
    PngReader r;
    int width = 0, height = 0;
    open_read(r, f.get(), path, width, height);

    if (png_get_color_type(r.png, r.info) != PNG_COLOR_TYPE_GRAY ||
        png_get_bit_depth(r.png, r.info) != 16)
        throw Error(ErrorCode::IoFailure, "depth png must be 16-bit grayscale: " + path);
    png_set_swap(r.png);  // stored big-endian per PNG spec
    png_read_update_info(r.png, r.info);

    DepthPanorama depth(width, height);
    std::vector<uint16_t> row(width);
    for (int y = 0; y < height; ++y) {
        png_read_row(r.png, reinterpret_cast<png_bytep>(row.data()), nullptr);
        for (int x = 0; x < width; ++x) depth.at(x, y) = static_cast<float>(row[x]) / 1000.f;
    }
    png_read_end(r.png, nullptr);
    return depth;
}

void write_png_depth16(const std::string& path, const DepthPanorama& depth) {
    FilePtr f(open_file(path, "wb"));
    PngWriter w;
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!w.png) throw Error(ErrorCode::IoFailure, "png_create_write_struct failed");
    w.info = png_create_info_struct(w.png);
    if (!w.info) throw Error(ErrorCode::IoFailure, "png_create_info_struct failed");
    if (setjmp(png_jmpbuf(w.png))) throw Error(ErrorCode::IoFailure, "failed to encode " + path);

    png_init_io(w.png, f.get());
    png_set_IHDR(w.png, w.info, depth.width, depth.height, 16, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);
    png_set_swap(w.png);

    std::vector<uint16_t> row(depth.width);
    for (int y = 0; y < depth.height; ++y) {
        for (int x = 0; x < depth.width; ++x) {
            double mm = std::round(std::max(0.f, depth.at(x, y)) * 1000.0);
            row[x] = static_cast<uint16_t>(std::min(mm, 65535.0));
        }
        png_write_row(w.png, reinterpret_cast<png_bytep>(row.data()));
    }
    png_write_end(w.png, nullptr);
}

void write_png_gray8(const std::string& path, const std::vector<float>& values, int width,
                     int height) {
    if (static_cast<size_t>(width) * height != values.size())
        throw Error(ErrorCode::DimensionMismatch, "gray8 buffer size mismatch");
    FilePtr f(open_file(path, "wb"));
    PngWriter w;
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!w.png) throw Error(ErrorCode::IoFailure, "png_create_write_struct failed");
    w.info = png_create_info_struct(w.png);
    if (!w.info) throw Error(ErrorCode::IoFailure, "png_create_info_struct failed");
    if (setjmp(png_jmpbuf(w.png))) throw Error(ErrorCode::IoFailure, "failed to encode " + path);

    png_init_io(w.png, f.get());
    png_set_IHDR(w.png, w.info, width, height, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);
    std::vector<uint8_t> row(width);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) row[x] = quantize8(values[size_t(y) * width + x]);
        png_write_row(w.png, row.data());
    }
    png_write_end(w.png, nullptr);
}

}  // namespace panofield
