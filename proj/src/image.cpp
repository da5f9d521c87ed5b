#include "auxpose/image.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace auxpose {

namespace {

// PNM header token reader: skips whitespace and '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!isspace(c)) {
            break;
        }
        c = in.get();
    }
    while (c != EOF && !isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return tok;
}

int parse_dim(const std::string& tok, const std::string& path, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v <= 0) throw std::invalid_argument("bad");
        return v;
    } catch (...) {
        throw std::runtime_error(path + ": invalid " + what + " in PNM header");
    }
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open image file: " + path);
    std::string magic = next_token(in);
    if (magic != "P5") throw std::runtime_error(path + ": not a binary PGM (P5) file");
    int w = parse_dim(next_token(in), path, "width");
    int h = parse_dim(next_token(in), path, "height");
    int maxval = parse_dim(next_token(in), path, "maxval");
    if (maxval > 65535) throw std::runtime_error(path + ": PGM maxval out of range");

    GrayImage img(w, h);
    size_t n = img.size();
    if (maxval < 256) {
        std::vector<uint8_t> buf(n);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
        if (static_cast<size_t>(in.gcount()) != n)
            throw std::runtime_error(path + ": truncated PGM pixel data");
        for (size_t i = 0; i < n; ++i) img.values[i] = buf[i] / static_cast<double>(maxval);
    } else {
        std::vector<uint8_t> buf(n * 2);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n * 2));
        if (static_cast<size_t>(in.gcount()) != n * 2)
            throw std::runtime_error(path + ": truncated PGM pixel data");
        for (size_t i = 0; i < n; ++i) {
            // 16-bit PGM is big-endian
            int v = (buf[2 * i] << 8) | buf[2 * i + 1];
            img.values[i] = v / static_cast<double>(maxval);
        }
    }
    return img;
}

void write_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write image file: " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    std::vector<uint8_t> buf(img.size());
    for (size_t i = 0; i < img.size(); ++i) {
        double v = img.values[i];
        if (v < 0.0) v = 0.0;
        if (v > 1.0) v = 1.0;
        buf[i] = static_cast<uint8_t>(v * 255.0 + 0.5);
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

BinaryMask read_pbm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open mask file: " + path);
    std::string magic = next_token(in);
    if (magic != "P4") throw std::runtime_error(path + ": not a binary PBM (P4) file");
    int w = parse_dim(next_token(in), path, "width");
    int h = parse_dim(next_token(in), path, "height");

    BinaryMask mask(w, h);
    size_t row_bytes = (static_cast<size_t>(w) + 7) / 8;
    std::vector<uint8_t> row(row_bytes);
    for (int y = 0; y < h; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row_bytes));
        if (static_cast<size_t>(in.gcount()) != row_bytes)
            throw std::runtime_error(path + ": truncated PBM pixel data");
        for (int x = 0; x < w; ++x)
            mask.at(x, y) = (row[x / 8] >> (7 - (x % 8))) & 1;
    }
    return mask;
}

void write_pbm(const BinaryMask& mask, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write mask file: " + path);
    out << "P4\n" << mask.width << " " << mask.height << "\n";
    size_t row_bytes = (static_cast<size_t>(mask.width) + 7) / 8;
    std::vector<uint8_t> row(row_bytes);
    for (int y = 0; y < mask.height; ++y) {
        std::fill(row.begin(), row.end(), 0);
        for (int x = 0; x < mask.width; ++x)
            if (mask.at(x, y)) row[x / 8] |= static_cast<uint8_t>(1u << (7 - (x % 8)));
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row_bytes));
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace auxpose
