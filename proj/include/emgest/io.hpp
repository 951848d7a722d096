#pragma once

// Small binary-IO toolkit shared by the dictionary and measurement file
// formats: explicit little-endian packing (portable across hosts), zlib
// CRC32 trailers, FNV-1a config hashing, and atomic file replacement.

#include <zlib.h>

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

#include "emgest/core.hpp"

namespace emgest::io {

inline uint32_t crc32(std::string_view data) {
    return static_cast<uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
}

inline uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 14695981039346656037ull;
    for (const char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex16(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

class ByteWriter {
  public:
    void put_u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }

    void put_u32le(uint32_t v) {
        for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }

    void put_u64le(uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }

    void put_f64le(double v) { put_u64le(std::bit_cast<uint64_t>(v)); }

    void put_complex_f64le(const Complex& v) {
        put_f64le(v.real());
        put_f64le(v.imag());
    }

    void put_bytes(std::string_view s) { buf_.append(s); }

    const std::string& str() const { return buf_; }
    size_t size() const { return buf_.size(); }

  private:
    std::string buf_;
};

class ByteReader {
  public:
    explicit ByteReader(std::string_view data) : data_(data) {}

    uint8_t get_u8() {
        need(1);
        return static_cast<uint8_t>(data_[pos_++]);
    }

    uint32_t get_u32le() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<uint32_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
        pos_ += 4;
        return v;
    }

    uint64_t get_u64le() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
        pos_ += 8;
        return v;
    }

    double get_f64le() { return std::bit_cast<double>(get_u64le()); }

    Complex get_complex_f64le() {
        const double re = get_f64le();
        const double im = get_f64le();
        return {re, im};
    }

    std::string_view get_bytes(size_t n) {
        need(n);
        std::string_view s = data_.substr(pos_, n);
        pos_ += n;
        return s;
    }

    size_t remaining() const { return data_.size() - pos_; }
    size_t position() const { return pos_; }

  private:
    void need(size_t n) const {
        if (data_.size() - pos_ < n) throw IntegrityError("truncated input: unexpected end of data");
    }

    std::string_view data_;
    size_t pos_ = 0;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IntegrityError("cannot open file: " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IntegrityError("read failure: " + path.string());
    return data;
}

// Writes through a sibling temp file and renames into place, so readers never
// observe a half-written artifact and reruns produce byte-identical files.
inline void atomic_write_file(const std::filesystem::path& path, std::string_view data) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        out.flush();
        if (!out) throw std::runtime_error("write failure: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace emgest::io
