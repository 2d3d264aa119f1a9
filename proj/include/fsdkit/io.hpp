#ifndef FSDKIT_IO_HPP
#define FSDKIT_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fsdkit/errors.hpp"
#include "fsdkit/tensor.hpp"

namespace fsdkit {

// Versioned binary container shared by parameter and summary files:
// magic "FSDK", version u32, file-kind u32, then kind-specific body.
// All integers and f64 payloads are little-endian.

inline constexpr char kMagic[4] = {'F', 'S', 'D', 'K'};
inline constexpr std::uint32_t kFormatVersion = 1;

enum class FileKind : std::uint32_t { Params = 1, Summary = 2 };

class ByteWriter {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void f64(double v);
    void f64_array(const std::vector<double>& v);
    void tensor(const Tensor& t);
    void raw(const char* p, std::size_t n);

    const std::vector<std::uint8_t>& bytes() const { return buf_; }
    void write_file(const std::string& path) const;

private:
    std::vector<std::uint8_t> buf_;
};

class ByteReader {
public:
    explicit ByteReader(std::vector<std::uint8_t> bytes) : buf_(std::move(bytes)) {}
    static ByteReader from_file(const std::string& path);

    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    double f64();
    std::vector<double> f64_array(std::size_t n);
    Tensor tensor();
    bool at_end() const { return pos_ == buf_.size(); }

private:
    void need(std::size_t n) const;
    std::vector<std::uint8_t> buf_;
    std::size_t pos_ = 0;
};

/// Writes magic + version + kind.
void write_header(ByteWriter& w, FileKind kind);
/// Checks magic and version, returns the file kind.
FileKind read_header(ByteReader& r);

}  // namespace fsdkit

#endif
