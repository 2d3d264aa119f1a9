#include "fsdkit/io.hpp"

#include <cstring>
#include <fstream>

namespace fsdkit {

void ByteWriter::u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::f64(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    u64(bits);
}

void ByteWriter::f64_array(const std::vector<double>& v) {
    for (double x : v) f64(x);
}

void ByteWriter::tensor(const Tensor& t) {
    u8(static_cast<std::uint8_t>(t.rank()));
    for (std::size_t d : t.shape) u32(static_cast<std::uint32_t>(d));
    f64_array(t.data);
}

void ByteWriter::raw(const char* p, std::size_t n) {
    buf_.insert(buf_.end(), p, p + n);
}

void ByteWriter::write_file(const std::string& path) const {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open for writing: " + path);
    os.write(reinterpret_cast<const char*>(buf_.data()),
             static_cast<std::streamsize>(buf_.size()));
    if (!os) throw IoError("write failed: " + path);
}

ByteReader ByteReader::from_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(is)),
                                    std::istreambuf_iterator<char>());
    return ByteReader(std::move(bytes));
}

void ByteReader::need(std::size_t n) const {
    if (pos_ + n > buf_.size())
        throw CorruptFileError("truncated container (need " + std::to_string(n) +
                               " bytes at offset " + std::to_string(pos_) + ")");
}

std::uint8_t ByteReader::u8() {
    need(1);
    return buf_[pos_++];
}

std::uint32_t ByteReader::u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf_[pos_++]) << (8 * i);
    return v;
}

std::uint64_t ByteReader::u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf_[pos_++]) << (8 * i);
    return v;
}

double ByteReader::f64() {
    const std::uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

std::vector<double> ByteReader::f64_array(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f64();
    return v;
}

Tensor ByteReader::tensor() {
    const std::uint8_t rank = u8();
    if (rank > 4) throw CorruptFileError("tensor rank out of range");
    std::vector<std::size_t> shape(rank);
    std::size_t n = 1;
    for (std::uint8_t i = 0; i < rank; ++i) {
        shape[i] = u32();
        n *= shape[i];
    }
    if (n > (1ULL << 32)) throw CorruptFileError("tensor element count out of range");
    return Tensor(std::move(shape), f64_array(n));
}

void write_header(ByteWriter& w, FileKind kind) {
    w.raw(kMagic, 4);
    w.u32(kFormatVersion);
    w.u32(static_cast<std::uint32_t>(kind));
}

FileKind read_header(ByteReader& r) {
    char magic[4];
    for (int i = 0; i < 4; ++i) magic[i] = static_cast<char>(r.u8());
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw CorruptFileError("bad magic (not an FSDK container)");
    const std::uint32_t version = r.u32();
    if (version > kFormatVersion)
        throw VersionError("container version " + std::to_string(version) +
                           " is newer than supported version " +
                           std::to_string(kFormatVersion));
    const std::uint32_t kind = r.u32();
    if (kind != 1 && kind != 2) throw CorruptFileError("unknown file kind");
    return static_cast<FileKind>(kind);
}

}  // namespace fsdkit
