#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace digadget {

/// Bit-packed sequence. Its size() is the exact memory cost in bits of a
/// serialized streaming state, so nothing here is byte-padded.
class BitString {
public:
    BitString() = default;

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool operator[](std::size_t pos) const { return (words_[pos / 64] >> (pos % 64)) & 1U; }

    void push_back(bool bit);

    /// Appends the low `width` bits of `value`, least significant first.
    void append(std::uint64_t value, unsigned width);

    /// '0'/'1' characters, position 0 first.
    std::string to_string() const;
    static BitString from_string(std::string_view text);

    /// Packs bits LSB-first into ceil(size/8) bytes.
    std::vector<std::uint8_t> to_bytes() const;
    static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count);

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// Sequential reader over a BitString; throws MalformedMessage on overrun.
class BitReader {
public:
    explicit BitReader(const BitString& bits) : bits_(&bits) {}

    std::uint64_t read(unsigned width);
    bool read_bit() { return read(1) != 0; }

    std::size_t remaining() const noexcept { return bits_->size() - pos_; }

private:
    const BitString* bits_;
    std::size_t pos_ = 0;
};

/// Bits needed to store any value in [0, count): ceil(log2(count)), 0 for count <= 1.
unsigned index_width(std::uint64_t count) noexcept;

} // namespace digadget
