#include "digadget/bit_string.hpp"

#include "digadget/errors.hpp"

#include <bit>

namespace digadget {

void BitString::push_back(bool bit)
{
    if (size_ % 64 == 0)
        words_.push_back(0);
    if (bit)
        words_.back() |= std::uint64_t{1} << (size_ % 64);
    ++size_;
}

void BitString::append(std::uint64_t value, unsigned width)
{
    for (unsigned b = 0; b < width; ++b)
        push_back(((value >> b) & 1U) != 0);
}

std::string BitString::to_string() const
{
    std::string out;
    out.reserve(size_);
    for (std::size_t p = 0; p < size_; ++p)
        out.push_back((*this)[p] ? '1' : '0');
    return out;
}

BitString BitString::from_string(std::string_view text)
{
    BitString out;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw MalformedMessage("bit string may only contain '0' and '1'");
        out.push_back(c == '1');
    }
    return out;
}

std::vector<std::uint8_t> BitString::to_bytes() const
{
    std::vector<std::uint8_t> out((size_ + 7) / 8, 0);
    for (std::size_t p = 0; p < size_; ++p)
        if ((*this)[p])
            out[p / 8] |= static_cast<std::uint8_t>(1U << (p % 8));
    return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count)
{
    if (bytes.size() * 8 < bit_count)
        throw MalformedMessage("byte buffer shorter than bit count");
    BitString out;
    for (std::size_t p = 0; p < bit_count; ++p)
        out.push_back(((bytes[p / 8] >> (p % 8)) & 1U) != 0);
    return out;
}

std::uint64_t BitReader::read(unsigned width)
{
    if (width > remaining())
        throw MalformedMessage("state truncated: wanted " + std::to_string(width) + " bits, "
                               + std::to_string(remaining()) + " left");
    std::uint64_t v = 0;
    for (unsigned b = 0; b < width; ++b)
        if ((*bits_)[pos_++])
            v |= std::uint64_t{1} << b;
    return v;
}

unsigned index_width(std::uint64_t count) noexcept
{
    return count <= 1 ? 0U : static_cast<unsigned>(std::bit_width(count - 1));
}

} // namespace digadget
