#pragma once

#include "digadget/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace digadget {

/// Alice's input. Positions are 0-based.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::vector<bool> bits);

    /// Parses a non-empty string of '0'/'1'; character p is position p.
    static BitVector parse(std::string_view text);
    static BitVector random(std::size_t m, std::uint64_t seed);

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t pos) const { return bits_[pos]; }
    std::size_t popcount() const noexcept;
    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::vector<bool> bits_;
};

/// An INDEX instance: Alice holds x, Bob holds i < x.size().
struct IndexInstance {
    BitVector x;
    std::size_t i = 0;

    /// Throws InvalidArgument if x is empty or i is out of range.
    static IndexInstance make(BitVector x, std::size_t i);

    bool target_bit() const { return x[i]; }
};

enum class Property { Acyclicity, StrongConnectivity, ReachabilityFromS };

inline constexpr Property kAllProperties[] = {
    Property::Acyclicity, Property::StrongConnectivity, Property::ReachabilityFromS};

/// Short names used on the command line and in files: acyc, sc, reach.
std::string_view property_name(Property p) noexcept;
std::optional<Property> parse_property(std::string_view name) noexcept;

/// Side length n of the n x n bipartite grid, and the grid cell (j, k) of index i.
struct GadgetParams {
    std::size_t n = 0;
    std::size_t j = 0;
    std::size_t k = 0;

    friend bool operator==(const GadgetParams&, const GadgetParams&) = default;
};

/// n = ceil(sqrt(m)), k = i mod n, j = (i - k) / n. Throws InvalidArgument
/// unless 1 <= m and i < m.
GadgetParams derive_params(std::size_t m, std::size_t i);

/// ceil(sqrt(m)) in exact integer arithmetic.
std::size_t ceil_sqrt(std::size_t m) noexcept;

// Vertex layout: L = [0, n), R = [n, 2n), s = 2n.
constexpr VertexId left_vertex(std::size_t n, std::size_t idx) noexcept
{
    (void)n;
    return static_cast<VertexId>(idx);
}
constexpr VertexId right_vertex(std::size_t n, std::size_t idx) noexcept
{
    return static_cast<VertexId>(n + idx);
}
constexpr VertexId source_vertex(std::size_t n) noexcept { return static_cast<VertexId>(2 * n); }

std::size_t gadget_vertex_count(Property p, std::size_t n) noexcept;

struct GadgetInstance {
    Property property = Property::Acyclicity;
    std::size_t m = 0;
    std::size_t i = 0;
    GadgetParams params;
    std::size_t vertex_count = 0;
    std::optional<VertexId> s;
    std::vector<Edge> e1; // sorted, distinct
    std::vector<Edge> e2; // sorted, distinct

    /// E1 union E2 as a graph.
    Digraph graph() const;

    /// The bit this instance encodes, read back from E1: x_i = 1 iff L_j -> R_k is in E1.
    bool encoded_bit() const;

    friend bool operator==(const GadgetInstance&, const GadgetInstance&) = default;
};

/// Alice's edges: L_a -> R_b for every set position a*n + b of x zero-padded to n^2.
std::vector<Edge> build_e1(const BitVector& x);

/// Bob's edges, which depend only on (property, n, j, k).
std::vector<Edge> build_e2(Property property, const GadgetParams& params);

GadgetInstance build_instance(Property property, const IndexInstance& inst);

/// Property value implied by x_i alone: acyclic iff x_i = 0; the other two iff x_i = 1.
bool ground_truth(Property property, const IndexInstance& inst);
bool truth_for_bit(Property property, bool bit) noexcept;

/// Maps a property decision back to the INDEX answer it implies.
bool bit_for_decision(Property property, bool decision) noexcept;

/// Runs the graph_core oracle matching `property` on the instance graph.
bool evaluate_property(Property property, const Digraph& g, std::optional<VertexId> s);

} // namespace digadget
