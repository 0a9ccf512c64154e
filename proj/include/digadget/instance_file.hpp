#pragma once

#include "digadget/gadgets.hpp"
#include "digadget/stream.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace digadget {

// Text format:
//
//   digadget <acyc|sc|reach> m=<m> n=<n> i=<i> s=<vertex|none>
//   <u> <v>          one line per E1 edge
//   ---              mandatory, even when E1 is empty
//   <u> <v>          one line per E2 edge
//
// Edges are written in stream order; parsing collects them back into sets.

std::string render_instance(const GadgetInstance& instance, StreamOrder order = StreamOrder::Canonical,
                            std::uint64_t seed = 0);

/// Throws ParseError with the offending line number.
GadgetInstance parse_instance(std::string_view text);

} // namespace digadget
