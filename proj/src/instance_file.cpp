#include "digadget/instance_file.hpp"

#include "digadget/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace digadget {

namespace {

constexpr std::string_view kMagic = "digadget";
constexpr std::string_view kBoundary = "---";

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
            ++pos;
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t')
            ++pos;
        if (pos > start)
            words.push_back(line.substr(start, pos - start));
    }
    return words;
}

std::size_t parse_number(std::string_view text, std::size_t line, std::string_view what)
{
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
        throw ParseError(line, "bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

std::string_view field(std::string_view word, std::string_view key, std::size_t line)
{
    if (word.size() <= key.size() || word.substr(0, key.size()) != key || word[key.size()] != '=')
        throw ParseError(line, "expected " + std::string(key) + "=<value>, got '" + std::string(word) + "'");
    return word.substr(key.size() + 1);
}

} // namespace

std::string render_instance(const GadgetInstance& instance, StreamOrder order, std::uint64_t seed)
{
    const EdgeStream stream = make_stream(instance, order, seed);
    std::ostringstream out;
    out << kMagic << ' ' << property_name(instance.property) << " m=" << instance.m
        << " n=" << instance.params.n << " i=" << instance.i << " s=";
    if (instance.s)
        out << *instance.s;
    else
        out << "none";
    out << '\n';
    for (const Edge& e : stream.first_segment())
        out << e.from << ' ' << e.to << '\n';
    out << kBoundary << '\n';
    for (const Edge& e : stream.second_segment())
        out << e.from << ' ' << e.to << '\n';
    return out.str();
}

GadgetInstance parse_instance(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    if (lines.empty())
        throw ParseError(1, "empty instance file");

    const auto header = split_words(lines[0]);
    if (header.size() != 6 || header[0] != kMagic)
        throw ParseError(1, "header must be 'digadget <property> m=<m> n=<n> i=<i> s=<vertex|none>'");

    GadgetInstance g;
    const auto property = parse_property(header[1]);
    if (!property)
        throw ParseError(1, "unknown property '" + std::string(header[1]) + "'");
    g.property = *property;
    g.m = parse_number(field(header[2], "m", 1), 1, "m");
    const std::size_t n = parse_number(field(header[3], "n", 1), 1, "n");
    g.i = parse_number(field(header[4], "i", 1), 1, "i");
    if (g.m == 0 || g.i >= g.m)
        throw ParseError(1, "need 1 <= m and i < m");
    g.params = derive_params(g.m, g.i);
    if (n != g.params.n)
        throw ParseError(1, "n=" + std::to_string(n) + " does not match ceil(sqrt(m))="
                                + std::to_string(g.params.n));
    g.vertex_count = gadget_vertex_count(g.property, n);

    const std::string_view s_text = field(header[5], "s", 1);
    if (g.property == Property::ReachabilityFromS) {
        const std::size_t s = parse_number(s_text, 1, "s");
        if (s != source_vertex(n))
            throw ParseError(1, "s must be " + std::to_string(source_vertex(n)));
        g.s = static_cast<VertexId>(s);
    } else if (s_text != "none") {
        throw ParseError(1, "s must be 'none' for this property");
    }

    bool past_boundary = false;
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        const std::size_t line_no = idx + 1;
        const std::string_view line = lines[idx];
        if (line == kBoundary) {
            if (past_boundary)
                throw ParseError(line_no, "second '---' boundary");
            past_boundary = true;
            continue;
        }
        const auto words = split_words(line);
        if (words.empty()) {
            if (idx + 1 == lines.size())
                break;
            throw ParseError(line_no, "blank line");
        }
        if (words.size() != 2)
            throw ParseError(line_no, "edge line must be '<u> <v>'");
        const std::size_t u = parse_number(words[0], line_no, "vertex");
        const std::size_t v = parse_number(words[1], line_no, "vertex");
        if (u >= g.vertex_count || v >= g.vertex_count)
            throw ParseError(line_no, "edge (" + std::to_string(u) + ", " + std::to_string(v)
                                          + ") outside [0, " + std::to_string(g.vertex_count) + ")");
        (past_boundary ? g.e2 : g.e1).push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    if (!past_boundary)
        throw ParseError(lines.size(), "missing '---' boundary");

    for (auto* set : {&g.e1, &g.e2}) {
        std::sort(set->begin(), set->end());
        set->erase(std::unique(set->begin(), set->end()), set->end());
    }
    return g;
}

} // namespace digadget
