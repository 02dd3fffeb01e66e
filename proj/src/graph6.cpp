#include "ginertia/graph6.hpp"

namespace ginertia {

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t i) {
        if (i >= text.size()) throw Graph6Error(text.size(), "unexpected end of input");
        char c = text[i];
        if (c < 63 || c > 126) throw Graph6Error(i, "character out of range 63..126");
        return c - 63;
    };
    int n;
    if (text.empty()) throw Graph6Error(0, "empty input");
    if (text[0] == 126) {
        if (text.size() >= 2 && text[1] == 126) throw Graph6Error(1, "orders above 258047 unsupported");
        n = (need(1) << 12) | (need(2) << 6) | need(3);
        pos = 4;
    } else {
        n = need(0);
        pos = 1;
    }
    if (n > Graph::kMaxOrder) throw Graph6Error(0, "order exceeds the 64-vertex cap");
    Graph g(n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = need(pos);
                ++pos;
                nbits = 6;
            }
            if (acc & 0x20) g.add_edge(i, j);
            acc = (acc << 1) & 0x3f;
            --nbits;
        }
    if (nbits > 0 && acc != 0) throw Graph6Error(pos - 1, "nonzero padding bits");
    if (pos != text.size()) throw Graph6Error(pos, "trailing characters");
    return g;
}

std::string to_dot(const Graph& g) {
    std::string out = "graph g {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(i, j))
                out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace ginertia
