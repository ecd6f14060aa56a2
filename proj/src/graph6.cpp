#include "threshold_lab/graph6.hpp"

#include <fstream>
#include <istream>

namespace tlab {

namespace {

constexpr std::string_view kG6Header = ">>graph6<<";
constexpr std::string_view kS6Header = ">>sparse6<<";

int decode_byte(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw MalformedGraph6("unexpected end of data", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw MalformedGraph6("byte out of printable range 63..126", pos);
    return c - 63;
}

// Reads the N(n) size field; advances pos.
long long decode_size(std::string_view s, std::size_t& pos) {
    int b0 = decode_byte(s, pos);
    if (b0 < 63) {
        ++pos;
        return b0;
    }
    // b0 == 63 (byte 126)
    int b1 = decode_byte(s, pos + 1);
    if (b1 < 63) {
        long long n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(s, pos + i);
        pos += 4;
        return n;
    }
    long long n = 0;
    for (int i = 2; i <= 7; ++i) n = (n << 6) | decode_byte(s, pos + i);
    pos += 8;
    return n;
}

void encode_size(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

std::string_view strip_header(std::string_view s, std::string_view header) {
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view s) {
    s = strip_header(s, kG6Header);
    std::size_t pos = 0;
    long long n = decode_size(s, pos);
    if (n > 1'000'000) throw MalformedGraph6("vertex count too large", 0);
    Graph g(static_cast<int>(n));
    long long pairs = n * (n - 1) / 2;
    long long bit = 0;
    int cur = 0, left = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (left == 0) {
                cur = decode_byte(s, pos);
                ++pos;
                left = 6;
            }
            if ((cur >> (left - 1)) & 1) g.add_edge(i, j);
            --left;
            ++bit;
        }
    }
    (void)pairs;
    // Padding bits must be zero and the string must end exactly here.
    if (left > 0 && (cur & ((1 << left) - 1)) != 0)
        throw MalformedGraph6("nonzero padding bits", pos - 1);
    if (pos != s.size()) throw MalformedGraph6("trailing bytes after graph", pos);
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    int n = g.vertex_count();
    encode_size(out, n);
    int cur = 0, left = 6;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (--left == 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                left = 6;
            }
        }
    }
    if (left < 6) out.push_back(static_cast<char>((cur << left) + 63));
    return out;
}

Graph parse_sparse6(std::string_view s) {
    s = strip_header(s, kS6Header);
    if (s.empty() || s[0] != ':') throw MalformedGraph6("sparse6 must start with ':'", 0);
    std::size_t pos = 1;
    long long n = decode_size(s, pos);
    if (n > 1'000'000) throw MalformedGraph6("vertex count too large", 1);
    Graph g(static_cast<int>(n));
    if (n == 0) {
        if (pos != s.size()) throw MalformedGraph6("trailing bytes after graph", pos);
        return g;
    }
    int k = 1;
    while ((1ll << k) < n) ++k;  // bits needed for values 0..n-1

    // Bit reader over the remaining bytes.
    std::size_t byte = pos;
    int used = 0;
    auto bits_left = [&] { return 6 * static_cast<long long>(s.size() - byte) - used; };
    auto read_bits = [&](int count) {
        long long x = 0;
        for (int i = 0; i < count; ++i) {
            int b = decode_byte(s, byte);
            x = (x << 1) | ((b >> (5 - used)) & 1);
            if (++used == 6) {
                used = 0;
                ++byte;
            }
        }
        return x;
    };

    long long v = 0;
    while (bits_left() >= k + 1) {
        int b = static_cast<int>(read_bits(1));
        long long x = read_bits(k);
        if (b) ++v;
        if (v >= n) break;
        if (x > v) {
            v = x;
            if (v >= n) break;
        } else if (x == v) {
            // Either a loop (unsupported) or the all-ones padding when n is a
            // power of two.
            if (b == 1 && x == (1ll << k) - 1) break;
            throw MalformedGraph6("loop not supported", byte);
        } else {
            g.add_edge(static_cast<int>(x), static_cast<int>(v));
        }
    }
    return g;
}

Graph parse_graph_line(std::string_view s) {
    std::string_view body = s;
    body = strip_header(body, kG6Header);
    body = strip_header(body, kS6Header);
    if (!body.empty() && body[0] == ':') return parse_sparse6(body);
    return parse_graph6(body);
}

std::vector<Graph> read_graph_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r\n");
        std::string_view body(line.data() + a, b - a + 1);
        if (body[0] == '#') continue;
        out.push_back(parse_graph_line(body));
    }
    return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open graph file: " + path);
    return read_graph_stream(in);
}

}  // namespace tlab
