#include "rainbow/instance_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rainbow {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

[[noreturn]] void parse_error(int line, const std::string& message) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + message);
}

// Input lines that carry content: comments ('#' first non-space char) and
// blank lines are dropped, original line numbers kept for error reports.
std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::size_t i = 0;
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        if (i == raw.size() || raw[i] == '#') continue;
        lines.push_back({number, raw});
    }
    return lines;
}

std::vector<long long> parse_ints(const Line& line) {
    std::vector<long long> values;
    std::istringstream in(line.text);
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            parse_error(line.number, "expected an integer, got '" + token + "'");
        }
    }
    return values;
}

std::vector<std::string> tokens_of(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

}  // namespace

std::string serialize_system(const GraphSystem& sys) {
    if (!sys.is_square())
        throw std::invalid_argument("only square systems serialize: got "
                                    + std::to_string(sys.vertex_count()) + " vertices, "
                                    + std::to_string(sys.color_count()) + " colors");
    std::ostringstream out;
    out << "rgs 1\n" << sys.vertex_count() << "\n";
    for (const EdgeTriple& e : sys.edges()) out << e.color << " " << e.u << " " << e.v << "\n";
    return out.str();
}

GraphSystem parse_system(const std::string& text) {
    const std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) throw std::runtime_error("line 1: missing 'rgs 1' header");
    if (tokens_of(lines[0].text) != std::vector<std::string>{"rgs", "1"})
        parse_error(lines[0].number, "expected 'rgs 1' header, got '" + lines[0].text + "'");
    if (lines.size() < 2) parse_error(lines[0].number, "missing vertex count after header");

    const std::vector<long long> header = parse_ints(lines[1]);
    if (header.size() != 1 || header[0] < 1)
        parse_error(lines[1].number, "expected a positive vertex count");
    const long long n = header[0];
    if (n > 1'000'000) parse_error(lines[1].number, "vertex count implausibly large");

    GraphSystem sys(static_cast<int>(n), static_cast<int>(n));
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const std::vector<long long> vals = parse_ints(lines[i]);
        if (vals.size() != 3) parse_error(lines[i].number, "expected 'color u v'");
        try {
            sys.add_edge(static_cast<int>(vals[0]), static_cast<int>(vals[1]),
                         static_cast<int>(vals[2]));
        } catch (const std::invalid_argument& err) {
            parse_error(lines[i].number, err.what());
        }
    }
    return sys;
}

namespace {

std::string serialize_sequence(const char* kind, const std::vector<int>& vertices,
                               const std::vector<int>& colors) {
    std::ostringstream out;
    out << kind << " " << vertices.size() << "\n";
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out << vertices[i] << (i + 1 == vertices.size() ? "" : " ");
    out << "\n";
    for (std::size_t i = 0; i < colors.size(); ++i)
        out << colors[i] << (i + 1 == colors.size() ? "" : " ");
    out << "\n";
    return out.str();
}

std::vector<int> parse_id_line(const Line& line, std::size_t want, const char* what) {
    const std::vector<long long> vals = parse_ints(line);
    if (vals.size() != want)
        parse_error(line.number, std::string(what) + " count mismatch: expected "
                                     + std::to_string(want) + ", got "
                                     + std::to_string(vals.size()));
    std::vector<int> out;
    out.reserve(vals.size());
    for (long long v : vals) {
        if (v < 0) parse_error(line.number, std::string("negative ") + what + " id");
        if (v > 1'000'000) parse_error(line.number, std::string(what) + " id implausibly large");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

// Parses one certificate starting at lines[pos]; advances pos past it.
Certificate parse_one_certificate(const std::vector<Line>& lines, std::size_t& pos) {
    const Line& header = lines[pos];
    const std::vector<std::string> head = tokens_of(header.text);
    if (head.size() != 2 || (head[0] != "path" && head[0] != "cycle"))
        parse_error(header.number, "expected 'path <k>' or 'cycle <k>'");
    long long k = 0;
    try {
        k = std::stoll(head[1]);
    } catch (const std::exception&) {
        parse_error(header.number, "expected a length after '" + head[0] + "'");
    }
    const bool closed = head[0] == "cycle";
    if (closed && k < 3) parse_error(header.number, "cycle length must be at least 3");
    if (!closed && k < 1) parse_error(header.number, "path length must be at least 1");
    if (k > 1'000'000) parse_error(header.number, "length implausibly large");
    ++pos;

    if (pos >= lines.size()) parse_error(header.number, "missing vertex line");
    const std::vector<int> vertices =
        parse_id_line(lines[pos], static_cast<std::size_t>(k), "vertex");
    ++pos;

    const std::size_t want_colors = closed ? static_cast<std::size_t>(k)
                                           : static_cast<std::size_t>(k) - 1;
    std::vector<int> colors;
    if (want_colors > 0) {
        if (pos >= lines.size()) parse_error(header.number, "missing color line");
        colors = parse_id_line(lines[pos], want_colors, "color");
        ++pos;
    }

    if (closed) return RainbowCycle{vertices, colors};
    return RainbowPath{vertices, colors};
}

}  // namespace

std::string serialize_certificate(const RainbowPath& path) {
    return serialize_sequence("path", path.vertices, path.colors);
}

std::string serialize_certificate(const RainbowCycle& cycle) {
    return serialize_sequence("cycle", cycle.vertices, cycle.colors);
}

Certificate parse_certificate(const std::string& text) {
    const std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) throw std::runtime_error("line 1: empty certificate");
    std::size_t pos = 0;
    Certificate cert = parse_one_certificate(lines, pos);
    if (pos != lines.size()) parse_error(lines[pos].number, "trailing content after certificate");
    return cert;
}

std::vector<Certificate> parse_certificate_stream(const std::string& text) {
    const std::vector<Line> lines = significant_lines(text);
    std::vector<Certificate> certs;
    std::size_t pos = 0;
    while (pos < lines.size()) certs.push_back(parse_one_certificate(lines, pos));
    return certs;
}

}  // namespace rainbow
