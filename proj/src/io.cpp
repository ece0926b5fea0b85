#include "flipforest/io.hpp"

#include <fstream>
#include <sstream>

namespace flipforest {

namespace {

// Lines with comments stripped and blanks skipped, in file order.
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.push_back(line);
    }
    return out;
}

int parse_header(const std::string& line) {
    std::istringstream s(line);
    std::string tag;
    int n = 0;
    if (!(s >> tag >> n) || tag != "n" || n < 1)
        throw Error("Parse", "expected header 'n <count>', got: " + line);
    std::string extra;
    if (s >> extra) throw Error("Parse", "trailing tokens after header: " + line);
    return n;
}

Edge parse_edge_line(const std::string& line) {
    std::istringstream s(line);
    int a = 0, b = 0;
    if (!(s >> a >> b)) throw Error("Parse", "expected edge 'i j', got: " + line);
    std::string extra;
    if (s >> extra) throw Error("Parse", "trailing tokens after edge: " + line);
    if (a == b) throw Error("Parse", "degenerate edge in: " + line);
    return Edge(a, b);
}

Flip parse_flip_line(const std::string& line) {
    std::istringstream s(line);
    std::string minus, plus;
    int ri = 0, rj = 0, ai = 0, aj = 0;
    if (!(s >> minus >> ri >> rj >> plus >> ai >> aj) || minus != "-" || plus != "+")
        throw Error("Parse", "expected flip '- i j + k l', got: " + line);
    std::string extra;
    if (s >> extra) throw Error("Parse", "trailing tokens after flip: " + line);
    if (ri == rj || ai == aj) throw Error("Parse", "degenerate edge in flip: " + line);
    return Flip{Edge(ri, rj), Edge(ai, aj)};
}

std::vector<Edge> parse_edges(const std::vector<std::string>& lines, size_t from, size_t to) {
    std::vector<Edge> edges;
    for (size_t i = from; i < to; ++i) {
        Edge e = parse_edge_line(lines[i]);
        for (const Edge& seen : edges)
            if (seen == e) throw Error("Parse", "duplicate edge " + to_string(e));
        edges.push_back(e);
    }
    return edges;
}

NcTree checked_tree(int n, std::vector<Edge> edges) {
    try {
        return make_tree(n, std::move(edges));
    } catch (const Error& err) {
        throw Error("Parse", std::string("invalid tree: ") + err.what());
    }
}

}  // namespace

NcTree read_tree(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw Error("Parse", "empty tree file");
    int n = parse_header(lines[0]);
    return checked_tree(n, parse_edges(lines, 1, lines.size()));
}

NcTree read_tree_string(const std::string& text) {
    std::istringstream s(text);
    return read_tree(s);
}

NcTree read_tree_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("Parse", "cannot open " + path);
    return read_tree(f);
}

std::string write_tree(const NcTree& t) {
    std::ostringstream out;
    out << "n " << t.n << "\n";
    for (const Edge& e : t.edges) out << e.a << " " << e.b << "\n";
    return out.str();
}

void write_tree_file(const NcTree& t, const std::string& path) {
    write_text_file(path, write_tree(t));
}

FlipSeq read_sequence(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.size() < 2) throw Error("Parse", "sequence file needs a header and a start block");
    int n = parse_header(lines[0]);
    {
        std::istringstream s(lines[1]);
        std::string tag;
        s >> tag;
        if (tag != "start") throw Error("Parse", "expected 'start', got: " + lines[1]);
    }
    size_t first_flip = 2;
    while (first_flip < lines.size()) {
        std::istringstream s(lines[first_flip]);
        std::string tok;
        s >> tok;
        if (tok == "-") break;
        ++first_flip;
    }
    FlipSeq seq;
    seq.start = checked_tree(n, parse_edges(lines, 2, first_flip));
    for (size_t i = first_flip; i < lines.size(); ++i) seq.flips.push_back(parse_flip_line(lines[i]));
    return seq;
}

FlipSeq read_sequence_string(const std::string& text) {
    std::istringstream s(text);
    return read_sequence(s);
}

FlipSeq read_sequence_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("Parse", "cannot open " + path);
    return read_sequence(f);
}

std::string write_sequence(const FlipSeq& seq) {
    std::ostringstream out;
    out << "n " << seq.start.n << "\n" << "start\n";
    for (const Edge& e : seq.start.edges) out << e.a << " " << e.b << "\n";
    for (const Flip& f : seq.flips)
        out << "- " << f.removed.a << " " << f.removed.b << " + " << f.added.a << " " << f.added.b
            << "\n";
    return out.str();
}

void write_sequence_file(const FlipSeq& seq, const std::string& path) {
    write_text_file(path, write_sequence(seq));
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("Parse", "cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("Io", "cannot write " + path);
    f << content;
}

}  // namespace flipforest
