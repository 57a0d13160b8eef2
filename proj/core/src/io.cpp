#include "chunkph/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace chunkph {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        if (pos > start) out.push_back(line.substr(start, pos - start));
    }
    return out;
}

template <class T>
T parse_number(std::string_view token, const std::string& source, std::size_t line,
               const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error(source, line, std::string("malformed ") + what + " '" +
                                            std::string(token) + "'");
    return value;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

// Reads "# <tag> v1 <key>=<value> ..." and returns the key/value tokens.
std::vector<std::string_view> parse_header(const std::string& line, const char* tag,
                                           const std::string& source) {
    auto tokens = split_ws(line);
    if (tokens.size() < 2 || tokens[0] != "#" || tokens[1] != tag)
        throw parse_error(source, 1, std::string("expected header '# ") + tag + " v1 ...'");
    if (tokens.size() < 3 || tokens[2] != "v1")
        throw parse_error(source, 1, "unsupported format version");
    return {tokens.begin() + 3, tokens.end()};
}

index_t header_count(const std::vector<std::string_view>& fields, const std::string& source) {
    for (auto f : fields)
        if (f.starts_with("n="))
            return parse_number<index_t>(f.substr(2), source, 1, "column count");
    throw parse_error(source, 1, "header is missing n=<count>");
}

}  // namespace

parse_error::parse_error(const std::string& source, std::size_t line, const std::string& reason)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + reason), line_(line) {}

std::string format_value(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

boundary_matrix read_matrix(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error(source, 1, "empty input");
    auto fields = parse_header(line, "chunkph-bm", source);
    const index_t n = header_count(fields, source);
    orientation orient = orientation::homology;
    for (auto f : fields) {
        if (f == "orientation=homology") orient = orientation::homology;
        else if (f == "orientation=cohomology") orient = orientation::cohomology;
        else if (f.starts_with("orientation="))
            throw parse_error(source, 1, "unknown orientation '" + std::string(f.substr(12)) + "'");
    }

    boundary_matrix m;
    m.orient = orient;
    m.columns.reserve(static_cast<std::size_t>(n));
    m.dims.reserve(static_cast<std::size_t>(n));
    for (index_t j = 1; j <= n; ++j) {
        const std::size_t lineno = static_cast<std::size_t>(j) + 1;
        if (!std::getline(in, line))
            throw parse_error(source, lineno, "expected " + std::to_string(n) + " column lines, found " +
                                                  std::to_string(j - 1));
        auto tokens = split_ws(line);
        if (tokens.size() < 2) throw parse_error(source, lineno, "expected '<dim> <count> <rows...>'");
        const int dim = parse_number<int>(tokens[0], source, lineno, "dimension");
        if (dim < 0) throw parse_error(source, lineno, "negative dimension");
        const index_t count = parse_number<index_t>(tokens[1], source, lineno, "entry count");
        if (static_cast<index_t>(tokens.size()) - 2 != count)
            throw parse_error(source, lineno, "entry count " + std::to_string(count) + " does not match " +
                                                  std::to_string(tokens.size() - 2) + " indices");
        sparse_column col;
        col.reserve(static_cast<std::size_t>(count));
        for (index_t k = 0; k < count; ++k) {
            const index_t row = parse_number<index_t>(tokens[static_cast<std::size_t>(k) + 2], source,
                                                      lineno, "row index");
            if (!col.empty() && row <= col.back())
                throw parse_error(source, lineno, "indices not strictly increasing");
            col.push_back(row);
        }
        m.columns.push_back(std::move(col));
        m.dims.push_back(dim);
    }
    auto violations = validate(m);
    if (!violations.empty())
        throw validation_error(source + ": invalid matrix: " + violations.front());
    return m;
}

boundary_matrix read_matrix_file(const std::string& path) {
    auto in = open_input(path);
    return read_matrix(in, path);
}

void write_matrix(std::ostream& out, const boundary_matrix& m) {
    out << "# chunkph-bm v1 n=" << m.size() << " orientation="
        << (m.orient == orientation::homology ? "homology" : "cohomology") << "\n";
    for (index_t j = 1; j <= m.size(); ++j) {
        const sparse_column& col = m.column(j);
        out << m.dim(j) << ' ' << col.size();
        for (index_t i : col) out << ' ' << i;
        out << '\n';
    }
}

void write_matrix_file(const boundary_matrix& m, const std::string& path) {
    auto out = open_output(path);
    write_matrix(out, m);
}

std::string matrix_to_string(const boundary_matrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

persistence_pairing read_pairs(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error(source, 1, "empty input");
    auto fields = parse_header(line, "chunkph-pairs", source);
    const index_t n = header_count(fields, source);

    persistence_pairing p;
    p.n = n;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    index_t last_first = 0;
    std::size_t lineno = 1;
    auto touch = [&](index_t k) {
        if (k < 1 || k > n)
            throw parse_error(source, lineno, "index " + std::to_string(k) + " out of range 1.." +
                                                  std::to_string(n));
        if (seen[static_cast<std::size_t>(k)]++)
            throw parse_error(source, lineno, "index appears twice: " + std::to_string(k));
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) throw parse_error(source, lineno, "expected '<i> <j>' or '<i> essential'");
        const index_t first = parse_number<index_t>(tokens[0], source, lineno, "index");
        if (first <= last_first)
            throw parse_error(source, lineno, "lines not ascending in the first index");
        last_first = first;
        touch(first);
        if (tokens[1] == "essential") {
            p.essential.push_back(first);
        } else {
            const index_t second = parse_number<index_t>(tokens[1], source, lineno, "index");
            touch(second);
            if (second <= first)
                throw parse_error(source, lineno, "death index must exceed birth index");
            p.pairs.emplace_back(first, second);
        }
    }
    for (index_t k = 1; k <= n; ++k)
        if (!seen[static_cast<std::size_t>(k)])
            throw validation_error(source + ": index " + std::to_string(k) +
                                   " appears in neither a pair nor the essential set");
    return p;
}

persistence_pairing read_pairs_file(const std::string& path) {
    auto in = open_input(path);
    return read_pairs(in, path);
}

void write_pairs(std::ostream& out, const persistence_pairing& p) {
    out << "# chunkph-pairs v1 n=" << p.n << "\n";
    auto pair_it = p.pairs.begin();
    auto ess_it = p.essential.begin();
    while (pair_it != p.pairs.end() || ess_it != p.essential.end()) {
        if (ess_it == p.essential.end() ||
            (pair_it != p.pairs.end() && pair_it->first < *ess_it)) {
            out << pair_it->first << ' ' << pair_it->second << '\n';
            ++pair_it;
        } else {
            out << *ess_it << " essential\n";
            ++ess_it;
        }
    }
}

void write_pairs_file(const persistence_pairing& p, const std::string& path) {
    auto out = open_output(path);
    write_pairs(out, p);
}

std::string pairs_to_string(const persistence_pairing& p) {
    std::ostringstream out;
    write_pairs(out, p);
    return out.str();
}

grayscale_image read_image(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error(source, 1, "empty input");
    auto head = split_ws(line);
    if (head.size() != 1) throw parse_error(source, 1, "expected the dimension count alone on line 1");
    const int d = parse_number<int>(head[0], source, 1, "dimension count");
    if (d < 1) throw parse_error(source, 1, "dimension count must be >= 1");

    if (!std::getline(in, line)) throw parse_error(source, 2, "missing extents line");
    auto extents = split_ws(line);
    if (static_cast<int>(extents.size()) != d)
        throw parse_error(source, 2, "expected " + std::to_string(d) + " extents, found " +
                                         std::to_string(extents.size()));
    grayscale_image img;
    index_t expected = 1;
    for (auto tok : extents) {
        const index_t e = parse_number<index_t>(tok, source, 2, "extent");
        if (e < 1) throw parse_error(source, 2, "extent must be >= 1");
        img.shape.push_back(e);
        expected *= e;
    }

    std::size_t lineno = 2;
    while (std::getline(in, line)) {
        ++lineno;
        for (auto tok : split_ws(line))
            img.values.push_back(parse_number<double>(tok, source, lineno, "value"));
    }
    if (static_cast<index_t>(img.values.size()) != expected)
        throw parse_error(source, lineno, "expected " + std::to_string(expected) + " values, found " +
                                              std::to_string(img.values.size()));
    return img;
}

grayscale_image read_image_file(const std::string& path) {
    auto in = open_input(path);
    return read_image(in, path);
}

void write_image(std::ostream& out, const grayscale_image& img) {
    out << img.shape.size() << '\n';
    for (std::size_t a = 0; a < img.shape.size(); ++a)
        out << (a ? " " : "") << img.shape[a];
    out << '\n';
    for (std::size_t i = 0; i < img.values.size(); ++i)
        out << (i ? " " : "") << format_value(img.values[i]);
    out << '\n';
}

void write_image_file(const grayscale_image& img, const std::string& path) {
    auto out = open_output(path);
    write_image(out, img);
}

point_cloud read_point_cloud(std::istream& in, const std::string& source) {
    point_cloud pc;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> point;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos) comma = line.size();
            std::string_view tok(line.data() + pos, comma - pos);
            while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
            while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r'))
                tok.remove_suffix(1);
            point.push_back(parse_number<double>(tok, source, lineno, "coordinate"));
            pos = comma + 1;
        }
        if (!pc.points.empty() && point.size() != pc.points.front().size())
            throw parse_error(source, lineno, "expected " + std::to_string(pc.points.front().size()) +
                                                  " coordinates, found " + std::to_string(point.size()));
        pc.points.push_back(std::move(point));
    }
    if (pc.points.empty()) throw parse_error(source, lineno ? lineno : 1, "no points");
    return pc;
}

point_cloud read_point_cloud_file(const std::string& path) {
    auto in = open_input(path);
    return read_point_cloud(in, path);
}

void write_point_cloud(std::ostream& out, const point_cloud& pc) {
    for (const auto& point : pc.points) {
        for (std::size_t c = 0; c < point.size(); ++c) out << (c ? "," : "") << format_value(point[c]);
        out << '\n';
    }
}

void write_point_cloud_file(const point_cloud& pc, const std::string& path) {
    auto out = open_output(path);
    write_point_cloud(out, pc);
}

std::vector<double> read_values(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error(source, 1, "empty input");
    auto fields = parse_header(line, "chunkph-values", source);
    const index_t n = header_count(fields, source);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n));
    for (index_t j = 1; j <= n; ++j) {
        const std::size_t lineno = static_cast<std::size_t>(j) + 1;
        if (!std::getline(in, line))
            throw parse_error(source, lineno, "expected " + std::to_string(n) + " values, found " +
                                                  std::to_string(j - 1));
        auto tokens = split_ws(line);
        if (tokens.size() != 1) throw parse_error(source, lineno, "expected one value per line");
        values.push_back(parse_number<double>(tokens[0], source, lineno, "value"));
    }
    return values;
}

std::vector<double> read_values_file(const std::string& path) {
    auto in = open_input(path);
    return read_values(in, path);
}

void write_values(std::ostream& out, const std::vector<double>& values) {
    out << "# chunkph-values v1 n=" << values.size() << "\n";
    for (double v : values) out << format_value(v) << '\n';
}

void write_values_file(const std::vector<double>& values, const std::string& path) {
    auto out = open_output(path);
    write_values(out, values);
}

}  // namespace chunkph
