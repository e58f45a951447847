#include "ggmident/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "ggmident/errors.hpp"

namespace ggmident {

namespace {

struct LineReader {
    explicit LineReader(const std::string& path) : path_(path), in_(path) {
        if (!in_) throw ParseError("cannot open " + path);
    }

    /// Next line that is neither blank nor a '#' comment; false at EOF.
    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++line_no_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(path_ + ":" + std::to_string(line_no_) + ": " + message);
    }

    [[noreturn]] void fail_eof(const std::string& message) const {
        throw ParseError(path_ + ":" + std::to_string(line_no_) + ": unexpected end of file, " +
                         message);
    }

    const std::string path_;
    std::ifstream in_;
    int line_no_ = 0;
};

std::vector<double> parse_reals(LineReader& reader, const std::string& line, int expected) {
    std::istringstream stream(line);
    std::vector<double> values;
    double x = 0.0;
    while (stream >> x) values.push_back(x);
    std::string trailing;
    if (!stream.eof() && stream.fail()) {
        stream.clear();
        stream >> trailing;
        reader.fail("could not parse '" + trailing + "' as a number");
    }
    if (static_cast<int>(values.size()) != expected)
        reader.fail("expected " + std::to_string(expected) + " values, found " +
                    std::to_string(values.size()));
    return values;
}

long parse_positive_int(LineReader& reader, const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        const long value = std::stol(token, &used);
        if (used != token.size() || value < 1) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        reader.fail(std::string("invalid ") + what + " '" + token + "'");
    }
}

}  // namespace

SymMatrix read_matrix_file(const std::string& path) {
    LineReader reader(path);
    std::string line;
    if (!reader.next(line)) reader.fail_eof("expected the matrix dimension");
    std::istringstream header(line);
    std::string token;
    header >> token;
    const int p = static_cast<int>(parse_positive_int(reader, token, "dimension"));
    std::string extra;
    if (header >> extra) reader.fail("unexpected token '" + extra + "' after the dimension");

    Eigen::MatrixXd m(p, p);
    for (int i = 0; i < p; ++i) {
        if (!reader.next(line))
            reader.fail_eof("expected matrix row " + std::to_string(i + 1) + " of " +
                            std::to_string(p));
        const auto values = parse_reals(reader, line, p);
        for (int j = 0; j < p; ++j) m(i, j) = values[static_cast<std::size_t>(j)];
    }
    try {
        return SymMatrix::from_dense(m);
    } catch (const InvalidSpec& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_matrix_file(const std::string& path, const SymMatrix& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << m.dim() << "\n";
    out << std::setprecision(17);
    for (int i = 1; i <= m.dim(); ++i) {
        for (int j = 1; j <= m.dim(); ++j) {
            if (j > 1) out << ' ';
            out << m(i, j);
        }
        out << "\n";
    }
}

SampleMatrix read_samples_file(const std::string& path) {
    LineReader reader(path);
    std::string line;
    if (!reader.next(line)) reader.fail_eof("expected the 'n p' header");
    std::istringstream header(line);
    std::string n_token, p_token, extra;
    header >> n_token >> p_token;
    if (p_token.empty()) reader.fail("header must be 'n p'");
    if (header >> extra) reader.fail("unexpected token '" + extra + "' after the header");
    const long n = parse_positive_int(reader, n_token, "sample count");
    const int p = static_cast<int>(parse_positive_int(reader, p_token, "dimension"));

    SampleMatrix samples;
    samples.rows.resize(n, p);
    for (long i = 0; i < n; ++i) {
        if (!reader.next(line))
            reader.fail_eof("expected sample row " + std::to_string(i + 1) + " of " +
                            std::to_string(n));
        const auto values = parse_reals(reader, line, p);
        for (int j = 0; j < p; ++j) samples.rows(i, j) = values[static_cast<std::size_t>(j)];
    }
    return samples;
}

void write_samples_file(const std::string& path, const Eigen::MatrixXd& rows) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << rows.rows() << ' ' << rows.cols() << "\n";
    out << std::setprecision(17);
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        for (Eigen::Index j = 0; j < rows.cols(); ++j) {
            if (j > 0) out << ' ';
            out << rows(i, j);
        }
        out << "\n";
    }
}

ScatterData scatter_from_samples(const SampleMatrix& samples, bool center) {
    Eigen::MatrixXd rows = samples.rows;
    if (center) rows.rowwise() -= rows.colwise().mean();
    return {SymMatrix::from_dense(rows.transpose() * rows), samples.n()};
}

Graph read_edge_list(const std::string& path, int node_count) {
    LineReader reader(path);
    Graph g(node_count);
    std::string line;
    while (reader.next(line)) {
        std::istringstream stream(line);
        std::string u_token, v_token, extra;
        stream >> u_token >> v_token;
        if (v_token.empty()) reader.fail("expected 'u v'");
        if (stream >> extra) reader.fail("unexpected token '" + extra + "'");
        const int u = static_cast<int>(parse_positive_int(reader, u_token, "node label"));
        const int v = static_cast<int>(parse_positive_int(reader, v_token, "node label"));
        try {
            g.add_edge(u, v);
        } catch (const Error& e) {
            reader.fail(e.what());
        }
    }
    return g;
}

void write_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << "\n";
}

}  // namespace ggmident
