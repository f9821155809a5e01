#include "symdelta/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace symdelta {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    // Trailing blank lines are noise, interior ones are data.
    while (!lines.empty() && lines.back().empty())
        lines.pop_back();
    return lines;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
}

/// Numeric order for numeric labels, lexicographic otherwise.
bool label_less(const std::string& a, const std::string& b) {
    if (all_digits(a) && all_digits(b)) {
        if (a.size() != b.size())
            return a.size() < b.size();
    }
    return a < b;
}

} // namespace

BitMatrix parse_matrix(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty())
        fail(1, "expected a header line 'rows cols'");
    std::istringstream head(lines[0]);
    int rows = -1, cols = -1;
    if (!(head >> rows >> cols) || rows < 0 || cols < 0)
        fail(1, "expected a header line 'rows cols'");
    if (static_cast<int>(lines.size()) != rows + 1)
        fail(static_cast<int>(lines.size()), "expected " + std::to_string(rows) +
                                                 " matrix rows after the header");
    BitMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const std::string& row = lines[r + 1];
        if (static_cast<int>(row.size()) != cols)
            fail(r + 2, "expected " + std::to_string(cols) + " characters");
        for (int c = 0; c < cols; ++c) {
            if (row[c] != '0' && row[c] != '1')
                fail(r + 2, "matrix entries are 0 or 1");
            m.set(r, c, row[c] == '1');
        }
    }
    return m;
}

std::string print_matrix(const BitMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c)
            out.push_back(m.get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

LagrangianSubspace parse_lagrangian(std::istream& in) {
    auto lines = read_lines(in);

    struct Token {
        std::string label;
        bool dual;
    };
    std::vector<std::vector<Token>> vectors;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty())
            fail(static_cast<int>(i) + 1, "empty basis vector");
        std::vector<Token> v;
        for (std::string tok : split(lines[i], '+')) {
            bool dual = !tok.empty() && tok.back() == '^';
            if (dual)
                tok.pop_back();
            if (tok.empty())
                fail(static_cast<int>(i) + 1, "empty element label in a token");
            if (std::find(labels.begin(), labels.end(), tok) == labels.end())
                labels.push_back(tok);
            v.push_back(Token{std::move(tok), dual});
        }
        vectors.push_back(std::move(v));
    }

    std::sort(labels.begin(), labels.end(), label_less);
    GroundSet ground(labels);
    const int n = ground.size();

    std::vector<SymplecticVector> rows;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        BitVec row(2 * n);
        for (const Token& t : vectors[i]) {
            int e = ground.index_of(t.label);
            int coord = t.dual ? n + e : e;
            if (row.get(coord))
                fail(static_cast<int>(i) + 1, "token repeated within a vector");
            row.set(coord, true);
        }
        rows.push_back(row);
    }
    return LagrangianSubspace::span(std::move(ground), rows);
}

std::string print_lagrangian(const LagrangianSubspace& l) {
    const int n = l.n();
    std::string out;
    for (int r = 0; r < n; ++r) {
        const BitVec& v = l.basis().row(r);
        bool first = true;
        for (int c = 0; c < 2 * n; ++c) {
            if (!v.get(c))
                continue;
            if (!first)
                out.push_back('+');
            out += l.ground().label(c % n);
            if (c >= n)
                out.push_back('^');
            first = false;
        }
        out.push_back('\n');
    }
    return out;
}

SetSystem parse_set_system(std::istream& in) {
    auto lines = read_lines(in);
    std::vector<std::string> labels = lines.empty() ? std::vector<std::string>{}
                                                    : split(lines[0], ' ');
    GroundSet ground(labels);

    std::vector<std::uint64_t> feasible;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty())
            fail(static_cast<int>(i) + 1, "blank feasible-set line");
        std::uint64_t mask = 0;
        if (lines[i] != "-") {
            for (const std::string& lab : split(lines[i], ',')) {
                int e = ground.index_of(lab);
                if (e < 0)
                    fail(static_cast<int>(i) + 1, "unknown element '" + lab + "'");
                mask |= std::uint64_t{1} << e;
            }
        }
        feasible.push_back(mask);
    }
    return SetSystem(std::move(ground), std::move(feasible));
}

std::string print_set_system(const SetSystem& s) {
    std::string out;
    const auto& labels = s.ground().labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i)
            out.push_back(' ');
        out += labels[i];
    }
    out.push_back('\n');
    for (std::uint64_t f : s.feasible()) {
        if (f == 0) {
            out += "-\n";
            continue;
        }
        bool first = true;
        for (std::uint64_t m = f; m != 0; m &= m - 1) {
            if (!first)
                out.push_back(',');
            out += s.ground().label(std::countr_zero(m));
            first = false;
        }
        out.push_back('\n');
    }
    return out;
}

RibbonGraph parse_ribbon(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty())
        fail(1, "expected a header line 'vertices edges'");
    std::istringstream head(lines[0]);
    int nv = -1, ne = -1;
    if (!(head >> nv >> ne) || nv < 0 || ne < 0)
        fail(1, "expected a header line 'vertices edges'");
    // Trailing isolated-vertex lines are blank and may have been trimmed.
    while (static_cast<int>(lines.size()) < nv + ne + 1)
        lines.emplace_back();
    if (static_cast<int>(lines.size()) > nv + ne + 1)
        fail(nv + ne + 2, "unexpected extra line");

    RibbonGraph g;
    for (int v = 0; v < nv; ++v) {
        std::vector<int> rot;
        for (const std::string& tok : split(lines[v + 1], ' ')) {
            try {
                rot.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                fail(v + 2, "half-edge ids are integers");
            }
        }
        g.rotations.push_back(std::move(rot));
    }
    for (int e = 0; e < ne; ++e) {
        int line_no = nv + e + 2;
        auto parts = split(lines[nv + e + 1], ' ');
        if (parts.size() != 4)
            fail(line_no, "expected 'label half_a half_b twist'");
        RibbonGraph::Edge edge;
        edge.label = parts[0];
        try {
            edge.half_a = std::stoi(parts[1]);
            edge.half_b = std::stoi(parts[2]);
        } catch (const std::exception&) {
            fail(line_no, "half-edge ids are integers");
        }
        if (parts[3] != "0" && parts[3] != "1")
            fail(line_no, "twist is 0 or 1");
        edge.twisted = parts[3] == "1";
        g.edges.push_back(std::move(edge));
    }
    try {
        g.validate();
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("ribbon graph invalid: ") + e.what());
    }
    return g;
}

std::string print_ribbon(const RibbonGraph& g) {
    std::string out =
        std::to_string(g.n_vertices()) + " " + std::to_string(g.n_edges()) + "\n";
    for (const auto& rot : g.rotations) {
        for (std::size_t i = 0; i < rot.size(); ++i) {
            if (i)
                out.push_back(' ');
            out += std::to_string(rot[i]);
        }
        out.push_back('\n');
    }
    for (const auto& e : g.edges) {
        out += e.label + " " + std::to_string(e.half_a) + " " + std::to_string(e.half_b) +
               " " + (e.twisted ? "1" : "0") + "\n";
    }
    return out;
}

std::uint64_t parse_subset(const GroundSet& ground, const std::string& csv) {
    std::uint64_t mask = 0;
    if (csv.empty() || csv == "-")
        return mask;
    for (const std::string& lab : split(csv, ',')) {
        int e = ground.index_of(lab);
        if (e < 0)
            throw InvalidArgument("unknown element '" + lab + "'");
        mask |= std::uint64_t{1} << e;
    }
    return mask;
}

std::string format_subset(const GroundSet& ground, std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        if (!first)
            out.push_back(',');
        out += ground.label(std::countr_zero(m));
        first = false;
    }
    out.push_back('}');
    return out;
}

std::string format_family(const SetSystem& s) {
    std::string out;
    for (std::size_t i = 0; i < s.feasible().size(); ++i) {
        if (i)
            out.push_back(' ');
        out += format_subset(s.ground(), s.feasible()[i]);
    }
    return out;
}

} // namespace symdelta
