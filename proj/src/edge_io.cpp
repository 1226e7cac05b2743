#include "citerank/edge_io.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>

#include "citerank/errors.hpp"

namespace citerank {

const char* to_string(InputMode m) {
    return m == InputMode::League ? "league" : "citations";
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == ',' || ch == '\t') {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(trim(current));
    return fields;
}

bool is_header(const std::vector<std::string>& fields, InputMode mode) {
    if (fields.size() != 2 && fields.size() != 3) return false;
    auto lower = [](std::string s) {
        for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        return s;
    };
    const std::string a = lower(fields[0]);
    const std::string b = lower(fields[1]);
    const bool named = (mode == InputMode::League) ? (a == "winner" && b == "loser")
                                                   : (a == "citer" && b == "cited");
    if (!named) return false;
    return fields.size() == 2 || lower(fields[2]) == "count";
}

std::int64_t parse_count(const std::string& field, const std::string& path, long line_no) {
    if (field.empty()) {
        throw ParseError(path, line_no, "empty count field");
    }
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(field.c_str(), &end, 10);
    if (errno != 0 || end != field.c_str() + field.size()) {
        throw ParseError(path, line_no, "count '" + field + "' is not an integer");
    }
    if (value < 1) {
        throw ParseError(path, line_no,
                         "count must be a positive integer, got " + field);
    }
    return value;
}

}  // namespace

std::vector<Edge> parse_edges(std::istream& in, const std::string& path, InputMode mode) {
    std::vector<Edge> edges;
    std::string line;
    long line_no = 0;
    bool saw_data = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (!saw_data && is_header(fields, mode)) {
            saw_data = true;
            continue;
        }
        saw_data = true;
        if (fields.size() != 2 && fields.size() != 3) {
            throw ParseError(path, line_no,
                             "expected 'from,to[,count]' separated by comma or tab, got " +
                                 std::to_string(fields.size()) + " field(s)");
        }
        if (fields[0].empty() || fields[1].empty()) {
            throw ParseError(path, line_no, "node labels must be non-empty");
        }
        const std::int64_t count =
            fields.size() == 3 ? parse_count(fields[2], path, line_no) : 1;

        if (mode == InputMode::League) {
            // winner,loser: the loser endorses the winner.
            edges.push_back(Edge{fields[1], fields[0], count});
        } else {
            edges.push_back(Edge{fields[0], fields[1], count});
        }
    }
    return edges;
}

std::vector<Edge> parse_edges_file(const std::string& path, InputMode mode) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "' for reading");
    }
    return parse_edges(in, path, mode);
}

}  // namespace citerank
