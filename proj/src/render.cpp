#include "crossnest/render.hpp"

#include <sstream>
#include <stdexcept>

#include "crossnest/walks.hpp"

namespace crossnest {

std::string format_shape(const Shape& s) {
    if (s.empty()) return "0";
    bool wide = s.cols() > 9;
    std::string out;
    if (wide) out += '[';
    for (size_t i = 0; i < s.parts.size(); ++i) {
        if (wide && i) out += ',';
        out += std::to_string(s.parts[i]);
    }
    if (wide) out += ']';
    return out;
}

Shape parse_shape(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_shape: empty text");
    if (text == "0") return Shape{};
    std::vector<int> parts;
    if (text.front() == '[') {
        if (text.back() != ']') throw std::invalid_argument("parse_shape: missing ']'");
        std::istringstream in(text.substr(1, text.size() - 2));
        std::string item;
        while (std::getline(in, item, ','))
            parts.push_back(std::stoi(item));
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("parse_shape: bad digit in \"" + text + "\"");
            parts.push_back(c - '0');
        }
    }
    return Shape{parts};
}

std::string format_walk(const TableauWalk& w) {
    std::string out;
    for (size_t i = 0; i < w.shapes.size(); ++i) {
        if (i) out += ',';
        out += format_shape(w.shapes[i]);
    }
    return out;
}

TableauWalk parse_walk(WalkKind kind, const std::string& text) {
    TableauWalk w;
    w.kind = kind;
    std::string item;
    int depth = 0;
    auto flush = [&] {
        if (item.empty()) throw std::invalid_argument("parse_walk: empty shape entry");
        w.shapes.push_back(parse_shape(item));
        item.clear();
    };
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        if (c != ' ') item += c;
    }
    flush();
    validate_walk(w);
    return w;
}

std::string format_tableau(const StandardTableau& t) {
    if (t.empty()) return "(empty)";
    std::string out;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (r) out += '\n';
        for (size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c) out += ' ';
            out += std::to_string(t.rows[r][c]);
        }
    }
    return out;
}

std::string format_tableau_inline(const StandardTableau& t) {
    std::string out = "[";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (r) out += ',';
        out += '[';
        for (size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c) out += ',';
            out += std::to_string(t.rows[r][c]);
        }
        out += ']';
    }
    return out + "]";
}

}  // namespace crossnest
