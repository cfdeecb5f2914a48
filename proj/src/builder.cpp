#include "tubings/builder.hpp"

#include <cctype>
#include <stdexcept>

namespace tubings {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw std::invalid_argument("expected '" + std::string(1, c) + "' in: " + text);
    }
    int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected number in: " + text);
        return std::stoi(text.substr(start, pos - start));
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '-' ||
                text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
};

Poset parse_poset_expr(Cursor& c) {
    std::string head = c.word();
    if (head == "chain") {
        c.expect(':');
        return Poset::chain(c.number());
    }
    if (head == "antichain") {
        c.expect(':');
        return Poset::antichain(c.number());
    }
    if (head == "broom") {
        c.expect(':');
        int n = c.number();
        c.expect(',');
        return broom_poset(n, c.number());
    }
    if (head == "osum") {
        c.expect('(');
        std::vector<Poset> blocks;
        blocks.push_back(parse_poset_expr(c));
        while (c.consume(',')) blocks.push_back(parse_poset_expr(c));
        c.expect(')');
        if (blocks.size() < 2)
            throw std::invalid_argument("osum needs at least two blocks: " + c.text);
        return ordinal_sum(blocks);
    }
    throw std::invalid_argument("unknown poset builder \"" + head + "\" in: " + c.text);
}

}  // namespace

Poset build_poset(const std::string& expr) {
    Cursor c{expr};
    Poset p = parse_poset_expr(c);
    c.skip_ws();
    if (c.pos != expr.size())
        throw std::invalid_argument("trailing input in poset expression: " + expr);
    return p;
}

DiGraph build_graph(const std::string& spec) {
    if (spec.rfind("cycle:", 0) == 0) return cycle_graph(std::stoi(spec.substr(6)));
    if (spec.rfind("path:", 0) == 0) return path_graph(std::stoi(spec.substr(5)));
    if (spec.rfind("perm-cycles:", 0) == 0)
        return cycles_of_permutation(parse_one_line(spec.substr(12)));
    if (spec.rfind("union:", 0) == 0) {
        std::string rest = spec.substr(6);
        DiGraph acc;
        std::size_t start = 0;
        bool first = true;
        while (start <= rest.size()) {
            std::size_t plus = rest.find('+', start);
            std::string part =
                rest.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
            if (part.empty()) throw std::invalid_argument("empty union member in: " + spec);
            DiGraph g = build_graph(part);
            acc = first ? g : disjoint_union(acc, g);
            first = false;
            if (plus == std::string::npos) break;
            start = plus + 1;
        }
        if (first) throw std::invalid_argument("empty union in: " + spec);
        return acc;
    }
    throw std::invalid_argument("unknown graph spec: " + spec);
}

}  // namespace tubings
