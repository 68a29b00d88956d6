#include "ruled/bigint.hpp"

#include "ruled/errors.hpp"

#include <regex>

namespace ruled {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

template <class T, class F>
std::vector<T> split_parse(std::string_view csv, F parse_one) {
    std::vector<T> out;
    csv = trim(csv);
    if (csv.empty())
        return out;
    size_t start = 0;
    while (true) {
        size_t comma = csv.find(',', start);
        std::string_view piece = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_one(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

Int parse_int(std::string_view text) {
    static const std::regex re(R"(^[+-]?[0-9]+$)");
    std::string s(trim(text));
    if (!std::regex_match(s, re))
        throw ParseError("not an exact integer: '" + s + "'");
    if (s.front() == '+')
        s.erase(0, 1);
    return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
    static const std::regex re(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
    std::string s(trim(text));
    if (!std::regex_match(s, re))
        throw ParseError("not an exact rational (use p or p/q): '" + s + "'");
    if (s.front() == '+')
        s.erase(0, 1);
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(Int(s, 10));
    Int den(s.substr(slash + 1), 10);
    if (den == 0)
        throw ParseError("zero denominator: '" + s + "'");
    Rat r(Int(s.substr(0, slash), 10), den);
    r.canonicalize();
    return r;
}

std::vector<Int> parse_int_list(std::string_view csv) {
    return split_parse<Int>(csv, parse_int);
}

std::vector<Rat> parse_rat_list(std::string_view csv) {
    return split_parse<Rat>(csv, parse_rat);
}

std::string to_string(const Int& value) { return value.get_str(10); }

std::string to_string(const Rat& value) { return value.get_str(10); }

} // namespace ruled
