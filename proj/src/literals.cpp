#include "valkit/literals.hpp"

#include <cctype>
#include <regex>

#include "valkit/errors.hpp"

namespace valkit {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

}  // namespace

Word parse_word(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.size() < 3 || s.front() != '[' || s.back() != ']')
        throw parse_error("word literal must look like [a1,a2,...]: " + text);
    Word w;
    std::size_t pos = 1;
    while (pos < s.size() - 1) {
        std::size_t end = pos;
        while (end < s.size() - 1 && s[end] != ',') ++end;
        const std::string item = s.substr(pos, end - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad word letter '" + item + "' in " + text);
        if (item.size() > 9) throw parse_error("word letter too large in " + text);
        w.push_back(std::stoi(item));
        pos = end + 1;
    }
    if (w.empty()) throw parse_error("empty word literal: " + text);
    try {
        validate_word(w);
    } catch (const domain_error& e) {
        throw parse_error(std::string("word literal rejected: ") + e.what());
    }
    return w;
}

QuadSurd parse_surd(const std::string& text) {
    const std::string s = strip_spaces(text);
    static const std::regex pattern(
        R"(^\((-?\d+)([+-])(\d+)\*sqrt\((\d+)\)\)/(-?\d+)$)");
    std::smatch m;
    if (!std::regex_match(s, m, pattern))
        throw parse_error("surd literal must look like (p+q*sqrt(d))/r: " + text);
    mpz_class p(m[1].str());
    mpz_class q(m[3].str());
    if (m[2].str() == "-") q = -q;
    mpz_class d(m[4].str());
    mpz_class r(m[5].str());
    try {
        return QuadSurd(p, q, r, d);
    } catch (const domain_error& e) {
        throw parse_error(std::string("surd literal rejected: ") + e.what());
    }
}

}  // namespace valkit
