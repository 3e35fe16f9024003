#include "voa/fock.hpp"

#include <cctype>

namespace voa {
namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int parse_mode(const std::string& tok) {
    size_t slash = tok.find('/');
    if (slash == std::string::npos) {
        long n = std::stol(tok);
        if (n <= 0) throw std::invalid_argument("parse: mode index must be positive: " + tok);
        return static_cast<int>(2 * n);
    }
    if (tok.substr(slash + 1) != "2")
        throw std::invalid_argument("parse: mode denominator must be 2: " + tok);
    long num = std::stol(tok.substr(0, slash));
    if (num <= 0 || num % 2 == 0)
        throw std::invalid_argument("parse: half-integer mode must be positive odd/2: " + tok);
    return static_cast<int>(num);
}

} // namespace

QVector parse(const std::string& text) {
    QVector out;
    std::string body = strip(text);
    if (body.empty()) return out;

    bool haveSector = false, twistedSector = false;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t next = body.find(" + ", pos);
        std::string term = strip(next == std::string::npos ? body.substr(pos)
                                                           : body.substr(pos, next - pos));
        pos = next == std::string::npos ? body.size() : next + 3;

        size_t star = term.find('*');
        if (star == std::string::npos) throw std::invalid_argument("parse: missing '*' in term: " + term);
        Rational coeff = parse_rational(strip(term.substr(0, star)));
        std::string rest = strip(term.substr(star + 1));
        if (rest.empty() || rest.front() != '[')
            throw std::invalid_argument("parse: expected '[' in term: " + term);
        size_t close = rest.find(']');
        if (close == std::string::npos) throw std::invalid_argument("parse: missing ']' in term: " + term);
        std::string modesPart = rest.substr(1, close - 1);
        std::string groundPart = strip(rest.substr(close + 1));
        if (groundPart.size() < 2 || groundPart[0] != '@')
            throw std::invalid_argument("parse: missing '@ ground' in term: " + term);
        groundPart = strip(groundPart.substr(1));

        QMonomial m;
        if (groundPart == "tw") {
            m.twisted = true;
        } else if (groundPart.rfind("e^", 0) == 0) {
            m.twisted = false;
            m.momentum = parse_rational(groundPart.substr(2));
        } else {
            throw std::invalid_argument("parse: unknown ground '" + groundPart + "'");
        }
        if (haveSector && twistedSector != m.twisted)
            throw std::invalid_argument("parse: mixed sectors in one vector");
        haveSector = true;
        twistedSector = m.twisted;

        std::string modeStr = strip(modesPart);
        size_t mpos = 0;
        while (mpos < modeStr.size()) {
            size_t comma = modeStr.find(',', mpos);
            std::string tok = strip(comma == std::string::npos ? modeStr.substr(mpos)
                                                               : modeStr.substr(mpos, comma - mpos));
            mpos = comma == std::string::npos ? modeStr.size() : comma + 1;
            if (tok.empty()) throw std::invalid_argument("parse: empty mode token");
            int doubled = parse_mode(tok);
            if (m.twisted && doubled % 2 == 0)
                throw std::invalid_argument("parse: integer mode in twisted sector: " + tok);
            if (!m.twisted && doubled % 2 == 1)
                throw std::invalid_argument("parse: half-integer mode in untwisted sector: " + tok);
            m.modes.push_back(doubled);
        }
        m.canonicalize();
        out.add_term(m, coeff);
    }
    return out;
}

} // namespace voa
