#include "simplexgauss/json_io.hpp"

#include <cctype>

namespace simplexgauss {

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::optional<Integer> parse_integer(const std::string& s) {
    try {
        if (s.empty()) return std::nullopt;
        return Integer(s);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const NFElement& e) {
    Json arr = Json::array();
    for (const auto& c : e.coeffs()) arr.push_back(to_string(c));
    return arr;
}

Json to_json(const IMat& m) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) arr.push_back(m(i, j).get_str());
    return arr;
}

Json to_json(const Symbol& s) {
    Json j;
    j["family"] = std::string(1, s.letter());
    j["k"] = s.k;
    return j;
}

Json to_json(const CFExpansion& cf) {
    Json j;
    j["terms"] = cf.terms;
    j["status"] = cf.truncated ? "truncated" : "finite";
    return j;
}

Json to_json(const VerificationReport& rep) {
    Json j;
    j["suite"] = rep.suite;
    j["total"] = rep.total;
    Json fails = Json::array();
    for (const auto& f : rep.failures) {
        Json e;
        e["input"] = f.input;
        e["detail"] = f.detail;
        fails.push_back(e);
    }
    j["failures"] = fails;
    if (rep.evidence_only) {
        j["kind"] = "evidence";
        j["supporting"] = rep.supporting;
        j["contradicting"] = rep.contradicting;
        j["notes"] = rep.notes;
    }
    return j;
}

Rational rational_from_json(const Json& j) {
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw std::domain_error("bad rational in JSON: " + j.dump());
    return *r;
}

Symbol symbol_from_json(const Json& j) {
    std::string fam = j.at("family").get<std::string>();
    long k = j.at("k").get<long>();
    if (fam.size() != 1) throw std::domain_error("bad symbol family: " + fam);
    return make_symbol(fam[0], k);
}

IMat imat_from_json(const Json& j, int rows, int cols) {
    if (static_cast<int>(j.size()) != rows * cols)
        throw std::domain_error("matrix entry count mismatch");
    IMat m(rows, cols);
    int idx = 0;
    for (int i = 0; i < rows; ++i)
        for (int jj = 0; jj < cols; ++jj) m(i, jj) = Integer(j[idx++].get<std::string>());
    return m;
}

Json field_to_json(const FieldPtr& f) {
    if (!f) return nullptr;
    Json j;
    Json coeffs = Json::array();
    for (const auto& c : f->minpoly()) coeffs.push_back(c.get_str());
    j["minpoly"] = coeffs;
    j["root_interval"] = Json::array({to_string(f->interval_lo()), to_string(f->interval_hi())});
    return j;
}

FieldPtr field_from_json(const Json& j) {
    if (j.is_null()) return nullptr;
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("minpoly")) coeffs.emplace_back(c.get<std::string>());
    Rational lo = rational_from_json(j.at("root_interval")[0]);
    Rational hi = rational_from_json(j.at("root_interval")[1]);
    return NumberField::create(std::move(coeffs), lo, hi);
}

NFElement nfelement_from_json(const Json& j, const FieldPtr& field) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return NFElement(field, std::move(coeffs));
}

// ---- point-spec grammar ---------------------------------------------------------

bool coord_mentions_generator(const std::string& text) {
    return text.find('a') != std::string::npos;
}

std::vector<std::string> split_coords(const std::string& spec) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

namespace {

struct PolyParser {
    const std::string& s;
    size_t pos = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    Integer parse_uint() {
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("expected a digit");
        return Integer(s.substr(start, pos - start));
    }

    // term := [sign] [coef ['*']] ['a' ['^' exp]]
    void parse_term(std::vector<Integer>& acc, bool first) {
        int sign = 1;
        if (!done() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        Integer coef = 1;
        bool saw_coef = false;
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = parse_uint();
            saw_coef = true;
        }
        if (!done() && peek() == '*') {
            ++pos;
            if (done() || peek() != 'a') fail("expected 'a' after '*'");
        }
        long exp = 0;
        if (!done() && peek() == 'a') {
            ++pos;
            exp = 1;
            if (!done() && peek() == '^') {
                ++pos;
                exp = parse_uint().get_si();
                if (exp < 0) fail("negative exponent");
            }
        } else if (!saw_coef) {
            fail("expected a coefficient or 'a'");
        }
        if (static_cast<size_t>(exp) >= acc.size()) acc.resize(exp + 1, Integer(0));
        acc[exp] += sign * coef;
    }
};

}  // namespace

std::vector<Integer> parse_poly_coord(const std::string& text) {
    if (text.empty()) throw ParseError("empty coordinate", 0);
    PolyParser p(text);
    std::vector<Integer> acc;
    bool first = true;
    while (!p.done()) {
        p.parse_term(acc, first);
        first = false;
    }
    if (acc.empty()) acc.push_back(Integer(0));
    return acc;
}

std::vector<Integer> parse_minpoly(const std::string& text) {
    std::vector<Integer> out;
    for (const std::string& piece : split_coords(text)) {
        auto v = parse_integer(piece);
        if (!v) throw ParseError("bad minpoly coefficient '" + piece + "'", 0);
        out.push_back(*v);
    }
    return out;
}

std::pair<Rational, Rational> parse_interval(const std::string& text) {
    auto parts = split_coords(text);
    if (parts.size() != 2) throw ParseError("interval needs exactly two endpoints", 0);
    auto lo = parse_rational(parts[0]), hi = parse_rational(parts[1]);
    if (!lo || !hi) throw ParseError("bad interval endpoint", 0);
    return {*lo, *hi};
}

}  // namespace simplexgauss
