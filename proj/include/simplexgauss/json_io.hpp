#pragma once

#include "simplexgauss/analysis.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace simplexgauss {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);                // "p/q" string
Json to_json(const NFElement& e);               // array of "p/q" strings, ascending degree
Json to_json(const IMat& m);                    // row-major array of integer strings
Json to_json(const Symbol& s);                  // {"family": "A", "k": 3}
Json to_json(const CFExpansion& cf);            // {"terms": [...], "status": ...}
Json to_json(const VerificationReport& rep);    // stable field names

template <class S>
Json point_to_json(const Vec<S>& p) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(to_string(p[i]));
    return arr;
}

Rational rational_from_json(const Json& j);
Symbol symbol_from_json(const Json& j);
IMat imat_from_json(const Json& j, int rows, int cols);

// Field spec serialization used by orbit dumps so they re-parse exactly.
Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

NFElement nfelement_from_json(const Json& j, const FieldPtr& field);

// ---- point-spec grammar -------------------------------------------------------
//
// A coordinate is either a rational "p/q" or an integer-coefficient
// polynomial in the symbol `a` ("a^2", "2*a", "1-3*a"). Coordinates are
// comma-separated; either dim (affine) or dim+1 (homogeneous) of them.
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// coefficients (ascending) of an integer polynomial in `a`; throws ParseError
std::vector<Integer> parse_poly_coord(const std::string& text);
bool coord_mentions_generator(const std::string& text);

std::vector<std::string> split_coords(const std::string& spec);

// Parse "c0,c1,...,cd" ascending integers.
std::vector<Integer> parse_minpoly(const std::string& text);
// Parse "lo,hi" rationals.
std::pair<Rational, Rational> parse_interval(const std::string& text);

}  // namespace simplexgauss
