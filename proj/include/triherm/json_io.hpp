#pragma once

// JSON and CSV shapes used by the command-line tool.
//
// Exact scalars travel as strings ("num/den" over the rationals, a decimal
// residue over a prime field), algebra elements as arrays of three such
// strings, points as {"x111", "x211", "x122", "x222"} and group elements as
// {"t1", "g2"} with g2 a 2x2 array of algebra elements.  Every malformed
// input maps to DataError so the tool can exit with its data-error code.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "triherm/cubealg.hpp"
#include "triherm/errors.hpp"
#include "triherm/fp.hpp"
#include "triherm/rat.hpp"
#include "triherm/space.hpp"

namespace triherm::jsonio {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw DataError("malformed JSON");
    return j;
}

inline std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw DataError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw DataError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

// --- scalar codecs, overloaded on the coefficient field ------------------

inline Rat parse_scalar(const std::string& s, const Algebra<Rat>&) {
    return Rat::parse(s);
}

inline Fp parse_scalar(const std::string& s, const Algebra<Fp>& A) {
    return Fp::parse(s, A.coef(0).modulus());
}

// --- cubic constructors ---------------------------------------------------

// "c0,c1,c2" names the monic cubic t^3 + c2 t^2 + c1 t + c0
inline Algebra<Rat> rational_algebra(const std::string& f_csv) {
    auto parts = split_csv(f_csv);
    if (parts.size() != 3)
        throw DataError("cubic needs exactly three coefficients: " + f_csv);
    return Algebra<Rat>(Rat::parse(parts[0]), Rat::parse(parts[1]),
                        Rat::parse(parts[2]));
}

inline Algebra<Fp> prime_algebra(std::uint64_t q, const std::string& f_csv) {
    Fp::check_modulus(q);
    auto parts = split_csv(f_csv);
    if (parts.size() != 3)
        throw DataError("cubic needs exactly three coefficients: " + f_csv);
    return Algebra<Fp>(Fp::parse(parts[0], q), Fp::parse(parts[1], q),
                       Fp::parse(parts[2], q));
}

// --- algebra elements ------------------------------------------------------

template <class F>
Json elem_to_json(const typename Algebra<F>::Elem& e) {
    return Json::array({e.c0.str(), e.c1.str(), e.c2.str()});
}

template <class F>
typename Algebra<F>::Elem elem_from_json(const Algebra<F>& A, const Json& j,
                                         const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw DataError(std::string(what) +
                        " must be an array of three coordinate strings");
    return A.elem(parse_scalar(as_string(j[0], what), A),
                  parse_scalar(as_string(j[1], what), A),
                  parse_scalar(as_string(j[2], what), A));
}

// --- points ----------------------------------------------------------------

template <class F>
Json point_to_json(const Point<F>& x) {
    Json j = Json::object();
    j["x111"] = x.x111.str();
    j["x211"] = elem_to_json<F>(x.x211);
    j["x122"] = elem_to_json<F>(x.x122);
    j["x222"] = x.x222.str();
    return j;
}

template <class F>
Point<F> point_from_json(const Algebra<F>& A, const Json& j) {
    return Point<F>{parse_scalar(as_string(member(j, "x111"), "x111"), A),
                    elem_from_json(A, member(j, "x211"), "x211"),
                    elem_from_json(A, member(j, "x122"), "x122"),
                    parse_scalar(as_string(member(j, "x222"), "x222"), A)};
}

// --- group elements ----------------------------------------------------------

template <class F>
Json group_to_json(const GroupElement<F>& g) {
    Json j = Json::object();
    j["t1"] = g.t1.str();
    j["g2"] = Json::array({Json::array({elem_to_json<F>(g.g2.a),
                                        elem_to_json<F>(g.g2.b)}),
                           Json::array({elem_to_json<F>(g.g2.c),
                                        elem_to_json<F>(g.g2.d)})});
    return j;
}

template <class F>
GroupElement<F> group_from_json(const Algebra<F>& A, const Json& j) {
    const Json& m = member(j, "g2");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() ||
        !m[1].is_array() || m[0].size() != 2 || m[1].size() != 2)
        throw DataError("g2 must be a 2x2 array of algebra elements");
    return GroupElement<F>{
        parse_scalar(as_string(member(j, "t1"), "t1"), A),
        Mat2<typename Algebra<F>::Elem>{elem_from_json(A, m[0][0], "g2"),
                                        elem_from_json(A, m[0][1], "g2"),
                                        elem_from_json(A, m[1][0], "g2"),
                                        elem_from_json(A, m[1][1], "g2")}};
}

// --- resolvent-ring values ---------------------------------------------------

// a + b delta with delta^2 the cubic's discriminant
template <class F>
Json res_to_json(const typename Algebra<F>::Res& r) {
    Json j = Json::object();
    j["p"] = elem_to_json<F>(r.p);
    j["q"] = elem_to_json<F>(r.q);
    return j;
}

}  // namespace triherm::jsonio
