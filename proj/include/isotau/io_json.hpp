#ifndef ISOTAU_IO_JSON_HPP
#define ISOTAU_IO_JSON_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"
#include "isotau/pii_stokes.hpp"
#include "isotau/pvi_monodromy.hpp"

// JSON schemas: complex numbers serialize as two-element arrays [re, im];
// every report carries a schemaVersion field.

namespace isotau::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct ParseError : IsotauError {
    explicit ParseError(const std::string& msg) : IsotauError(msg) {}
};

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("field '" + field + "' must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Complex require_complex(const json& j, const std::string& field) {
    if (!j.contains(field)) throw ParseError("missing field '" + field + "'");
    return complex_from_json(j.at(field), field);
}

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON in " + path);
    return j;
}

// {theta0, thetat, theta1, thetaInf, sigma, eta} with [re, im] entries
inline pvi::PVIMonodromy monodromy_from_json(const json& j) {
    pvi::ThetaData th{require_complex(j, "theta0"), require_complex(j, "thetat"),
                      require_complex(j, "theta1"), require_complex(j, "thetaInf")};
    return pvi::PVIMonodromy(th, require_complex(j, "sigma"), require_complex(j, "eta"));
}

inline json monodromy_to_json(const pvi::PVIMonodromy& m) {
    return json{{"theta0", complex_to_json(m.theta.theta0)},
                {"thetat", complex_to_json(m.theta.thetat)},
                {"theta1", complex_to_json(m.theta.theta1)},
                {"thetaInf", complex_to_json(m.theta.thetaInf)},
                {"sigma", complex_to_json(m.sigma)},
                {"eta", complex_to_json(m.eta)}};
}

// {s1, s2[, s3]}; when s3 is present it must close the cubic, otherwise it is
// derived from the (s1, s2) chart
inline pii::PIIStokes stokes_from_json(const json& j) {
    const Complex s1 = require_complex(j, "s1");
    const Complex s2 = require_complex(j, "s2");
    pii::PIIStokes s = pii::PIIStokes::from_s1s2(s1, s2);
    if (j.contains("s3")) {
        s.s3 = complex_from_json(j.at("s3"), "s3");
        pii::require_on_cubic(s);
    }
    return s;
}

inline json stokes_to_json(const pii::PIIStokes& s) {
    return json{{"s1", complex_to_json(s.s1)},
                {"s2", complex_to_json(s.s2)},
                {"s3", complex_to_json(s.s3)}};
}

} // namespace isotau::io

#endif
