/*
   Copyright 2026 The sextic-strata Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEXTIC_IO_HPP
#define SEXTIC_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cohomology.hpp"
#include "dimensions.hpp"
#include "error.hpp"
#include "field.hpp"
#include "kronecker.hpp"
#include "polarization.hpp"
#include "presentation.hpp"
#include "sampler.hpp"
#include "strata.hpp"

namespace sextic {

using Json = nlohmann::ordered_json;

inline constexpr int presentation_format_version = 1;
inline constexpr int report_schema_version = 1;

using AnyPresentation = std::variant<Presentation<RationalField>, Presentation<PrimeField>>;

// ------------------------------------------------------------------ scalars

inline Json scalar_to_json(const ModP& c) { return c.value(); }
inline Json scalar_to_json(const Rational& c) { return c.str(); }

inline Json rational_to_json(const Rational& r) {
    if (r.denominator() == 1 && r.numerator() < 1000000000 && r.numerator() > -1000000000)
        return static_cast<long long>(r.numerator());
    return r.str();
}

inline ModP scalar_from_json(const Json& j, const PrimeField& f) {
    if (!j.is_number_integer()) throw ParseError("prime-field coefficient must be an integer");
    const auto v = j.get<long long>();
    if (v < 0 || v >= static_cast<long long>(f.p))
        throw ParseError("coefficient " + std::to_string(v) + " outside [0, " + std::to_string(f.p) + ")");
    return f.element(static_cast<std::uint64_t>(v));
}

inline Rational scalar_from_json(const Json& j, const RationalField&) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw ParseError("rational coefficient must be a string like \"-3/4\"");
    return Rational::parse(j.get<std::string>());
}

// ------------------------------------------------------------------ forms

/// A form is a list of [coefficient, eX, eY, eZ] terms in basis order; zero is [].
template <class K>
Json form_to_json(const Form<K>& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f.terms()) out.push_back(Json::array({scalar_to_json(c), e.x, e.y, e.z}));
    return out;
}

template <class K>
Form<K> form_from_json(const Json& j, const K& f, int expected_degree) {
    if (!j.is_array()) throw ParseError("form must be an array of terms");
    if (j.empty()) return Form<K>(f, expected_degree < 0 ? 0 : expected_degree);
    std::optional<Form<K>> out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 4) throw ParseError("term must be [coefficient, eX, eY, eZ]");
        int e[3];
        for (int k = 0; k < 3; ++k) {
            if (!t[k + 1].is_number_integer() || t[k + 1].get<long long>() < 0 || t[k + 1].get<long long>() > 1000)
                throw ParseError("exponent must be a small non-negative integer");
            e[k] = t[k + 1].get<int>();
        }
        const Exponent ex{e[0], e[1], e[2]};
        if (!out) out.emplace(f, ex.degree());
        if (ex.degree() != out->degree()) throw ParseError("form is not homogeneous");
        out->set_coefficient(ex, out->coefficient(ex) + scalar_from_json(t[0], f));
    }
    return *out;
}

// ------------------------------------------------------------------ presentations

template <class K>
Json field_to_json(const K& f) {
    if constexpr (K::is_finite)
        return Json{{"kind", "prime"}, {"p", f.p}};
    else
        return Json{{"kind", "rational"}};
}

template <class K>
Json presentation_to_json(const Presentation<K>& p, const std::optional<Json>& metadata = std::nullopt) {
    Json out;
    out["format_version"] = presentation_format_version;
    out["field"] = field_to_json(p.field());
    out["source_twists"] = p.source();
    out["target_twists"] = p.target();
    Json rows = Json::array();
    for (std::size_t i = 0; i < p.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < p.cols(); ++j) row.push_back(form_to_json(p(i, j)));
        rows.push_back(std::move(row));
    }
    out["matrix"] = std::move(rows);
    if (metadata) out["metadata"] = *metadata;
    return out;
}

inline Json metadata_to_json(const SampleMetadata& m) {
    Json out;
    out["stratum"] = stratum_name(m.stratum);
    out["seed"] = m.seed;
    out["field"] = m.field;
    out["rejects"] = m.rejects;
    out["case"] = m.x4_case ? Json(x4_case_name(*m.x4_case)) : Json(nullptr);
    return out;
}

namespace detail {

inline TwistVector twists_from_json(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].empty())
        throw ParseError(std::string("missing or empty '") + key + "'");
    TwistVector out;
    for (const auto& t : j[key]) {
        if (!t.is_number_integer()) throw ParseError(std::string("'") + key + "' must hold integers");
        const auto v = t.get<long long>();
        if (v < -1000 || v > 1000) throw ParseError("twist out of range");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

template <class K>
Presentation<K> presentation_body(const Json& j, const K& f) {
    TwistVector src = twists_from_json(j, "source_twists");
    TwistVector tgt = twists_from_json(j, "target_twists");
    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != tgt.size())
        throw ParseError("'matrix' must have one row per target twist");
    PolyMatrix<K> m(f, tgt.size(), src.size());
    for (std::size_t i = 0; i < tgt.size(); ++i) {
        const Json& row = j["matrix"][i];
        if (!row.is_array() || row.size() != src.size()) throw ParseError("'matrix' row has the wrong length");
        for (std::size_t c = 0; c < src.size(); ++c) m(i, c) = form_from_json(row[c], f, tgt[i] - src[c]);
    }
    return Presentation<K>(std::move(src), std::move(tgt), std::move(m));
}

}  // namespace detail

inline AnyPresentation presentation_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("presentation must be a JSON object");
    if (!j.contains("format_version") || j["format_version"] != presentation_format_version)
        throw ParseError("unsupported or missing format_version");
    if (!j.contains("field") || !j["field"].is_object() || !j["field"].contains("kind"))
        throw ParseError("missing field descriptor");
    const Json& fd = j["field"];
    if (fd["kind"] == "rational") return detail::presentation_body(j, RationalField{});
    if (fd["kind"] == "prime") {
        if (!fd.contains("p") || !fd["p"].is_number_unsigned()) throw ParseError("prime field needs integer 'p'");
        const auto p = fd["p"].get<std::uint64_t>();
        if (p > 0xFFFFFFFFull || !is_prime(p)) throw ParseError("field modulus is not a prime below 2^32");
        return detail::presentation_body(j, PrimeField(p));
    }
    throw ParseError("field kind must be 'rational' or 'prime'");
}

inline AnyPresentation parse_presentation(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return presentation_from_json(j);
}

/// One top-level key per line and one matrix row per line; everything else compact.
inline std::string format_presentation(const Json& j) {
    std::string out = "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += "  " + Json(it.key()).dump() + ": ";
        if (it.key() == "matrix") {
            out += "[\n";
            for (std::size_t i = 0; i < it->size(); ++i)
                out += "    " + (*it)[i].dump() + (i + 1 < it->size() ? ",\n" : "\n");
            out += "  ]";
        } else {
            out += it->dump();
        }
    }
    return out + "\n}\n";
}

inline Json any_presentation_to_json(const AnyPresentation& p, const std::optional<Json>& metadata = std::nullopt) {
    return std::visit([&](const auto& x) { return presentation_to_json(x, metadata); }, p);
}

// ------------------------------------------------------------------ reports

inline Json report_header(const char* kind) {
    Json out;
    out["schema"] = std::string("sextic-strata/") + kind;
    out["schema_version"] = report_schema_version;
    return out;
}

inline Json classification_to_json(const ClassificationReport& r) {
    Json out = report_header("classify");
    out["label"] = r.label ? Json(stratum_name(*r.label)) : Json(nullptr);
    out["profile"] = r.profile ? Json(r.profile->as_array()) : Json(nullptr);
    out["hilbert"] = r.hilbert ? Json::array({rational_to_json(r.hilbert->r), rational_to_json(r.hilbert->chi)})
                               : Json(nullptr);
    out["det_degree"] = r.det_degree;
    out["violations"] = r.violations;
    return out;
}

inline Json cohomology_to_json(const std::vector<CohomologyRow>& rows) {
    Json out = report_header("cohomology");
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"t", r.t}, {"h0", r.h0}, {"h1", r.h1}, {"chi", rational_to_json(r.chi)}});
    out["rows"] = std::move(arr);
    return out;
}

template <class K>
Json stability_to_json(const StabilityResult<K>& r) {
    Json out = report_header("kron-check");
    out["status"] = stability_name(r.status);
    out["mode"] = mode_name(r.mode);
    out["checked"] = r.checked;
    out["note"] = r.note;
    if (r.witness) {
        const auto& w = *r.witness;
        auto basis = [](const auto& vs) {
            Json a = Json::array();
            for (const auto& v : vs) {
                Json row = Json::array();
                for (const auto& c : v) row.push_back(scalar_to_json(c));
                a.push_back(std::move(row));
            }
            return a;
        };
        out["witness"] = {{"dim_source", w.dimS},
                          {"dim_target", w.dimT},
                          {"slope_deficit", w.slope_deficit},
                          {"source_basis", basis(w.S)},
                          {"target_basis", basis(w.T)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

inline Json window_to_json(const WindowReport& w) {
    Json out = report_header("kron-window");
    out["grid"] = w.grid;
    auto range = [&](const std::vector<long long>& ks) {
        Json r;
        r["count"] = ks.size();
        r["first"] = ks.empty() ? Json(nullptr) : Json(Rational(ks.front()).str() + "/" + std::to_string(w.grid));
        r["last"] = ks.empty() ? Json(nullptr) : Json(Rational(ks.back()).str() + "/" + std::to_string(w.grid));
        bool contiguous = true;
        for (std::size_t i = 1; i < ks.size(); ++i) contiguous = contiguous && ks[i] == ks[i - 1] + 1;
        r["contiguous"] = contiguous;
        return r;
    };
    out["six_inequalities"] = range(w.six);
    out["augmented"] = range(w.augmented);
    out["mu2"] = range(polarization_window_22(w.grid));
    return out;
}

inline Json dimensions_to_json(const std::vector<StratumDimension>& rows) {
    Json out = report_header("dims");
    Json arr = Json::array();
    for (const auto& r : rows)
        arr.push_back({{"label", stratum_name(r.label)},
                       {"codim", r.codim},
                       {"base_dim", r.base_dim},
                       {"fibre_dim", r.fibre_dim},
                       {"dim", r.dim()},
                       {"quotient_dim", stratum_quotient_dimension(r.label)}});
    out["rows"] = std::move(arr);
    out["moduli_dim"] = moduli_space_dimension;
    return out;
}

inline Json error_to_json(const std::string& kind, const std::string& message) {
    Json out = report_header("error");
    out["error"] = kind;
    out["message"] = message;
    return out;
}

}  // namespace sextic

#endif
