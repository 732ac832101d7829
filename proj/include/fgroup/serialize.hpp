#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "fgroup/dm.hpp"
#include "fgroup/step_invariants.hpp"

namespace fgroup {

using Json = nlohmann::ordered_json;

/// A document that does not match the expected schema.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace io {

/// Period lists longer than this are written as [value, count] pairs.
inline constexpr std::uint64_t kExpandedPeriodLimit = 4096;

inline Json big_json(const BigInt& v)
{
    if (v.fits_slong_p()) {
        return Json(static_cast<std::int64_t>(v.get_si()));
    }
    return Json(v.get_str());
}

inline BigInt big_from(const Json& j, const char* what)
{
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? big_u(j.get<std::uint64_t>()) : big(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw SchemaError(std::string(what) + " must be an integer");
}

inline std::int64_t int_from(const Json& j, const char* what)
{
    if (!j.is_number_integer()) {
        throw SchemaError(std::string(what) + " must be an integer");
    }
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
        throw SchemaError(std::string(what) + " is out of range");
    }
    return j.get<std::int64_t>();
}

inline const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw SchemaError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

inline const Json& array_field(const Json& j, const char* key)
{
    const auto& v = field(j, key);
    if (!v.is_array()) {
        throw SchemaError(std::string("field \"") + key + "\" must be an array");
    }
    return v;
}

// Signature ------------------------------------------------------------------

inline Json to_json(const Signature& s)
{
    Json j {{"g", big_json(s.genus())}, {"r", big_json(s.cusps())}};
    if (s.period_count() <= kExpandedPeriodLimit) {
        j["periods"] = s.periods(kExpandedPeriodLimit);
    } else {
        Json runs = Json::array();
        for (const auto& run : s.runs()) {
            runs.push_back({run.value, run.count});
        }
        j["period_counts"] = std::move(runs);
    }
    return j;
}

inline Signature signature_from(const Json& j)
{
    if (!j.is_object()) {
        throw SchemaError("signature must be an object {g, r, periods}");
    }
    auto g = big_from(field(j, "g"), "g");
    auto r = big_from(field(j, "r"), "r");
    std::vector<PeriodRun> runs;
    if (j.contains("period_counts")) {
        for (const auto& pair : array_field(j, "period_counts")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw SchemaError("period_counts entries are [value, count]");
            }
            auto count = int_from(pair[1], "period count");
            if (count < 0) {
                throw SchemaError("period count must be nonnegative");
            }
            runs.push_back({int_from(pair[0], "period"), static_cast<std::uint64_t>(count)});
        }
    } else {
        for (const auto& n : array_field(j, "periods")) {
            runs.push_back({int_from(n, "period"), 1});
        }
    }
    return Signature(std::move(g), std::move(r), std::move(runs));
}

// Scalars and reports ----------------------------------------------------------

inline Json to_json(const Rational& q) { return q.str(); }

inline Json to_json(const AbelianInvariants& a)
{
    Json factors = Json::array();
    for (const auto& d : a.torsion_factors) {
        factors.push_back(big_json(d));
    }
    return {{"free_rank", big_json(a.free_rank)}, {"torsion_factors", std::move(factors)},
            {"torsion_order", big_json(a.torsion_order())}};
}

inline Json to_json(const InvariantsReport& r)
{
    return {{"euler", to_json(r.euler)},
            {"curvature", std::string(curvature_name(r.curvature))},
            {"rank_tf", big_json(r.rank_tf)},
            {"epsilon", r.epsilon},
            {"periods", to_json(r.periods)["periods"]},
            {"torsion_order", big_json(r.torsion_order)},
            {"perfect", r.perfect}};
}

inline Json to_json(const Classification& c)
{
    if (const auto* h = std::get_if<HyperbolicMarker>(&c)) {
        return {{"hyperbolic", true}, {"euler", to_json(h->euler)}};
    }
    const auto& e = std::get<NonHyperbolicEntry>(c);
    Json j {{"hyperbolic", false},
            {"row", e.row},
            {"pattern", e.pattern},
            {"group", e.group},
            {"instance", e.instance},
            {"euler", to_json(e.euler)},
            {"derived_length", e.derived_length.str()}};
    if (e.order) {
        j["order"] = big_json(*e.order);
    }
    return j;
}

inline Json to_json(const TableRow& row)
{
    return {{"row", row.row},
            {"pattern", std::string(row.pattern)},
            {"group", std::string(row.group)},
            {"euler", std::string(row.euler)},
            {"derived_length", row.derived_length.str()}};
}

inline Json to_json(const ChenData& c)
{
    return {{"theta1", big_json(c.theta1)}, {"theta2", big_json(c.theta2)},
            {"shape", std::string(chen_shape_name(c.shape))}};
}

inline DMCurveData dm_from(const Json& j)
{
    return make_dm_curve(signature_from(field(j, "rigidified")),
                         big_from(field(j, "generic_inertia_order"), "generic_inertia_order"));
}

// Homs -----------------------------------------------------------------------------

template <class T, class F>
Json images_json(const GeneratorImages<T>& im, F&& one)
{
    Json j = Json::object();
    for (auto k : {GeneratorKind::Alpha, GeneratorKind::Beta, GeneratorKind::Gamma, GeneratorKind::Delta}) {
        Json list = Json::array();
        for (const auto& x : im.of(k)) {
            list.push_back(one(x));
        }
        j[std::string(generator_kind_name(k))] = std::move(list);
    }
    return j;
}

template <class T, class F>
GeneratorImages<T> images_from(const Json& j, F&& one)
{
    GeneratorImages<T> im;
    auto read = [&](const char* key, std::vector<T>& dst) {
        if (!j.contains(key)) {
            return;
        }
        for (const auto& x : array_field(j, key)) {
            dst.push_back(one(x));
        }
    };
    if (!j.is_object()) {
        throw SchemaError("images must be an object");
    }
    read("alpha", im.alpha);
    read("beta", im.beta);
    read("gamma", im.gamma);
    read("delta", im.delta);
    return im;
}

inline Json to_json(const AbelianHom& h)
{
    return {{"source", to_json(h.source)},
            {"target_moduli", std::vector<std::int64_t>(h.target.moduli().begin(), h.target.moduli().end())},
            {"images", images_json(h.images, [](const AbelianElement& x) { return Json(x); })}};
}

inline std::vector<std::int64_t> int_list(const Json& j, const char* what)
{
    if (!j.is_array()) {
        throw SchemaError(std::string(what) + " must be an array");
    }
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        out.push_back(int_from(v, what));
    }
    return out;
}

inline AbelianHom abelian_hom_from(const Json& j)
{
    AbelianHom h {signature_from(field(j, "source")),
                  FiniteAbelianGroup(int_list(field(j, "target_moduli"), "target_moduli")), {}};
    h.images = images_from<AbelianElement>(field(j, "images"),
                                           [](const Json& x) { return int_list(x, "abelian image"); });
    return h;
}

inline Json to_json(const PermHom& h)
{
    return {{"source", to_json(h.source)},
            {"degree", h.degree},
            {"images", images_json(h.images, [](const Permutation& p) {
                 Json line = Json::array();
                 for (auto y : p) {
                     line.push_back(y + 1);
                 }
                 return line;
             })}};
}

inline PermHom perm_hom_from(const Json& j)
{
    auto degree = int_from(field(j, "degree"), "degree");
    if (degree < 1) {
        fail(ErrorCode::MalformedHom, "degree must be positive");
    }
    PermHom h {signature_from(field(j, "source")), static_cast<std::size_t>(degree), {}};
    h.images = images_from<Permutation>(field(j, "images"), [&](const Json& x) {
        Permutation p;
        for (auto v : int_list(x, "permutation")) {
            if (v < 1 || v > degree) {
                fail(ErrorCode::MalformedHom, "permutation entry out of range");
            }
            p.push_back(static_cast<std::uint32_t>(v - 1));
        }
        return p;
    });
    return h;
}

// Covers ---------------------------------------------------------------------------

inline Json to_json(const CycleType& c)
{
    Json j = Json::array();
    for (const auto& cc : c) {
        j.push_back({cc.length, big_json(cc.count)});
    }
    return j;
}

inline CycleType cycle_type_from(const Json& j)
{
    if (!j.is_array()) {
        throw SchemaError("cycle type must be an array of [length, count]");
    }
    CycleType c;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw SchemaError("cycle entries are [length, count]");
        }
        c.push_back({int_from(pair[0], "cycle length"), big_from(pair[1], "cycle count")});
    }
    return c;
}

inline Json to_json(const InducedSignatureResult& r)
{
    Json cusps = Json::array();
    for (const auto& c : r.cusp_cycles) {
        cusps.push_back(to_json(c));
    }
    Json periods = Json::array();
    for (const auto& pc : r.period_cycles) {
        periods.push_back({{"period", pc.period}, {"generators", pc.generators}, {"cycles", to_json(pc.cycles)}});
    }
    return {{"signature", to_json(r.subgroup)},
            {"index", big_json(r.index)},
            {"cusp_cycles", std::move(cusps)},
            {"period_cycles", std::move(periods)}};
}

inline InducedSignatureResult induced_from(const Json& j)
{
    InducedSignatureResult r {signature_from(field(j, "signature")), big_from(field(j, "index"), "index"), {}, {}};
    for (const auto& c : array_field(j, "cusp_cycles")) {
        r.cusp_cycles.push_back(cycle_type_from(c));
    }
    for (const auto& pc : array_field(j, "period_cycles")) {
        auto gens = int_from(field(pc, "generators"), "generators");
        if (gens < 0) {
            throw SchemaError("generators must be nonnegative");
        }
        r.period_cycles.push_back({int_from(field(pc, "period"), "period"), static_cast<std::uint64_t>(gens),
                                   cycle_type_from(field(pc, "cycles"))});
    }
    return r;
}

inline Json to_json(const Tower& t)
{
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"signature", to_json(s.signature)},
                         {"quotient_order", big_json(s.quotient_order)},
                         {"status", std::string(tower_status_name(s.status))}});
    }
    return {{"base", to_json(t.base)},
            {"base_status", std::string(tower_status_name(t.base_status))},
            {"steps", std::move(steps)},
            {"status", std::string(tower_status_name(t.status()))}};
}

inline Json to_json(const CoverKind& kind)
{
    struct {
        Json operator()(const TorsionKernelStep&) const { return {{"kind", "TorsionKernel"}}; }
        Json operator()(const ModNStep& s) const { return {{"kind", "ModN"}, {"n", s.n}}; }
        Json operator()(const PrimeCharacterStep& s) const
        {
            return {{"kind", "PrimeCharacter"}, {"prime", s.prime}, {"i1", s.i1}, {"i2", s.i2}};
        }
        Json operator()(const CuspDoublingStep& s) const { return {{"kind", "CuspDoubling"}, {"hom", to_json(s.hom)}}; }
    } visitor;
    return std::visit(visitor, kind);
}

inline CoverKind cover_kind_from(const Json& j)
{
    const auto& tag = field(j, "kind");
    if (!tag.is_string()) {
        throw SchemaError("step kind must be a string");
    }
    const auto name = tag.get<std::string>();
    if (name == "TorsionKernel") {
        return TorsionKernelStep {};
    }
    if (name == "ModN") {
        return ModNStep {int_from(field(j, "n"), "n")};
    }
    if (name == "PrimeCharacter") {
        auto i1 = int_from(field(j, "i1"), "i1");
        auto i2 = int_from(field(j, "i2"), "i2");
        if (i1 < 1 || i2 < 1) {
            throw SchemaError("prime character indices are 1-based");
        }
        return PrimeCharacterStep {int_from(field(j, "prime"), "prime"), static_cast<std::size_t>(i1),
                                   static_cast<std::size_t>(i2)};
    }
    if (name == "CuspDoubling") {
        return CuspDoublingStep {abelian_hom_from(field(j, "hom"))};
    }
    throw SchemaError("unknown step kind \"" + name + "\"");
}

inline Json to_json(const CoverChain& c)
{
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json step = to_json(s.kind);
        step["result"] = to_json(s.result);
        steps.push_back(std::move(step));
    }
    return {{"base", to_json(c.base)},
            {"steps", std::move(steps)},
            {"total_index", big_json(c.total_index)},
            {"quotient_derived_length", c.quotient_derived_length}};
}

inline CoverChain cover_chain_from(const Json& j)
{
    CoverChain c {signature_from(field(j, "base")), {}, big_from(field(j, "total_index"), "total_index"),
                  static_cast<int>(int_from(field(j, "quotient_derived_length"), "quotient_derived_length"))};
    for (const auto& s : array_field(j, "steps")) {
        c.steps.push_back({cover_kind_from(s), induced_from(field(s, "result"))});
    }
    return c;
}

inline Json to_json(const CertifyReport& r) { return {{"certified", r.ok}, {"diagnostics", r.diagnostics}}; }

} // namespace io

} // namespace fgroup
