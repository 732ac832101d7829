#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fgroup/fgroup.hpp"
#include "fgroup/scan.hpp"
#include "fgroup/serialize.hpp"

namespace fgroup::cli {

inline constexpr int kOk = 0;
inline constexpr int kInvalid = 2;
inline constexpr int kDomain = 3;

inline constexpr std::array<std::string_view, 14> kCommands {
    "chi", "classify", "ab", "report", "table", "tower", "induced",
    "homs", "fn-chain", "cusp-grow", "chen", "check-3step", "dm-chi", "scan",
};

struct Options {
    std::string command;
    std::string payload;
    std::string input_file;
    std::size_t depth = Limits {}.tower_depth;
    Limits limits;
};

namespace detail {

using io::field;
using io::to_json;

inline Json error_document(std::string_view name, const std::string& detail)
{
    return {{"error", std::string(name)}, {"detail", detail}};
}

inline Json chain_document(const CoverChain& chain, const Limits& limits)
{
    Json j = to_json(chain);
    j["final_signature"] = to_json(chain.final_signature());
    j["certification"] = to_json(certify_chain(chain, limits));
    return j;
}

inline Json check_3step(const Signature& sig, const Limits& limits)
{
    auto verdict = metabelian_torsion_free(sig);
    Json j {{"signature", to_json(sig)},
            {"hyperbolic", is_hyperbolic(sig)},
            {"derived_length_upto3", derived_length_upto3(sig)},
            {"hyperbolic_3step", hyperbolic_3step_check(sig)},
            {"metabelian_torsion_free", verdict.torsion_free}};
    if (!verdict.torsion_free) {
        j["witness"] = verdict.witness;
    }
    j["m_delta_upper_bound"] = m_delta_upper_bound(sig, limits);
    return j;
}

inline Json homs(const Json& payload, const Limits& limits)
{
    const auto source = io::signature_from(field(payload, "source"));
    Json list = Json::array();
    if (payload.contains("degree")) {
        auto degree = io::int_from(payload.at("degree"), "degree");
        if (degree < 1) {
            throw SchemaError("degree must be positive");
        }
        for_each_perm_hom(
            source, static_cast<std::size_t>(degree),
            [&](const PermHom& h) {
                list.push_back(to_json(h)["images"]);
                return true;
            },
            limits);
    } else {
        FiniteAbelianGroup target(io::int_list(field(payload, "target_moduli"), "target_moduli"));
        bool surjective = false;
        if (payload.contains("surjective")) {
            if (!payload.at("surjective").is_boolean()) {
                throw SchemaError("surjective must be a boolean");
            }
            surjective = payload.at("surjective").get<bool>();
        }
        for_each_abelian_hom(
            source, target, surjective,
            [&](const AbelianHom& h) {
                list.push_back(to_json(h)["images"]);
                return true;
            },
            limits);
    }
    return {{"source", to_json(source)}, {"count", list.size()}, {"homs", std::move(list)}};
}

inline ScanRanges scan_ranges(const Json& payload)
{
    auto bound = [&](const char* key, std::int64_t fallback) {
        return payload.contains(key) ? io::int_from(payload.at(key), key) : fallback;
    };
    return {bound("g_max", 0), bound("r_max", 0), bound("k_max", 0), bound("n_max", 2)};
}

inline void run_scan(const Json& payload, const Limits& limits, std::ostream& out)
{
    std::vector<std::string> checks;
    if (payload.contains("checks")) {
        const auto& list = payload.at("checks");
        if (!list.is_array()) {
            throw SchemaError("checks must be an array of names");
        }
        const auto known = scan_check_names();
        for (const auto& name : list) {
            if (!name.is_string()) {
                throw SchemaError("check names are strings");
            }
            auto n = name.get<std::string>();
            if (std::find(known.begin(), known.end(), n) == known.end()) {
                throw SchemaError("unknown check \"" + n + "\"");
            }
            checks.push_back(std::move(n));
        }
    }
    auto summary = scan(scan_ranges(payload), checks, limits);
    for (const auto& c : summary.checks) {
        Json line {{"check", c.name},
                   {"passed", c.passed},
                   {"failed", c.failed},
                   {"skipped", c.skipped},
                   {"counterexamples", c.counterexamples}};
        for (const auto& [key, value] : c.notes) {
            line[key] = value;
        }
        out << line.dump() << '\n';
    }
    out << Json {{"signatures", summary.signatures}, {"checks", summary.checks.size()}}.dump() << '\n';
}

/// Result document for a single-document command.
inline Json evaluate(const Options& opt, const Json& payload)
{
    const auto& c = opt.command;
    const auto& limits = opt.limits;
    if (c == "table") {
        Json rows = Json::array();
        for (const auto& row : kNonHyperbolicTable) {
            rows.push_back(to_json(row));
        }
        return rows;
    }
    if (c == "induced") {
        if (payload.contains("target_moduli")) {
            auto h = io::abelian_hom_from(payload);
            return to_json(induced_signature_abelian(h.source, h, limits));
        }
        auto h = io::perm_hom_from(payload);
        Json j = to_json(induced_signature(h.source, h, limits));
        j["relations_verified"] = verify_perm_hom(h, limits);
        return j;
    }
    if (c == "homs") {
        return homs(payload, limits);
    }
    if (c == "cusp-grow") {
        auto sig = io::signature_from(field(payload, "signature"));
        auto r0 = io::big_from(field(payload, "r0"), "r0");
        return chain_document(cusp_growth_chain(sig, r0, limits), limits);
    }
    if (c == "dm-chi") {
        return to_json(dm_euler_characteristic(io::dm_from(payload)));
    }
    const auto sig = io::signature_from(payload);
    if (c == "chi") {
        return to_json(euler_characteristic(sig));
    }
    if (c == "classify") {
        Json j = to_json(classify_nonhyperbolic(sig));
        j["curvature"] = std::string(curvature_name(classify_curvature(sig)));
        return j;
    }
    if (c == "ab") {
        return to_json(abelianization(sig, limits));
    }
    if (c == "report") {
        return to_json(invariants_report(sig, limits));
    }
    if (c == "tower") {
        return to_json(derived_tower(sig, opt.depth));
    }
    if (c == "fn-chain") {
        return chain_document(fn_chain(sig, limits), limits);
    }
    if (c == "chen") {
        auto chen = chen_ranks(sig);
        Json j = to_json(chen);
        j["affineness_equation"] = affineness_equation(chen);
        return j;
    }
    if (c == "check-3step") {
        return check_3step(sig, limits);
    }
    throw SchemaError("unhandled command " + c);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw SchemaError("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace detail

/// Executes one command; the result or error document goes to `out`.
inline int execute(const Options& opt, std::ostream& out)
{
    if (std::find(kCommands.begin(), kCommands.end(), opt.command) == kCommands.end()) {
        out << detail::error_document("UnknownCommand", "unknown command \"" + opt.command + "\"").dump() << '\n';
        return kInvalid;
    }
    try {
        std::string text = opt.input_file.empty() ? opt.payload : detail::read_file(opt.input_file);
        Json payload = Json::object();
        if (text.find_first_not_of(" \t\r\n") != std::string::npos) {
            payload = Json::parse(text);
        } else if (opt.command != "table") {
            throw SchemaError("command \"" + opt.command + "\" needs a payload");
        }
        if (opt.command == "scan") {
            detail::run_scan(payload, opt.limits, out);
            return kOk;
        }
        out << detail::evaluate(opt, payload).dump() << '\n';
        return kOk;
    } catch (const Json::exception& e) {
        out << detail::error_document("ParseError", e.what()).dump() << '\n';
        return kInvalid;
    } catch (const SchemaError& e) {
        out << detail::error_document("ParseError", e.what()).dump() << '\n';
        return kInvalid;
    } catch (const Error& e) {
        out << detail::error_document(e.name(), e.detail()).dump() << '\n';
        return is_validation_error(e.code()) ? kInvalid : kDomain;
    }
}

/// Parses command-line arguments (without the program name) and executes.
inline int run(std::vector<std::string> args, std::ostream& out)
{
    Options opt;
    CLI::App app {"Orbifold signature calculus for Fenchel groups", "fgroup"};
    app.add_option("command", opt.command, "chi | classify | ab | report | table | tower | induced | homs | "
                                           "fn-chain | cusp-grow | chen | check-3step | dm-chi | scan")
        ->required();
    app.add_option("payload", opt.payload, "JSON payload (or use --input)");
    app.add_option("--input", opt.input_file, "read the JSON payload from FILE");
    app.add_option("--depth", opt.depth, "derived tower depth")->check(CLI::PositiveNumber);
    app.add_option("--degree-bound", opt.limits.perm_degree, "largest permutation degree searched");
    app.add_option("--order-bound", opt.limits.abelian_target_order, "largest abelian target order searched");
    app.add_option("--ceiling", opt.limits.scan_ceiling, "largest scan size");
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        out << detail::error_document("ParseError", e.what()).dump() << '\n';
        return kInvalid;
    }
    if (app.count("--ceiling") > 0) {
        opt.limits.max_results = opt.limits.scan_ceiling;
    }
    return execute(opt, out);
}

} // namespace fgroup::cli
