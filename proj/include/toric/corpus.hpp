/**
 * Golden-case runner over a directory holding manifest.json and the data
 * files it names. Each case computes one value and compares it with the
 * expected one recorded in the manifest.
 */
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "toric/document.hpp"
#include "toric/probes.hpp"

namespace toric {

struct CaseResult {
    std::string name;
    std::string type;
    std::string citation;
    std::string expected;
    std::string computed;
    bool pass = false;
};

namespace detail {

inline std::string facets_line(const Polytope& p) {
    std::string out;
    for (const auto& f : p.facets()) out += (out.empty() ? "" : " ") + to_string(f.normal) + ":" + to_string(f.offset);
    return out;
}

inline std::string flags_text(const Polytope& p) {
    auto mono = is_monotone(p);
    return std::string("delzant=") + (is_delzant(p) ? "true" : "false") + " even=" + (is_even(p) ? "true" : "false") +
           " symmetric=" + (is_symmetric(p) ? "true" : "false") + " monotone=" + (mono ? to_string(*mono) : "none");
}

inline std::string expected_flags_text(const json& e) {
    std::string mono = e.at("monotone").is_null() ? "none" : to_string(rational_of(e.at("monotone"), json::json_pointer()));
    return std::string("delzant=") + (e.at("delzant").get<bool>() ? "true" : "false") +
           " even=" + (e.at("even").get<bool>() ? "true" : "false") +
           " symmetric=" + (e.at("symmetric").get<bool>() ? "true" : "false") + " monotone=" + mono;
}

inline CaseResult run_case(const json& c, const std::filesystem::path& dir) {
    CaseResult r;
    r.name = c.at("name").get<std::string>();
    r.type = c.at("type").get<std::string>();
    r.citation = c.value("citation", "");
    auto file = [&](const char* key) { return (dir / c.at(key).get<std::string>()).string(); };
    const std::string& t = r.type;
    try {
        if (t == "hf") {
            auto p = load_polytope(file("polytope")).polytope;
            r.expected = std::to_string(c.at("expect").get<long long>());
            r.computed = std::to_string(hf(p));
        } else if (t == "hf_even") {
            auto p = load_polytope(file("polytope")).polytope;
            auto rn = rank_gf2(boundary_op(p));
            r.expected = std::to_string(c.at("expect").get<long long>()) + " (nullity " +
                         std::to_string(c.at("nullity").get<long long>()) + ", rank " +
                         std::to_string(c.at("rank").get<long long>()) + ")";
            r.computed = std::to_string(hf_even(p)) + " (nullity " + std::to_string(rn.nullity) + ", rank " +
                         std::to_string(rn.rank) + ")";
        } else if (t == "tr_bound") {
            auto p = load_polytope(file("polytope")).polytope;
            r.expected = std::to_string(c.at("expect").get<long long>());
            r.computed = std::to_string(hf_lower_bound_tr(p).bound);
        } else if (t == "flags") {
            auto p = load_polytope(file("polytope")).polytope;
            r.expected = expected_flags_text(c.at("expect"));
            r.computed = flags_text(p);
        } else if (t == "reduce") {
            auto amb = load_polytope(file("ambient")).polytope;
            auto slice = slice_document_from_json(load_json_file(file("slice"))).slice;
            auto want = load_polytope(file("expect")).polytope;
            r.expected = facets_line(canonical_form(want));
            r.computed = facets_line(reduce(amb, slice));
        } else if (t == "weights") {
            auto p = load_polytope(file("polytope")).polytope;
            auto w = monotone_weights(p);
            r.expected = "m=" + to_string(int_vec_of(c.at("expect_m"), json::json_pointer())) + " k=" +
                         std::to_string(c.at("expect_pivot").get<long long>());
            r.computed = "m=" + to_string(w.m) + " k=" + std::to_string(*w.pivot + 1);
        } else if (t == "certify") {
            auto cert = load_certificate(file("certificate"));
            if (c.contains("expect_error")) {
                r.expected = c.at("expect_error").get<std::string>();
                try {
                    auto claim = verify(cert);
                    r.computed = "verified, bound " + claim.bound.str();
                } catch (const Error& e) {
                    r.computed = to_string(e.code());
                }
            } else {
                r.expected = "bound " + std::to_string(c.at("expect_bound").get<long long>());
                auto claim = verify(cert);
                r.computed = "bound " + claim.bound.str();
                if (c.contains("expect_point")) {
                    r.expected += " at " + to_string(rat_vec_of(c.at("expect_point"), json::json_pointer()));
                    r.computed += " at " + to_string(claim.marked_point);
                }
            }
        } else if (t == "auto") {
            auto p = load_polytope(file("polytope")).polytope;
            auto claim = verify(auto_certify_monotone(p));
            r.expected = "bound " + std::to_string(c.at("expect_bound").get<long long>());
            r.computed = "bound " + claim.bound.str();
        } else if (t == "probe") {
            auto p = load_polytope(file("polytope")).polytope;
            auto u = rat_vec_of(c.at("point"), json::json_pointer());
            auto hit = probe_scan(p, u, c.at("bound").get<long>());
            r.expected = c.at("expect").get<std::string>();
            r.computed = hit ? "found" : "none";
        } else {
            r.computed = "unknown case type";
        }
    } catch (const Error& e) {
        r.computed = e.what();
    }
    r.pass = !r.expected.empty() && r.expected == r.computed;
    return r;
}

}  // namespace detail

inline std::vector<CaseResult> run_corpus(const std::filesystem::path& dir) {
    auto manifest = load_json_file((dir / "manifest.json").string());
    std::vector<CaseResult> out;
    for (const auto& c : manifest.at("cases")) out.push_back(detail::run_case(c, dir));
    return out;
}

}  // namespace toric
