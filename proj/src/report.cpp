#include "fideal/report.hpp"

namespace fideal {

Json big_to_json(const BigInt& v) {
    static const BigInt exact_limit = BigInt(1) << 53;
    if (v >= 0 && v <= exact_limit) return v.convert_to<std::uint64_t>();
    return v.str();
}

Json indices_json(Mask m) { return mask_indices(m); }

Json to_json(const MonomialSet& s) {
    Json out = Json::array();
    for (const auto& m : s) out.push_back(m.indices());
    return out;
}

Json to_json(const SimplicialComplex& c) {
    Json facets = Json::array();
    for (Mask f : c.facets()) facets.push_back(indices_json(f));
    return {{"n", c.ambient()},
            {"facets", facets},
            {"f_vector", f_vector(c)},
            {"pure", is_pure(c)},
            {"dim", dimension(c)}};
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    return {{"n", g.order()}, {"edges", edges}};
}

Json to_json(const FCReport& r) {
    return {{"cond_degree", r.cond_degree},
            {"cond_clique", r.cond_clique},
            {"cond_edgecount", r.cond_edgecount},
            {"cond_nonbipartite", r.cond_nonbipartite},
            {"satisfies_fc", r.satisfies_fc}};
}

Json to_json(const FIdealVerdict& v) {
    Json out{{"is_f_ideal", v.is_f_ideal},
             {"route", to_string(v.route)},
             {"f_facet", v.f_facet},
             {"f_nonface", v.f_nonface}};
    out["failure_detail"] = v.failure_detail ? Json(*v.failure_detail) : Json(nullptr);
    return out;
}

Json to_json(const TypeReport& t) {
    Json out{{"type", to_string(t.kind)}};
    if (t.kind == IdealType::type_l) {
        out["l"] = t.l;
        out["witness"] = {indices_json(t.witness), indices_json(t.witness_complement)};
    } else {
        out["odd_cycle"] = t.odd_cycle;
    }
    return out;
}

Json to_json(const UnmixedReport& r) {
    Json primes = Json::array();
    for (const auto& p : r.minimal_primes) primes.push_back(indices_json(p.vertices));
    return {{"unmixed", r.unmixed}, {"codim", r.codim}, {"minimal_primes", primes}, {"pure", r.pure}};
}

Json to_json(const CountResult& r) {
    return {{"n", r.n}, {"d", r.d}, {"method", to_string(r.method)}, {"value", big_to_json(r.value)}};
}

Json to_json(const PerfectNumber& p) {
    Json out{{"n", p.n}, {"d", p.d}, {"method", to_string(p.method)}, {"value", p.value}};
    out["witness"] = p.witness ? to_json(*p.witness) : Json::array();
    return out;
}

std::string to_string(IdealType t) { return t == IdealType::type_l ? "type_l" : "c5_exceptional"; }

std::string to_string(PerfectMethod m) { return m == PerfectMethod::brute ? "brute" : "formula"; }

}  // namespace fideal
