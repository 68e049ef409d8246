#include "suzuki/json_export.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "suzuki/version.hpp"

namespace suzuki {

namespace {

std::string sign_text(int v) { return v > 0 ? "+1" : "-1"; }

Json coords_json(const SuzukiAlgebra& alg, const Element& e) {
    Json arr = Json::array();
    for (const auto& [b, c] : e.terms()) arr.push_back({basis_rank(b, alg.params()), c.str()});
    return arr;
}

}  // namespace

Json params_json(const AlgebraParams& p) {
    Json j;
    j["N"] = p.N;
    j["n"] = p.n;
    j["mu"] = sign_text(p.mu);
    j["lambda"] = sign_text(p.lambda);
    return j;
}

Json element_json(const SuzukiAlgebra& alg, const Element& e) {
    Json j;
    j["coords"] = coords_json(alg, e);
    j["text"] = e.str();
    return j;
}

Json tensor_json(const SuzukiAlgebra& alg, const TensorElement& e) {
    Json arr = Json::array();
    for (const auto& [k, c] : e.terms())
        arr.push_back({basis_rank(k.first, alg.params()), basis_rank(k.second, alg.params()), c.str()});
    return arr;
}

Json linear_map_json(const SuzukiAlgebra& alg, const LinearMap& f) {
    Json cols = Json::array();
    for (long j = 0; j < alg.dim(); ++j) {
        Json entries = Json::array();
        for (long r = 0; r < alg.dim(); ++r) {
            if (f.at(r, j).is_zero()) continue;
            entries.push_back({r, f.at(r, j).str()});
        }
        cols.push_back(entries);
    }
    Json out;
    out["columns"] = cols;
    return out;
}

Json tables_json(const SuzukiAlgebra& alg) {
    Json j;
    j["format_version"] = kTablesFormatVersion;
    j["params"] = params_json(alg.params());
    j["conductor"] = alg.field().conductor();
    j["dim"] = alg.dim();
    Json basis = Json::array();
    for (long i = 0; i < alg.dim(); ++i) basis.push_back(basis_label(alg.basis(i)));
    j["basis"] = basis;
    j["unit"] = coords_json(alg, alg.unit());
    Json mult = Json::array();
    for (long i = 0; i < alg.dim(); ++i) {
        for (long k = 0; k < alg.dim(); ++k) {
            const Element& e = alg.mult(i, k);
            if (e.is_zero()) continue;
            mult.push_back({i, k, coords_json(alg, e)});
        }
    }
    j["mult"] = mult;
    return j;
}

namespace {

Json check_json(const AxiomCheck& c) {
    Json j;
    j["ok"] = c.ok;
    if (!c.ok) j["counterexample"] = c.counterexample;
    return j;
}

}  // namespace

Json axiom_report_json(const AxiomReport& rep) {
    Json j;
    j["ok"] = rep.all_ok();
    Json v;
    v["associativity"] = check_json(rep.associativity);
    v["unit"] = check_json(rep.unit_law);
    v["coassociativity"] = check_json(rep.coassociativity);
    v["counit"] = check_json(rep.counit_law);
    v["coproduct_multiplicative"] = check_json(rep.coproduct_multiplicative);
    v["counit_multiplicative"] = check_json(rep.counit_multiplicative);
    v["antipode_left"] = check_json(rep.antipode_left);
    v["antipode_right"] = check_json(rep.antipode_right);
    j["verdicts"] = v;
    return j;
}

Json morphism_report_json(const MorphismReport& rep) {
    Json j;
    j["ok"] = rep.all_ok();
    Json v;
    v["is_algebra_map"] = check_json(rep.is_algebra_map);
    v["is_unital"] = check_json(rep.is_unital);
    v["is_coalgebra_map"] = check_json(rep.is_coalgebra_map);
    v["is_counital"] = check_json(rep.is_counital);
    v["commutes_with_antipode"] = check_json(rep.commutes_with_antipode);
    v["is_bijective"] = check_json(rep.is_bijective);
    j["verdicts"] = v;
    if (!rep.all_ok()) j["first_failure"] = rep.first_failure();
    return j;
}

Json grouplikes_json(const SuzukiAlgebra& alg, const GroupLikeReport& rep) {
    Json j;
    j["ok"] = rep.pairwise_distinct;
    j["count"] = rep.list.size();
    Json arr = Json::array();
    for (const auto& g : rep.list) {
        Json e;
        e["label"] = g.label;
        e["element"] = element_json(alg, g.element);
        e["is_unit"] = g.is_unit;
        arr.push_back(e);
    }
    j["group_likes"] = arr;
    j["pairwise_distinct"] = rep.pairwise_distinct;
    j["collisions"] = rep.collisions;
    return j;
}

Json decompose_json(const SuzukiAlgebra& alg, const DecomposeReport& rep) {
    Json j;
    j["ok"] = rep.ok;
    j["dim"] = rep.dim;
    j["grouplike_count"] = rep.grouplike_count;
    j["subcoalgebra_count"] = rep.coalgebra_count;
    j["span_rank"] = rep.span_rank;
    Json spans = Json::array();
    for (long s = 1; s <= alg.params().N; ++s) {
        for (long t = 1; t <= alg.params().n - 1; ++t) {
            SimpleSubcoalgebra c = simple_subcoalgebra(alg, s, t);
            Json entry;
            entry["s"] = s;
            entry["t"] = t;
            Json span = Json::array();
            for (const auto& v : c.span) span.push_back(v.str());
            entry["span"] = span;
            spans.push_back(entry);
        }
    }
    j["subcoalgebras"] = spans;
    return j;
}

Json comodule_json(const SuzukiAlgebra& alg, const Comodule& cm) {
    Json j;
    j["name"] = cm.name;
    Json rows = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (int k = 0; k < 2; ++k) row.push_back(element_json(alg, cm.c[i][k]));
        rows.push_back(row);
    }
    j["coaction"] = rows;
    return j;
}

Json twist_json(const SuzukiAlgebra& alg, const Comodule& source, const MorphismReport& psi_report,
                const std::optional<SupportTransport>& transport, const std::optional<Comodule>& twisted) {
    Json j;
    j["ok"] = psi_report.all_ok() && transport.has_value();
    j["morphism"] = morphism_report_json(psi_report);
    j["source"] = comodule_json(alg, source);
    if (twisted) j["twisted"] = comodule_json(alg, *twisted);
    if (transport) {
        Json t;
        t["support_dim_before"] = transport->dim_before;
        t["support_dim_after"] = transport->dim_after;
        t["supp_equals_psi_of_supp"] = transport->forward_holds;          // Supp(V^psi) = psi(Supp V)
        t["supp_equals_psi_inverse_of_supp"] = transport->backward_holds;  // Supp(V^psi) = psi^{-1}(Supp V)
        if (transport->matched_subcoalgebra) {
            t["matched_subcoalgebra"] = {transport->matched_subcoalgebra->first,
                                         transport->matched_subcoalgebra->second};
        } else {
            t["matched_subcoalgebra"] = nullptr;
        }
        j["transport"] = t;
    }
    return j;
}

namespace {

Json discrepancies_json(const std::vector<Discrepancy>& ds) {
    Json arr = Json::array();
    for (const auto& d : ds) {
        Json e;
        e["kind"] = d.kind;
        e["descriptor"] = d.descriptor;
        e["detail"] = d.detail;
        arr.push_back(e);
    }
    return arr;
}

}  // namespace

Json aut_list_json(const SuzukiAlgebra& alg, const AutEnumeration& e) {
    (void)alg;
    Json j;
    j["ok"] = e.consistent();
    Json cands = Json::array();
    for (const auto& co : e.candidates) {
        Json c;
        c["descriptor"] = co.desc.str();
        c["conditions_hold"] = co.conditions;
        c["verified"] = co.verified;
        if (!co.verified) c["first_failure"] = co.first_failure;
        if (co.element_index >= 0) c["element"] = co.element_index;
        cands.push_back(c);
    }
    j["candidates"] = cands;
    j["classified_count"] = e.classified_count;
    j["verified_distinct"] = e.verified_maps.size();
    Json aliases = Json::array();
    for (const auto& a : e.aliases) aliases.push_back(a);
    j["aliases"] = aliases;
    Json xi = Json::array();
    for (const auto& s : e.xi_summaries) {
        Json x;
        x["t"] = s.t;
        x["stated_xi"] = s.stated;
        x["verified_xi"] = s.verified;
        xi.push_back(x);
    }
    j["xi_summary"] = xi;
    j["discrepancies"] = discrepancies_json(e.discrepancies);
    return j;
}

Json aut_table_json(const SuzukiAlgebra& alg, const AutEnumeration& e, const GroupTable& g,
                    const GroupInvariants& inv) {
    Json j;
    j["ok"] = g.closed && e.consistent();
    j["order"] = g.order;
    j["closed"] = g.closed;
    if (!g.closed) j["failure"] = g.failure;
    j["identity"] = g.identity_index;
    j["table"] = g.table;
    j["inverse"] = g.inverse_of;
    Json elems = Json::array();
    for (size_t i = 0; i < g.elements.size(); ++i) {
        Json el;
        el["index"] = i;
        Json descs = Json::array();
        if (i < e.aliases.size()) {
            for (long cand : e.aliases[i]) descs.push_back(e.candidates[cand].desc.str());
        }
        el["descriptors"] = descs;
        el["matrix"] = linear_map_json(alg, g.elements[i]);
        elems.push_back(el);
    }
    j["elements"] = elems;
    Json iv;
    iv["order"] = inv.order;
    iv["abelian"] = inv.abelian;
    iv["element_orders"] = inv.element_orders;
    iv["center_size"] = inv.center_size;
    iv["squares_count"] = inv.squares_count;
    iv["identification"] = inv.identification;
    j["invariants"] = iv;
    j["discrepancies"] = discrepancies_json(e.discrepancies);
    return j;
}

Json aut_search_json(const SuzukiAlgebra& alg, const AutEnumeration& e, const SearchResult& r,
                     const std::string& preset) {
    (void)alg;
    // Set comparison against the enumeration's verified maps.
    std::vector<std::string> found, classified;
    for (const auto& h : r.hits) found.push_back(h.map.canonical_key());
    for (const auto& m : e.verified_maps) classified.push_back(m.canonical_key());
    std::sort(classified.begin(), classified.end());

    std::vector<size_t> extra, missing;
    for (size_t i = 0; i < found.size(); ++i) {
        if (!std::binary_search(classified.begin(), classified.end(), found[i])) extra.push_back(i);
    }
    std::vector<std::string> found_sorted = found;
    std::sort(found_sorted.begin(), found_sorted.end());
    for (size_t i = 0; i < e.verified_maps.size(); ++i) {
        if (!std::binary_search(found_sorted.begin(), found_sorted.end(),
                                e.verified_maps[i].canonical_key()))
            missing.push_back(i);
    }

    Json j;
    j["ok"] = extra.empty() && missing.empty();
    j["grid"] = preset;
    j["found_distinct"] = r.hits.size();
    j["classified_distinct"] = e.verified_maps.size();
    j["residual_candidates"] = r.residual_candidates;
    j["set_equal"] = extra.empty() && missing.empty();
    Json hits = Json::array();
    for (const auto& h : r.hits) {
        Json x;
        x["s"] = h.s;
        x["t"] = h.t;
        Json co;
        co["a"] = {h.coeffs.a1.str(), h.coeffs.a2.str(), h.coeffs.a3.str()};
        co["b"] = {h.coeffs.b1.str(), h.coeffs.b2.str(), h.coeffs.b3.str()};
        co["d"] = {h.coeffs.d1.str(), h.coeffs.d2.str(), h.coeffs.d3.str()};
        co["e"] = {h.coeffs.e1.str(), h.coeffs.e2.str(), h.coeffs.e3.str()};
        x["coefficients"] = co;
        hits.push_back(x);
    }
    j["hits"] = hits;
    Json ex = Json::array();
    for (size_t i : extra) ex.push_back(i);
    j["extra_vs_classified"] = ex;
    Json mi = Json::array();
    for (size_t i : missing) mi.push_back(i);
    j["missing_vs_classified"] = mi;
    return j;
}

std::string cache_path(const AlgebraParams& p, const std::string& dir) {
    std::ostringstream os;
    os << dir << "/suzuki_tables_v" << kTablesFormatVersion << "_N" << p.N << "_n" << p.n << "_mu"
       << (p.mu > 0 ? "p" : "m") << "_la" << (p.lambda > 0 ? "p" : "m") << ".json";
    return os.str();
}

std::string save_tables_cache(const SuzukiAlgebra& alg, const std::string& dir) {
    std::filesystem::create_directories(dir);
    Json j = tables_json(alg);
    j["checksum"] = tables_checksum(alg);
    std::string path = cache_path(alg.params(), dir);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cache: cannot write " + path);
    out << j.dump(0) << "\n";
    return path;
}

std::optional<SuzukiAlgebra> load_tables_cache(const AlgebraParams& p, const std::string& dir) {
    std::string path = cache_path(p, dir);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Json j;
    try {
        in >> j;
        if (j.at("format_version").get<int>() != kTablesFormatVersion) return std::nullopt;
        AlgebraParams stored;
        stored.N = j.at("params").at("N").get<long>();
        stored.n = j.at("params").at("n").get<long>();
        stored.mu = j.at("params").at("mu").get<std::string>() == "+1" ? 1 : -1;
        stored.lambda = j.at("params").at("lambda").get<std::string>() == "+1" ? 1 : -1;
        if (!(stored == p)) return std::nullopt;

        SuzukiAlgebra alg;
        alg.params_ = p;
        alg.field_ = std::make_shared<CycField>(conductor_for(p.N));
        if (j.at("conductor").get<long>() != alg.field_->conductor()) return std::nullopt;
        const long d = p.dim();
        auto parse_elem = [&](const Json& coords) {
            Element e;
            for (const auto& pair : coords) {
                long rank = pair.at(0).get<long>();
                if (rank < 0 || rank >= d) throw std::runtime_error("cache: rank out of range");
                e.add_term(basis_from_rank(rank, p), alg.field_->parse(pair.at(1).get<std::string>()));
            }
            return e;
        };
        alg.unit_ = parse_elem(j.at("unit"));
        alg.mult_.assign(d, std::vector<Element>(d));
        for (const auto& triple : j.at("mult")) {
            long i = triple.at(0).get<long>();
            long k = triple.at(1).get<long>();
            if (i < 0 || i >= d || k < 0 || k >= d) throw std::runtime_error("cache: index out of range");
            alg.mult_[i][k] = parse_elem(triple.at(2));
        }
        if (j.at("checksum").get<std::string>() != tables_checksum(alg)) return std::nullopt;
        return alg;
    } catch (const std::exception&) {
        return std::nullopt;  // treat any malformed cache as a miss
    }
}

SuzukiAlgebra algebra_with_cache(const AlgebraParams& p, const std::string& dir) {
    if (dir.empty()) return SuzukiAlgebra(p);
    if (auto cached = load_tables_cache(p, dir)) return std::move(*cached);
    SuzukiAlgebra alg(p);
    save_tables_cache(alg, dir);
    return alg;
}

}  // namespace suzuki
