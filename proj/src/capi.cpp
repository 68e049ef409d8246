#include "suzuki.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "suzuki/json_export.hpp"
#include "suzuki/version.hpp"

using namespace suzuki;

struct suzuki_algebra {
    SuzukiAlgebra alg;
    HopfTables hopf;

    explicit suzuki_algebra(SuzukiAlgebra a) : alg(std::move(a)), hopf(alg) {}
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(SUZUKI_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(SUZUKI_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(SUZUKI_ERR_RUNTIME, e.what());
    }
}

int emit(char** json_out, const Json& payload) {
    if (json_out == nullptr) return fail(SUZUKI_ERR_INVALID_ARGUMENT, "json_out is null");
    char* s = dup_string(payload.dump(2));
    if (!s) return fail(SUZUKI_ERR_RUNTIME, "out of memory");
    *json_out = s;
    return SUZUKI_OK;
}

// "identity" or a family descriptor, as a verified-or-not linear map.
LinearMap map_from_text(const suzuki_algebra* a, const char* text) {
    std::string t = text ? text : "";
    if (t == "identity") return LinearMap::identity(a->alg);
    AutDescriptor d = AutDescriptor::parse(a->alg.field(), t);
    return make_map(a->alg, d);
}

}  // namespace

extern "C" {

const char* suzuki_version(void) { return kVersion; }

const char* suzuki_last_error(void) { return g_last_error.c_str(); }

void suzuki_string_free(char* s) { std::free(s); }

int suzuki_algebra_create(long N, long n, int mu, int lambda, suzuki_algebra** out) {
    return suzuki_algebra_create_cached(N, n, mu, lambda, nullptr, out);
}

int suzuki_algebra_create_cached(long N, long n, int mu, int lambda, const char* cache_dir,
                                 suzuki_algebra** out) {
    if (out == nullptr) return fail(SUZUKI_ERR_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    return guarded([&] {
        AlgebraParams p{N, n, mu, lambda};
        p.validate();
        std::string dir = cache_dir ? cache_dir : "";
        *out = new suzuki_algebra(algebra_with_cache(p, dir));
        return SUZUKI_OK;
    });
}

void suzuki_algebra_free(suzuki_algebra* a) { delete a; }

long suzuki_algebra_dim(const suzuki_algebra* a) { return a ? a->alg.dim() : 0; }

long suzuki_algebra_conductor(const suzuki_algebra* a) { return a ? a->alg.field().conductor() : 0; }

int suzuki_algebra_verify(const suzuki_algebra* a, char** json_out) {
    if (!a) return fail(SUZUKI_ERR_INVALID_ARGUMENT, "algebra is null");
    return guarded([&] { return emit(json_out, axiom_report_json(verify_hopf(a->alg, a->hopf))); });
}

int suzuki_algebra_export(const suzuki_algebra* a, char** json_out) {
    if (!a) return fail(SUZUKI_ERR_INVALID_ARGUMENT, "algebra is null");
    return guarded([&] {
        Json j = tables_json(a->alg);
        j["checksum"] = tables_checksum(a->alg);
        j["ok"] = true;
        return emit(json_out, j);
    });
}

int suzuki_grouplikes(const suzuki_algebra* a, char** json_out) {
    if (!a) return fail(SUZUKI_ERR_INVALID_ARGUMENT, "algebra is null");
    return guarded([&] { return emit(json_out, grouplikes_json(a->alg, group_likes(a->alg, a->hopf))); });
}

int suzuki_decompose(const suzuki_algebra* a, char** json_out) {
    if (!a) return fail(SUZUKI_ERR_INVALID_ARGUMENT, "algebra is null");
    return guarded([&] { return emit(json_out, decompose_json(a->alg, decompose(a->alg, a->hopf))); });
}

int suzuki_comodule_twist(const suzuki_algebra* a, long s, long t, const char* aut_descriptor,
                          char** json_out) {
    if (!a) return fail(SUZUKI_ERR_INVALID_ARGUMENT, "algebra is null");
    return guarded([&] {
        Comodule cm = comodule_lambda(a->alg, s, t);
        LinearMap psi = map_from_text(a, aut_descriptor);
        MorphismReport rep = verify_hopf_morphism(a->alg, a->hopf, psi);
        std::optional<SupportTransport> transport;
        std::optional<Comodule> twisted;
        if (rep.all_ok()) {
            transport = support_transport(a->alg, a->hopf, psi, cm);
            twisted = twist_comodule(psi, cm);
        }
        return emit(json_out, twist_json(a->alg, cm, rep, transport, twisted));
    });
}

int suzuki_aut_list(const suzuki_algebra* a, char** json_out) {
    if (!a) return fail(SUZUKI_ERR_INVALID_ARGUMENT, "algebra is null");
    return guarded([&] {
        return emit(json_out, aut_list_json(a->alg, enumerate_automorphisms(a->alg, a->hopf)));
    });
}

int suzuki_aut_verify(const suzuki_algebra* a, const char* aut_descriptor, char** json_out) {
    if (!a) return fail(SUZUKI_ERR_INVALID_ARGUMENT, "algebra is null");
    return guarded([&] {
        LinearMap f = map_from_text(a, aut_descriptor);
        return emit(json_out, morphism_report_json(verify_hopf_morphism(a->alg, a->hopf, f)));
    });
}

int suzuki_aut_table(const suzuki_algebra* a, char** json_out) {
    if (!a) return fail(SUZUKI_ERR_INVALID_ARGUMENT, "algebra is null");
    return guarded([&] {
        AutEnumeration e = enumerate_automorphisms(a->alg, a->hopf);
        GroupTable g = group_table(a->alg, e.verified_maps);
        GroupInvariants inv = group_invariants(g);
        std::vector<Discrepancy> closure = closure_discrepancies(a->alg, a->hopf, e, g);
        e.discrepancies.insert(e.discrepancies.end(), closure.begin(), closure.end());
        return emit(json_out, aut_table_json(a->alg, e, g, inv));
    });
}

int suzuki_aut_search(const suzuki_algebra* a, const char* grid_preset, char** json_out) {
    if (!a) return fail(SUZUKI_ERR_INVALID_ARGUMENT, "algebra is null");
    return guarded([&] {
        std::string preset = (grid_preset && *grid_preset) ? grid_preset : "default";
        std::vector<CycNumber> grid = search_grid(a->alg, preset);
        SearchResult r = exhaustive_search(a->alg, a->hopf, grid);
        AutEnumeration e = enumerate_automorphisms(a->alg, a->hopf);
        return emit(json_out, aut_search_json(a->alg, e, r, preset));
    });
}

}  // extern "C"
