#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "suzuki/aut.hpp"

namespace suzuki {

using Json = nlohmann::ordered_json;

// All exports use canonical ordering (basis rank order, ascending indices,
// canonical coefficient texts), so equal inputs produce byte-equal JSON.

Json params_json(const AlgebraParams& p);
Json element_json(const SuzukiAlgebra& alg, const Element& e);
Json tensor_json(const SuzukiAlgebra& alg, const TensorElement& e);
Json linear_map_json(const SuzukiAlgebra& alg, const LinearMap& f);  // sparse columns

Json tables_json(const SuzukiAlgebra& alg);  // params, conductor, basis, unit, mult triples
Json axiom_report_json(const AxiomReport& rep);
Json morphism_report_json(const MorphismReport& rep);
Json grouplikes_json(const SuzukiAlgebra& alg, const GroupLikeReport& rep);
Json decompose_json(const SuzukiAlgebra& alg, const DecomposeReport& rep);
Json comodule_json(const SuzukiAlgebra& alg, const Comodule& cm);
Json twist_json(const SuzukiAlgebra& alg, const Comodule& source, const MorphismReport& psi_report,
                const std::optional<SupportTransport>& transport, const std::optional<Comodule>& twisted);
Json aut_list_json(const SuzukiAlgebra& alg, const AutEnumeration& e);
Json aut_table_json(const SuzukiAlgebra& alg, const AutEnumeration& e, const GroupTable& g,
                    const GroupInvariants& inv);
Json aut_search_json(const SuzukiAlgebra& alg, const AutEnumeration& e, const SearchResult& r,
                     const std::string& preset);

// Structure-table disk cache, keyed by params and validated by checksum
// and format version  on load. The cache is an optimization only: any
// mismatch falls back to a fresh build.
std::string cache_path(const AlgebraParams& p, const std::string& dir);
std::string save_tables_cache(const SuzukiAlgebra& alg, const std::string& dir);
std::optional<SuzukiAlgebra> load_tables_cache(const AlgebraParams& p, const std::string& dir);
SuzukiAlgebra algebra_with_cache(const AlgebraParams& p, const std::string& dir);

}  // namespace suzuki
