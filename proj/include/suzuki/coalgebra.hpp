#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "suzuki/hopf.hpp"

namespace suzuki {

struct GroupLike {
    std::string label;  // g_s^+, g_s^-, h_s^+, h_s^-
    long s = 1;
    int sign = 1;
    Element element;
    bool is_unit = false;  // element happens to equal 1
};

struct GroupLikeReport {
    std::vector<GroupLike> list;
    bool pairwise_distinct = true;
    std::vector<std::string> collisions;  // "label == label" pairs, if any
};

// The 4N listed group-likes g_s^± = x11^{2s} ± x12^{2s} and
// h_s^± = x11^{2s+1} chi22^{n-1} ± sqrt(lambda) x12^{2s+1} chi21^{n-1},
// s in 1..N. Each is verified against Delta g = g (x) g, eps(g) = 1 and
// g S(g) = 1; a verification failure is a table bug and throws.
GroupLikeReport group_likes(const SuzukiAlgebra& alg, const HopfTables& hopf);

struct SimpleSubcoalgebra {
    long s = 1;  // 1..N
    long t = 1;  // 1..n-1
    std::array<Element, 4> span;  // x11^{2s}chi11^t, x12^{2s}chi12^t, x11^{2s}chi22^t, x12^{2s}chi21^t
};

SimpleSubcoalgebra simple_subcoalgebra(const SuzukiAlgebra& alg, long s, long t);

// Delta(C_st) lies in C_st (x) C_st.
bool subcoalgebra_closed(const SuzukiAlgebra& alg, const HopfTables& hopf, const SimpleSubcoalgebra& c);

struct DecomposeReport {
    long dim = 0;
    long grouplike_count = 0;
    long coalgebra_count = 0;  // number of C_st blocks
    long span_rank = 0;        // rank of group-likes + all C_st spans together
    bool ok = false;           // span_rank == dim
};

// Checks span{G} + sum C_st has full rank 4Nn with the expected counts.
DecomposeReport decompose(const SuzukiAlgebra& alg, const HopfTables& hopf);

// Rank-2 left comodule with coaction rho(w_j) = sum_i c[i][j] (x) w_i.
struct Comodule {
    std::array<std::array<Element, 2>, 2> c;
    std::string name;
};

// Lambda_st: rho(w_1) = x11^{2s}chi11^t (x) w_1 + x12^{2s}chi12^t (x) w_2,
//            rho(w_2) = x12^{2s}chi21^t (x) w_1 + x11^{2s}chi22^t (x) w_2.
Comodule comodule_lambda(const SuzukiAlgebra& alg, long s, long t);

// Comodule axioms (Delta ox id)rho = (id ox rho)rho and (eps ox id)rho = id.
bool comodule_axioms_hold(const SuzukiAlgebra& alg, const HopfTables& hopf, const Comodule& cm,
                          std::string* why = nullptr);

struct Support {
    std::vector<Element> spanning;  // coaction entries (nonzero ones)
    long dimension = 0;
};

Support support(const SuzukiAlgebra& alg, const Comodule& cm);

// Exact span comparison helpers (fraction-free rank computations).
long span_rank(const SuzukiAlgebra& alg, const std::vector<Element>& vs);
bool spans_equal(const SuzukiAlgebra& alg, const std::vector<Element>& a, const std::vector<Element>& b);

// Which C_{s't'} a span equals, if any.
std::optional<std::pair<long, long>> match_subcoalgebra(const SuzukiAlgebra& alg,
                                                        const std::vector<Element>& span);

}  // namespace suzuki
