#include "suzuki/aut.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace suzuki {

namespace {

Word power_word(Gen g, long e) { return Word(e, g); }

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t p = text.find(sep, start);
        if (p == std::string_view::npos) {
            out.emplace_back(text.substr(start));
            break;
        }
        out.emplace_back(text.substr(start, p - start));
        start = p + 1;
    }
    return out;
}

long parse_long(const std::string& s) {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("descriptor: bad integer '" + s + "'");
    return v;
}

int parse_sign(const std::string& s) {
    if (s == "+1" || s == "1") return 1;
    if (s == "-1") return -1;
    throw std::invalid_argument("descriptor: bad sign '" + s + "'");
}

}  // namespace

std::string AutDescriptor::str() const {
    std::ostringstream os;
    switch (variant) {
        case AutVariant::Psi:
            os << "psi:" << s << ":" << t << ":" << xi.str();
            break;
        case AutVariant::Phi:
            os << "phi:" << s << ":" << t << ":" << xi.str();
            break;
        case AutVariant::Gamma:
            os << "gamma:" << (theta1 > 0 ? "+1" : "-1") << ":" << (theta2 > 0 ? "+1" : "-1") << ":" << s;
            break;
    }
    return os.str();
}

AutDescriptor AutDescriptor::parse(const CycField& f, std::string_view text) {
    auto parts = split(text, ':');
    if (parts.empty()) throw std::invalid_argument("descriptor: empty");
    AutDescriptor d;
    if (parts[0] == "psi" || parts[0] == "phi") {
        if (parts.size() != 4) throw std::invalid_argument("descriptor: want psi:<s>:<t>:<xi>");
        d.variant = (parts[0] == "psi") ? AutVariant::Psi : AutVariant::Phi;
        d.s = parse_long(parts[1]);
        d.t = parse_long(parts[2]);
        d.xi = f.parse(parts[3]);
    } else if (parts[0] == "gamma") {
        if (parts.size() != 4) throw std::invalid_argument("descriptor: want gamma:<theta1>:<theta2>:<s>");
        d.variant = AutVariant::Gamma;
        d.theta1 = parse_sign(parts[1]);
        d.theta2 = parse_sign(parts[2]);
        d.s = parse_long(parts[3]);
        d.t = 1;
        d.xi = f.one();
    } else {
        throw std::invalid_argument("descriptor: unknown family '" + parts[0] + "'");
    }
    return d;
}

GeneratorImages family_images(const SuzukiAlgebra& alg, const AutDescriptor& d) {
    const AlgebraParams& p = alg.params();
    const CycField& f = alg.field();
    if (d.s < 1 || d.s > p.N) throw std::invalid_argument("family_images: s out of range 1..N");
    if (d.t < 1 || d.t > p.n - 1) throw std::invalid_argument("family_images: t out of range 1..n-1");

    const Element e11 = alg.normalize(concat(power_word(Gen::X11, 2 * d.s), chi_word(1, 1, d.t)));
    const Element e22 = alg.normalize(concat(power_word(Gen::X11, 2 * d.s), chi_word(2, 2, d.t)));
    const Element o12 = alg.normalize(concat(power_word(Gen::X12, 2 * d.s), chi_word(1, 2, d.t)));
    const Element o21 = alg.normalize(concat(power_word(Gen::X12, 2 * d.s), chi_word(2, 1, d.t)));

    GeneratorImages img;
    switch (d.variant) {
        case AutVariant::Psi:
            if (d.xi.is_zero()) throw std::invalid_argument("family_images: xi must be nonzero");
            img.x11 = e11;
            img.x22 = e22;
            img.x12 = o12.scaled(d.xi);
            img.x21 = o21.scaled(d.xi.inverse());
            break;
        case AutVariant::Phi:
            if (d.xi.is_zero()) throw std::invalid_argument("family_images: xi must be nonzero");
            img.x11 = e22;
            img.x22 = e11;
            img.x12 = o21.scaled(d.xi);
            img.x21 = o12.scaled(d.xi.inverse());
            break;
        case AutVariant::Gamma: {
            if (d.theta1 * d.theta1 != 1 || d.theta2 * d.theta2 != 1)
                throw std::invalid_argument("family_images: theta must be +1 or -1");
            const CycNumber half = f.half();
            const CycNumber th1 = f.from_long(d.theta1);
            const CycNumber th2 = f.from_long(d.theta2);
            Element diag_sum = e11 + e22, diag_diff = e11 - e22;
            Element off_sum = o12 + o21, off_diff = o12 - o21;
            img.x11 = diag_sum.scaled(half) + off_sum.scaled(half * th2);
            img.x22 = diag_sum.scaled(half) - off_sum.scaled(half * th2);
            img.x12 = diag_diff.scaled(half * th1) - off_diff.scaled(half * th1 * th2);
            img.x21 = diag_diff.scaled(half * th1) + off_diff.scaled(half * th1 * th2);
            break;
        }
    }
    return img;
}

LinearMap make_map(const SuzukiAlgebra& alg, const AutDescriptor& d) {
    return from_generator_images(alg, family_images(alg, d)).first;
}

LinearMap make_psi(const SuzukiAlgebra& alg, long s, long t, const CycNumber& xi) {
    return make_map(alg, AutDescriptor{AutVariant::Psi, s, t, xi, 1, 1});
}

LinearMap make_phi(const SuzukiAlgebra& alg, long s, long t, const CycNumber& xi) {
    return make_map(alg, AutDescriptor{AutVariant::Phi, s, t, xi, 1, 1});
}

LinearMap make_gamma(const SuzukiAlgebra& alg, int theta1, int theta2, long s) {
    AutDescriptor d;
    d.variant = AutVariant::Gamma;
    d.s = s;
    d.t = 1;
    d.xi = alg.field().one();
    d.theta1 = theta1;
    d.theta2 = theta2;
    return make_map(alg, d);
}

bool conditions_hold(const AutDescriptor& d, const AlgebraParams& p, const CycField& f) {
    (void)f;
    if (d.variant == AutVariant::Gamma) {
        return p.n == 2 && p.mu == 1 && p.lambda == 1 && d.s >= 1 && d.s <= p.N &&
               std::gcd(2 * d.s + 1, p.N) == 1 && (d.theta1 == 1 || d.theta1 == -1) &&
               (d.theta2 == 1 || d.theta2 == -1);
    }
    if (d.s < 1 || d.s > p.N) return false;
    if (d.t < 1 || d.t > p.n - 1) return false;
    if (d.t % 2 == 0) return false;
    if (d.xi.is_zero()) return false;
    const bool xi_2N = d.xi.pow(2 * p.N).is_one();
    if (2 * d.t != p.n) {
        const bool xi_ok = (p.n % 2 == 0) ? xi_2N : d.xi.pow(2).is_one();
        return xi_ok && std::gcd(2 * d.s + d.t, p.N) == 1;
    }
    return d.t == 1 && xi_2N && std::gcd(2 * d.s + 1, p.N) == 1;
}

ResidualVector residuals(const AnsatzCoefficients& c, const AlgebraParams& p, const CycField& f) {
    ResidualVector rv;
    const CycNumber one = f.one();
    const CycNumber two = f.from_long(2);
    const CycNumber lam = f.from_long(p.lambda);
    const bool odd = (c.t % 2 == 1);
    const bool half = (2 * c.t == p.n);
    {
        std::ostringstream os;
        os << "t " << (odd ? "odd" : "even") << ", t " << (half ? "=" : "!=") << " n/2";
        if (p.n % 2 == 1) os << " (t = n/2 unreachable: n odd)";
        rv.case_note = os.str();
    }
    auto add = [&rv](const std::string& label, const CycNumber& v) { rv.clauses.push_back({label, v}); };
    auto sq = [](const CycNumber& x) { return x * x; };

    if (odd) {
        add("eq1.1", (c.a1 - c.b1) * (one - c.a1 - c.b1));
        add("eq1.2", sq(c.a2) + sq(c.a3) - sq(c.b2) - sq(c.b3));
        if (!half) add("eq1.3", c.a2 * c.a3 - c.b2 * c.b3);
        else add("eq1.3", (one + lam) * (c.a2 * c.a3 - c.b2 * c.b3));

        add("eq2.1", sq(c.d1) - sq(c.e1));
        add("eq2.2", sq(c.d2) + sq(c.d3) - sq(c.e2) - sq(c.e3));
        if (!half) add("eq2.3", c.d2 * c.d3 - c.e2 * c.e3);
        else add("eq2.3", (one + lam) * (c.d2 * c.d3 - c.e2 * c.e3));

        add("eq3.1", (one - two * c.a1) * c.d1);
        add("eq3.2", c.a2 * c.d2 + c.a3 * c.d3);
        if (!half) {
            add("eq3.3", c.d1);
            add("eq3.4", c.a2 * c.d3);
            add("eq3.5", c.a3 * c.d2);
        } else {
            add("eq3.3", c.a2 * c.d3 + lam * c.a3 * c.d2);
        }

        add("eq4.1", (one - two * c.b1) * c.d1);
        add("eq4.2", c.b2 * c.d2 + c.b3 * c.d3);
        if (!half) {
            add("eq4.3", c.d1);
            add("eq4.4", c.b2 * c.d3);
            add("eq4.5", c.b3 * c.d2);
        } else {
            add("eq4.3", c.b2 * c.d3 + lam * c.b3 * c.d2);
        }

        add("eq5.1", (one - two * c.a1) * c.e1);
        add("eq5.2", c.a2 * c.e2 + c.a3 * c.e3);
        if (!half) {
            add("eq5.3", c.e1);
            add("eq5.4", c.a2 * c.e3);
            add("eq5.5", c.a3 * c.e2);
        } else {
            add("eq5.3", c.a2 * c.e3 + lam * c.a3 * c.e2);
        }

        add("eq6.1", (one - two * c.b1) * c.e1);
        add("eq6.2", c.b2 * c.e2 + c.b3 * c.e3);
        if (!half) {
            add("eq6.3", c.e1);
            add("eq6.4", c.b2 * c.e3);
            add("eq6.5", c.b3 * c.e2);
        } else {
            add("eq6.3", c.b2 * c.e3 + lam * c.b3 * c.e2);
        }
    } else {
        add("eq7.1", (c.a1 - c.b1) * (one - c.a1 - c.b1));
        add("eq7.2", c.a2 * c.a3 - c.b2 * c.b3);
        if (!half) {
            add("eq7.3", c.a1 - c.b1);
            add("eq7.4", sq(c.a2) - sq(c.b2));
            add("eq7.5", sq(c.a3) - sq(c.b3));
        } else {
            add("eq7.3", sq(c.a2) + lam * sq(c.a3) - sq(c.b2) - lam * sq(c.b3));
        }

        add("eq8.1", sq(c.d1) - sq(c.e1));
        add("eq8.2", c.d2 * c.d3 - c.e2 * c.e3);
        if (!half) {
            add("eq8.3", sq(c.d2) - sq(c.e2));
            add("eq8.4", sq(c.d3) - sq(c.e3));
        } else {
            add("eq8.3", sq(c.d2) + lam * sq(c.d3) - sq(c.e2) - lam * sq(c.e3));
        }

        add("eq9.1", (one - two * c.a1) * c.d1);
        add("eq9.2", c.a2 * c.d3 + c.a3 * c.d2);
        if (!half) {
            add("eq9.3", c.d1);
            add("eq9.4", c.a2 * c.d2);
            add("eq9.5", c.a3 * c.d3);
        } else {
            add("eq9.3", c.a2 * c.d2 + lam * c.a3 * c.d3);
        }

        add("eq10.1", (one - two * c.b1) * c.d1);
        add("eq10.2", c.b2 * c.d3 + c.b3 * c.d2);
        if (!half) {
            add("eq10.3", c.d1);
            add("eq10.4", c.b2 * c.d2);
            add("eq10.5", c.b3 * c.d3);
        } else {
            add("eq10.3", c.b2 * c.d2 + lam * c.b3 * c.d3);
        }

        add("eq11.1", (one - two * c.a1) * c.e1);
        add("eq11.2", c.a2 * c.e3 + c.a3 * c.e2);
        if (!half) {
            add("eq11.3", c.e1);
            add("eq11.4", c.a2 * c.e2);
            add("eq11.5", c.a3 * c.e3);
        } else {
            add("eq11.3", c.a2 * c.e2 + lam * c.a3 * c.e3);
        }

        add("eq12.1", (one - two * c.b1) * c.e1);
        add("eq12.2", c.b2 * c.e3 + c.b3 * c.e2);
        if (!half) {
            add("eq12.3", c.e1);
            add("eq12.4", c.b2 * c.e2);
            add("eq12.5", c.b3 * c.e3);
        } else {
            add("eq12.3", c.b2 * c.e2 + lam * c.b3 * c.e3);
        }
    }

    add("eq13.1", sq(c.a1) + c.d1 * c.e1 - c.a1);
    add("eq13.2", c.a2 * c.a1 + c.d2 * c.e1);
    add("eq13.3", c.a1 * c.a2 + c.d1 * c.e2 - c.a2);
    add("eq13.4", sq(c.a2) + c.d2 * c.e2);
    add("eq13.5", c.a1 * c.a3 + c.d1 * c.e3);
    add("eq13.6", c.a2 * c.a3 + c.d2 * c.e3 - c.a1);
    add("eq13.7", c.a3 * c.a1 + c.d3 * c.e1 - c.a3);
    add("eq13.8", c.a3 * c.a2 + c.d3 * c.e2 - (one - c.a1));
    add("eq13.9", sq(c.a3) + c.d3 * c.e3);

    add("eq14.1", c.a1 * c.d1 + c.d1 * c.b1 - c.d1);
    add("eq14.2", c.a1 * c.d2 + c.d1 * c.b2 - c.d2);
    add("eq14.3", c.a1 * c.d3 + c.d1 * c.b3);
    add("eq14.4", c.a2 * c.d1 + c.d2 * c.b1);
    add("eq14.5", c.a2 * c.d2 + c.d2 * c.b2);
    add("eq14.6", c.a2 * c.d3 + c.d2 * c.b3 - c.d1);
    add("eq14.7", c.a3 * c.d1 + c.d3 * c.b1 - c.d3);
    add("eq14.8", c.a3 * c.d2 + c.d3 * c.b2 + c.d1);
    add("eq14.9", c.a3 * c.d3 + c.d3 * c.b3);

    return rv;
}

namespace {

struct SpanSlots {
    BasisIndex b[4];
    CycNumber coeff[4];
};

SpanSlots span_slots(const SuzukiAlgebra& alg, long s, long t) {
    SimpleSubcoalgebra c = simple_subcoalgebra(alg, s, t);
    SpanSlots out;
    for (int i = 0; i < 4; ++i) {
        if (c.span[i].term_count() != 1)
            throw std::logic_error("span_slots: span element is not a monomial");
        const auto& [b, coef] = *c.span[i].terms().begin();
        out.b[i] = b;
        out.coeff[i] = coef;
    }
    return out;
}

// Coordinates of an element in the C_st span; nullopt if it sticks out.
std::optional<std::array<CycNumber, 4>> span_coords(const SuzukiAlgebra& alg, const SpanSlots& slots,
                                                    const Element& v) {
    const CycField& f = alg.field();
    std::array<CycNumber, 4> out{f.zero(), f.zero(), f.zero(), f.zero()};
    for (const auto& [b, coef] : v.terms()) {
        int slot = -1;
        for (int i = 0; i < 4; ++i) {
            if (slots.b[i] == b) {
                slot = i;
                break;
            }
        }
        if (slot < 0) return std::nullopt;
        out[slot] = coef / slots.coeff[slot];
    }
    return out;
}

}  // namespace

std::optional<AnsatzCoefficients> extract_ansatz(const SuzukiAlgebra& alg, const LinearMap& f, long s,
                                                 long t) {
    const CycField& fld = alg.field();
    const CycNumber one = fld.one();
    SpanSlots slots = span_slots(alg, s, t);

    // Slot order: 0 = x11^{2s}chi11^t, 1 = x12^{2s}chi12^t,
    //             2 = x11^{2s}chi22^t, 3 = x12^{2s}chi21^t.
    auto c11 = span_coords(alg, slots, f.apply(alg.generator(Gen::X11)));
    auto c22 = span_coords(alg, slots, f.apply(alg.generator(Gen::X22)));
    auto c12 = span_coords(alg, slots, f.apply(alg.generator(Gen::X12)));
    auto c21 = span_coords(alg, slots, f.apply(alg.generator(Gen::X21)));
    if (!c11 || !c22 || !c12 || !c21) return std::nullopt;

    AnsatzCoefficients ac;
    ac.s = s;
    ac.t = t;
    ac.a1 = (*c11)[0];
    ac.a2 = (*c11)[1];
    ac.a3 = (*c11)[3];
    if ((*c11)[2] != one - ac.a1) return std::nullopt;
    ac.b1 = (*c22)[0];
    ac.b2 = (*c22)[1];
    ac.b3 = (*c22)[3];
    if ((*c22)[2] != one - ac.b1) return std::nullopt;
    ac.d1 = (*c12)[0];
    ac.d2 = (*c12)[1];
    ac.d3 = (*c12)[3];
    if ((*c12)[2] != -ac.d1) return std::nullopt;
    ac.e1 = (*c21)[0];
    ac.e2 = (*c21)[1];
    ac.e3 = (*c21)[3];
    if ((*c21)[2] != -ac.e1) return std::nullopt;
    return ac;
}

std::optional<std::pair<long, long>> detect_ansatz_st(const SuzukiAlgebra& alg, const LinearMap& f) {
    const AlgebraParams& p = alg.params();
    Element img = f.apply(alg.generator(Gen::X11));
    for (long s = 1; s <= p.N; ++s) {
        for (long t = 1; t <= p.n - 1; ++t) {
            SpanSlots slots = span_slots(alg, s, t);
            bool inside = !img.is_zero();
            for (const auto& [b, coef] : img.terms()) {
                bool hit = false;
                for (int i = 0; i < 4; ++i) hit = hit || (slots.b[i] == b);
                inside = inside && hit;
            }
            if (inside) return std::make_pair(s, t);
        }
    }
    return std::nullopt;
}

AutEnumeration enumerate_automorphisms(const SuzukiAlgebra& alg, const HopfTables& hopf) {
    const AlgebraParams& p = alg.params();
    const CycField& f = alg.field();
    AutEnumeration out;
    std::map<std::string, long> seen;

    auto process = [&](const AutDescriptor& d) {
        CandidateOutcome co;
        co.desc = d;
        co.conditions = conditions_hold(d, p, f);
        auto [map, wd] = from_generator_images(alg, family_images(alg, d));
        co.wd = wd;
        co.report = verify_hopf_morphism(alg, hopf, map);
        co.verified = wd.ok && co.report.all_ok();
        if (!wd.ok) co.first_failure = "relation: " + wd.violated_relation;
        else if (!co.report.all_ok()) co.first_failure = co.report.first_failure();
        if (co.verified) {
            std::string key = map.canonical_key();
            auto it = seen.find(key);
            if (it == seen.end()) {
                co.element_index = static_cast<long>(out.verified_maps.size());
                seen.emplace(key, co.element_index);
                out.verified_maps.push_back(std::move(map));
                out.aliases.emplace_back();
            } else {
                co.element_index = it->second;
            }
            out.aliases[co.element_index].push_back(static_cast<long>(out.candidates.size()));
        }
        if (co.conditions) ++out.classified_count;
        if (co.conditions && !co.verified)
            out.discrepancies.push_back({"conditions_pass_verification_fails", d.str(), co.first_failure});
        if (!co.conditions && co.verified)
            out.discrepancies.push_back({"verified_outside_conditions", d.str(), "verified automorphism not covered by the stated side conditions"});
        out.candidates.push_back(std::move(co));
    };

    const std::vector<CycNumber> roots = f.enumerate_roots(2 * p.N);
    for (AutVariant variant : {AutVariant::Psi, AutVariant::Phi}) {
        for (long s = 1; s <= p.N; ++s) {
            for (long t = 1; t <= p.n - 1; ++t) {
                for (const CycNumber& xi : roots) {
                    AutDescriptor d;
                    d.variant = variant;
                    d.s = s;
                    d.t = t;
                    d.xi = xi;
                    process(d);
                }
            }
        }
    }
    if (p.n == 2) {
        for (int theta1 : {+1, -1}) {
            for (int theta2 : {+1, -1}) {
                for (long s = 1; s <= p.N; ++s) {
                    AutDescriptor d;
                    d.variant = AutVariant::Gamma;
                    d.s = s;
                    d.t = 1;
                    d.xi = f.one();
                    d.theta1 = theta1;
                    d.theta2 = theta2;
                    process(d);
                }
            }
        }
    }

    for (long t = 1; t <= p.n - 1; ++t) {
        XiSummary xs;
        xs.t = t;
        std::set<std::string> stated, verified;
        for (const auto& co : out.candidates) {
            if (co.desc.variant == AutVariant::Gamma || co.desc.t != t) continue;
            if (co.conditions) stated.insert(co.desc.xi.str());
            if (co.verified) verified.insert(co.desc.xi.str());
        }
        xs.stated.assign(stated.begin(), stated.end());
        xs.verified.assign(verified.begin(), verified.end());
        out.xi_summaries.push_back(std::move(xs));
    }
    return out;
}

GroupTable group_table(const SuzukiAlgebra& alg, const std::vector<LinearMap>& maps) {
    GroupTable g;
    g.elements = maps;
    g.order = static_cast<long>(maps.size());
    if (g.order == 0) {
        g.failure = "empty map set";
        return g;
    }
    std::map<std::string, long> index;
    for (long i = 0; i < g.order; ++i) {
        auto [it, fresh] = index.emplace(maps[i].canonical_key(), i);
        if (!fresh) {
            g.failure = "duplicate elements in input set";
            return g;
        }
    }
    g.closed = true;
    g.table.assign(g.order, std::vector<long>(g.order, -1));
    for (long i = 0; i < g.order; ++i) {
        for (long j = 0; j < g.order; ++j) {
            LinearMap comp = maps[i].compose(maps[j]);
            auto it = index.find(comp.canonical_key());
            if (it == index.end()) {
                g.closed = false;
                if (g.failure.empty()) {
                    g.failure = "composite of element " + std::to_string(i) + " and element " +
                                std::to_string(j) + " is not in the set";
                }
            } else {
                g.table[i][j] = it->second;
            }
        }
    }
    auto id_it = index.find(LinearMap::identity(alg).canonical_key());
    if (id_it == index.end()) {
        g.closed = false;
        if (g.failure.empty()) g.failure = "identity map is not in the set";
    } else {
        g.identity_index = id_it->second;
    }
    g.inverse_of.assign(g.order, -1);
    if (g.closed) {
        for (long i = 0; i < g.order; ++i) {
            for (long j = 0; j < g.order; ++j) {
                if (g.table[i][j] == g.identity_index && g.table[j][i] == g.identity_index) {
                    g.inverse_of[i] = j;
                    break;
                }
            }
            if (g.inverse_of[i] < 0) {
                g.closed = false;
                if (g.failure.empty())
                    g.failure = "element " + std::to_string(i) + " has no inverse in the set";
            }
        }
    }
    return g;
}

std::vector<Discrepancy> closure_discrepancies(const SuzukiAlgebra& alg, const HopfTables& hopf,
                                               const AutEnumeration& e, const GroupTable& g) {
    std::vector<Discrepancy> out;
    if (g.closed || g.order == 0) return out;
    const size_t cap = 8;
    for (long i = 0; i < g.order && out.size() < cap; ++i) {
        for (long j = 0; j < g.order && out.size() < cap; ++j) {
            if (g.table[i][j] >= 0) continue;
            LinearMap comp = g.elements[i].compose(g.elements[j]);
            std::ostringstream detail;
            detail << "composite verifies=" << verify_hopf_morphism(alg, hopf, comp).all_ok();
            if (auto st = detect_ansatz_st(alg, comp)) {
                detail << "; support C_{" << st->first << "," << st->second << "}";
                if (auto ac = extract_ansatz(alg, comp, st->first, st->second)) {
                    detail << "; ansatz a=(" << ac->a1.str() << "," << ac->a2.str() << "," << ac->a3.str()
                           << ") b=(" << ac->b1.str() << "," << ac->b2.str() << "," << ac->b3.str()
                           << ") d=(" << ac->d1.str() << "," << ac->d2.str() << "," << ac->d3.str()
                           << ") e=(" << ac->e1.str() << "," << ac->e2.str() << "," << ac->e3.str() << ")";
                }
            } else {
                detail << "; x11-image outside every C_st";
            }
            std::string left = "element " + std::to_string(i);
            std::string right = "element " + std::to_string(j);
            if (i < static_cast<long>(e.aliases.size()) && !e.aliases[i].empty())
                left = e.candidates[e.aliases[i][0]].desc.str();
            if (j < static_cast<long>(e.aliases.size()) && !e.aliases[j].empty())
                right = e.candidates[e.aliases[j][0]].desc.str();
            out.push_back({"closure_failure", left + " o " + right, detail.str()});
        }
    }
    return out;
}

namespace {

struct CatalogEntry {
    long order;
    bool abelian;
    std::vector<long> element_orders;
    long center;
    long squares;
    const char* name;
};

std::vector<long> rep(std::initializer_list<std::pair<long, long>> counts) {
    std::vector<long> out;
    for (auto [value, count] : counts)
        for (long i = 0; i < count; ++i) out.push_back(value);
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {1, true, rep({{1, 1}}), 1, 1, "Z1"},
        {2, true, rep({{1, 1}, {2, 1}}), 2, 1, "Z2"},
        {3, true, rep({{1, 1}, {3, 2}}), 3, 3, "Z3"},
        {4, true, rep({{1, 1}, {2, 1}, {4, 2}}), 4, 2, "Z4"},
        {4, true, rep({{1, 1}, {2, 3}}), 4, 1, "Z2xZ2"},
        {5, true, rep({{1, 1}, {5, 4}}), 5, 5, "Z5"},
        {6, true, rep({{1, 1}, {2, 1}, {3, 2}, {6, 2}}), 6, 3, "Z6"},
        {6, false, rep({{1, 1}, {2, 3}, {3, 2}}), 1, 3, "S3"},
        {7, true, rep({{1, 1}, {7, 6}}), 7, 7, "Z7"},
        {8, true, rep({{1, 1}, {2, 1}, {4, 2}, {8, 4}}), 8, 4, "Z8"},
        {8, true, rep({{1, 1}, {2, 3}, {4, 4}}), 8, 2, "Z4xZ2"},
        {8, true, rep({{1, 1}, {2, 7}}), 8, 1, "Z2^3"},
        {8, false, rep({{1, 1}, {2, 5}, {4, 2}}), 2, 2, "D4"},
        {8, false, rep({{1, 1}, {2, 1}, {4, 6}}), 2, 2, "Q8"},
        {9, true, rep({{1, 1}, {3, 2}, {9, 6}}), 9, 9, "Z9"},
        {9, true, rep({{1, 1}, {3, 8}}), 9, 9, "Z3xZ3"},
        {10, true, rep({{1, 1}, {2, 1}, {5, 4}, {10, 4}}), 10, 5, "Z10"},
        {10, false, rep({{1, 1}, {2, 5}, {5, 4}}), 1, 5, "D5"},
        {11, true, rep({{1, 1}, {11, 10}}), 11, 11, "Z11"},
        {12, true, rep({{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}), 12, 6, "Z12"},
        {12, true, rep({{1, 1}, {2, 3}, {3, 2}, {6, 6}}), 12, 3, "Z6xZ2"},
        {12, false, rep({{1, 1}, {2, 3}, {3, 8}}), 1, 9, "A4"},
        {12, false, rep({{1, 1}, {2, 7}, {3, 2}, {6, 2}}), 2, 3, "D6"},
        {12, false, rep({{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}), 2, 4, "Dic3"},
        {13, true, rep({{1, 1}, {13, 12}}), 13, 13, "Z13"},
        {14, true, rep({{1, 1}, {2, 1}, {7, 6}, {14, 6}}), 14, 7, "Z14"},
        {14, false, rep({{1, 1}, {2, 7}, {7, 6}}), 1, 7, "D7"},
        {15, true, rep({{1, 1}, {3, 2}, {5, 4}, {15, 8}}), 15, 15, "Z15"},
        {16, true, rep({{1, 1}, {2, 1}, {4, 2}, {8, 4}, {16, 8}}), 16, 8, "Z16"},
        {16, true, rep({{1, 1}, {2, 3}, {4, 4}, {8, 8}}), 16, 4, "Z8xZ2"},
        {16, true, rep({{1, 1}, {2, 3}, {4, 12}}), 16, 4, "Z4xZ4"},
        {16, true, rep({{1, 1}, {2, 7}, {4, 8}}), 16, 2, "Z4xZ2xZ2"},
        {16, true, rep({{1, 1}, {2, 15}}), 16, 1, "Z2^4"},
        {16, false, rep({{1, 1}, {2, 9}, {4, 2}, {8, 4}}), 2, 4, "D8"},
        {16, false, rep({{1, 1}, {2, 5}, {4, 6}, {8, 4}}), 2, 4, "SD16"},
        {16, false, rep({{1, 1}, {2, 1}, {4, 10}, {8, 4}}), 2, 4, "Q16"},
        {16, false, rep({{1, 1}, {2, 3}, {4, 4}, {8, 8}}), 4, 4, "M4(2)"},
        {16, false, rep({{1, 1}, {2, 11}, {4, 4}}), 4, 2, "D4xZ2"},
        {16, false, rep({{1, 1}, {2, 3}, {4, 12}}), 4, 2, "Q8xZ2"},
        {16, false, rep({{1, 1}, {2, 3}, {4, 12}}), 4, 4, "Z4:Z4"},
        {16, false, rep({{1, 1}, {2, 7}, {4, 8}}), 4, 3, "(Z2xZ2):Z4"},
        {16, false, rep({{1, 1}, {2, 7}, {4, 8}}), 4, 2, "C4oD4"},
    };
    return entries;
}

}  // namespace

GroupInvariants group_invariants(const GroupTable& g) {
    GroupInvariants inv;
    inv.order = g.order;
    if (!g.closed || g.order == 0) return inv;

    inv.abelian = true;
    for (long i = 0; i < g.order && inv.abelian; ++i)
        for (long j = 0; j < g.order; ++j)
            if (g.table[i][j] != g.table[j][i]) {
                inv.abelian = false;
                break;
            }

    for (long i = 0; i < g.order; ++i) {
        long p = i, k = 1;
        while (p != g.identity_index) {
            p = g.table[p][i];
            ++k;
            if (k > g.order) throw std::logic_error("group_invariants: order computation diverged");
        }
        inv.element_orders.push_back(k);
    }
    std::sort(inv.element_orders.begin(), inv.element_orders.end());

    for (long i = 0; i < g.order; ++i) {
        bool central = true;
        for (long j = 0; j < g.order && central; ++j) central = (g.table[i][j] == g.table[j][i]);
        if (central) ++inv.center_size;
    }

    std::set<long> squares;
    for (long i = 0; i < g.order; ++i) squares.insert(g.table[i][i]);
    inv.squares_count = static_cast<long>(squares.size());

    if (inv.order <= 16) {
        std::vector<const char*> matches;
        for (const auto& e : catalog()) {
            if (e.order == inv.order && e.abelian == inv.abelian && e.center == inv.center_size &&
                e.squares == inv.squares_count && e.element_orders == inv.element_orders)
                matches.push_back(e.name);
        }
        if (matches.size() == 1) inv.identification = matches[0];
        else if (!matches.empty()) {
            std::string joined;
            for (const char* m : matches) {
                if (!joined.empty()) joined += "|";
                joined += m;
            }
            inv.identification = joined;
        }
    }
    return inv;
}

std::vector<CycNumber> search_grid(const SuzukiAlgebra& alg, const std::string& preset) {
    const CycField& f = alg.field();
    const AlgebraParams& p = alg.params();
    // The largest root-of-unity subgroup of the field relevant to the
    // ansatz: G_{4N} intersected with the roots available in Q(zeta_M).
    const long g = std::gcd(4 * p.N, f.conductor());

    std::vector<CycNumber> out;
    auto push = [&out](const CycNumber& v) {
        for (const auto& u : out)
            if (u == v) return;
        out.push_back(v);
    };

    const bool rationals = (preset == "default" || preset == "rationals");
    const bool roots = (preset == "default" || preset == "roots");
    if (!rationals && !roots) throw std::invalid_argument("search_grid: unknown preset '" + preset + "'");

    push(f.zero());
    if (rationals) {
        push(f.one());
        push(-f.one());
        push(f.half());
        push(-f.half());
    }
    if (roots) {
        const CycNumber z = f.root_of_unity(g);
        CycNumber pw = f.one();
        for (long j = 0; j < g; ++j) {
            push(pw);
            push(pw * f.half());
            pw *= z;
        }
    }
    return out;
}

SearchResult exhaustive_search(const SuzukiAlgebra& alg, const HopfTables& hopf,
                               const std::vector<CycNumber>& grid) {
    const AlgebraParams& p = alg.params();
    const CycField& f = alg.field();
    const CycNumber zero = f.zero(), one = f.one(), two = f.from_long(2);

    SearchResult res;
    std::map<std::string, size_t> seen;

    for (long s = 1; s <= p.N; ++s) {
        for (long t = 1; t <= p.n - 1; ++t) {
            const bool half_case = (2 * t == p.n);
            SimpleSubcoalgebra span = simple_subcoalgebra(alg, s, t);
            const Element& w11 = span.span[0];
            const Element& w12 = span.span[1];
            const Element& w22 = span.span[2];
            const Element& w21 = span.span[3];

            for (const CycNumber& a1 : grid) {
                for (const CycNumber& d1 : grid) {
                    if (!half_case && !d1.is_zero()) continue;
                    if (!((one - two * a1) * d1).is_zero()) continue;
                    for (const CycNumber& e1 : grid) {
                        if (!half_case && !e1.is_zero()) continue;
                        if (!((one - two * a1) * e1).is_zero()) continue;
                        if (d1 * d1 != e1 * e1) continue;
                        if (a1 * a1 + d1 * e1 != a1) continue;
                        for (const CycNumber& a2 : grid) {
                            for (const CycNumber& d2 : grid) {
                                if (a2 * a1 + d2 * e1 != zero) continue;
                                for (const CycNumber& e2 : grid) {
                                    if (a1 * a2 + d1 * e2 != a2) continue;
                                    if (a2 * a2 + d2 * e2 != zero) continue;
                                    for (const CycNumber& a3 : grid) {
                                        for (const CycNumber& d3 : grid) {
                                            if (a3 * a1 + d3 * e1 != a3) continue;
                                            if (a3 * a2 + d3 * e2 != one - a1) continue;
                                            for (const CycNumber& e3 : grid) {
                                                if (a1 * a3 + d1 * e3 != zero) continue;
                                                if (a2 * a3 + d2 * e3 != a1) continue;
                                                if (a3 * a3 + d3 * e3 != zero) continue;
                                                for (const CycNumber& b1 : grid) {
                                                    if (!((a1 - b1) * (one - a1 - b1)).is_zero()) continue;
                                                    if (a1 * d1 + d1 * b1 != d1) continue;
                                                    if (a2 * d1 + d2 * b1 != zero) continue;
                                                    if (a3 * d1 + d3 * b1 != d3) continue;
                                                    for (const CycNumber& b2 : grid) {
                                                        if (a1 * d2 + d1 * b2 != d2) continue;
                                                        if (a2 * d2 + d2 * b2 != zero) continue;
                                                        if (a3 * d2 + d3 * b2 != -d1) continue;
                                                        for (const CycNumber& b3 : grid) {
                                                            if (a1 * d3 + d1 * b3 != zero) continue;
                                                            if (a2 * d3 + d2 * b3 != d1) continue;
                                                            if (a3 * d3 + d3 * b3 != zero) continue;
                                                            AnsatzCoefficients ac;
                                                            ac.a1 = a1; ac.a2 = a2; ac.a3 = a3;
                                                            ac.b1 = b1; ac.b2 = b2; ac.b3 = b3;
                                                            ac.d1 = d1; ac.d2 = d2; ac.d3 = d3;
                                                            ac.e1 = e1; ac.e2 = e2; ac.e3 = e3;
                                                            ac.s = s; ac.t = t;
                                                            if (!residuals(ac, p, f).all_zero()) continue;
                                                            ++res.residual_candidates;

                                                            GeneratorImages img;
                                                            img.x11 = w11.scaled(a1) + w22.scaled(one - a1) +
                                                                      w12.scaled(a2) + w21.scaled(a3);
                                                            img.x22 = w11.scaled(b1) + w22.scaled(one - b1) +
                                                                      w12.scaled(b2) + w21.scaled(b3);
                                                            img.x12 = w11.scaled(d1) - w22.scaled(d1) +
                                                                      w12.scaled(d2) + w21.scaled(d3);
                                                            img.x21 = w11.scaled(e1) - w22.scaled(e1) +
                                                                      w12.scaled(e2) + w21.scaled(e3);
                                                            auto [map, wd] = from_generator_images(alg, img);
                                                            if (!wd.ok) continue;
                                                            if (!verify_hopf_morphism(alg, hopf, map).all_ok())
                                                                continue;
                                                            ++res.verified_count;
                                                            std::string key = map.canonical_key();
                                                            if (seen.emplace(key, res.hits.size()).second) {
                                                                res.hits.push_back(SearchHit{s, t, ac, map});
                                                            }
                                                        }
                                                    }
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    std::sort(res.hits.begin(), res.hits.end(), [](const SearchHit& a, const SearchHit& b) {
        return a.map.canonical_key() < b.map.canonical_key();
    });
    return res;
}

}  // namespace suzuki
