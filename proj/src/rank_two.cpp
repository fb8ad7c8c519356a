#include "gonalbn/rank_two.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gonalbn/rank_one.hpp"

namespace gonalbn {

std::int64_t section_threshold(std::int64_t g, std::int64_t d, std::int64_t i) {
    return d - 2 * g + 2 + i;
}

std::int64_t rank2_expected_dim(std::int64_t g, std::int64_t d, std::int64_t i) {
    return 4 * g - 3 - i * section_threshold(g, d, i);
}

std::int64_t rank2_fixed_det_expected_dim(std::int64_t g, std::int64_t d) {
    return 9 * g - 18 - 3 * d;
}

std::string to_string(Family f) {
    switch (f) {
        case Family::FirstType1a: return "FirstType_1a";
        case Family::ModType2bMod: return "ModType_2b_mod";
        case Family::RegularEi: return "Regular_Ei";
        case Family::RegularEii: return "Regular_Eii";
    }
    return "FirstType_1a";
}

std::string to_string(Regularity r) {
    return r == Regularity::Regular ? "Regular" : "Superabundant";
}

std::string to_string(QuotientKind q) {
    switch (q) {
        case QuotientKind::CanonicalMinusTwoGonal: return "CanonicalMinusTwoGonal";
        case QuotientKind::CanonicalMinusGonal: return "CanonicalMinusGonal";
        case QuotientKind::Canonical: return "Canonical";
        case QuotientKind::CanonicalMinusNet: return "CanonicalMinusNet";
    }
    return "Canonical";
}

std::string to_string(ReportStatus s) {
    switch (s) {
        case ReportStatus::NotApplicable: return "NotApplicable";
        case ReportStatus::AssertedEmpty: return "AssertedEmpty";
        case ReportStatus::HasComponents: return "HasComponents";
        case ReportStatus::PartiallyKnown: return "PartiallyKnown";
    }
    return "NotApplicable";
}

SpecialityNote speciality_guard(std::int64_t i) {
    if (i < 1) throw std::invalid_argument("speciality_guard: i must be >= 1");
    std::ostringstream os;
    os << "for 2g-2 <= d <= 4g-4, no irreducible component of the speciality->=" << i
       << " stable locus has general member of speciality exceeding " << i
       << "; generic members attain speciality exactly " << i;
    return SpecialityNote{i, os.str()};
}

namespace {

struct Cond {
    bool ok;
    std::string text;  // filled when !ok
};

Cond cond(bool ok, const std::string& what, std::int64_t lhs, std::int64_t rhs) {
    if (ok) return {true, {}};
    std::ostringstream os;
    os << what << " fails (" << lhs << " vs " << rhs << ")";
    return {false, os.str()};
}

struct ClauseEval {
    std::string id;
    bool fired = false;
    std::vector<std::string> failures;
};

ClauseEval eval_clause(const std::string& id, std::initializer_list<Cond> conds) {
    ClauseEval ev;
    ev.id = id;
    ev.fired = true;
    for (const auto& c : conds) {
        if (!c.ok) {
            ev.fired = false;
            ev.failures.push_back(c.text);
        }
    }
    return ev;
}

std::string join_failures(const std::vector<const ClauseEval*>& evs) {
    std::string out;
    for (const auto* ev : evs) {
        if (ev->fired) continue;
        if (!out.empty()) out += "; ";
        out += ev->id + ": ";
        for (std::size_t i = 0; i < ev->failures.size(); ++i) {
            if (i) out += ", ";
            out += ev->failures[i];
        }
    }
    return out;
}

Presentation presentation_first_type(std::int64_t g, int nu, std::int64_t d) {
    Presentation p;
    p.kernel_degree = d - 2 * g + 2 + 2 * static_cast<std::int64_t>(nu);
    p.quotient = QuotientKind::CanonicalMinusTwoGonal;
    return p;
}

Presentation presentation_mod_type(std::int64_t g, int nu, std::int64_t d, bool with_s) {
    Presentation p;
    p.quotient = QuotientKind::CanonicalMinusGonal;
    if (with_s) {
        // kernel is canonical minus a general degree-s divisor
        p.s = 4 * g - 4 - nu - d;
        p.kernel_degree = 2 * g - 2 - *p.s;
    } else {
        p.kernel_degree = d - 2 * g + 2 + nu;
    }
    return p;
}

Presentation presentation_second_type(std::int64_t g, std::int64_t d) {
    Presentation p;
    p.kernel_degree = d - 2 * g + 2;
    p.quotient = QuotientKind::Canonical;
    return p;
}

Presentation presentation_second_type_net(std::int64_t g, std::int64_t d) {
    Presentation p;
    p.kernel_degree = 2 * g - 2;
    p.quotient = QuotientKind::CanonicalMinusNet;
    p.t = 4 * g - 4 - d;
    std::ostringstream os;
    os << "2g+6 <= 3t <= 3g+6 (t=" << *p.t << ")";
    p.constraint = os.str();
    return p;
}

Rank2Component make_component(Family fam, std::int64_t dim, std::int64_t rho,
                              Presentation pres, std::string clause) {
    Rank2Component c;
    c.family = fam;
    c.dimension = dim;
    c.rho = rho;
    c.regularity = (dim == rho) ? Regularity::Regular : Regularity::Superabundant;
    c.presentation = std::move(pres);
    c.clause = std::move(clause);
    return c;
}

}  // namespace

ClassifierReport classify_b3(std::int64_t g, int nu, std::int64_t d) {
    ClassifierReport rep;
    rep.g = g;
    rep.nu = nu;
    rep.d = d;
    rep.guard = speciality_guard(3);

    if (!gonality_hypothesis_ok(g, nu)) {
        rep.status = ReportStatus::NotApplicable;
        rep.not_applicable_reason = "requires g >= 4 and 3 <= nu with 2*nu < g+3";
        return rep;
    }
    if (d < 2 * g - 2 || d > 4 * g - 4) {
        rep.status = ReportStatus::NotApplicable;
        rep.not_applicable_reason = "requires 2g-2 <= d <= 4g-4";
        return rep;
    }

    const std::int64_t n = nu;
    rep.k3 = section_threshold(g, d, 3);
    rep.rho = rank2_expected_dim(g, d, 3);
    rep.excluded_types = {
        {"first-type-(1-b)", "C",
         "absorbed into a modified-type component; never an irreducible component"},
        {"first-type-(1-c)", "C", "never yields an irreducible component"},
    };

    const auto A = eval_clause("A", {cond(d >= 4 * g - 6, "d >= 4g-6", d, 4 * g - 6)});
    const auto B = eval_clause("B", {
        cond(g >= 15, "g >= 15", g, 15),
        cond(4 * n < g - 2, "4*nu < g-2", 4 * n, g - 2),
        cond(d >= 4 * g - 4 - 2 * n, "d >= 4g-4-2nu", d, 4 * g - 4 - 2 * n),
        cond(d <= 4 * g - 7, "d <= 4g-7", d, 4 * g - 7),
    });

    if (A.fired) rep.empties.push_back("A");
    if (B.fired) rep.empties.push_back("B");
    if (!rep.empties.empty()) {
        rep.status = ReportStatus::AssertedEmpty;
        return rep;
    }

    const auto Cii = eval_clause("C-ii", {
        cond(g >= 9, "g >= 9", g, 9),
        cond(3 * n <= g, "3*nu <= g", 3 * n, g),
        cond(d >= 2 * g - 6 + 2 * n, "d >= 2g-6+2nu", d, 2 * g - 6 + 2 * n),
        cond(d <= 4 * g - 5 - 4 * n, "d <= 4g-5-4nu", d, 4 * g - 5 - 4 * n),
    });
    const auto Di1 = eval_clause("D-i(i1)", {
        cond(g >= 6, "g >= 6", g, 6),
        cond(2 * n <= g, "2*nu <= g", 2 * n, g),
        cond(d >= 3 * g - 5, "d >= 3g-5", d, 3 * g - 5),
        cond(d <= 4 * g - 5 - 2 * n, "d <= 4g-5-2nu", d, 4 * g - 5 - 2 * n),
    });
    const auto Di2 = eval_clause("D-i(i2)", {
        cond(g >= 8, "g >= 8", g, 8),
        cond(4 * n <= g + 4, "4*nu <= g+4", 4 * n, g + 4),
        cond(d >= 3 * g - 3 - n, "d >= 3g-3-nu", d, 3 * g - 3 - n),
        cond(d <= 3 * g - 6, "d <= 3g-6", d, 3 * g - 6),
    });
    const auto Dii1 = eval_clause("D-ii(ii1)", {
        cond(g >= 9, "g >= 9", g, 9),
        cond(4 * n <= g + 3, "4*nu <= g+3", 4 * n, g + 3),
        cond(d >= 2 * g - 7 + 3 * n, "d >= 2g-7+3nu", d, 2 * g - 7 + 3 * n),
        cond(d <= 3 * g - 4 - n, "d <= 3g-4-nu", d, 3 * g - 4 - n),
    });
    const auto Dii2 = eval_clause("D-ii(ii2)", {
        cond(g >= 10, "g >= 10", g, 10),
        cond(5 * n <= g + 5, "5*nu <= g+5", 5 * n, g + 5),
        cond(d >= 2 * g - 7 + 2 * n, "d >= 2g-7+2nu", d, 2 * g - 7 + 2 * n),
        cond(d <= 2 * g - 8 + 3 * n, "d <= 2g-8+3nu", d, 2 * g - 8 + 3 * n),
    });
    const auto Ei = eval_clause("E-i", {
        cond(g >= 7, "g >= 7", g, 7),
        cond(2 * n < g, "2*nu < g", 2 * n, g),
        cond(d <= 3 * g - 7, "d <= 3g-7", d, 3 * g - 7),
    });
    const auto Eii = eval_clause("E-ii", {
        cond(g >= 9, "g >= 9", g, 9),
        cond(4 * n >= g + 3, "4*nu >= g+3", 4 * n, g + 3),
        cond(2 * n < g, "2*nu < g", 2 * n, g),
        cond(d >= 3 * g - 6, "d >= 3g-6", d, 3 * g - 6),
        cond(3 * d <= 10 * g - 18, "3d <= 10g-18", 3 * d, 10 * g - 18),
    });

    if (Cii.fired) {
        rep.components.push_back(make_component(Family::FirstType1a, 6 * g - 6 - 4 * n - d,
                                                rep.rho, presentation_first_type(g, nu, d),
                                                "C-ii"));
    }

    std::vector<const ClauseEval*> d_clauses{&Di1, &Di2, &Dii1, &Dii2};
    bool mod_type_emitted = false;
    for (const auto* ev : d_clauses) {
        if (!ev->fired) continue;
        if (mod_type_emitted) {
            rep.warnings.push_back("modified-type clause overlap at " + ev->id);
            continue;
        }
        const bool with_s = ev->id.rfind("D-i(", 0) == 0;
        rep.components.push_back(make_component(Family::ModType2bMod,
                                                8 * g - 11 - 2 * n - 2 * d, rep.rho,
                                                presentation_mod_type(g, nu, d, with_s),
                                                ev->id));
        mod_type_emitted = true;
    }

    if (Ei.fired) {
        rep.components.push_back(make_component(Family::RegularEi, rep.rho, rep.rho,
                                                presentation_second_type(g, d), "E-i"));
    }
    if (Eii.fired) {
        rep.components.push_back(make_component(Family::RegularEii, rep.rho, rep.rho,
                                                presentation_second_type_net(g, d), "E-ii"));
    }
    if (Ei.fired && Eii.fired) {
        rep.warnings.push_back("second-type clause overlap (E-i and E-ii)");
    }

    // Clause-gap analysis: what the fired clauses leave undetermined.
    if (!Ei.fired && !Eii.fired && rep.rho >= 0) {
        UnknownEntry u;
        u.family = "Regular";
        u.reason = "rho >= 0 but no clause asserts a regular component: " +
                   join_failures({&Ei, &Eii});
        rep.unknowns.push_back(std::move(u));
    }
    if (!mod_type_emitted && d >= 2 * g - 7 + 2 * n) {
        // Below 2g-7+2nu the modified-type dimension 8g-11-2nu-2d would drop
        // under rho, so no such component can exist there.
        UnknownEntry u;
        u.family = "ModType_2b_mod";
        u.reason = "in the modified-type band but no clause fires: " +
                   join_failures({&Di1, &Di2, &Dii1, &Dii2});
        rep.unknowns.push_back(std::move(u));
    }
    if (!Cii.fired && d >= 2 * g - 6 + 2 * n && d <= 4 * g - 5 - 4 * n) {
        UnknownEntry u;
        u.family = "FirstType_1a";
        u.reason = "inside the first-type band but the clause does not fire: " +
                   join_failures({&Cii});
        rep.unknowns.push_back(std::move(u));
    }

    if (!rep.unknowns.empty()) {
        rep.status = ReportStatus::PartiallyKnown;
    } else if (!rep.components.empty()) {
        rep.status = ReportStatus::HasComponents;
    } else {
        // Unreachable for valid inputs; keep the report honest if it ever is.
        rep.status = ReportStatus::PartiallyKnown;
        rep.unknowns.push_back({"all", "no clause applies"});
        rep.warnings.push_back("no clause fired and no family resolved");
    }
    return rep;
}

FixedDetReport classify_fixed_determinant(std::int64_t g, int nu, std::int64_t d) {
    const ClassifierReport base = classify_b3(g, nu, d);
    FixedDetReport rep;
    rep.g = g;
    rep.nu = nu;
    rep.d = d;
    rep.rho_m = rank2_fixed_det_expected_dim(g, d);
    if (base.status == ReportStatus::NotApplicable) {
        rep.status = ReportStatus::NotApplicable;
        rep.not_applicable_reason = base.not_applicable_reason;
        return rep;
    }
    if (base.status == ReportStatus::AssertedEmpty) {
        rep.status = ReportStatus::AssertedEmpty;
        rep.empties = base.empties;
        return rep;
    }
    const std::int64_t n = nu;
    for (const auto& comp : base.components) {
        if (comp.family == Family::FirstType1a) {
            FixedDetComponent c;
            c.family = "FirstType_1a_M";
            c.dimension = 5 * g - 6 - 4 * n - d;
            c.regularity = (c.dimension == rep.rho_m) ? Regularity::Regular
                                                      : Regularity::Superabundant;
            c.clause = comp.clause;
            rep.components.push_back(std::move(c));
        } else if (comp.family == Family::ModType2bMod &&
                   comp.clause.rfind("D-ii", 0) == 0 && d <= 3 * g - 4 - n) {
            FixedDetComponent c;
            c.family = "ModType_2b_mod_M";
            c.dimension = 7 * g - 11 - 2 * n - 2 * d;
            c.regularity = (c.dimension == rep.rho_m) ? Regularity::Regular
                                                      : Regularity::Superabundant;
            c.clause = comp.clause;
            rep.components.push_back(std::move(c));
        }
        // second-type components do not descend to a general determinant
    }
    if (!rep.components.empty()) {
        rep.status = ReportStatus::HasComponents;
    } else {
        rep.status = ReportStatus::PartiallyKnown;
        rep.note = "no first-type or modified-type component descends here";
    }
    return rep;
}

namespace {

struct RegionKey {
    ReportStatus status;
    std::vector<std::string> families;
    std::vector<std::string> unknowns;
    std::vector<std::string> empties;
    bool operator==(const RegionKey& o) const {
        return status == o.status && families == o.families && unknowns == o.unknowns &&
               empties == o.empties;
    }
};

RegionKey key_of(const ClassifierReport& r) {
    RegionKey k;
    k.status = r.status;
    for (const auto& c : r.components) k.families.push_back(to_string(c.family));
    std::sort(k.families.begin(), k.families.end());
    for (const auto& u : r.unknowns) k.unknowns.push_back(u.family);
    std::sort(k.unknowns.begin(), k.unknowns.end());
    k.empties = r.empties;
    return k;
}

}  // namespace

Atlas atlas(std::int64_t g, int nu) {
    require_gonality_hypothesis(g, nu);
    Atlas a;
    a.g = g;
    a.nu = nu;
    a.d_min = 2 * g - 2;
    a.d_max = 4 * g - 4;

    const std::int64_t n = nu;
    const std::vector<AtlasAnnotation> special = {
        {2 * g - 2, "2g-2"},
        {2 * g - 7 + 2 * n, "2g-7+2nu"},
        {2 * g - 6 + 2 * n, "2g-6+2nu"},
        {3 * g - 7, "3g-7"},
        {(10 * g - 18) / 3, "floor((10g-18)/3)"},
        {4 * g - 5 - 4 * n, "4g-5-4nu"},
        {4 * g - 5 - 2 * n, "4g-5-2nu"},
        {4 * g - 4 - 2 * n, "4g-4-2nu"},
    };

    std::optional<RegionKey> cur_key;
    for (std::int64_t d = a.d_min; d <= a.d_max; ++d) {
        const ClassifierReport rep = classify_b3(g, nu, d);
        RegionKey k = key_of(rep);
        if (!cur_key || !(k == *cur_key)) {
            AtlasRegion region;
            region.d_min = d;
            region.d_max = d;
            region.status = rep.status;
            region.families = k.families;
            region.unknown_families = k.unknowns;
            a.regions.push_back(std::move(region));
            cur_key = std::move(k);
        } else {
            a.regions.back().d_max = d;
        }
    }
    for (auto& region : a.regions) {
        for (const auto& sp : special) {
            if (sp.d >= region.d_min && sp.d <= region.d_max) {
                region.annotations.push_back(sp);
            }
        }
    }
    return a;
}

}  // namespace gonalbn
