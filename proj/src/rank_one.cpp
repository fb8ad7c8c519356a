#include "gonalbn/rank_one.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace gonalbn {

bool gonality_hypothesis_ok(std::int64_t g, int nu) {
    return g >= 4 && nu >= 3 && 2 * static_cast<std::int64_t>(nu) < g + 3;
}

void require_gonality_hypothesis(std::int64_t g, int nu) {
    if (g < 4) throw std::invalid_argument("hypothesis violation: genus must satisfy g >= 4");
    if (nu < 3 || 2 * static_cast<std::int64_t>(nu) >= g + 3) {
        throw std::invalid_argument(
            "hypothesis violation: gonality must satisfy 3 <= nu and 2*nu < g+3");
    }
}

std::int64_t classical_rho(std::int64_t g, std::int64_t r, std::int64_t d) {
    return g - (r + 1) * (g + r - d);
}

std::string to_string(GenericElementKind k) {
    switch (k) {
        case GenericElementKind::PencilPlusBase: return "PencilPlusBase";
        case GenericElementKind::FreePencil: return "FreePencil";
        case GenericElementKind::DoubleGonalPlusBase: return "DoubleGonalPlusBase";
        case GenericElementKind::GonalPlusMovable: return "GonalPlusMovable";
        case GenericElementKind::FreeNet: return "FreeNet";
        case GenericElementKind::GeneralLineBundle: return "GeneralLineBundle";
        case GenericElementKind::Unspecified: return "Unspecified";
    }
    return "Unspecified";
}

std::optional<SplittingVector> maximal_splitting_vector(std::int64_t g, int nu,
                                                        std::int64_t d, int r, int ell) {
    if (ell < 0 || ell > r) return std::nullopt;
    const int first_rank = nu - r - 1 + ell;
    if (first_rank <= 0) return std::nullopt;
    // ell = 0 is always maximal; ell >= 1 needs the first block strictly
    // below -1, which is the side condition ell <= g+2r+1-d-nu.
    if (ell > 0 && static_cast<std::int64_t>(ell) > g + 2 * r + 1 - d - nu) return std::nullopt;
    const std::int64_t d_push = d + 1 - g - nu;
    return concat(balanced(first_rank, d_push - ell), balanced(r + 1 - ell, ell));
}

namespace {

GenericElement describe_generic_element(int r, int ell, int nu, std::int64_t d) {
    GenericElement ge;
    if (r == 1 && ell == 1) {
        ge.kind = GenericElementKind::PencilPlusBase;
        ge.base_degree = d - nu;
    } else if (r == 1 && ell == 0) {
        ge.kind = GenericElementKind::FreePencil;
    } else if (r == 2 && ell == 2) {
        ge.kind = GenericElementKind::DoubleGonalPlusBase;
        ge.base_degree = d - 2 * static_cast<std::int64_t>(nu);
    } else if (r == 2 && ell == 1) {
        ge.kind = GenericElementKind::GonalPlusMovable;
    } else if (r == 2 && ell == 0) {
        ge.kind = GenericElementKind::FreeNet;
    } else {
        ge.kind = GenericElementKind::Unspecified;
    }
    return ge;
}

}  // namespace

Rank1Locus components_w(std::int64_t g, int nu, std::int64_t d, int r) {
    require_gonality_hypothesis(g, nu);
    if (r < 0) throw std::invalid_argument("components_w: r must be >= 0");

    Rank1Locus locus;
    if (r <= d - g) {
        locus.whole_picard = true;
        return locus;
    }

    std::map<SplittingVector, std::size_t> by_vector;
    for (int ell = std::max(0, r + 2 - nu); ell <= r; ++ell) {
        auto vec = maximal_splitting_vector(g, nu, d, r, ell);
        if (!vec) continue;
        const std::int64_t dim = classical_rho(g, r - ell, d) - static_cast<std::int64_t>(ell) * nu;
        if (dim < 0) continue;

        Rank1Component comp{ell, *vec, dim, vec->magnitude(),
                            describe_generic_element(r, ell, nu, d)};
        assert(comp.dimension == g - comp.codimension);
        assert(vec->h0() == r + 1);

        auto it = by_vector.find(*vec);
        if (it != by_vector.end()) {
            // Distinct ell never produce equal vectors; keep the larger
            // dimension and flag the inconsistency.
            locus.warnings.push_back("duplicate maximal vector across ell values");
            if (locus.components[it->second].dimension < dim) {
                locus.components[it->second] = comp;
            }
            continue;
        }
        by_vector.emplace(*vec, locus.components.size());
        locus.components.push_back(std::move(comp));
    }
    return locus;
}

TableR1 table_r1(std::int64_t g, int nu, std::int64_t t) {
    require_gonality_hypothesis(g, nu);
    if (t >= g + 1) return TableR1::Picard;
    if (t < nu) return TableR1::Empty;
    if (2 * t < g + 2) return TableR1::OnlyW11;
    if (t <= g + 2 - nu) return TableR1::Both;
    return TableR1::OnlyW10;
}

namespace {

TableR2 r2_row(bool w22, bool w21, bool w20) {
    TableR2 row;
    row.w22 = w22;
    row.w21 = w21;
    row.w20 = w20;
    return row;
}

TableR2 table_r2_trigonal(std::int64_t g, std::int64_t t) {
    // Small-genus rows as printed, then the generic g >= 8 table.
    if (g == 4) {
        if (2 * t < 9) return TableR2{};            // 3 <= t < 9/2
        return r2_row(false, true, true);           // 14/3 <= t = 5 < 6
    }
    if (g == 5) {
        if (2 * t < 10) return TableR2{};           // 3 <= t < 5
        if (t == 5) return r2_row(false, true, false);
        return r2_row(true, true, true);            // t = 6
    }
    if (g == 6) {
        if (2 * t < 11) return TableR2{};           // 3 <= t < 11/2
        return r2_row(true, true, true);            // 6 <= t < 8
    }
    if (g == 7) {
        if (t < 6) return TableR2{};
        if (t == 6) return r2_row(true, true, false);
        return r2_row(true, true, true);            // 7 <= t < 9
    }
    if (t < 6) return TableR2{};
    if (2 * t < g + 5) return r2_row(true, false, false);
    if (3 * t < 2 * g + 6) return r2_row(true, true, false);
    return r2_row(true, true, true);
}

}  // namespace

TableR2 table_r2(std::int64_t g, int nu, std::int64_t t) {
    require_gonality_hypothesis(g, nu);
    if (t >= g + 2) {
        TableR2 row;
        row.picard = true;
        return row;
    }
    if (t < nu) return TableR2{};
    if (nu == 3) return table_r2_trigonal(g, t);

    const std::int64_t n3 = 3 * static_cast<std::int64_t>(nu);
    if (n3 <= g + 2) {
        if (t < 2 * nu) return TableR2{};
        if (2 * t < g + 2 + nu) return r2_row(true, false, false);
        if (3 * t < 2 * g + 6) return r2_row(true, true, false);
        if (t <= g + 3 - nu) return r2_row(true, true, true);
        if (t == g + 4 - nu) return r2_row(false, true, true);
        return r2_row(false, false, true);  // g+5-nu <= t < g+2
    }
    if (n3 == g + 3) {
        if (t < 2 * nu) return TableR2{};
        if (t == 2 * nu) return r2_row(true, true, true);  // t = 2nu = g+3-nu
        if (t == g + 4 - nu) return r2_row(false, true, true);
        return r2_row(false, false, true);
    }
    if (n3 == g + 4) {
        if (t < g + 3 - nu) return TableR2{};
        if (t == g + 3 - nu) return r2_row(false, true, false);  // t = (g+2+nu)/2
        if (t == g + 4 - nu) return r2_row(false, true, true);   // t = 2nu
        return r2_row(false, false, true);
    }
    if (n3 <= g + 6) {
        if (t <= g + 3 - nu) return TableR2{};
        if (t == g + 4 - nu) return r2_row(false, true, true);
        return r2_row(false, false, true);
    }
    if (n3 <= g + 9) {
        if (t <= g + 4 - nu) return TableR2{};
        return r2_row(false, false, true);  // g+5-nu <= t < g+2
    }
    // n3 > g + 9
    if (3 * t < 2 * g + 6) return TableR2{};
    return r2_row(false, false, true);
}

std::string to_string(TableR1 t) {
    switch (t) {
        case TableR1::Empty: return "Empty";
        case TableR1::OnlyW11: return "OnlyW11";
        case TableR1::Both: return "Both";
        case TableR1::OnlyW10: return "OnlyW10";
        case TableR1::Picard: return "Picard";
    }
    return "Empty";
}

std::string to_string(const TableR2& t) {
    if (t.picard) return "Picard";
    if (t.empty()) return "Empty";
    std::string s;
    if (t.w22) s += "W22";
    if (t.w21) s += (s.empty() ? "" : " ") + std::string("W21");
    if (t.w20) s += (s.empty() ? "" : " ") + std::string("W20");
    return s;
}

}  // namespace gonalbn
