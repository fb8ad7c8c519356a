#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gonalbn/splitting.hpp"

namespace gonalbn {

/// g >= 4, 3 <= nu, 2*nu < g+3.
bool gonality_hypothesis_ok(std::int64_t g, int nu);
/// Throws std::invalid_argument with an explanatory tag when violated.
void require_gonality_hypothesis(std::int64_t g, int nu);

/// Classical expected dimension g - (r+1)(g+r-d); may be negative.
std::int64_t classical_rho(std::int64_t g, std::int64_t r, std::int64_t d);

/// What the general member of a component looks like.
enum class GenericElementKind {
    PencilPlusBase,      // gonal pencil plus an effective base divisor
    FreePencil,          // base-point-free complete pencil
    DoubleGonalPlusBase, // twice the gonal pencil plus base divisor
    GonalPlusMovable,    // gonal pencil plus movable points; bpf, birationally very ample
    FreeNet,             // base-point-free, birationally very ample net
    GeneralLineBundle,   // whole Picard variety
    Unspecified,
};

struct GenericElement {
    GenericElementKind kind = GenericElementKind::Unspecified;
    std::int64_t base_degree = 0;  // meaningful for the *PlusBase kinds only
};

std::string to_string(GenericElementKind k);

/// One irreducible component of the section-count locus on a general
/// nu-gonal curve, indexed by the count `ell` of sections pulled back
/// from the gonal pencil.
struct Rank1Component {
    int ell = 0;
    SplittingVector vector;
    std::int64_t dimension = 0;    // g - codimension
    std::int64_t codimension = 0;  // magnitude of `vector`
    GenericElement generic_element;
};

/// The maximal splitting type with r+1 sections and r+1-ell non-negative
/// coordinates: balanced(nu-r-1+ell, d'-ell) merged with
/// balanced(r+1-ell, ell), d' = d+1-g-nu.  Returns nullopt when ell is
/// outside the admissible range, when the first block would be empty, or
/// when the vector fails maximality (ell > 0 and ell > g+2r+1-d-nu).
std::optional<SplittingVector> maximal_splitting_vector(std::int64_t g, int nu,
                                                        std::int64_t d, int r, int ell);

struct Rank1Locus {
    bool whole_picard = false;
    std::vector<Rank1Component> components;  // empty list + !whole_picard => empty locus
    std::vector<std::string> warnings;
    bool empty() const { return !whole_picard && components.empty(); }
};

/// All irreducible components of the degree-d, (r+1)-section locus on a
/// general nu-gonal curve of genus g: one per admissible ell with
/// non-negative expected dimension.  Throws on hypothesis violation.
Rank1Locus components_w(std::int64_t g, int nu, std::int64_t d, int r);

enum class TableR1 { Empty, OnlyW11, Both, OnlyW10, Picard };

/// Printed pencil-locus case table (r = 1).
TableR1 table_r1(std::int64_t g, int nu, std::int64_t t);

/// Printed net-locus case table (r = 2): which of the three strata the
/// row of the case table lists, or Picard/Empty.
struct TableR2 {
    bool picard = false;
    bool w22 = false;
    bool w21 = false;
    bool w20 = false;
    bool empty() const { return !picard && !w22 && !w21 && !w20; }
    friend bool operator==(const TableR2& a, const TableR2& b) {
        return a.picard == b.picard && a.w22 == b.w22 && a.w21 == b.w21 && a.w20 == b.w20;
    }
};

TableR2 table_r2(std::int64_t g, int nu, std::int64_t t);

std::string to_string(TableR1 t);
std::string to_string(const TableR2& t);

}  // namespace gonalbn
