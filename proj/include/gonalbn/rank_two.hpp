#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gonalbn {

/// Section-count threshold for speciality i at degree d: d - 2g + 2 + i.
std::int64_t section_threshold(std::int64_t g, std::int64_t d, std::int64_t i);

/// Expected dimension of the rank-two locus of speciality >= i:
/// 4g - 3 - i*(d - 2g + 2 + i).  For i = 3 this is 10g - 18 - 3d.
std::int64_t rank2_expected_dim(std::int64_t g, std::int64_t d, std::int64_t i);

/// Expected dimension of the fixed-determinant locus at i = 3: 9g - 18 - 3d.
std::int64_t rank2_fixed_det_expected_dim(std::int64_t g, std::int64_t d);

enum class Family { FirstType1a, ModType2bMod, RegularEi, RegularEii };
enum class Regularity { Regular, Superabundant };
enum class QuotientKind {
    CanonicalMinusTwoGonal,  // canonical minus twice the gonal pencil
    CanonicalMinusGonal,     // canonical minus the gonal pencil
    Canonical,
    CanonicalMinusNet,       // canonical minus a degree-t net, t = 4g-4-d
};

std::string to_string(Family f);
std::string to_string(Regularity r);
std::string to_string(QuotientKind q);

/// Line-bundle presentation of the general member: kernel degree plus the
/// quotient line bundle, kernel_degree + quotient degree = d.
struct Presentation {
    std::int64_t kernel_degree = 0;
    QuotientKind quotient = QuotientKind::Canonical;
    std::optional<std::int64_t> s;  // divisor degree 4g-4-nu-d (modified-type kernels)
    std::optional<std::int64_t> t;  // net degree 4g-4-d (second-type via a net)
    std::string constraint;         // recorded side constraint, if any
};

struct Rank2Component {
    Family family = Family::RegularEi;
    std::int64_t dimension = 0;
    std::int64_t rho = 0;  // rank-two expected dimension at i = 3
    Regularity regularity = Regularity::Regular;
    bool uniruled = true;
    bool generically_smooth = true;
    Presentation presentation;
    std::string clause;  // firing clause id, e.g. "C-ii", "D-i(i1)"
};

enum class ReportStatus { NotApplicable, AssertedEmpty, HasComponents, PartiallyKnown };
std::string to_string(ReportStatus s);

struct UnknownEntry {
    std::string family;  // "Regular", "ModType_2b_mod", "FirstType_1a"
    std::string reason;
};

struct ExcludedType {
    std::string family;
    std::string clause;
    std::string note;
};

struct SpecialityNote {
    std::int64_t bound = 3;
    std::string statement;
};

/// Structured guard: within 2g-2 <= d <= 4g-4 the general member of a
/// component of the speciality->=i locus has speciality exactly i.
/// Throws std::invalid_argument when i < 1.
SpecialityNote speciality_guard(std::int64_t i);

struct ClassifierReport {
    std::int64_t g = 0;
    int nu = 0;
    std::int64_t d = 0;
    ReportStatus status = ReportStatus::NotApplicable;
    std::int64_t k3 = 0;
    std::int64_t rho = 0;
    std::vector<Rank2Component> components;
    std::vector<std::string> empties;  // emptiness clause ids
    std::vector<UnknownEntry> unknowns;
    std::vector<ExcludedType> excluded_types;
    std::vector<std::string> warnings;
    std::string not_applicable_reason;
    SpecialityNote guard;
};

/// Clause-driven classification of the speciality-3 rank-two locus at
/// (g, nu, d).  Pure function of its arguments.
ClassifierReport classify_b3(std::int64_t g, int nu, std::int64_t d);

struct FixedDetComponent {
    std::string family;  // "FirstType_1a_M", "ModType_2b_mod_M"
    std::int64_t dimension = 0;
    Regularity regularity = Regularity::Regular;
    std::string clause;
};

struct FixedDetReport {
    std::int64_t g = 0;
    int nu = 0;
    std::int64_t d = 0;
    ReportStatus status = ReportStatus::NotApplicable;
    std::int64_t rho_m = 0;  // 9g - 18 - 3d
    std::vector<FixedDetComponent> components;
    std::vector<std::string> empties;
    std::string not_applicable_reason;
    std::string note;
};

/// Fixed-determinant consequence of the classifier: first-type and
/// modified-type records descend to a general determinant, second-type
/// records contribute nothing.
FixedDetReport classify_fixed_determinant(std::int64_t g, int nu, std::int64_t d);

struct AtlasAnnotation {
    std::int64_t d = 0;
    std::string label;
};

struct AtlasRegion {
    std::int64_t d_min = 0;
    std::int64_t d_max = 0;
    ReportStatus status = ReportStatus::NotApplicable;
    std::vector<std::string> families;          // sorted component family tags
    std::vector<std::string> unknown_families;  // sorted
    std::vector<AtlasAnnotation> annotations;
};

struct Atlas {
    std::int64_t g = 0;
    int nu = 0;
    std::int64_t d_min = 0;  // 2g-2
    std::int64_t d_max = 0;  // 4g-4
    std::vector<AtlasRegion> regions;
};

/// Sweep of d over [2g-2, 4g-4] merged into maximal intervals of constant
/// (status, component family multiset, unknown set), with the special
/// degree values annotated.
Atlas atlas(std::int64_t g, int nu);

}  // namespace gonalbn
