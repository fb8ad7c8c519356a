#include "gonalbn/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace gonalbn {

namespace {

std::string show_entries(const SplittingVector& v) {
    std::ostringstream os;
    os << '(';
    const auto& e = v.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ')';
    return os.str();
}

std::string entries_cell(const SplittingVector& v) {
    std::ostringstream os;
    const auto& e = v.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ' ';
        os << e[i];
    }
    return os.str();
}

std::string describe(const GenericElement& ge) {
    std::string s = to_string(ge.kind);
    if (ge.kind == GenericElementKind::PencilPlusBase ||
        ge.kind == GenericElementKind::DoubleGonalPlusBase) {
        s += " base_degree=" + std::to_string(ge.base_degree);
    }
    return s;
}

}  // namespace

std::string render_text(const Rank1Query& q) {
    std::ostringstream os;
    os << "W^" << q.r << "_" << q.d << "  g=" << q.g << " nu=" << q.nu << "\n";
    if (q.locus.whole_picard) {
        os << "  Pic^d(C)  (r <= d-g: every line bundle qualifies)\n";
        return os.str();
    }
    if (q.locus.empty()) {
        os << "  empty\n";
        return os.str();
    }
    for (const auto& c : q.locus.components) {
        os << "  ell=" << c.ell << "  vector=" << show_entries(c.vector)
           << "  dim=" << c.dimension << "  codim=" << c.codimension << "  generic "
           << describe(c.generic_element) << "\n";
    }
    for (const auto& w : q.locus.warnings) os << "  warning: " << w << "\n";
    return os.str();
}

std::string render_csv(const Rank1Query& q) {
    std::ostringstream os;
    os << "g,nu,d,r,ell,dim,codim,vector,generic_element\n";
    for (const auto& c : q.locus.components) {
        os << q.g << ',' << q.nu << ',' << q.d << ',' << q.r << ',' << c.ell << ','
           << c.dimension << ',' << c.codimension << ",\"" << entries_cell(c.vector)
           << "\"," << to_string(c.generic_element.kind) << "\n";
    }
    return os.str();
}

std::string render_text(const ClassifierReport& r) {
    std::ostringstream os;
    os << "B^{k3}_" << r.d << " (stable part)  g=" << r.g << " nu=" << r.nu << "\n";
    os << "  status: " << to_string(r.status) << "\n";
    if (r.status == ReportStatus::NotApplicable) {
        os << "  reason: " << r.not_applicable_reason << "\n";
        return os.str();
    }
    os << "  k3=" << r.k3 << "  rho=" << r.rho << "\n";
    for (const auto& e : r.empties) os << "  empty by clause " << e << "\n";
    for (const auto& c : r.components) {
        os << "  " << to_string(c.family) << "  dim=" << c.dimension << "  "
           << to_string(c.regularity) << "  clause=" << c.clause
           << "  kernel_deg=" << c.presentation.kernel_degree << "  quotient="
           << to_string(c.presentation.quotient);
        if (c.presentation.s) os << "  s=" << *c.presentation.s;
        if (c.presentation.t) os << "  t=" << *c.presentation.t;
        os << "\n";
    }
    for (const auto& u : r.unknowns) {
        os << "  unknown " << u.family << ": " << u.reason << "\n";
    }
    for (const auto& e : r.excluded_types) {
        os << "  excluded " << e.family << " [" << e.clause << "]: " << e.note << "\n";
    }
    return os.str();
}

std::string render_csv(const ClassifierReport& r) {
    std::ostringstream os;
    os << "g,nu,d,family,dim,rho,regularity,clause,kernel_degree,quotient\n";
    if (r.status == ReportStatus::NotApplicable) return os.str();
    for (const auto& c : r.components) {
        os << r.g << ',' << r.nu << ',' << r.d << ',' << to_string(c.family) << ','
           << c.dimension << ',' << c.rho << ',' << to_string(c.regularity) << ','
           << "\"" << c.clause << "\"," << c.presentation.kernel_degree << ','
           << to_string(c.presentation.quotient) << "\n";
    }
    return os.str();
}

std::string render_text(const FixedDetReport& r) {
    std::ostringstream os;
    os << "fixed-determinant locus  g=" << r.g << " nu=" << r.nu << " d=" << r.d << "\n";
    os << "  status: " << to_string(r.status) << "\n";
    if (r.status == ReportStatus::NotApplicable) {
        os << "  reason: " << r.not_applicable_reason << "\n";
        return os.str();
    }
    os << "  rho_M=" << r.rho_m << "\n";
    for (const auto& e : r.empties) os << "  empty by clause " << e << "\n";
    for (const auto& c : r.components) {
        os << "  " << c.family << "  dim=" << c.dimension << "  "
           << to_string(c.regularity) << "  clause=" << c.clause << "\n";
    }
    if (!r.note.empty()) os << "  note: " << r.note << "\n";
    return os.str();
}

std::string render_csv(const FixedDetReport& r) {
    std::ostringstream os;
    os << "g,nu,d,family,dim,rho_m,regularity,clause\n";
    if (r.status == ReportStatus::NotApplicable) return os.str();
    for (const auto& c : r.components) {
        os << r.g << ',' << r.nu << ',' << r.d << ',' << c.family << ',' << c.dimension
           << ',' << r.rho_m << ',' << to_string(c.regularity) << ",\"" << c.clause
           << "\"\n";
    }
    return os.str();
}

std::string render_text(const Atlas& a) {
    std::ostringstream os;
    os << "atlas  g=" << a.g << " nu=" << a.nu << "  d in [" << a.d_min << ", "
       << a.d_max << "]\n";
    for (const auto& region : a.regions) {
        os << "  [" << region.d_min << ", " << region.d_max << "]  "
           << to_string(region.status);
        if (!region.families.empty()) {
            os << "  {";
            for (std::size_t i = 0; i < region.families.size(); ++i) {
                if (i) os << ", ";
                os << region.families[i];
            }
            os << "}";
        }
        if (!region.unknown_families.empty()) {
            os << "  ?{";
            for (std::size_t i = 0; i < region.unknown_families.size(); ++i) {
                if (i) os << ", ";
                os << region.unknown_families[i];
            }
            os << "}";
        }
        os << "\n";
        for (const auto& an : region.annotations) {
            os << "      * d=" << an.d << "  (" << an.label << ")\n";
        }
    }
    return os.str();
}

namespace {

constexpr int kAtlasColumns = 80;

int column_of(const Atlas& a, std::int64_t d) {
    if (a.d_max == a.d_min) return 0;
    const double frac = static_cast<double>(d - a.d_min) /
                        static_cast<double>(a.d_max - a.d_min);
    int col = static_cast<int>(frac * (kAtlasColumns - 1) + 0.5);
    return std::clamp(col, 0, kAtlasColumns - 1);
}

struct Band {
    std::string label;
    std::string asserted_tag;  // family tag when asserted
    std::string unknown_tag;   // family tag in unknown lists
};

}  // namespace

std::string render_ascii_atlas(const Atlas& a) {
    std::ostringstream os;
    os << "atlas  g=" << a.g << " nu=" << a.nu << "  d in [" << a.d_min << ", "
       << a.d_max << "]  (80-column proportional scale)\n";

    const std::array<Band, 4> bands = {{
        {"Regular        ", "Regular_E", "Regular"},
        {"FirstType_1a   ", "FirstType_1a", "FirstType_1a"},
        {"ModType_2b_mod ", "ModType_2b_mod", "ModType_2b_mod"},
        {"empty          ", "", ""},
    }};

    std::array<std::string, 4> rows;
    rows.fill(std::string(kAtlasColumns, '.'));
    for (std::size_t ri = 0; ri < a.regions.size(); ++ri) {
        const auto& region = a.regions[ri];
        const int c0 = column_of(a, region.d_min);
        // cover up to the next region's first column so bands stay contiguous
        const int c1 = ri + 1 < a.regions.size()
                           ? column_of(a, a.regions[ri + 1].d_min) - 1
                           : column_of(a, region.d_max);
        for (std::size_t b = 0; b < bands.size(); ++b) {
            char mark = 0;
            if (b == 3) {
                if (region.status == ReportStatus::AssertedEmpty) mark = 'E';
            } else {
                for (const auto& fam : region.families) {
                    if (fam.rfind(bands[b].asserted_tag, 0) == 0) mark = '#';
                }
                for (const auto& fam : region.unknown_families) {
                    if (fam == bands[b].unknown_tag && mark == 0) mark = '?';
                }
            }
            if (mark != 0) {
                for (int col = c0; col <= c1; ++col) {
                    rows[b][static_cast<std::size_t>(col)] = mark;
                }
            }
        }
    }

    // axis with ticks at region boundaries
    std::string axis(kAtlasColumns, '-');
    axis[0] = '|';
    axis[kAtlasColumns - 1] = '|';
    for (const auto& region : a.regions) {
        axis[static_cast<std::size_t>(column_of(a, region.d_min))] = '|';
    }
    os << "  d axis         " << axis << "\n";
    for (std::size_t b = 0; b < bands.size(); ++b) {
        os << "  " << bands[b].label << rows[b] << "\n";
    }
    os << "  legend: '#' asserted component, '?' open, 'E' asserted empty, '.' none\n";
    os << "  regions:\n";
    for (const auto& region : a.regions) {
        os << "    [" << region.d_min << ", " << region.d_max << "] "
           << to_string(region.status);
        if (!region.families.empty()) {
            os << " {";
            for (std::size_t i = 0; i < region.families.size(); ++i) {
                if (i) os << ", ";
                os << region.families[i];
            }
            os << "}";
        }
        if (!region.unknown_families.empty()) {
            os << " ?{";
            for (std::size_t i = 0; i < region.unknown_families.size(); ++i) {
                if (i) os << ", ";
                os << region.unknown_families[i];
            }
            os << "}";
        }
        os << "\n";
    }
    os << "  marks:\n";
    for (const auto& region : a.regions) {
        for (const auto& an : region.annotations) {
            os << "    d=" << an.d << "  " << an.label << "\n";
        }
    }
    return os.str();
}

std::string render_svg_atlas(const Atlas& a) {
    const int width = 800;
    const int margin = 40;
    const int band_height = 26;
    const int axis_y = 40;
    const int bands_top = 60;

    const std::array<std::pair<std::string, std::string>, 3> bands = {{
        {"Regular_E", "#c23b3b"},
        {"FirstType_1a", "#3b5fc2"},
        {"ModType_2b_mod", "#3bc25f"},
    }};
    std::vector<std::int64_t> annotated;

    const int height = bands_top + static_cast<int>(bands.size()) * band_height + 70;
    auto x_of = [&](std::int64_t d) {
        if (a.d_max == a.d_min) return static_cast<double>(margin);
        return margin + static_cast<double>(d - a.d_min) /
                            static_cast<double>(a.d_max - a.d_min) * (width - 2 * margin);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' '
       << height << "\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";
    os << "  <text x=\"" << margin << "\" y=\"20\" font-family=\"monospace\" font-size=\"14\">"
       << "atlas g=" << a.g << " nu=" << a.nu << " d in [" << a.d_min << ", " << a.d_max
       << "]</text>\n";
    os << "  <line x1=\"" << margin << "\" y1=\"" << axis_y << "\" x2=\"" << width - margin
       << "\" y2=\"" << axis_y << "\" stroke=\"black\" stroke-width=\"2\"/>\n";

    for (const auto& region : a.regions) {
        const double x0 = x_of(region.d_min);
        const double x1 = x_of(region.d_max + 1 > a.d_max ? a.d_max : region.d_max);
        for (std::size_t b = 0; b < bands.size(); ++b) {
            const int y = bands_top + static_cast<int>(b) * band_height;
            bool asserted = false;
            bool open = false;
            for (const auto& fam : region.families) {
                if (fam.rfind(bands[b].first, 0) == 0) asserted = true;
            }
            for (const auto& fam : region.unknown_families) {
                if (bands[b].first.rfind(fam, 0) == 0 || fam == bands[b].first) open = true;
            }
            if (asserted || open) {
                os << "  <rect x=\"" << x0 << "\" y=\"" << y << "\" width=\""
                   << std::max(1.0, x1 - x0) << "\" height=\"" << band_height - 8
                   << "\" fill=\"" << bands[b].second << "\" fill-opacity=\""
                   << (asserted ? "0.9" : "0.25") << "\"/>\n";
                if (open) {
                    os << "  <text x=\"" << (x0 + x1) / 2 << "\" y=\"" << y + 13
                       << "\" font-family=\"monospace\" font-size=\"12\">?</text>\n";
                }
            }
        }
        if (region.status == ReportStatus::AssertedEmpty) {
            os << "  <rect x=\"" << x0 << "\" y=\"" << axis_y - 6 << "\" width=\""
               << std::max(1.0, x1 - x0)
               << "\" height=\"12\" fill=\"#777777\" fill-opacity=\"0.7\"/>\n";
        }
        for (const auto& an : region.annotations) annotated.push_back(an.d);
    }

    for (std::size_t b = 0; b < bands.size(); ++b) {
        const int y = bands_top + static_cast<int>(b) * band_height;
        os << "  <text x=\"4\" y=\"" << y + 13
           << "\" font-family=\"monospace\" font-size=\"11\">" << bands[b].first
           << "</text>\n";
    }

    std::sort(annotated.begin(), annotated.end());
    annotated.erase(std::unique(annotated.begin(), annotated.end()), annotated.end());
    const int tick_top = bands_top + static_cast<int>(bands.size()) * band_height + 6;
    int label_row = 0;
    for (const auto d : annotated) {
        const double x = x_of(d);
        os << "  <line x1=\"" << x << "\" y1=\"" << axis_y - 8 << "\" x2=\"" << x
           << "\" y2=\"" << tick_top << "\" stroke=\"#aa3333\" stroke-width=\"1\"/>\n";
        os << "  <text x=\"" << x - 8 << "\" y=\"" << tick_top + 14 + 14 * (label_row % 3)
           << "\" font-family=\"monospace\" font-size=\"10\">" << d << "</text>\n";
        ++label_row;
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "verification  g_max=" << r.g_max << " nu_max=" << r.nu_max << "\n";
    os << "  table/oracle grid: " << r.tables.cells << " cells ("
       << r.tables.oracle_cells << " with brute force), " << r.tables.failures.size()
       << " failures, " << r.tables.notes.size() << " redundancy notes\n";
    os << "  oracle sweep: " << r.oracle_sweep.cells << " cells, "
       << r.oracle_sweep.failures.size() << " failures\n";
    os << "  splitting properties: " << r.properties.cells << " samples, "
       << r.properties.failures.size() << " failures\n";
    os << "  classifier sweep: " << r.rank_two.cells << " reports, "
       << r.rank_two.failures.size() << " failures\n";
    os << "  verdict: " << (r.pass() ? "PASS" : "FAIL") << "\n";
    auto dump = [&os](const std::vector<CrosscheckIssue>& issues) {
        for (const auto& i : issues) {
            os << "    (g=" << i.g << ", nu=" << i.nu << ", t=" << i.t << ", r=" << i.r
               << ") " << i.what << "\n";
        }
    };
    if (!r.tables.failures.empty()) {
        os << "  grid counterexamples:\n";
        dump(r.tables.failures);
    }
    for (const auto& f : r.oracle_sweep.failures) os << "    " << f << "\n";
    for (const auto& f : r.properties.failures) os << "    " << f << "\n";
    for (const auto& f : r.rank_two.failures) os << "    " << f << "\n";
    return os.str();
}

}  // namespace gonalbn
