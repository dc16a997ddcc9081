#include "dpcert/cases.hpp"
#include "dpcert/injection.hpp"
#include "dpcert/newton.hpp"
#include "dpcert/projection.hpp"
#include "dpcert/regions.hpp"
#include "dpcert/svg.hpp"
#include "dpcert/toric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace dpcert;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kComputation = 1, kUsage = 2, kMismatch = 3 };

int g_decimal = -1;

std::string frac(const Rational &q) {
    if (g_decimal < 0)
        return q.str();
    return q.str() + " (" + q.decimal(g_decimal) + ")";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

json affine_json(const AffineInM &a) { return json::array({a.slope.str(), a.offset.str()}); }

json region_json(const RegionSpec &r) {
    json v = json::array();
    for (const auto &[s, t] : r.vertices)
        v.push_back(json::array({affine_json(s), affine_json(t)}));
    return json{{"vertices", v}};
}

RegionSpec region_from_json(const json &j) {
    RegionSpec r;
    auto affine = [](const json &a) {
        if (!a.is_array() || a.size() != 2)
            throw ParseError("affine entry must be [slope, offset]", 0);
        auto num = [](const json &x) {
            return x.is_string() ? Rational::parse(x.get<std::string>()) : Rational(x.get<long>());
        };
        return AffineInM{num(a[0]), num(a[1])};
    };
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("region JSON needs a \"vertices\" array", 0);
    for (const auto &v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw ParseError("vertex must be [[s_slope,s_offset],[t_slope,t_offset]]", 0);
        r.vertices.push_back({affine(v[0]), affine(v[1])});
    }
    return r;
}

json trace_json(const CertifiedBound &b) {
    json tr = json::array();
    for (const auto &r : b.trace) {
        json rec{{"iteration", r.iteration},
                 {"crossing", r.crossing},
                 {"weight", json::array({r.weight.wx, r.weight.wy})},
                 {"wmult", r.wmult},
                 {"a", r.a},
                 {"b", r.b},
                 {"multiplicities", r.multiplicities},
                 {"stage_bound", r.stage_bound.str()},
                 {"stage_exact", r.stage_exact},
                 {"action", r.action}};
        if (r.shear_A) {
            rec["shear_A"] = r.shear_A->str();
            rec["shear_beta"] = r.shear_beta;
        }
        tr.push_back(rec);
    }
    return json{{"bound", b.bound.str()}, {"exact", b.exact}, {"status", b.status}, {"trace", tr}};
}

int cmd_lct(const std::string &poly, int threshold, bool trace, const std::string &svg) {
    BiPoly f = parse_bipoly(poly);
    CertifiedBound b = lct_lower_bound(f, threshold);
    std::cout << "bound " << frac(b.bound) << "\n";
    std::cout << "exact " << (b.exact ? "true" : "false") << "\n";
    std::cout << "status " << b.status << "\n";
    if (trace)
        std::cout << trace_json(b).dump(2) << "\n";
    if (!svg.empty())
        write_file(svg, newton_svg(f, poly));
    return kOk;
}

int print_figure1() {
    bool all = true;
    std::cout << "panel  moment  label  polygon\n";
    for (const auto &p : figure1_polygons()) {
        Rational mom = first_moment_s(p.polygon);
        bool ok = mom == p.label;
        all = all && ok;
        std::cout << p.panel << "  " << frac(mom) << "  " << p.label.str() << "  " << polygon_str(p.polygon)
                  << (ok ? "" : "  MISMATCH") << "\n";
    }
    return all ? kOk : kMismatch;
}

int cmd_region(const std::string &spec, long m, const std::string &svg) {
    std::string text = !spec.empty() && spec.front() == '{' ? spec : read_file(spec);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad region JSON: ") + e.what(), 0);
    }
    RegionSpec r = region_from_json(j);
    InstantiatedPolygon poly = instantiate(r, m);
    std::cout << "region " << r.str() << "\n";
    std::cout << "at m=" << m << " " << polygon_str(poly.vertices) << (poly.degenerate ? " (degenerate)" : "") << "\n";
    std::cout << "area " << frac(area(poly.vertices)) << "\n";
    std::cout << "first_moment_s " << frac(first_moment_s(poly.vertices)) << "\n";
    std::cout << "lattice_count " << lattice_count(poly.vertices).get_str() << "\n";
    std::cout << "lattice_sum_s " << lattice_sum_s(poly.vertices).get_str() << "\n";
    std::cout << "leading_coefficient " << frac(leading_coefficient(r)) << "\n";
    if (!svg.empty())
        write_file(svg, region_svg({r}, m, r.str()));
    return kOk;
}

void require_surface(const std::string &surface) {
    auto all = surfaces();
    if (std::find(all.begin(), all.end(), surface) == all.end())
        throw ParseError("unknown surface '" + surface + "'", 0);
}

std::pair<std::string, std::string> split_case(const std::string &id) {
    auto dot = id.find('.');
    if (dot == std::string::npos)
        throw ParseError("case id must look like dp3.c2s3", 0);
    return {id.substr(0, dot), id.substr(dot + 1)};
}

int cmd_project(const std::string &id) {
    auto [surface, label] = split_case(id);
    require_surface(surface);
    const CaseSpec &c = find_case(surface, label);
    std::cout << c.surface << "." << c.label << "  " << c.title << "\n";
    for (std::size_t k = 0; k < c.pieces.size(); ++k)
        std::cout << "region[" << k << "] " << c.pieces[k].str() << "\n";
    if (c.comparison)
        std::cout << "comparison " << c.comparison->str() << "\n";
    bool all = true;
    for (const auto &chk : check_derivations(c)) {
        all = all && chk.ok;
        std::cout << chk.label << " (" << kind_name(chk.kind) << ") " << chk.projected.str() << "  "
                  << (chk.ok ? "ok" : "FAILED") << (chk.detail.empty() ? "" : "  " + chk.detail) << "\n";
    }
    return all ? kOk : kMismatch;
}

int cmd_assign(const std::string &file, const std::string &order_name_in) {
    auto order = parse_order(order_name_in);
    if (!order)
        throw ParseError("unknown order '" + order_name_in + "'", 0);
    std::vector<BiPoly> polys;
    std::istringstream in(read_file(file));
    for (std::string line; std::getline(in, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#')
            continue;
        polys.push_back(parse_bipoly(line));
    }
    Assignment a = injective_assignment(polys, *order);
    for (std::size_t i = 0; i < polys.size(); ++i)
        std::cout << i + 1 << "  " << monomial_str(a.monomial[i]) << "  <-  " << polys[i].str() << "\n";
    std::cout << "pivots";
    for (const auto &p : a.pivot_monomials)
        std::cout << ' ' << monomial_str(p);
    std::cout << "\n";
    Monomial2 anchor = product_anchor(a.monomial);
    std::cout << "anchor (" << anchor.s << "," << anchor.t << ")\n";
    return kOk;
}

int cmd_toric(const std::string &name, long m, long sweep, bool limit) {
    auto id = parse_toric(name);
    if (!id)
        throw ParseError("unknown toric surface '" + name + "'", 0);
    if (sweep > 0) {
        std::cout << "m,bound\n";
        for (long k = 1; k <= sweep; ++k)
            std::cout << k << "," << delta_m_upper(*id, k).bound.str() << "\n";
    } else {
        ToricBound b = delta_m_upper(*id, m);
        std::cout << frac(b.bound) << "\n";
        std::cout << "witness " << b.witness << "\n";
    }
    if (limit)
        std::cout << "limit " << frac(delta_upper_limit(*id)) << "\n";
    return kOk;
}

json certificate_json(const DeltaCertificate &d) {
    json cases = json::array();
    for (const auto &c : d.cases) {
        json pieces = json::array();
        for (const auto &p : c.pieces)
            pieces.push_back(region_json(p));
        json samples = json::array();
        for (const auto &[m, v] : c.samples)
            samples.push_back(json::array({m, v.get_str()}));
        json checks = json::array();
        for (const auto &chk : c.checks)
            checks.push_back(json{{"label", chk.label},
                                  {"kind", kind_name(chk.kind)},
                                  {"projected", region_json(chk.projected)},
                                  {"ok", chk.ok},
                                  {"detail", chk.detail}});
        json cj{{"label", c.label},
                {"title", c.title},
                {"region", pieces},
                {"kappa", c.kappa.str()},
                {"ratio", c.ratio.str()},
                {"samples", samples},
                {"fit", c.fit.str()},
                {"fit_agrees", c.fit_agrees},
                {"checks", checks}};
        if (c.printed) {
            cj["printed"] = c.printed->str();
            cj["matches_printed"] = c.matches_printed;
        }
        cases.push_back(cj);
    }
    json out{{"surface", d.surface}, {"cases", cases}, {"bound", d.bound.str()}, {"notes", d.notes}};
    if (d.expected)
        out["expected"] = d.expected->str();
    if (d.toric_upper)
        out["toric_upper"] = d.toric_upper->str();
    return out;
}

int cmd_delta(const std::string &surface, const std::string &label, const std::string &json_out,
              const std::string &svg_dir) {
    require_surface(surface);
    DeltaCertificate d;
    if (label.empty()) {
        d = delta_lower_bound(surface);
    } else {
        const CaseSpec &c = find_case(surface, label);
        d.surface = surface;
        d.cases.push_back(certify_case(c));
        d.bound = d.cases.back().ratio;
        d.expected = c.printed_ratio;
    }
    std::cout << "surface " << d.surface << "\n";
    for (const auto &c : d.cases) {
        bool checks = true;
        for (const auto &chk : c.checks)
            checks = checks && chk.ok;
        std::cout << "case " << c.label << "  kappa " << frac(c.kappa) << "  ratio " << frac(c.ratio)
                  << "  printed " << (c.printed ? c.printed->str() : "-") << "  "
                  << (c.matches_printed && c.fit_agrees && checks ? "ok" : "MISMATCH") << "\n";
    }
    for (const auto &n : d.notes)
        std::cout << "note " << n << "\n";
    if (d.toric_upper)
        std::cout << "toric upper bound " << frac(*d.toric_upper) << "\n";
    if (d.expected && *d.expected != d.bound)
        std::cout << "expected " << d.expected->str() << "\n";
    std::cout << "bound " << frac(d.bound) << "\n";
    if (!json_out.empty())
        write_file(json_out, certificate_json(d).dump(2) + "\n");
    if (!svg_dir.empty()) {
        for (const auto &c : d.cases)
            write_file(std::filesystem::path(svg_dir) / (d.surface + "_" + c.label + ".svg"),
                       region_svg(c.pieces, 8, d.surface + " " + c.label));
    }
    return d.all_matched() ? kOk : kMismatch;
}

int cmd_selftest() {
    bool ok = true;
    std::cout << "moment table\n";
    for (const auto &p : figure1_polygons()) {
        Rational mom = first_moment_s(p.polygon);
        bool match = mom == p.label;
        ok = ok && match;
        if (!match)
            std::cout << "  MISMATCH panel " << p.panel << " " << polygon_str(p.polygon) << ": " << mom.str()
                      << " vs label " << p.label.str() << "\n";
    }
    std::cout << "surface bounds\n";
    for (const auto &s : surfaces()) {
        DeltaCertificate d = delta_lower_bound(s);
        bool match = d.all_matched();
        ok = ok && match;
        std::cout << "  " << s << "  " << d.bound.str() << "  expected " << (d.expected ? d.expected->str() : "-")
                  << "  " << (match ? "ok" : "MISMATCH") << "\n";
    }
    std::cout << (ok ? "selftest passed" : "selftest found mismatches") << "\n";
    return ok ? kOk : kMismatch;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact certificates for delta-invariant bounds of del Pezzo surfaces"};
    app.require_subcommand(1);
    app.add_option("--decimal", g_decimal, "Append k-digit decimal approximations")->check(CLI::Range(0, 60));

    auto *lct = app.add_subcommand("lct", "Certified lower bound for a log canonical threshold at the origin");
    std::string poly, svg;
    int threshold = 1;
    bool trace = false;
    lct->add_option("--poly", poly, "Polynomial in x, y")->required();
    lct->add_option("--threshold", threshold, "Stop once the factor multiplicity is at most this")
        ->check(CLI::PositiveNumber);
    lct->add_flag("--trace", trace, "Print the iteration trace as JSON");
    lct->add_option("--svg", svg, "Write the Newton polygon as SVG");

    auto *regions = app.add_subcommand("regions", "Region utilities");
    bool fig1 = false;
    regions->add_flag("--figure1", fig1, "Print the reference moment table")->required();

    auto *region = app.add_subcommand("region", "Instantiate a region given as JSON");
    std::string spec;
    long m = 1;
    region->add_option("--spec", spec, "Region JSON text or file")->required();
    region->add_option("--m", m, "Value of m")->check(CLI::PositiveNumber);
    region->add_option("--svg", svg, "Write the region as SVG");

    auto *project_cmd = app.add_subcommand("project", "Project a case's constraint systems");
    std::string case_id;
    project_cmd->add_option("--case", case_id, "Case id, e.g. dp3.c2s3")->required();

    auto *assign = app.add_subcommand("assign", "Injective assignment of monomials to polynomials");
    std::string polys_file, order = "grlex-xy";
    assign->add_option("--polys", polys_file, "File with one polynomial per line")->required();
    assign->add_option("--order", order, "grlex-xy, grlex-yx or diag");

    auto *toric = app.add_subcommand("toric", "Upper bounds from toric basis-type divisors");
    std::string toric_name_in;
    long sweep = 0;
    bool limit = false;
    toric->add_option("--surface", toric_name_in, "f1, dp7, dp6, p2 or p1xp1")->required();
    toric->add_option("--m", m, "Value of m")->check(CLI::PositiveNumber);
    toric->add_option("--sweep", sweep, "CSV of bounds for m = 1..M")->check(CLI::PositiveNumber);
    toric->add_flag("--limit", limit, "Also print the limit");

    auto *delta = app.add_subcommand("delta", "Lower bound for delta with certificate");
    std::string surface, label, json_out, svg_dir;
    delta->add_option("--surface", surface, "dp1..dp6, p2 or p1xp1")->required();
    delta->add_option("--case", label, "Single case label");
    delta->add_option("--json", json_out, "Write the certificate as JSON");
    delta->add_option("--svg", svg_dir, "Write region diagrams into this directory");

    auto *figure1 = app.add_subcommand("figure1", "Print the reference moment table");
    auto *selftest = app.add_subcommand("selftest", "Moment table and surface bound checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (lct->parsed())
            return cmd_lct(poly, threshold, trace, svg);
        if (regions->parsed())
            return print_figure1();
        if (region->parsed())
            return cmd_region(spec, m, svg);
        if (project_cmd->parsed())
            return cmd_project(case_id);
        if (assign->parsed())
            return cmd_assign(polys_file, order);
        if (toric->parsed())
            return cmd_toric(toric_name_in, m, sweep, limit);
        if (delta->parsed())
            return cmd_delta(surface, label, json_out, svg_dir);
        if (figure1->parsed())
            return print_figure1();
        if (selftest->parsed())
            return cmd_selftest();
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputation;
    }
    return kUsage;
}
