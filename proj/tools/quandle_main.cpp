// Command-line front end: catalog browsing, idempotent searches and tables,
// coloring and enhancement reports, spectra, and the one-shot reproduction
// suite.  Exit codes: 0 success, 1 mismatch/failed check, 2 usage or input
// error, 3 resource limit.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qr/catalog.hpp"
#include "qr/links.hpp"
#include "qr/peirce.hpp"
#include "qr/report.hpp"

using nlohmann::ordered_json;
using namespace qr;

namespace {

struct Output {
    std::string format = "text";
    std::string path;

    void emit(const std::string& text, const ordered_json& j) const {
        std::string payload = format == "json" ? j.dump(2) + "\n" : text;
        if (path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot write " + path);
            out << payload;
        }
    }
};

Quandle resolve_quandle(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) {
        std::stringstream ss(spec.substr(8));
        int order = 0, index = 0;
        char colon = 0;
        if (!(ss >> order >> colon >> index) || colon != ':')
            throw QuandleError("expected catalog:<order>:<index>");
        const auto& cat = catalog(order);
        if (index < 1 || index > int(cat.size()))
            throw QuandleError("catalog index out of range");
        return cat[size_t(index - 1)].quandle;
    }
    if (spec.rfind("dihedral:", 0) == 0) return dihedral_quandle(std::stoi(spec.substr(9)));
    if (spec.rfind("trivial:", 0) == 0) return trivial_quandle(std::stoi(spec.substr(8)));
    return load_quandle(spec);
}

ColoringTarget resolve_target(const std::string& spec, std::string* desc) {
    if (spec.rfind("idem2:", 0) == 0) {
        Quandle q = resolve_quandle(spec.substr(6));
        Mod2Set s = enumerate_mod2(q);
        if (desc) *desc = "mod-2 idempotents of " + (q.name().empty() ? spec : q.name());
        return target_from_mod2_set(s);
    }
    Quandle q = resolve_quandle(spec);
    if (desc) *desc = q.name().empty() ? spec : q.name();
    return target_from_quandle(q);
}

Quandle resolve_quandle_like(const std::string& spec) {
    if (spec.rfind("idem2:", 0) == 0) {
        Quandle q = resolve_quandle(spec.substr(6));
        Mod2Set s = enumerate_mod2(q);
        auto iq = mod2_quandle(s);
        if (!iq) throw QuandleError("the mod-2 idempotents of " + spec.substr(6) +
                                    " do not form a quandle");
        return *iq;
    }
    return resolve_quandle(spec);
}

Presentation resolve_presentation(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return builtin_presentation(spec.substr(8));
    std::ifstream in(spec);
    if (!in) throw QuandleError("cannot open " + spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str(), spec);
}

RingTag parse_ring(const std::string& s) {
    if (s == "z") return RingTag::Integers;
    if (s == "z2") return RingTag::IntegersMod2;
    if (s == "q") return RingTag::Rationals;
    throw CLI::ValidationError("--ring must be z, z2 or q");
}

std::string table_rows(const Quandle& q) {
    std::ostringstream os;
    for (int x = 0; x < q.size(); ++x) {
        if (x) os << "; ";
        for (int y = 0; y < q.size(); ++y) os << (y ? " " : "") << q.op(x, y) + 1;
    }
    return os.str();
}

int cmd_validate(const std::string& file, const Output& out) {
    ordered_json j;
    std::ostringstream text;
    try {
        Quandle q = load_quandle(file);
        j["valid"] = true;
        j["order"] = q.size();
        text << "valid quandle of order " << q.size() << "\n";
        out.emit(text.str(), j);
        return 0;
    } catch (const QuandleError& e) {
        j["valid"] = false;
        j["error"] = e.what();
        text << "invalid: " << e.what() << "\n";
        out.emit(text.str(), j);
        return 1;
    }
}

int cmd_catalog(int order, const Output& out) {
    const auto& cat = catalog(order);
    ordered_json j;
    j["order"] = order;
    j["count"] = cat.size();
    j["quandles"] = ordered_json::array();
    std::ostringstream text;
    text << cat.size() << " quandles of order " << order << "\n";
    for (const auto& e : cat) {
        ordered_json q;
        q["name"] = e.quandle.name();
        q["table"] = table_rows(e.quandle);
        q["latin"] = is_latin(e.quandle);
        q["medial"] = is_medial(e.quandle);
        j["quandles"].push_back(q);
        text << "  " << e.quandle.name() << ": " << table_rows(e.quandle)
             << (is_latin(e.quandle) ? "  [latin]" : "")
             << (is_medial(e.quandle) ? "  [medial]" : "") << "\n";
    }
    out.emit(text.str(), j);
    return 0;
}

int cmd_idem(const std::string& file, const std::string& ring, long bound, long denom,
             Exec exec, const Output& out) {
    Quandle q = resolve_quandle(file);
    RingTag tag = parse_ring(ring);
    ordered_json j;
    j["quandle"] = q.name().empty() ? file : q.name();
    j["ring"] = ring;
    std::ostringstream text;
    if (tag == RingTag::IntegersMod2) {
        Mod2Set s = enumerate_mod2(q, exec);
        bool flag = is_quandle_under_mul(s);
        j["count"] = s.masks.size();
        j["elements"] = s.element_strings();
        j["is_quandle"] = flag;
        text << s.masks.size() << " idempotents over Z2\n";
        for (const auto& e : s.element_strings()) text << "  " << e << "\n";
        text << "forms a quandle under multiplication: " << (flag ? "yes" : "no") << "\n";
    } else {
        RationalSet s = search_bounded(q, tag, bound, denom, exec);
        j["bound"] = bound;
        j["denom"] = tag == RingTag::Rationals ? denom : 1;
        j["count"] = s.elems.size();
        j["elements"] = s.element_strings();
        text << s.elems.size() << " idempotents over " << ring_name(tag) << " (bound "
             << bound;
        if (tag == RingTag::Rationals) text << ", denominator " << denom;
        text << ")\n";
        for (const auto& e : s.element_strings()) text << "  " << e << "\n";
    }
    out.emit(text.str(), j);
    return 0;
}

int cmd_idem_table(int order, Exec exec, const Output& out) {
    const auto& cat = catalog(order);
    ordered_json j;
    j["order"] = order;
    j["rows"] = ordered_json::array();
    std::ostringstream text;
    const bool csv = out.format == "csv";
    if (csv)
        text << "quandle,z_families,z_quandle,z2_idempotents,z2_quandle\n";
    for (const auto& e : cat) {
        Mod2Set s = enumerate_mod2(e.quandle, exec);
        bool z2_flag = is_quandle_under_mul(s);
        bool z_flag = parametric_is_quandle(e.z_families);
        std::vector<std::string> fams;
        for (const auto& f : e.z_families) fams.push_back(f.str());
        ordered_json row;
        row["quandle"] = table_rows(e.quandle);
        row["z_families"] = fams;
        row["z_quandle"] = z_flag;
        row["z2_idempotents"] = s.element_strings();
        row["z2_quandle"] = z2_flag;
        j["rows"].push_back(row);
        auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i];
            return s;
        };
        if (csv) {
            text << '"' << table_rows(e.quandle) << "\",\"" << join(fams) << "\","
                 << (z_flag ? "yes" : "no") << ",\"" << join(s.element_strings()) << "\","
                 << (z2_flag ? "yes" : "no") << "\n";
        } else {
            text << e.quandle.name() << ": " << table_rows(e.quandle) << "\n";
            text << "  Z families: " << join(fams) << "\n";
            text << "  Z quandle: " << (z_flag ? "yes" : "no") << "\n";
            text << "  Z2 idempotents: " << join(s.element_strings()) << "\n";
            text << "  Z2 quandle: " << (z2_flag ? "yes" : "no") << "\n";
        }
    }
    if (csv && out.path.empty()) {
        std::cout << text.str();
        return 0;
    }
    if (csv) {
        std::ofstream f(out.path);
        f << text.str();
        return 0;
    }
    out.emit(text.str(), j);
    return 0;
}

int cmd_color(const std::string& pres, const std::string& target, bool count_only,
              bool hom_table, const std::string& compare, Exec exec, const Output& out) {
    Presentation p = resolve_presentation(pres);
    std::string desc;
    ColoringTarget t = resolve_target(target, &desc);
    ordered_json j;
    j["presentation"] = p.name.empty() ? pres : p.name;
    j["target"] = desc;
    std::ostringstream text;
    long n = count_colorings(p, t, exec);
    j["count"] = n;
    text << n << " colorings of " << (p.name.empty() ? pres : p.name) << " by " << desc
         << "\n";
    if (!count_only) {
        auto hs = hom_set(p, t, exec);
        ordered_json elems = ordered_json::array();
        for (const auto& h : hs) {
            std::string e;
            for (size_t i = 0; i < h.size(); ++i)
                e += (i ? "," : "") + t.labels[size_t(h[i])];
            elems.push_back(e);
            text << "  " << e << "\n";
        }
        j["elements"] = elems;
    }
    if (hom_table || !compare.empty()) {
        Quandle q = resolve_quandle_like(target);
        HomQuandle h = hom_quandle(p, q);
        if (hom_table) {
            j["quandle_table"] = h.quandle.table();
            text << "hom quandle of order " << h.quandle.size() << ":\n"
                 << quandle_to_text(h.quandle);
        }
        if (!compare.empty()) {
            Presentation p2 = resolve_presentation(compare);
            HomQuandle h2 = hom_quandle(p2, q);
            bool iso = is_isomorphic(h.quandle, h2.quandle).has_value();
            if (iso) j["isomorphic_to"] = p2.name.empty() ? compare : p2.name;
            text << "hom quandle is " << (iso ? "" : "not ")
                 << "isomorphic to that of " << (p2.name.empty() ? compare : p2.name)
                 << "\n";
        }
    }
    out.emit(text.str(), j);
    return 0;
}

int cmd_enhance(const std::string& p1s, const std::string& p2s, int cover_n,
                const std::string& grid_spec, const Output& out) {
    Presentation p1 = resolve_presentation(p1s);
    Presentation p2 = resolve_presentation(p2s);
    auto fams = covering_family_r2n(cover_n);
    long lo = -1, hi = 1;
    if (!grid_spec.empty()) {
        auto dots = grid_spec.find("..");
        if (dots == std::string::npos)
            throw CLI::ValidationError("--grid expects lo..hi");
        lo = std::stol(grid_spec.substr(0, dots));
        hi = std::stol(grid_spec.substr(dots + 2));
    }
    std::vector<Rat> grid;
    for (long v = lo; v <= hi; ++v) grid.emplace_back(v);
    EnhancementReport rep = enhancement_report(p1, p2, fams, grid);
    ordered_json j;
    std::ostringstream text;
    text << "relation structure over the covering families (grid " << lo << ".." << hi
         << ")\n";
    for (const auto& [name, c] : rep.categories) {
        ordered_json cj;
        cj["pairs"] = c.pairs;
        cj["p1_satisfied"] = c.p1_all;
        cj["p2_satisfied"] = c.p2_all;
        j["categories"][name] = cj;
        text << "  " << name << ": " << c.pairs << " pairs, p1 " << c.p1_all << ", p2 "
             << c.p2_all << "\n";
    }
    j["p1_admits_zero_first_nonzero_second"] = rep.p1_admits_zero_first_nonzero_second;
    j["p2_admits_zero_first_nonzero_second"] = rep.p2_admits_zero_first_nonzero_second;
    text << "zero-first with nonzero-second admitted: p1 "
         << (rep.p1_admits_zero_first_nonzero_second ? "yes" : "no") << ", p2 "
         << (rep.p2_admits_zero_first_nonzero_second ? "yes" : "no") << "\n";
    out.emit(text.str(), j);
    return 0;
}

int cmd_peirce(const std::string& file, long bound, long denom, Exec exec,
               const Output& out) {
    Quandle q = resolve_quandle(file);
    RationalSet s = search_rational(q, bound, denom, exec);
    ordered_json j;
    j["quandle"] = q.name().empty() ? file : q.name();
    j["bound"] = bound;
    j["denom"] = denom;
    j["idempotents"] = ordered_json::array();
    std::ostringstream text;
    text << s.elems.size() << " idempotents\n";
    for (const auto& v : s.elems) {
        QElement u = q_element(q, v);
        Spectrum sp = rational_spectrum(right_mult_matrix(u));
        ordered_json ij;
        ij["element"] = element_str(v);
        ordered_json eigs = ordered_json::array();
        text << "  " << element_str(v) << ": {";
        bool first = true;
        for (const auto& [val, mult] : sp.eigenvalues) {
            ordered_json ej;
            ej["value"] = val.get_str();
            ej["multiplicity"] = mult;
            eigs.push_back(ej);
            text << (first ? "" : ", ") << val.get_str() << " (x" << mult << ")";
            first = false;
        }
        ij["eigenvalues"] = eigs;
        ordered_json res = ordered_json::array();
        for (const auto& [poly, mult] : sp.residual) {
            res.push_back(upoly::str(poly));
            text << (first ? "" : ", ") << "[" << upoly::str(poly) << "]^" << mult;
            first = false;
        }
        ij["residual"] = res;
        ij["annihilator_ok"] = annihilator_check(u);
        j["idempotents"].push_back(ij);
        text << "}\n";
    }
    AlgebraSpectrum alg = algebra_spectrum(q, s.elems);
    ordered_json av = ordered_json::array();
    text << "algebra spectrum: {";
    for (size_t i = 0; i < alg.eigenvalues.size(); ++i) {
        av.push_back(alg.eigenvalues[i].get_str());
        text << (i ? ", " : "") << alg.eigenvalues[i].get_str();
    }
    text << "}" << (alg.has_residual ? " plus non-rational factors" : "") << "\n";
    j["algebra_spectrum"] = av;
    j["has_residual"] = alg.has_residual;
    out.emit(text.str(), j);
    return 0;
}

int cmd_element(const std::string& quandle_spec, const std::string& literal,
                const Output& out) {
    Quandle q = resolve_quandle(quandle_spec);
    QElement u = q_element(q, parse_element(literal, q.size()));
    ordered_json j;
    j["element"] = element_str(u.c);
    std::ostringstream text;
    Rat eps = augmentation(u);
    j["augmentation"] = eps.get_str();
    bool idem = !u.is_zero() && is_idempotent(u);
    j["idempotent"] = idem;
    text << element_str(u.c) << "\n  augmentation " << eps.get_str()
         << "\n  idempotent: " << (idem ? "yes" : "no") << "\n";
    if (idem) {
        Spectrum sp = rational_spectrum(right_mult_matrix(u));
        ordered_json eigs = ordered_json::array();
        text << "  spectrum {";
        bool first = true;
        for (const auto& [val, mult] : sp.eigenvalues) {
            ordered_json ej;
            ej["value"] = val.get_str();
            ej["multiplicity"] = mult;
            eigs.push_back(ej);
            text << (first ? "" : ", ") << val.get_str() << " (x" << mult << ")";
            first = false;
        }
        text << "}\n";
        j["spectrum"] = eigs;
        j["annihilator_ok"] = annihilator_check(u);
    }
    out.emit(text.str(), j);
    return idem ? 0 : 1;
}

int cmd_family(const std::string& quandle_spec, const std::string& family_spec,
               const Output& out) {
    Quandle q = resolve_quandle(quandle_spec);
    std::string literal = family_spec;
    if (std::ifstream f{family_spec}) {
        std::stringstream buf;
        buf << f.rdbuf();
        literal = buf.str();
    }
    ParametricElement fam = family_from_literal(q, literal);
    bool ok = verify_family(fam);
    ordered_json j;
    j["family"] = fam.str();
    j["parameters"] = fam.params;
    j["idempotent"] = ok;
    j["augmentation"] = fam.augmentation_poly().str();
    std::ostringstream text;
    text << fam.str() << "\n  parameters:";
    for (const auto& p : fam.params) text << " " << p;
    text << "\n  squares to itself: " << (ok ? "yes" : "no")
         << "\n  augmentation " << fam.augmentation_poly().str() << "\n";
    out.emit(text.str(), j);
    return ok ? 0 : 1;
}

int cmd_reproduce(const ReproOptions& opts, const Output& out) {
    auto results = run_reproduction(opts);
    ordered_json j;
    j["checks"] = ordered_json::array();
    std::ostringstream text;
    int failed = 0;
    for (const auto& r : results) {
        ordered_json cj;
        cj["criterion"] = r.criterion;
        cj["group"] = r.group;
        cj["name"] = r.name;
        cj["pass"] = r.pass;
        cj["detail"] = r.detail;
        j["checks"].push_back(cj);
        if (!r.pass) ++failed;
        text << (r.pass ? "PASS" : "FAIL") << "  [" << r.group << "] " << r.name;
        if (!r.detail.empty()) text << " (" << r.detail << ")";
        text << "\n";
    }
    j["passed"] = int(results.size()) - failed;
    j["failed"] = failed;
    text << (int(results.size()) - failed) << "/" << results.size() << " checks passed\n";
    out.emit(text.str(), j);
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with quandle rings and their idempotents"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    bool serial = false;
    app.add_option("--format", out.format, "text, json or csv")->default_val("text");
    app.add_option("--out", out.path, "write the report to a file");
    app.add_flag("--serial", serial, "disable the parallel kernels");

    std::string file, ring = "z2", pres, p1s, p2s, target, grid, compare, literal;
    long bound = 3, denom = 1;
    int order = 3, cover_n = 3;
    bool count_only = false, hom_table = false;
    ReproOptions ropts;

    auto* validate = app.add_subcommand("validate", "check a quandle file");
    validate->add_option("file", file)->required();

    auto* cat = app.add_subcommand("catalog", "list the built-in quandles");
    cat->add_option("--order", order)->required();

    auto* idem = app.add_subcommand("idem", "idempotents of one quandle ring");
    idem->add_option("quandle", file, "file, catalog:<o>:<i>, dihedral:<n>, trivial:<n>")
        ->required();
    idem->add_option("--ring", ring, "z2, z or q")->default_val("z2");
    idem->add_option("--bound", bound);
    idem->add_option("--denom", denom);

    auto* table = app.add_subcommand("idem-table", "regenerate a catalog table");
    table->add_option("--order", order)->required();

    auto* color = app.add_subcommand("color", "count colorings of a presentation");
    color->add_option("presentation", pres, "file or builtin:<key>")->required();
    color->add_option("target", target, "quandle spec, or idem2:<spec>")->required();
    color->add_flag("--count-only", count_only);
    color->add_flag("--hom-table", hom_table);
    color->add_option("--compare-with", compare,
                      "second presentation; reports hom-quandle isomorphism");

    auto* enh = app.add_subcommand("enhance", "relation structure of two presentations");
    enh->add_option("--p1", p1s)->required();
    enh->add_option("--p2", p2s)->required();
    enh->add_option("--cover", cover_n, "odd base order for the families");
    enh->add_option("--grid", grid, "parameter grid lo..hi");

    auto* peirce = app.add_subcommand("peirce", "spectra of right multiplications");
    peirce->add_option("quandle", file)->required();
    peirce->add_option("--bound", bound);
    peirce->add_option("--denom", denom);

    auto* elem = app.add_subcommand("element", "inspect one ring element");
    elem->add_option("quandle", file)->required();
    elem->add_option("literal", literal, "e.g. \"2*e1 - e2 + (1/3)*e3\"")->required();

    auto* famc = app.add_subcommand("family", "verify a parametric family");
    famc->add_option("quandle", file)->required();
    famc->add_option("family", literal, "literal or file, e.g. \"a*e1+(1-a)*e2\"")
        ->required();

    auto* repro = app.add_subcommand("reproduce", "run the full reproduction suite");
    repro->add_option("--only", ropts.only,
                      "check groups: tables, medial-five, latin-trivial, commutative, "
                      "covering-families, z-families, colorings, hom-quandles, "
                      "enhancement, spectra, annihilator, augmentation");
    repro->add_option("--seed", ropts.seed, "seed for the randomized checks");

    CLI11_PARSE(app, argc, argv);
    Exec exec = serial ? Exec::serial : Exec::parallel;
    ropts.exec = exec;

    try {
        if (*validate) return cmd_validate(file, out);
        if (*cat) return cmd_catalog(order, out);
        if (*idem) return cmd_idem(file, ring, bound, denom, exec, out);
        if (*table) return cmd_idem_table(order, exec, out);
        if (*color) return cmd_color(pres, target, count_only, hom_table, compare, exec, out);
        if (*enh) return cmd_enhance(p1s, p2s, cover_n, grid, out);
        if (*peirce) return cmd_peirce(file, bound, denom, exec, out);
        if (*elem) return cmd_element(file, literal, out);
        if (*famc) return cmd_family(file, literal, out);
        if (*repro) return cmd_reproduce(ropts, out);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
