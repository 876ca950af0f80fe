// bggwb: command-line front end for the workbench library.
// Exit status: 0 success, 1 mathematical failure or refutation, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bggwb/bgg.hpp"
#include "bggwb/errors.hpp"
#include "bggwb/filtered.hpp"
#include "bggwb/io.hpp"
#include "bggwb/models.hpp"
#include "bggwb/pages.hpp"

using namespace bggwb;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct Globals {
    std::string field;
    std::string format = "text";

    std::optional<Field> field_override() const {
        if (field.empty()) return std::nullopt;
        return Field::parse(field);
    }
    bool csv() const { return format == "csv"; }
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
        std::cout << "wrote " << out << "\n";
    }
}

FilteredFreeComplex with_precision(const FilteredFreeComplex& k, int n) {
    FilteredFreeComplex out(k.field(), k.nvars(), n, k.n_lo(), k.ranks());
    for (int s = k.n_lo(); s < k.n_hi(); ++s) out.set_differential(s, k.differential(s));
    require_valid(out, "precision override");
    return out;
}

// drops the header line of every CSV block but the first
std::string join_csv(const std::vector<std::string>& blocks) {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i == 0) {
            out += blocks[i];
            continue;
        }
        const auto nl = blocks[i].find('\n');
        out += nl == std::string::npos ? std::string() : blocks[i].substr(nl + 1);
    }
    return out;
}

int cmd_validate(const Globals& g, const std::string& path) {
    try {
        const auto obj = parse_file(path, g.field_override());
        std::cout << "valid " << schema_name(obj) << "\n";
        return kOk;
    } catch (const InvariantViolation& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kRefuted;
    }
}

int cmd_bgg(const Globals& g, const std::string& path, const std::string& out) {
    const auto l = build_bgg(read_emodule_file(path, g.field_override()));
    if (out.empty()) {
        std::cout << serialize(l);
    } else {
        write_text_file(out, serialize(l));
        std::cout << l.to_string();
    }
    return kOk;
}

int cmd_betti(const Globals& g, const std::string& path, int imax, const std::string& method) {
    const auto m = read_emodule_file(path, g.field_override());
    const auto table =
        betti_table(m, imax < 0 ? default_imax(m) : imax, method == "syzygies" ? BettiMethod::syzygies : BettiMethod::koszul);
    std::cout << (g.csv() ? table.to_csv() : table.to_text());
    return kOk;
}

int cmd_regularity(const Globals& g, const std::string& path, const std::string& route, int truncation, int imax) {
    const auto q = read_emodule_file(path, g.field_override());
    const auto p = dual_module(q);
    const int T = truncation > 0 ? truncation : default_truncation(p);
    const int I = imax >= 0 ? imax : std::max(default_imax(q), T);
    if (route == "def") {
        const auto r = regularity_definition_route(q, I);
        std::cout << r.summary() << "\n";
        for (const auto& e : r.evidence) std::cout << "  " << e << "\n";
        return kOk;
    }
    if (route == "bgg") {
        const auto r = regularity_via_bgg(p, T);
        std::cout << r.summary() << "\n";
        for (const auto& e : r.evidence) std::cout << "  " << e << "\n";
        return kOk;
    }
    const auto def = regularity_definition_route(q, I);
    const auto bgg = regularity_via_bgg(p, T);
    if (def.m == bgg.m) {
        std::cout << "m = " << def.m << " (both routes agree; T=" << T << ", imax=" << I << ")\n";
        return kOk;
    }
    std::cout << "routes disagree: definition m = " << def.m << " (imax=" << I << "), bgg m = " << bgg.m << " (T=" << T
              << ")\n";
    return kRefuted;
}

int cmd_model(const Globals& g, const std::string& kind, int dim, int genus, const std::string& which,
              const std::string& out) {
    ModelSpec spec;
    spec.kind = parse_model_kind(kind);
    spec.field = g.field_override().value_or(Field::rationals());
    if (spec.kind == ModelKind::abelian) {
        if (dim < 0) throw PreconditionError("model abelian needs --dim");
        spec.param = dim;
    } else if (spec.kind == ModelKind::curve || spec.kind == ModelKind::curve_times_p1) {
        if (genus < 0) throw PreconditionError("model " + kind + " needs --genus");
        spec.param = genus;
    }
    const auto m = generate(spec);
    emit(serialize(which == "p" ? m.p : m.q), out);
    return kOk;
}

int cmd_theorem_a(const Globals& g, const std::vector<std::string>& files, int truncation, int imax) {
    std::vector<GradedEModule> summands;
    for (const auto& f : files) summands.push_back(read_emodule_file(f, g.field_override()));
    const auto rep = verify_theorem_a(summands, truncation, imax);
    std::cout << rep.summary() << "\n";
    for (const auto& n : rep.notes) std::cout << "  " << n << "\n";
    for (const auto& f : rep.failures) std::cout << "  FAILED: " << f << "\n";
    if (g.csv())
        std::cout << rep.betti.to_csv();
    else
        std::cout << rep.betti.to_text();
    return rep.passed ? kOk : kRefuted;
}

FilteredFreeComplex load_complex(const Globals& g, const std::string& path, int precision = -1) {
    auto k = read_rcomplex_file(path, g.field_override());
    return precision >= 0 ? with_precision(k, precision) : k;
}

int cmd_ss_validate(const Globals& g, const std::string& path) {
    try {
        const auto k = load_complex(g, path);
        const auto red = reduce_mod_m(k);
        std::cout << "valid rcomplex/1: spots " << k.n_lo() << ".." << k.n_hi() << ", precision N=" << k.precision()
                  << ", " << homogeneous_degree(k).to_string() << "\n";
        for (int n = k.n_lo(); n <= k.n_hi(); ++n) std::cout << "  dim H^" << n << "(K (x) k) = " << red.at(n) << "\n";
        return kOk;
    } catch (const InvariantViolation& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kRefuted;
    }
}

int cmd_ss_pages(const Globals& g, const std::string& path, int max_page, int pmax, int precision) {
    const auto k = load_complex(g, path, precision);
    if (max_page < 1) throw PreconditionError("--max-page must be at least 1");
    const int P = pmax >= 0 ? pmax : k.precision() - max_page;
    std::vector<std::string> blocks;
    for (int r = 1; r <= max_page; ++r) {
        const auto page = compute_page(k, r, P);
        blocks.push_back(g.csv() ? page.to_csv() : page.to_text());
    }
    if (g.csv()) {
        std::cout << join_csv(blocks);
    } else {
        for (const auto& b : blocks) std::cout << b << "\n";
    }
    return kOk;
}

int cmd_ss_criterion(const Globals& g, const std::string& path, int r, int kmax) {
    const auto k = load_complex(g, path);
    const auto v = check_degeneration_criterion(k, r, kmax >= 0 ? kmax : k.precision());
    std::cout << v.to_string() << "\n";
    return v.holds ? kOk : kRefuted;
}

int cmd_ss_degeneration(const Globals& g, const std::string& path, int r, int pmax) {
    const auto k = load_complex(g, path);
    const auto v = degenerates_at(k, r, pmax >= 0 ? pmax : k.precision());
    std::cout << v.to_string() << "\n";
    return v.degenerates ? kOk : kRefuted;
}

int cmd_ss_induce(const Globals& g, const std::string& path, int top, const std::string& out) {
    const auto k = load_complex(g, path);
    emit(serialize(induce_emodule(k, top)), out);
    return kOk;
}

int cmd_ss_e1(const Globals& g, const std::string& path, int pmax) {
    const auto k = load_complex(g, path);
    const auto b = e1_total_complex(k, pmax >= 0 ? pmax : k.precision() - 1);
    std::cout << b.to_string() << "\n";
    return b.isomorphic ? kOk : kRefuted;
}

int cmd_ss_predict(const Globals& g, const std::string& path, int truncation) {
    const auto k = load_complex(g, path);
    const auto v = predict_vanishing(k, truncation >= 0 ? truncation : default_vanishing_truncation(k));
    std::cout << v.to_string() << "\n";
    return v.consistent() ? kOk : kRefuted;
}

int cmd_ss_sum(const Globals& g, const std::vector<std::string>& files, const std::string& out) {
    std::vector<FilteredFreeComplex> parts;
    for (const auto& f : files) parts.push_back(load_complex(g, f));
    emit(serialize(sum_complexes(parts)), out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exterior-module regularity, BGG linearization and m-adic spectral sequences"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--field", g.field, "Field override: QQ or fp:<p>");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "csv"}));

    std::string file, out, route = "both", kind, which = "q", method = "koszul";
    std::vector<std::string> files;
    int imax = -1, truncation = 0, dim = -1, genus = -1, r = 1, max_page = 1, pmax = -1, precision = -1, top = 0,
        kmax = -1;

    auto* validate = app.add_subcommand("validate", "Parse and validate a workbench file");
    validate->add_option("file", file)->required();

    auto* bgg = app.add_subcommand("bgg", "Build the linear complex L(P) of an E-module");
    bgg->add_option("emodule", file)->required();
    bgg->add_option("--out", out);

    auto* betti = app.add_subcommand("betti", "Betti table of an E-module");
    betti->add_option("emodule", file)->required();
    betti->add_option("--imax", imax);
    betti->add_option("--method", method)->check(CLI::IsMember({"koszul", "syzygies"}));

    auto* regularity = app.add_subcommand("regularity", "Regularity of an E-module in non-positive degrees");
    regularity->add_option("emodule", file)->required();
    regularity->add_option("--route", route)->check(CLI::IsMember({"def", "bgg", "both"}));
    regularity->add_option("--truncation", truncation);
    regularity->add_option("--imax", imax);

    auto* model = app.add_subcommand("model", "Write a model module (Q by default)");
    model->add_option("kind", kind)->required();
    auto* dim_opt = model->add_option("--dim", dim);
    model->add_option("--genus", genus)->excludes(dim_opt);
    model->add_option("--module", which)->check(CLI::IsMember({"p", "q"}));
    model->add_option("--out", out);

    auto* theorem = app.add_subcommand("verify-theorem-a", "Check the decomposition Q = sum Q^j(j)");
    theorem->add_option("summands", files)->required();
    theorem->add_option("--truncation", truncation);
    theorem->add_option("--imax", imax);

    auto* ss = app.add_subcommand("ss", "Spectral sequence of a filtered free complex");
    ss->require_subcommand(1);
    ss->fallthrough();
    auto* ss_validate = ss->add_subcommand("validate", "Validate a complex");
    ss_validate->add_option("rcomplex", file)->required();
    auto* ss_pages = ss->add_subcommand("pages", "Pages E_1..E_R");
    ss_pages->add_option("rcomplex", file)->required();
    ss_pages->add_option("--max-page", max_page)->required();
    ss_pages->add_option("--pmax", pmax)->required();
    ss_pages->add_option("--precision", precision);
    auto* ss_criterion = ss->add_subcommand("criterion", "Degeneration criterion at E_{r+1}");
    ss_criterion->add_option("rcomplex", file)->required();
    ss_criterion->add_option("-r", r)->required();
    ss_criterion->add_option("--kmax", kmax);
    auto* ss_degen = ss->add_subcommand("degeneration", "Degeneration at E_r");
    ss_degen->add_option("rcomplex", file)->required();
    ss_degen->add_option("-r", r)->required();
    ss_degen->add_option("--pmax", pmax);
    auto* ss_induce = ss->add_subcommand("induce", "Induced E-module on H(K (x) k)");
    ss_induce->add_option("rcomplex", file)->required();
    ss_induce->add_option("--top-degree", top)->required();
    ss_induce->add_option("--out", out);
    auto* ss_e1 = ss->add_subcommand("e1-check", "Compare the total E_1 complex with L(P_K)");
    ss_e1->add_option("rcomplex", file)->required();
    ss_e1->add_option("--pmax", pmax);
    auto* ss_predict = ss->add_subcommand("predict-vanishing", "Certify H^n(K) = 0 from exactness of L(P_K)");
    ss_predict->add_option("rcomplex", file)->required();
    ss_predict->add_option("--truncation", truncation);
    auto* ss_sum = ss->add_subcommand("sum", "Direct sum of complexes");
    ss_sum->add_option("files", files)->required();
    ss_sum->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*validate) return cmd_validate(g, file);
        if (*bgg) return cmd_bgg(g, file, out);
        if (*betti) return cmd_betti(g, file, imax, method);
        if (*regularity) return cmd_regularity(g, file, route, truncation, imax);
        if (*model) return cmd_model(g, kind, dim, genus, which, out);
        if (*theorem) return cmd_theorem_a(g, files, truncation, imax);
        if (*ss_validate) return cmd_ss_validate(g, file);
        if (*ss_pages) return cmd_ss_pages(g, file, max_page, pmax, precision);
        if (*ss_criterion) return cmd_ss_criterion(g, file, r, kmax);
        if (*ss_degen) return cmd_ss_degeneration(g, file, r, pmax);
        if (*ss_induce) return cmd_ss_induce(g, file, top, out);
        if (*ss_e1) return cmd_ss_e1(g, file, pmax);
        if (*ss_predict) return cmd_ss_predict(g, file, truncation > 0 ? truncation : -1);
        if (*ss_sum) return cmd_ss_sum(g, files, out);
    } catch (const InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRefuted;
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
