#include "qsym/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace qsym;
using io::json;

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kFailed = 1;    // the checked property does not hold
constexpr int kUsage = 2;     // bad arguments or unreadable input
constexpr int kInvalid = 3;   // input violates an axiom or a hard constraint

struct Exit {
    int code;
    std::string message;
};

/* inline JSON when the argument looks like JSON, else a path; bare words become JSON strings */
json load_arg(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return io::parse(arg);
    if (std::filesystem::exists(arg)) return io::read_file(arg);
    if (!arg.empty() && arg.find('/') == std::string::npos && arg.find('.') == std::string::npos) return json(arg);
    throw io::ParseError("cannot read " + arg);
}

void emit(const json& j) { std::cout << io::dump(j); }

json signature_json(const Signature& s) { return {{"minus", s.n_minus}, {"plus", s.n_plus}, {"zero", s.n_zero}}; }

json basis_json(const Subspace& s) {
    json a = json::array();
    for (const auto& v : s.vectors()) a.push_back(io::to_json(v));
    return a;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

int cmd_check(const std::string& path) {
    MetricLieAlgebraWithInvolution g = io::metric_from_json(load_arg(path));
    SymmetricTripleReport tr = check_symmetric_triple(g);
    EigenSplit sp = eigensplit(g);
    Subspace ideal = canonical_ideal(g.g());
    bool triple = tr.S1 && tr.S2 && tr.S3;

    json out;
    out["axioms"] = {{"jacobi", true}, {"invariant_form", true}, {"theta_isometric_involution", true}};
    out["symmetric_triple"] = io::report_to_json(tr);
    out["eigensplit"] = {{"plus", sp.plus.dim()}, {"minus", sp.minus.dim()}};
    out["signature"] = signature_json(form_signature(g.form()));
    Signature ms = minus_signature(g);
    out["minus_signature"] = signature_json(ms);
    std::size_t index = ms.n_minus;
    out["index"] = index;
    out["ideal"] = {{"dim", ideal.dim()}, {"basis", basis_json(ideal)}};
    if (!ideal.is_zero()) {
        try {
            QuadraticExtension ext = canonical_quotients(g, ideal);
            auto [ap, am] = module_signatures(ext.a);
            auto tag = recognize_case(ext.a.l);
            out["canonical_extension"] = {{"l", {{"dim", ext.a.l.dim()}, {"case", tag ? json(case_name(*tag)) : json()}}},
                                          {"a", {{"dim", ext.a.dim()}, {"plus", signature_json(ap)}, {"minus", signature_json(am)}}},
                                          {"balanced", balanced_check(ext)},
                                          {"extension_violation", extension_violation(ext)}};
        } catch (const std::exception& e) {
            out["canonical_extension"] = {{"error", e.what()}};
        }
    }
    emit(out);
    std::cerr << "symmetric triple: " << yes(triple) << "; index: " << index << "; dim i(g): " << ideal.dim() << "\n";
    if (ideal.is_zero()) std::cerr << "i(g) = 0\n";
    return triple ? kOk : kFailed;
}

CatalogEntry entry_arg(const std::string& family, const std::string& params) {
    auto f = family_from_name(family);
    if (!f) throw Exit{kUsage, "unknown family \"" + family + "\""};
    json pj = params.empty() ? json::object() : load_arg(params);
    return {*f, io::params_from_json(*f, pj)};
}

int cmd_build(const std::string& family, const std::string& params, const std::string& out_path, std::size_t max_dim) {
    CatalogEntry raw = entry_arg(family, params);
    Validation v = validate_params(raw);
    if (!v.ok) {
        for (const auto& d : v.diagnostics) std::cerr << "invalid: " << d << "\n";
        return kInvalid;
    }
    CatalogEntry e = canonicalize_params(raw.family, raw.params);
    std::size_t dim = model_dimension(entry_data(e));
    if (max_dim && dim > max_dim)
        throw Exit{kInvalid, "model dimension " + std::to_string(dim) + " exceeds --max-dim " + std::to_string(max_dim)};
    Instance inst = instantiate(e);
    json model = io::instance_to_json(inst);
    std::size_t index = index_on_minus(inst.model.g);
    if (out_path.empty()) {
        emit(model);
    } else {
        io::write_file(out_path, model);
        emit({{"entry", io::entry_to_json(e)}, {"dim", dim}, {"index", index}, {"path", out_path}});
    }
    std::cerr << "built " << entry_label(e) << ": dim " << dim << ", index " << index << "\n";
    return kOk;
}

int cmd_canon(const std::string& family, const std::string& params) {
    CatalogEntry raw = entry_arg(family, params);
    CatalogEntry e = canonicalize_params(raw.family, raw.params);
    emit(io::entry_to_json(e));
    std::cerr << entry_label(e) << "\n";
    return kOk;
}

std::vector<Scalar> scalar_list(const std::vector<std::string>& v) {
    std::vector<Scalar> out;
    for (const auto& s : v) out.push_back(parse_scalar(s));
    return out;
}

int cmd_catalog_verify(const DeskLimits& lim, const std::vector<std::string>& families) {
    std::vector<Instance> insts;
    json rows = json::array();
    std::size_t failed = 0;
    for (const auto& e : desk_suite(lim)) {
        if (!families.empty() && std::find(families.begin(), families.end(), family_name(e.family)) == families.end())
            continue;
        json row = {{"entry", io::entry_to_json(e)}, {"label", entry_label(e)}};
        try {
            insts.push_back(instantiate(e));
            row["dim"] = insts.back().model.g.dim();
            row["ok"] = true;
        } catch (const std::exception& ex) {
            row["ok"] = false;
            row["error"] = ex.what();
            ++failed;
        }
        std::cerr << (row["ok"].get<bool>() ? "PASS " : "FAIL ") << row["label"].get<std::string>() << "\n";
        rows.push_back(row);
    }
    json col = json::array();
    for (const auto& c : invariant_collisions(insts)) {
        col.push_back({entry_label(c.a), entry_label(c.b)});
        std::cerr << "COLLISION " << entry_label(c.a) << " | " << entry_label(c.b) << "\n";
    }
    emit({{"entries", rows}, {"passed", rows.size() - failed}, {"failed", failed}, {"collisions", col}});
    std::cerr << rows.size() - failed << "/" << rows.size() << " entries verified, " << col.size() << " collisions\n";
    return failed == 0 && col.empty() ? kOk : kFailed;
}

struct Triple {
    OrthogonalModule m;
    QuadraticCocycle z;
};

Triple load_triple(const std::string& l_arg, const std::string& m_arg, const std::string& z_arg) {
    InvolutiveLie l = io::involutive_from_json(load_arg(l_arg));
    OrthogonalModule m = io::module_from_json(load_arg(m_arg), l);
    QuadraticCocycle z = io::cocycle_from_json(load_arg(z_arg), m);
    return {std::move(m), std::move(z)};
}

int cmd_cocycle_check(const std::string& l_arg, const std::string& m_arg, const std::string& z_arg) {
    Triple t = load_triple(l_arg, m_arg, z_arg);
    ModuleReport mr = check_orthogonal_module(t.m);
    json out;
    out["module"] = io::report_to_json(mr);
    if (!mr.ok()) {
        emit(out);
        throw Exit{kInvalid, "not an orthogonal module: " + mr.first_violation};
    }
    bool d_alpha = d_module(t.m, t.z.alpha).is_zero();
    Cochain rhs = wedge_pair(t.z.alpha, t.z.alpha, t.m.form) * Scalar(1, 2);
    bool d_gamma = d_scalar(t.m.l.alg, t.z.gamma) == rhs;
    bool cocycle = d_alpha && d_gamma;
    out["d_alpha_zero"] = d_alpha;
    out["d_gamma_equation"] = d_gamma;
    out["cocycle"] = cocycle;
    out["theta_fixed"] = is_theta_fixed(t.m, t.z);
    emit(out);
    std::cerr << "quadratic cocycle: " << yes(cocycle) << "; theta-fixed: " << yes(out["theta_fixed"].get<bool>()) << "\n";
    return cocycle ? kOk : kFailed;
}

int cmd_admissible(const std::string& l_arg, const std::string& m_arg, const std::string& z_arg) {
    Triple t = load_triple(l_arg, m_arg, z_arg);
    ModuleReport mr = check_orthogonal_module(t.m);
    if (!mr.ok()) throw Exit{kInvalid, "not an orthogonal module: " + mr.first_violation};
    if (!is_quadratic_cocycle(t.m, t.z)) throw Exit{kInvalid, "not a quadratic cocycle"};
    if (!is_theta_fixed(t.m, t.z)) throw Exit{kInvalid, "cocycle is not Theta-fixed"};
    AdmissibilityReport r = admissible_class_check(t.m, t.z);
    json out = io::report_to_json(r);
    try {
        out["indecomposable"] = indecomposable_class_check(t.m, t.z);
    } catch (const UnsupportedError&) {
        out["indecomposable"] = nullptr;
    }
    emit(out);
    std::cerr << "admissible: " << yes(r.admissible) << " (" << method_name(r.method) << ")\n";
    return r.admissible ? kOk : kFailed;
}

int cmd_hermitian(const std::string& entry_arg_s, const std::string& witness_path, bool search, int bound) {
    CatalogEntry e = io::entry_from_json(load_arg(entry_arg_s));
    Validation v = validate_params(e);
    if (!v.ok) {
        for (const auto& d : v.diagnostics) std::cerr << "invalid: " << d << "\n";
        return kInvalid;
    }
    json out = {{"entry", io::entry_to_json(e)}, {"in_list", in_hermitian_list(e)}};
    std::optional<HermitianWitness> w;
    if (!witness_path.empty()) {
        w = io::witness_from_json(load_arg(witness_path));
    } else if (search) {
        EntryData d = entry_data(e);
        w = hermitian_witness_search(d.a, d.z, bound);
    } else if (in_hermitian_list(e)) {
        w = hermitian_witness_for(e);
    }
    if (!w) {
        out["witness"] = nullptr;
        out["verified"] = false;
        emit(out);
        std::cerr << entry_label(e) << ": no witness" << (search ? " in the search space" : "") << "\n";
        return kFailed;
    }
    EntryData d = entry_data(e);
    std::string why = (w->F_l.rows() == d.l.dim() && w->F_a.rows() == d.a.dim()) ? hermitian_violation(d.a, d.z, *w)
                                                                                : std::string("witness has wrong shape");
    out["witness"] = io::witness_to_json(*w);
    out["verified"] = why.empty();
    if (!why.empty()) out["violation"] = why;
    emit(out);
    std::cerr << entry_label(e) << ": witness " << (why.empty() ? "verified" : "rejected: " + why) << "\n";
    return why.empty() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsym: quadratic extensions and index-2 symmetric triples over Q"};
    app.require_subcommand(1);
    std::size_t max_dim = 0;
    app.add_option("--max-dim", max_dim, "bound on generated model dimensions (0: none)");

    std::string path;
    auto* check = app.add_subcommand("check", "axioms, eigensplit, index, i(g) and canonical quotients of a model");
    check->add_option("model", path, "metric Lie algebra with involution (JSON)")->required();

    std::string family, params, out_path;
    auto* build = app.add_subcommand("build", "instantiate a catalog entry");
    build->add_option("family", family, "1a, ..., 8")->required();
    build->add_option("params", params, "parameters: inline JSON or path");
    build->add_option("-o,--out", out_path, "write the model here");

    auto* canon = app.add_subcommand("canon", "canonical representative of catalog parameters");
    canon->add_option("family", family)->required();
    canon->add_option("params", params);

    DeskLimits lim;
    std::vector<std::string> weights, r_values, c_values, families;
    auto* verify = app.add_subcommand("catalog-verify", "instantiate and verify the desk suite");
    verify->add_option("--max-pq", lim.max_pq);
    verify->add_option("--max-pq-plane", lim.max_pq_plane);
    verify->add_option("--weights", weights)->delimiter(',');
    verify->add_option("--r-values", r_values)->delimiter(',');
    verify->add_option("--c-values", c_values)->delimiter(',');
    verify->add_option("--max-index-sum", lim.max_index_sum);
    verify->add_option("--max-p7", lim.max_p7);
    verify->add_option("--family", families, "restrict to these families")->delimiter(',');

    std::string l_arg, m_arg, z_arg;
    auto* cocycle = app.add_subcommand("cocycle-check", "quadratic cocycle conditions");
    auto* adm = app.add_subcommand("admissible", "admissibility of a Theta-fixed class");
    for (auto* sub : {cocycle, adm}) {
        sub->add_option("l", l_arg, "(l, theta_l): JSON path or case name")->required();
        sub->add_option("module", m_arg, "orthogonal module JSON")->required();
        sub->add_option("cocycle", z_arg, "cocycle JSON {alpha, gamma}")->required();
    }

    std::string entry_s, witness_path;
    bool search = false;
    int bound = 2;
    auto* herm = app.add_subcommand("hermitian", "verify or produce a Hermitian witness");
    herm->add_option("entry", entry_s, "entry JSON {family, params}")->required();
    herm->add_option("witness", witness_path, "witness JSON {F_l, F_a}");
    herm->add_flag("--search", search, "search integer complex structures instead of the stored witness");
    herm->add_option("--bound", bound, "entry bound for --search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*check) return cmd_check(path);
        if (*build) return cmd_build(family, params, out_path, max_dim);
        if (*canon) return cmd_canon(family, params);
        if (*verify) {
            if (!weights.empty()) lim.weights = scalar_list(weights);
            if (!r_values.empty()) lim.r_values = scalar_list(r_values);
            if (!c_values.empty()) lim.c_values = scalar_list(c_values);
            lim.max_dim = max_dim;
            return cmd_catalog_verify(lim, families);
        }
        if (*cocycle) return cmd_cocycle_check(l_arg, m_arg, z_arg);
        if (*adm) return cmd_admissible(l_arg, m_arg, z_arg);
        if (*herm) return cmd_hermitian(entry_s, witness_path, search, bound);
    } catch (const Exit& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const JacobiError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
