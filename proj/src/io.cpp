#include "qsym/io.hpp"

#include <fstream>
#include <sstream>

namespace qsym::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t as_index(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + ": expected index");
    return j.get<std::size_t>();
}

std::vector<std::size_t> index_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected array");
    std::vector<std::size_t> out;
    for (const auto& x : j) out.push_back(as_index(x, what));
    return out;
}

std::vector<std::size_t> slot_indices(const Subspace& s) { return s.pivots(); }

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError(std::string(what) + ": expected integers");
        out.push_back(x.get<int>());
    }
    return out;
}

bool plane_family(Family f) {
    CaseTag t = family_case(f);
    return t == CaseTag::h1 || (t == CaseTag::abelian && f != Family::f1a && f != Family::f1b && f != Family::f1c);
}

bool index_family(Family f) { return f == Family::f6 || f == Family::f8; }

json weights_to_json(const std::vector<Vec>& w, bool plane) {
    json a = json::array();
    for (const auto& v : w) a.push_back(plane ? to_json(v) : to_json(v.at(0)));
    return a;
}

std::vector<Vec> weights_from_json(const json& j, bool plane, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected array");
    std::vector<Vec> out;
    for (const auto& x : j) {
        Vec v = x.is_array() ? vec_from_json(x) : Vec{scalar_from_json(x)};
        if (v.size() != (plane ? 2u : 1u))
            throw ParseError(std::string(what) + (plane ? ": expected pairs" : ": expected scalars"));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

json to_json(const Scalar& x) {
    Scalar c = x;
    c.canonicalize();
    return format_scalar(c);
}

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) {
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("bad scalar \"" + j.get<std::string>() + "\"");
        }
    }
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw ParseError("scalar must be a \"p/q\" string or an integer");
}

json to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("vector must be an array");
    Vec v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

json to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r));
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != c) throw ParseError("matrix rows differ in length");
    return Matrix::from_rows(rows, c);
}

json algebra_to_json(const LieAlgebra& g) {
    json br = json::array();
    for (const auto& t : g.bracket_table()) {
        json co = json::array();
        for (const auto& [k, v] : t.coeffs) co.push_back(json::array({k, to_json(v)}));
        br.push_back({{"i", t.i}, {"j", t.j}, {"coeffs", co}});
    }
    return {{"dim", g.dim()}, {"basis", g.names()}, {"brackets", br}};
}

LieAlgebra algebra_from_json(const json& j) {
    std::size_t n = as_index(field(j, "dim"), "dim");
    std::vector<std::string> names;
    if (j.contains("basis")) {
        if (!j["basis"].is_array()) throw ParseError("basis: expected array of names");
        for (const auto& s : j["basis"]) {
            if (!s.is_string()) throw ParseError("basis: expected array of names");
            names.push_back(s.get<std::string>());
        }
        if (names.size() != n) throw ParseError("basis has " + std::to_string(names.size()) + " names, dim is " +
                                                std::to_string(n));
    }
    std::vector<BracketTerm> terms;
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw ParseError("brackets: expected array");
        for (const auto& b : j["brackets"]) {
            BracketTerm t{as_index(field(b, "i"), "i"), as_index(field(b, "j"), "j"), {}};
            if (t.i >= n || t.j >= n) throw ParseError("bracket index out of range");
            for (const auto& c : field(b, "coeffs")) {
                if (!c.is_array() || c.size() != 2) throw ParseError("coeffs: expected [k, \"p/q\"] pairs");
                std::size_t k = as_index(c[0], "coeffs");
                if (k >= n) throw ParseError("bracket index out of range");
                t.coeffs.emplace_back(k, scalar_from_json(c[1]));
            }
            terms.push_back(std::move(t));
        }
    }
    return LieAlgebra(n, names, terms);
}

json metric_to_json(const MetricLieAlgebraWithInvolution& m) {
    json j = algebra_to_json(m.g());
    j["form"] = to_json(m.form());
    j["theta"] = to_json(m.theta());
    return j;
}

MetricLieAlgebraWithInvolution metric_from_json(const json& j) {
    LieAlgebra g = algebra_from_json(j);
    Matrix form = matrix_from_json(field(j, "form"));
    Matrix theta = matrix_from_json(field(j, "theta"));
    if (form.rows() != g.dim() || form.cols() != g.dim()) throw ParseError("form has wrong shape");
    if (theta.rows() != g.dim() || theta.cols() != g.dim()) throw ParseError("theta has wrong shape");
    return MetricLieAlgebraWithInvolution(std::move(g), std::move(form), std::move(theta));
}

json involutive_to_json(const InvolutiveLie& l) {
    json j = algebra_to_json(l.alg);
    j["theta"] = to_json(l.theta);
    return j;
}

InvolutiveLie involutive_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s.rfind("abelian", 0) == 0 && s.size() > 7) {
            std::string digits = s.substr(7);
            if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3)
                throw ParseError("unknown case \"" + s + "\"");
            return case_abelian(std::stoul(digits));
        }
        auto t = case_from_name(s);
        if (!t) throw ParseError("unknown case \"" + s + "\"");
        return make_case(*t);
    }
    LieAlgebra g = algebra_from_json(j);
    Matrix theta = matrix_from_json(field(j, "theta"));
    if (theta.rows() != g.dim() || theta.cols() != g.dim()) throw ParseError("theta has wrong shape");
    return InvolutiveLie(std::move(g), std::move(theta));
}

json block_to_json(const BlockSpec& b) {
    json p = json::object();
    if (!b.weights.empty()) {
        json w = json::array();
        for (const auto& v : b.weights) w.push_back(to_json(v));
        p["weights"] = w;
    }
    switch (b.kind) {
        case BlockKind::su2_rho_k_plus: case BlockKind::su2_rho_k_minus: case BlockKind::su2_rho_prime_k:
        case BlockKind::sl2_rho_k_plus: case BlockKind::sl2_rho_k_minus: case BlockKind::sl2_rho_prime_k:
            p["k"] = b.k;
            break;
        case BlockKind::rho_zero: p["signature"] = b.signature; break;
        default: break;
    }
    return {{"kind", block_kind_name(b.kind)}, {"params", p}};
}

BlockSpec block_from_json(const json& j) {
    std::string name = field(j, "kind").get<std::string>();
    auto kind = block_kind_from_name(name);
    if (!kind) throw ParseError("unknown block kind \"" + name + "\"");
    json p = j.contains("params") ? j["params"] : json::object();
    BlockSpec b;
    b.kind = *kind;
    if (p.contains("weights"))
        for (const auto& w : p["weights"]) b.weights.push_back(vec_from_json(w));
    if (p.contains("k")) b.k = p["k"].get<int>();
    if (p.contains("signature")) {
        auto s = index_list(p["signature"], "signature");
        if (s.size() != 4) throw ParseError("signature: expected four counts");
        for (int i = 0; i < 4; ++i) b.signature[i] = s[i];
    }
    return b;
}

json module_to_json(const OrthogonalModule& m) {
    json rho = json::array();
    for (const auto& r : m.rho) rho.push_back(to_json(r));
    return {{"l", algebra_to_json(m.l.alg)},
            {"theta_l", to_json(m.l.theta)},
            {"rho", rho},
            {"form_a", to_json(m.form)},
            {"theta_a", to_json(m.theta)}};
}

OrthogonalModule module_from_json(const json& j, const std::optional<InvolutiveLie>& base) {
    InvolutiveLie l;
    if (j.contains("l")) {
        const json& lj = j["l"];
        if (lj.is_string()) {
            l = involutive_from_json(lj);
        } else {
            json full = lj;
            if (!full.contains("theta")) full["theta"] = field(j, "theta_l");
            l = involutive_from_json(full);
        }
        if (base && (base->alg.constants() != l.alg.constants() || base->theta != l.theta))
            throw ParseError("module is over a different (l, theta_l)");
    } else if (base) {
        l = *base;
    } else {
        throw ParseError("missing field \"l\"");
    }
    if (j.contains("blocks")) {
        std::vector<BlockSpec> specs;
        for (const auto& b : j["blocks"]) specs.push_back(block_from_json(b));
        std::array<std::size_t, 4> pad{0, 0, 0, 0};
        if (j.contains("padding")) {
            auto s = index_list(j["padding"], "padding");
            if (s.size() != 4) throw ParseError("padding: expected four counts");
            for (int i = 0; i < 4; ++i) pad[i] = s[i];
        }
        return build_sum(l, specs, pad);
    }
    OrthogonalModule m;
    m.l = l;
    for (const auto& r : field(j, "rho")) m.rho.push_back(matrix_from_json(r));
    m.form = matrix_from_json(field(j, "form_a"));
    m.theta = matrix_from_json(field(j, "theta_a"));
    std::size_t n = m.form.rows();
    if (m.rho.size() != l.dim()) throw ParseError("rho needs one matrix per basis vector of l");
    for (const auto& r : m.rho)
        if (r.rows() != n || r.cols() != n) throw ParseError("rho matrix has wrong shape");
    if (m.form.cols() != n || m.theta.rows() != n || m.theta.cols() != n) throw ParseError("form_a or theta_a has wrong shape");
    return m;
}

json cochain_to_json(const Cochain& c) {
    json vals = json::array();
    const auto& tuples = increasing_tuples(c.n(), c.degree());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (vec_is_zero(c.value(k))) continue;
        json v = c.value_dim() == 1 ? to_json(c.value(k)[0]) : to_json(c.value(k));
        vals.push_back({{"indices", tuples[k]}, {"value", v}});
    }
    return {{"degree", c.degree()}, {"values", vals}};
}

Cochain cochain_from_json(const json& j, std::size_t n, std::size_t m) {
    std::size_t p = as_index(field(j, "degree"), "degree");
    Cochain c(n, p, m);
    if (!j.contains("values")) return c;
    for (const auto& e : j["values"]) {
        auto idx = index_list(field(e, "indices"), "indices");
        if (idx.size() != p) throw ParseError("indices do not match the degree");
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= n) throw ParseError("cochain index out of range");
            if (i > 0 && idx[i] <= idx[i - 1]) throw ParseError("cochain indices must be increasing");
        }
        const json& v = field(e, "value");
        Vec val = v.is_array() ? vec_from_json(v) : Vec{scalar_from_json(v)};
        if (val.size() != m) throw ParseError("cochain value has wrong dimension");
        c.set(idx, val);
    }
    return c;
}

json cocycle_to_json(const QuadraticCocycle& z) {
    return {{"alpha", cochain_to_json(z.alpha)}, {"gamma", cochain_to_json(z.gamma)}};
}

QuadraticCocycle cocycle_from_json(const json& j, const OrthogonalModule& m) {
    QuadraticCocycle z{cochain_from_json(field(j, "alpha"), m.l.dim(), m.dim()),
                       cochain_from_json(field(j, "gamma"), m.l.dim(), 1)};
    if (z.alpha.degree() != 2) throw ParseError("alpha must have degree 2");
    if (z.gamma.degree() != 3) throw ParseError("gamma must have degree 3");
    return z;
}

json model_to_json(const StandardModel& d) {
    json j = metric_to_json(d.g);
    j["markers"] = {{"l_star", slot_indices(d.l_star())}, {"a", slot_indices(d.a_slot())}, {"l", slot_indices(d.l_slot())}};
    return j;
}

json params_to_json(Family f, const CatalogParams& p) {
    json j = json::object();
    if (f == Family::f7) {
        j["p"] = p.p;
    } else if (index_family(f)) {
        j["k"] = p.k;
        j["l"] = p.l;
        j["m"] = p.m;
    } else {
        bool plane = plane_family(f);
        j["lambda"] = weights_to_json(p.lambda, plane);
        j["mu"] = weights_to_json(p.mu, plane);
        j["p"] = p.lambda.size();
        j["q"] = p.mu.size();
    }
    if (f == Family::f1c) j["nu"] = to_json(p.nu);
    if (f == Family::f3a || f == Family::f4a) j["kappa"] = p.kappa;
    if (f == Family::f3d || f == Family::f4d) j["r"] = to_json(p.r);
    if (f == Family::f6 || f == Family::f7 || f == Family::f8) j["c"] = to_json(p.c);
    return j;
}

CatalogParams params_from_json(Family f, const json& j) {
    if (!j.is_object()) throw ParseError("params must be an object");
    static const std::vector<std::string> known{"lambda", "mu", "p", "q", "nu", "kappa", "r", "c", "k", "l", "m"};
    for (const auto& [key, v] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError("unknown parameter \"" + key + "\"");
    CatalogParams p;
    bool plane = plane_family(f);
    if (j.contains("lambda")) p.lambda = weights_from_json(j["lambda"], plane, "lambda");
    if (j.contains("mu")) p.mu = weights_from_json(j["mu"], plane, "mu");
    if (f == Family::f7) {
        if (j.contains("p")) p.p = as_index(j["p"], "p");
    } else {
        if (j.contains("p") && as_index(j["p"], "p") != p.lambda.size())
            throw ParseError("p does not match the number of lambda entries");
        if (j.contains("q") && as_index(j["q"], "q") != p.mu.size())
            throw ParseError("q does not match the number of mu entries");
    }
    if (j.contains("nu")) p.nu = scalar_from_json(j["nu"]);
    if (j.contains("kappa")) {
        if (!j["kappa"].is_number_integer()) throw ParseError("kappa must be 1 or -1");
        p.kappa = j["kappa"].get<int>();
    }
    if (j.contains("r")) p.r = scalar_from_json(j["r"]);
    if (j.contains("c")) p.c = scalar_from_json(j["c"]);
    if (j.contains("k")) p.k = int_list(j["k"], "k");
    if (j.contains("l")) p.l = int_list(j["l"], "l");
    if (j.contains("m")) p.m = int_list(j["m"], "m");
    return p;
}

json entry_to_json(const CatalogEntry& e) {
    return {{"family", family_name(e.family)}, {"params", params_to_json(e.family, e.params)}};
}

CatalogEntry entry_from_json(const json& j) {
    const json& fj = field(j, "family");
    std::string name = fj.is_string() ? fj.get<std::string>() : fj.dump();
    auto f = family_from_name(name);
    if (!f) throw ParseError("unknown family \"" + name + "\"");
    return {*f, params_from_json(*f, j.contains("params") ? j["params"] : json::object())};
}

json instance_to_json(const Instance& inst) {
    json j = model_to_json(inst.model);
    j["provenance"] = entry_to_json(inst.entry);
    return j;
}

json witness_to_json(const HermitianWitness& w) { return {{"F_l", to_json(w.F_l)}, {"F_a", to_json(w.F_a)}}; }

HermitianWitness witness_from_json(const json& j) {
    return {matrix_from_json(field(j, "F_l")), matrix_from_json(field(j, "F_a"))};
}

json report_to_json(const SymmetricTripleReport& r) {
    return {{"S1", r.S1}, {"S2", r.S2}, {"S3", r.S3}, {"two_of_three_consistent", r.two_of_three_consistent}};
}

json report_to_json(const ModuleReport& r) {
    json j = {{"homomorphism", r.homomorphism},
              {"skew", r.skew},
              {"theta_isometric_involution", r.theta_isometric_involution},
              {"compatible", r.compatible},
              {"ok", r.ok()}};
    if (!r.first_violation.empty()) j["first_violation"] = r.first_violation;
    return j;
}

json report_to_json(const AdmissibilityReport& r) {
    auto chain = [](const std::vector<std::pair<std::size_t, bool>>& v) {
        json a = json::array();
        for (const auto& [k, ok] : v) a.push_back({{"k", k}, {"holds", ok}});
        return a;
    };
    return {{"T1", r.T1},         {"semisimple", r.semisimple}, {"T2", r.T2},
            {"A0", r.A0},         {"B0", r.B0},                 {"Ak", chain(r.Ak)},
            {"Bk", chain(r.Bk)},  {"admissible", r.admissible}, {"method", method_name(r.method)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << dump(j);
}

}  // namespace qsym::io
