#include "doctest.h"
#include "qsym/io.hpp"
#include "support.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qsym;
using namespace qsym::testing;
using io::json;

namespace {

struct Run {
    int rc;
    std::string out, err;
};

std::string tmpdir() {
    static std::string dir = [] {
        auto p = std::filesystem::temp_directory_path() / ("qsym_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(p);
        return p.string();
    }();
    return dir;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Run run(const std::vector<std::string>& args) {
    const char* cli = std::getenv("QSYM_CLI");
    REQUIRE_MESSAGE(cli, "QSYM_CLI is not set");
    std::string cmd = quote(cli);
    for (const auto& a : args) cmd += " " + quote(a);
    std::string out = tmpdir() + "/out.txt", err = tmpdir() + "/err.txt";
    int st = std::system((cmd + " >" + out + " 2>" + err).c_str());
    int rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return {rc, slurp(out), slurp(err)};
}

std::string write_tmp(const std::string& name, const json& j) {
    std::string p = tmpdir() + "/" + name;
    io::write_file(p, j);
    return p;
}

}  // namespace

TEST_CASE("scalar and matrix JSON") {
    CHECK(io::to_json(Scalar(-3, 6)) == json("-1/2"));
    CHECK(io::to_json(Scalar(4)) == json("4"));
    CHECK(io::scalar_from_json(json("6/4")) == Scalar(3, 2));
    CHECK(io::scalar_from_json(json(-7)) == -7);
    CHECK_THROWS_AS(io::scalar_from_json(json(0.5)), io::ParseError);
    CHECK_THROWS_AS(io::scalar_from_json(json("x/2")), io::ParseError);
    Rng rng(1);
    Matrix m = rnd_matrix(rng, 2, 3);
    CHECK(io::matrix_from_json(io::to_json(m)) == m);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[\"1\"],[\"1\",\"2\"]]")), io::ParseError);
}

TEST_CASE("algebra, metric and module JSON round trips") {
    for (CaseTag t : all_cases()) {
        InvolutiveLie l = make_case(t);
        CHECK(io::algebra_from_json(io::algebra_to_json(l.alg)).constants() == l.alg.constants());
        InvolutiveLie back = io::involutive_from_json(io::involutive_to_json(l));
        CHECK(back.theta == l.theta);
        CHECK(io::involutive_from_json(json(case_name(t))).alg.constants() == l.alg.constants());
    }
    CHECK(io::involutive_from_json(json("abelian1")).dim() == 1);
    CHECK_THROWS_AS(io::involutive_from_json(json("so3")), io::ParseError);

    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        CaseTag t = all_cases()[rnd_index(rng, all_cases().size())];
        InvolutiveLie l = rnd_case_algebra(rng, t);
        OrthogonalModule m = rnd_module(rng, l, t, 4);
        OrthogonalModule mb = io::module_from_json(io::module_to_json(m));
        CHECK(mb.rho == m.rho);
        CHECK(mb.form == m.form);
        CHECK(mb.theta == m.theta);
        QuadraticCocycle z = rnd_cocycle(rng, m);
        CHECK(io::cocycle_from_json(io::cocycle_to_json(z), m) == z);
        StandardModel d = build_standard_model(m, rnd_fixed_cocycle(rng, m));
        json j = io::model_to_json(d);
        auto g = io::metric_from_json(j);
        CHECK(g.g().constants() == d.g.g().constants());
        CHECK(g.form() == d.g.form());
        CHECK(g.theta() == d.g.theta());
        CHECK(j["markers"]["l_star"].size() == d.n());
        CHECK(j["markers"]["a"].size() == d.m());
        CHECK(j["markers"]["l"][0] == d.l_offset());
    }
}

TEST_CASE("module JSON from blocks") {
    json j = io::parse(R"({"l": "h1", "blocks": [{"kind": "rho_plus", "params": {"weights": [["1", "0"]]}}],
                           "padding": [0, 0, 0, 1]})");
    OrthogonalModule m = io::module_from_json(j);
    OrthogonalModule want = build_sum(case_h1(), {BlockSpec::weighted(BlockKind::rho_plus, {1, 0})}, {0, 0, 0, 1});
    CHECK(m.rho == want.rho);
    CHECK(m.form == want.form);
    CHECK(io::block_from_json(io::block_to_json(BlockSpec::indexed(BlockKind::su2_rho_prime_k, 2))).k == 2);
    CHECK_THROWS_AS(io::module_from_json(j, case_n2()), io::ParseError);
    CHECK_THROWS_AS(io::block_from_json(io::parse(R"({"kind": "rho_sharp"})")), io::ParseError);
}

TEST_CASE("cochain JSON") {
    Cochain c(3, 2, 2);
    c.set({0, 2}, {1, Scalar(-1, 2)});
    json j = io::cochain_to_json(c);
    CHECK(j["degree"] == 2);
    CHECK(j["values"].size() == 1);
    CHECK(j["values"][0]["indices"] == json::array({0, 2}));
    CHECK(io::cochain_from_json(j, 3, 2) == c);
    Cochain s(3, 3, 1);
    s.set({0, 1, 2}, {5});
    CHECK(io::cochain_to_json(s)["values"][0]["value"] == json("5"));
    CHECK_THROWS_AS(io::cochain_from_json(io::parse(R"({"degree": 2, "values": [{"indices": [2, 0], "value": ["1", "0"]}]})"), 3, 2),
                    io::ParseError);
}

TEST_CASE("entry JSON") {
    DeskLimits lim;
    lim.max_pq = 1;
    lim.max_pq_plane = 1;
    lim.max_index_sum = 2;
    for (const auto& e : desk_suite(lim)) CHECK(io::entry_from_json(io::entry_to_json(e)) == e);
    CHECK_THROWS_AS(io::entry_from_json(io::parse(R"({"family": "3a", "params": {"p": 1}})")), io::ParseError);
    CHECK_THROWS_AS(io::entry_from_json(io::parse(R"({"family": "3a", "params": {"sigma": 1}})")), io::ParseError);
    CHECK_THROWS_AS(io::entry_from_json(io::parse(R"({"family": "2b", "params": {"lambda": ["1"]}})")), io::ParseError);
    auto e = io::entry_from_json(io::parse(R"({"family": "5b", "params": {"lambda": [["1", "1/2"]], "q": 0}})"));
    CHECK(e.params.lambda == std::vector<Vec>{{1, Scalar(1, 2)}});
}

TEST_CASE("cli canon") {
    Run r = run({"canon", "1a", R"({"lambda":[-3,2]})"});
    CHECK(r.rc == 0);
    json j = io::parse(r.out);
    CHECK(j["family"] == "1a");
    CHECK(j["params"]["lambda"] == json::array({"2", "3"}));
    CHECK(run({"canon", "1a", R"({"lambda":[0]})"}).rc == 3);
}

TEST_CASE("cli build then check") {
    std::string out = tmpdir() + "/m3a.json";
    Run b = run({"build", "3a", R"({"p":0,"q":0,"kappa":1})", "-o", out});
    REQUIRE(b.rc == 0);
    json model = io::read_file(out);
    CHECK(model["dim"] == 6);
    CHECK(model["provenance"]["family"] == "3a");
    CHECK(model["markers"]["l_star"] == json::array({0, 1, 2}));
    Run c = run({"check", out});
    CHECK(c.rc == 0);
    CHECK(c.err.find("symmetric triple: yes; index: 2; dim i(g): 3") != std::string::npos);
    json rep = io::parse(c.out);
    CHECK(rep["index"] == 2);
    CHECK(rep["ideal"]["dim"] == 3);
    CHECK(rep["canonical_extension"]["l"]["case"] == "n2");
    CHECK(rep["canonical_extension"]["balanced"] == true);
    // byte-identical output
    Run b2 = run({"build", "3a", R"({"kappa":1})"});
    CHECK(b2.rc == 0);
    CHECK(b2.out == slurp(out));
    CHECK(run({"build", "3a", R"({"kappa":1})"}).out == b2.out);
}

TEST_CASE("cli check reproduces the build-time properties") {
    std::vector<std::pair<std::string, std::string>> builds{
        {"1a", R"({"lambda":[1],"mu":[2]})"}, {"2b", "{}"}, {"3c", R"({"mu":[1]})"}, {"4d", R"({"r":"1/2"})"},
        {"5b", R"({"lambda":[[1,1]]})"},     {"6", R"({"l":[1],"c":1})"}, {"7", R"({"p":1})"}, {"8", R"({"k":[1]})"}};
    for (const auto& [f, p] : builds) {
        INFO(f);
        std::string out = tmpdir() + "/model.json";
        REQUIRE(run({"build", f, p, "-o", out}).rc == 0);
        json model = io::read_file(out);
        std::size_t n = model["markers"]["l_star"].size(), m = model["markers"]["a"].size();
        Run c = run({"check", out});
        CHECK(c.rc == 0);
        json rep = io::parse(c.out);
        CHECK(rep["index"] == 2);
        CHECK(rep["ideal"]["dim"] == n);
        CHECK(rep["canonical_extension"]["a"]["dim"] == m);
        CHECK(rep["canonical_extension"]["balanced"] == true);
        CHECK(rep["canonical_extension"]["l"]["case"] ==
              case_name(family_case(*family_from_name(model["provenance"]["family"].get<std::string>()))));
    }
}

TEST_CASE("cli check on bad and semisimple inputs") {
    json bad = io::parse(R"({"dim": 3, "basis": ["e0", "e1", "e2"],
        "brackets": [{"i": 0, "j": 1, "coeffs": [[2, "1"]]}, {"i": 1, "j": 2, "coeffs": [[1, "1"]]}],
        "form": [["1","0","0"],["0","1","0"],["0","0","1"]], "theta": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
    Run r = run({"check", write_tmp("bad.json", bad)});
    CHECK(r.rc == 3);
    CHECK(r.err.find("(e0,e1,e2)") != std::string::npos);

    InvolutiveLie su = case_su2();
    MetricLieAlgebraWithInvolution g(su.alg, killing_form(su.alg), su.theta);
    Run s = run({"check", write_tmp("su2.json", io::metric_to_json(g))});
    CHECK(s.rc == 0);
    CHECK(s.err.find("i(g) = 0") != std::string::npos);
    CHECK(io::parse(s.out)["ideal"]["dim"] == 0);

    CHECK(run({"check", tmpdir() + "/missing.json"}).rc == 2);
    CHECK(run({"check", "{not json"}).rc == 2);
}

TEST_CASE("cli build errors and --max-dim") {
    CHECK(run({"build", "1a", R"({"lambda":[2,1]})"}).rc == 3);
    CHECK(run({"build", "9"}).rc == 2);
    CHECK(run({"--max-dim", "8", "build", "7", R"({"p":1})"}).rc == 3);
    CHECK(run({"--max-dim", "9", "build", "7", R"({"p":1})"}).rc == 0);
    CHECK(run({"nonsense"}).rc == 2);
}

TEST_CASE("cli catalog-verify") {
    Run r = run({"catalog-verify", "--max-pq", "0", "--max-pq-plane", "0", "--max-index-sum", "1", "--r-values", "1",
                 "--c-values", "0", "--weights", "1"});
    CHECK(r.rc == 0);
    json j = io::parse(r.out);
    CHECK(j["failed"] == 0);
    CHECK(j["collisions"].empty());
    CHECK(j["passed"] == j["entries"].size());
    Run f = run({"catalog-verify", "--family", "2a,7", "--max-pq-plane", "0", "--max-p7", "1"});
    CHECK(f.rc == 0);
    for (const auto& e : io::parse(f.out)["entries"]) CHECK((e["entry"]["family"] == "2a" || e["entry"]["family"] == "7"));
    Run capped = run({"--max-dim", "7", "catalog-verify", "--max-pq", "1"});
    CHECK(capped.rc == 0);
    for (const auto& e : io::parse(capped.out)["entries"]) CHECK(e["dim"].get<int>() <= 7);
}

TEST_CASE("cli cocycle-check and admissible") {
    std::string mod = write_tmp("n2_zero.json", io::parse(R"({"l": "n2", "blocks": []})"));
    std::string z1 = write_tmp("z1.json", io::parse(R"({"alpha": {"degree": 2, "values": []},
        "gamma": {"degree": 3, "values": [{"indices": [0, 1, 2], "value": "1"}]}})"));
    std::string z0 = write_tmp("z0.json", io::parse(R"({"alpha": {"degree": 2, "values": []}, "gamma": {"degree": 3}})"));
    Run c = run({"cocycle-check", "n2", mod, z1});
    CHECK(c.rc == 0);
    CHECK(io::parse(c.out)["cocycle"] == true);
    Run a = run({"admissible", "n2", mod, z1});
    CHECK(a.rc == 0);
    CHECK(io::parse(a.out)["method"] == "case_n2");
    CHECK(run({"admissible", "n2", mod, z0}).rc == 1);

    // alpha(X,Y) = A with a trivial: d gamma = 1/2 <alpha ^ alpha> fails for gamma = 0 only when the wedge is nonzero
    OrthogonalModule h = build_sum(case_h1(), {}, {0, 1, 0, 0});
    std::string hm = write_tmp("h1_triv.json", io::module_to_json(h));
    Cochain al(3, 2, 1);
    al.set({0, 1}, {1});
    al.set({0, 2}, {1});
    QuadraticCocycle bad{al, Cochain(3, 3, 1)};
    bool closed = d_module(h, al).is_zero();
    Run bc = run({"cocycle-check", "h1", hm, write_tmp("bad_z.json", io::cocycle_to_json(bad))});
    CHECK(bc.rc == (is_quadratic_cocycle(h, bad) ? 0 : 1));
    CHECK(io::parse(bc.out)["d_alpha_zero"] == closed);
    CHECK(run({"cocycle-check", "su2", hm, z1}).rc == 2);
}

TEST_CASE("cli hermitian") {
    Run r = run({"hermitian", R"({"family":"2b"})"});
    CHECK(r.rc == 0);
    json j = io::parse(r.out);
    CHECK(j["verified"] == true);
    CHECK(j["in_list"] == true);
    std::string w = write_tmp("w.json", j["witness"]);
    CHECK(run({"hermitian", R"({"family":"2b"})", w}).rc == 0);
    HermitianWitness id{Matrix::identity(2), Matrix::identity(1)};
    CHECK(run({"hermitian", R"({"family":"2b"})", write_tmp("id.json", io::witness_to_json(id))}).rc == 1);
    CHECK(run({"hermitian", R"({"family":"1a","params":{"lambda":[1]}})"}).rc == 1);
    CHECK(run({"hermitian", R"({"family":"5b"})", "--search"}).rc == 0);
    CHECK(run({"hermitian", R"({"family":"5a"})", "--search"}).rc == 1);
}
