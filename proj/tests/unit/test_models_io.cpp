#include <cstdio>
#include <fstream>

#include "bggwb/errors.hpp"
#include "bggwb/io.hpp"
#include "bggwb/models.hpp"
#include "doctest.h"
#include "support/testing.hpp"

using namespace bggwb;
using testing::mat;
using testing::QQ;

TEST_CASE("model generators") {
    auto pt = generate(ModelSpec::point());
    CHECK(pt.p.dim(0) == 1);
    CHECK(pt.p.total_dim() == 1);

    auto e = generate(ModelSpec::abelian(1));
    CHECK(e.q == exterior_algebra({1, QQ}));

    auto c = generate(ModelSpec::curve(2));
    CHECK(c.p.dim(1) == 1);
    CHECK(c.p.dim(0) == 2);
    CHECK(c.p.action(0, 1) == mat(1, {{1}, {0}}));
    CHECK(c.p.action(1, 1) == mat(1, {{0}, {1}}));

    for (int d = 1; d <= 6; ++d) {
        auto a = generate(ModelSpec::abelian(d));
        CHECK(validate_module(a.p).valid());
        for (int i = 0; i <= d; ++i) CHECK(a.p.dim(d - i) == binomial(d, i));
    }
    auto cp = generate(ModelSpec::curve_times_p1(3));
    CHECK(cp.p.dim(2) == 1);
    CHECK(cp.p.dim(1) == 3);
    CHECK(cp.p.dim(0) == 0);
    CHECK(cp.q.trimmed() == shift(generate(ModelSpec::curve(3)).q, 1).trimmed());

    CHECK(expected_k(ModelSpec::abelian(3)) == 0);
    CHECK(expected_k(ModelSpec::curve(5)) == 0);
    CHECK(expected_k(ModelSpec::curve_times_p1(2)) == 1);
    CHECK_THROWS_AS(expected_k(ModelSpec{ModelKind::custom, 0, QQ, {"x.json"}}), PreconditionError);
    CHECK_THROWS_AS(generate(ModelSpec::abelian(7)), PreconditionError);
    CHECK_THROWS_AS(generate(ModelSpec::curve(0)), PreconditionError);
    CHECK_THROWS_AS(generate(ModelSpec::curve(9)), PreconditionError);
    CHECK(parse_model_kind("curve_times_p1") == ModelKind::curve_times_p1);
    CHECK_THROWS_AS(parse_model_kind("surface"), ParseError);
}

TEST_CASE("model regularity equals expected k") {
    std::vector<ModelSpec> specs{ModelSpec::point()};
    for (int d = 1; d <= 3; ++d) specs.push_back(ModelSpec::abelian(d));
    for (int g = 1; g <= 4; ++g) specs.push_back(ModelSpec::curve(g));
    for (int g = 2; g <= 3; ++g) specs.push_back(ModelSpec::curve_times_p1(g));
    for (const auto& s : specs) {
        auto m = generate(s);
        const int T = default_truncation(m.p);
        CHECK(regularity_via_bgg(m.p, T).m == expected_k(s));
        CHECK(regularity_definition_route(m.q, std::max(default_imax(m.q), T)).m == expected_k(s));
    }
}

TEST_CASE("round trips") {
    for (const auto& s : {ModelSpec::curve(2), ModelSpec::abelian(3), ModelSpec::curve_times_p1(2)}) {
        auto m = generate(s);
        const std::string text = serialize(m.q);
        auto back = std::get<GradedEModule>(parse_workbench(text));
        CHECK(back == m.q);
        CHECK(serialize(back) == text);
        auto l = build_bgg(m.p);
        auto lb = std::get<LinearSComplex>(parse_workbench(serialize(l)));
        CHECK(lb == l);
    }
    FilteredFreeComplex k(QQ, 2, 5, -1, {1, 2, 1});
    PolyMatrix d0(QQ, 2, 2, 1), d1(QQ, 2, 1, 2);
    d0(0, 0) = Polynomial::parse(QQ, 2, "t1");
    d0(1, 0) = Polynomial::parse(QQ, 2, "t2");
    d1(0, 0) = Polynomial::parse(QQ, 2, "t2");
    d1(0, 1) = Polynomial::parse(QQ, 2, "-t1");
    k.set_differential(-1, d0);
    k.set_differential(0, d1);
    const std::string text = serialize(k);
    auto back = std::get<FilteredFreeComplex>(parse_workbench(text));
    CHECK(back == k);
    CHECK(serialize(back) == text);
    CHECK(schema_name(WorkbenchObject{back}) == "rcomplex/1");
}

TEST_CASE("polynomial strings") {
    auto p = Polynomial::parse(QQ, 2, "t1^2 - 2/3*t2");
    CHECK(p.terms().size() == 2);
    CHECK(p.coefficient({2, 0}) == 1);
    CHECK(p.coefficient({0, 1}) == mpq_class(-2, 3));
    CHECK(p.to_string() == "t1^2 - 2/3*t2");
}

TEST_CASE("parse errors") {
    const std::string bad_shape = R"({"schema": "emodule/1", "field": "QQ", "q": 1,
        "components": {"0": 1, "1": 1}, "action": {"e1": {"1": [["1", "0"]]}}})";
    try {
        parse_workbench(bad_shape);
        FAIL("expected a shape error");
    } catch (const DimensionMismatch& e) {
        CHECK(std::string(e.what()).find("degree 1") != std::string::npos);
    }

    const std::string syntax = "{\n  \"schema\": \"emodule/1\",\n  \"q\": 1,,\n}";
    try {
        parse_workbench(syntax);
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_workbench(R"({"schema": "emodule/2", "field": "QQ", "q": 1})"), ParseError);

    const std::string not_anticommuting = R"({"schema": "emodule/1", "field": "QQ", "q": 1,
        "components": {"0": 1, "1": 1, "2": 1}, "action": {"e1": {"1": [["1"]], "2": [["1"]]}}})";
    CHECK_THROWS_AS(parse_workbench(not_anticommuting), InvariantViolation);

    const std::string bad_complex = R"({"schema": "rcomplex/1", "field": "QQ", "nvars": 1, "precision": 3,
        "n_lo": 0, "ranks": [1, 1, 1], "differentials": {"0": [["1"]], "1": [["1"]]}})";
    CHECK_THROWS_AS(parse_workbench(bad_complex), InvariantViolation);
}

TEST_CASE("field override and files") {
    auto m = generate(ModelSpec::curve(2));
    const std::string path = "test_models_io_tmp.json";
    write_text_file(path, serialize(m.q));
    auto q = read_emodule_file(path);
    CHECK(q == m.q);
    auto qp = read_emodule_file(path, Field::prime(7));
    CHECK(qp.field() == Field::prime(7));
    CHECK(qp.dims() == m.q.dims());
    std::remove(path.c_str());
    CHECK_THROWS_AS(parse_file("does/not/exist.json"), ParseError);
}
