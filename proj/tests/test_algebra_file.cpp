#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>

#include "json.hpp"

#include "aqg/algebra_file.hpp"
#include "aqg/examples.hpp"

using namespace aqg;
using nlohmann::json;

namespace {

std::string error_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const precondition_error&) {
        return "<precondition>";
    } catch (const error& e) {
        return e.what();
    }
    return "<no error>";
}

// one-dimensional structure: the smallest well-formed document
json trivial_doc() {
    json d;
    d["version"] = "v1";
    d["name"] = "point";
    d["basis"] = json::array({"e"});
    d["unital"] = true;
    d["unit"] = json::parse(R"([[0, "1"]])");
    d["product"] = json::parse(R"([[0, 0, [[0, "1"]]]])");
    d["coproduct"] = json::parse(R"([[0, [[0, 0, "1"]]]])");
    d["counit"] = json::parse(R"([[0, "1"]])");
    d["antipode"] = json::parse(R"([[0, [[0, "1"]]]])");
    return d;
}

} // namespace

TEST_SUITE("algebra files") {

TEST_CASE("four dimensional example round-trips byte for byte") {
    const HopfPtr h = builtin_hopf("h4");
    const ModularData md = derive_modular_data(h);
    const std::string text = algebra_to_json(h, md.phi);

    const AlgebraFileData loaded = parse_algebra_json(text, "<h4>");
    const AlgebraPtr alg = loaded.hopf->alg;
    CHECK(alg->dim == 4);
    CHECK(alg->name == "h4");
    CHECK(alg->unital);
    CHECK(alg->label_of(2) == h->alg->label_of(2));

    const Report ax = check_hopf_axioms(loaded.hopf);
    INFO(ax.text());
    CHECK(ax.all_pass());

    REQUIRE(loaded.integral.has_value());
    CHECK(check_faithful(alg, *loaded.integral).faithful);
    const ModularData md2 = derive_modular_data(loaded.hopf, *loaded.integral);
    CHECK(md2.tau == Scalar::integer(-1));
    CHECK(md2.delta == alg->basis_element(2));
    for (std::int64_t i = 0; i < 4; ++i)
        CHECK(loaded.integral->eval_basis(i) == md.phi.eval_basis(i));

    // serializing the loaded copy reproduces the document exactly
    CHECK(algebra_to_json(loaded.hopf, loaded.integral) == text);
}

TEST_CASE("group and cyclotomic examples survive the round trip") {
    for (const std::string name : {"group:s3", "fn:z3", "taft:3"}) {
        INFO(name);
        const HopfPtr h = builtin_hopf(name);
        const std::string text = algebra_to_json(h);
        const AlgebraFileData loaded = parse_algebra_json(text, "<" + name + ">");
        CHECK(loaded.hopf->alg->dim == h->alg->dim);
        CHECK(loaded.hopf->alg->field == h->alg->field);
        CHECK_FALSE(loaded.integral.has_value());
        const Report ax = check_hopf_axioms(loaded.hopf);
        INFO(ax.text());
        CHECK(ax.all_pass());
        CHECK(algebra_to_json(loaded.hopf) == text);
    }
}

TEST_CASE("cyclotomic coefficients travel through the text form") {
    const HopfPtr h = builtin_hopf("taft:3");
    const AlgebraFileData loaded = parse_algebra_json(algebra_to_json(h), "<taft>");
    CHECK(loaded.hopf->alg->field.cyclo_order == 3);
    for (std::int64_t i = 0; i < loaded.hopf->alg->dim; ++i) {
        const Element e = loaded.hopf->alg->basis_element(i);
        CHECK(loaded.hopf->antipode_inv(loaded.hopf->antipode(e)) == e);
    }
    const ModularData md = derive_modular_data(loaded.hopf);
    CHECK(md.tau == scaling_constant(h, derive_modular_data(h).phi));
}

TEST_CASE("structural problems are reported with context") {
    auto parse = [](const json& d) { parse_algebra_json(d.dump(), "t"); };

    CHECK(error_message([] { parse_algebra_json("{", "t"); }).find("invalid JSON") !=
          std::string::npos);
    CHECK(error_message([] { parse_algebra_json("[1, 2]", "t"); }).find("top level") !=
          std::string::npos);

    json d = trivial_doc();
    d.erase("version");
    CHECK(error_message([&] { parse(d); }).find("version") != std::string::npos);

    d = trivial_doc();
    d["version"] = "v2";
    CHECK(error_message([&] { parse(d); }).find("version") != std::string::npos);

    d = trivial_doc();
    d["antipod"] = json::array();
    CHECK(error_message([&] { parse(d); }).find("unknown key") != std::string::npos);

    d = trivial_doc();
    d["basis"] = json::array({"e", "e"});
    CHECK(error_message([&] { parse(d); }).find("duplicate label") != std::string::npos);

    d = trivial_doc();
    d["product"] = json::parse(R"([[0, 0, [[3, "1"]]]])");
    CHECK(error_message([&] { parse(d); }).find("outside") != std::string::npos);

    d = trivial_doc();
    d["product"] = json::parse(R"([[0, 0, [[0, "1//2"]]]])");
    CHECK(error_message([&] { parse(d); }).find("product") != std::string::npos);

    d = trivial_doc();
    d["product"] = json::parse(R"([[0, 0, []], [0, 0, []]])");
    CHECK(error_message([&] { parse(d); }).find("duplicate row") != std::string::npos);

    d = trivial_doc();
    d["coproduct"] = json::array();
    CHECK(error_message([&] { parse(d); }).find("missing row") != std::string::npos);

    d = trivial_doc();
    d.erase("unit");
    CHECK(error_message([&] { parse(d); }).find("unit") != std::string::npos);

    d = trivial_doc();
    d["counit"] = json::parse(R"([[0, "1"], [0, "1"]])");
    CHECK(error_message([&] { parse(d); }).find("duplicate entry") != std::string::npos);

    d = trivial_doc();
    d["field"] = json{{"backend", "quaternion"}};
    CHECK(error_message([&] { parse(d); }).find("backend") != std::string::npos);
}

TEST_CASE("singular antipode table is a precondition failure, not a parse error") {
    json d = trivial_doc();
    d["antipode"] = json::parse(R"([[0, []]])");
    CHECK_THROWS_AS(parse_algebra_json(d.dump(), "t"), precondition_error);
    CHECK(error_message([&] { parse_algebra_json(d.dump(), "t"); }) == "<precondition>");
}

TEST_CASE("well-formed file without invariant functionals loads but fails derivation") {
    // two-dimensional group table with a deliberately lopsided coproduct
    json d;
    d["version"] = "v1";
    d["name"] = "lopsided";
    d["basis"] = json::array({"e", "g"});
    d["unital"] = true;
    d["unit"] = json::parse(R"([[0, "1"]])");
    d["product"] = json::parse(
        R"([[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 0, [[1, "1"]]], [1, 1, [[0, "1"]]]])");
    d["coproduct"] = json::parse(R"([[0, [[0, 0, "1"]]], [1, [[1, 0, "1"]]]])");
    d["counit"] = json::parse(R"([[0, "1"], [1, "1"]])");
    d["antipode"] = json::parse(R"([[0, [[0, "1"]]], [1, [[1, "1"]]]])");

    const AlgebraFileData loaded = parse_algebra_json(d.dump(), "t");
    CHECK(loaded.hopf->alg->dim == 2);
    CHECK_THROWS_AS(derive_modular_data(loaded.hopf), precondition_error);
}

TEST_CASE("associativity failure in a file is caught by the axiom suite") {
    // u is a unit, a*b = u but b*a = 0, so (a*b)*a != a*(b*a)
    json d;
    d["version"] = "v1";
    d["name"] = "skew";
    d["basis"] = json::array({"u", "a", "b"});
    d["unital"] = true;
    d["unit"] = json::parse(R"([[0, "1"]])");
    d["product"] = json::parse(R"([
        [0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [0, 2, [[2, "1"]]],
        [1, 0, [[1, "1"]]], [2, 0, [[2, "1"]]],
        [1, 2, [[0, "1"]]]])");
    d["coproduct"] = json::parse(
        R"([[0, [[0, 0, "1"]]], [1, [[1, 1, "1"]]], [2, [[2, 2, "1"]]]])");
    d["counit"] = json::parse(R"([[0, "1"], [1, "1"], [2, "1"]])");
    d["antipode"] =
        json::parse(R"([[0, [[0, "1"]]], [1, [[1, "1"]]], [2, [[2, "1"]]]])");

    const AlgebraFileData loaded = parse_algebra_json(d.dump(), "t");
    const Report ax = check_hopf_axioms(loaded.hopf);
    CHECK_FALSE(ax.all_pass());
    const CheckItem* it = nullptr;
    for (const auto& item : ax.items)
        if (item.name == "product_associative") it = &item;
    REQUIRE(it != nullptr);
    CHECK_FALSE(it->pass);
}

TEST_CASE("files load from disk and default their name to the file stem") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "round_trip_check.json";
    json d = trivial_doc();
    d.erase("name");
    {
        std::ofstream out(path);
        out << d.dump(2) << "\n";
    }
    const AlgebraFileData loaded = load_algebra_file(path.string());
    CHECK(loaded.hopf->alg->name == "round_trip_check");
    CHECK(check_hopf_axioms(loaded.hopf).all_pass());
    std::remove(path.string().c_str());

    CHECK_THROWS_AS(load_algebra_file(path.string() + ".missing"), error);
}

} // TEST_SUITE
