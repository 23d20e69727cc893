#include "doctest.h"

#include "hilbsq/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace hilbsq;
using namespace hilbsq::cli;

TEST_CASE("pell command") {
    const Report r = cmd_pell("61", "1");
    CHECK(r.results["fundamental_solution"]["x"] == "1766319049");
    CHECK(exit_code(r) == kExitOk);
    const Report neg = cmd_pell("62002", "-1");
    CHECK(neg.results["classes"][0]["x"] == "249");
    CHECK(neg.results["classes"][0]["y"] == "1");
    const Report none = cmd_pell("56", "-8");
    CHECK(none.results["solvable"] == false);
    CHECK(none.results["reduced_equation"]["unsolvable_mod_8"] == true);
    CHECK_THROWS_WITH_AS(cmd_pell("4", "1"), "d must be non-square and at least 2", UsageError);
    CHECK_THROWS_AS(cmd_pell("x", "1"), UsageError);
    CHECK_THROWS_AS(cmd_pell("5", "0"), UsageError);
}

TEST_CASE("automorphism command") {
    const Report two = cmd_automorphism("2");
    CHECK(two.results["exists"] == true);
    CHECK(two.results["d_class"]["text"] == "L - δ");
    const Report four = cmd_automorphism("4");
    CHECK(four.results["exists"] == false);
    CHECK(four.results["reason"] == "t is a square");
    const Report five = cmd_automorphism("5");
    CHECK(five.results["reason"] == "P_{20}(5) solvable");
    CHECK_THROWS_AS(cmd_automorphism("1"), UsageError);
}

TEST_CASE("family command") {
    const Report a = cmd_family("A", "2");
    REQUIRE(a.results["rows"].size() == 2);
    CHECK(a.results["rows"][0]["t"] == "3250");
    CHECK(a.results["rows"][1]["t"] == "62002");
    CHECK(exit_code(a) == kExitOk);
    const Report b = cmd_family("B", "1");
    CHECK(b.results["rows"][0]["t"] == "101506");
    CHECK(b.count(CheckStatus::Discrepancy) == 1);
    CHECK(exit_code(b) == kExitOk);
    CHECK_THROWS_AS(cmd_family("C", "1"), UsageError);
    CHECK_THROWS_AS(cmd_family("A", "0"), UsageError);
}

TEST_CASE("beauville command") {
    const Report r = cmd_beauville("1");
    CHECK(r.results["i1"]["class"]["text"] == "H - δ");
    CHECK(r.results["kappa2"]["generator"]["text"] == "59H - 8W - 57δ");
    CHECK(r.count(CheckStatus::Discrepancy) == 1);
    CHECK(exit_code(r) == kExitOk);
}

TEST_CASE("involution command") {
    const Report r = cmd_involution("1");
    CHECK(r.results["invariant_gram"] == Json::parse(R"([["2","0"],["0","-2"]])"));
    CHECK(r.results["complement_factors"] == Json::parse(R"(["2"])"));
    CHECK(exit_code(r) == kExitOk);
    CHECK_THROWS_AS(cmd_involution("0"), UsageError);
}

TEST_CASE("lattice-info command") {
    CHECK(cmd_lattice_info("U").results["determinant"] == "-1");
    CHECK(cmd_lattice_info("E8").results["unimodular"] == true);
    CHECK(cmd_lattice_info("L23").results["discriminant_factors"] == Json::parse(R"(["2"])"));
    CHECK(cmd_lattice_info("K3").results["signature"]["minus"] == "19");
    CHECK(cmd_lattice_info("Q1").results["determinant"] == "-56");
    CHECK(cmd_lattice_info("<-2>").results["determinant"] == "-2");

    const auto path = std::filesystem::temp_directory_path() / "hilbsq_gram_test.json";
    {
        std::ofstream out(path);
        out << "[[2, 1], [1, \"2\"]]";
    }
    const Report file = cmd_lattice_info(path.string());
    CHECK(file.results["determinant"] == "3");
    {
        std::ofstream out(path);
        out << "[[2, 1], [0, 2]]";
    }
    CHECK_THROWS_AS(cmd_lattice_info(path.string()), UsageError);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(cmd_lattice_info("no-such-lattice"), UsageError);
}

TEST_CASE("command reports round-trip through JSON") {
    const Report r = cmd_family("B", "2");
    const Report back = Json::parse(Json(r).dump()).get<Report>();
    CHECK(back == r);
}
