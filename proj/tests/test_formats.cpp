#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "qr/quandle.hpp"

using namespace qr;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string("/tmp/qr_test_") + std::to_string(rand()) + ".tmp";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("plain text round trip") {
    Quandle r5 = dihedral_quandle(5);
    std::string text = quandle_to_text(r5);
    Quandle back = parse_quandle_text(text, "roundtrip");
    CHECK(back == r5);
    CHECK(back.name() == "roundtrip");
}

TEST_CASE("text file loading") {
    TempFile f("3\n1 3 2\n3 2 1\n2 1 3\n");
    Quandle q = load_quandle(f.path);
    CHECK(q == dihedral_quandle(3));
}

TEST_CASE("json round trip") {
    Quandle r4 = dihedral_quandle(4);
    std::string js = quandle_to_json_string(r4);
    auto parsed = nlohmann::json::parse(js);
    CHECK(parsed["order"] == 4);
    CHECK(parsed["name"] == "R4");
    TempFile f(js);
    Quandle back = load_quandle(f.path);
    CHECK(back == r4);
}

TEST_CASE("transposed tables are rejected with a diagnosis") {
    // transpose of a valid non-symmetric quandle table: the order-4 entry
    // with rows 1 1 1 2 / 2 2 2 3 / 3 3 3 1 / 4 4 4 4
    TempFile f("4\n1 2 3 4\n1 2 3 4\n1 2 3 4\n2 3 1 4\n");
    try {
        load_quandle(f.path);
        FAIL("expected rejection");
    } catch (const QuandleError& e) {
        CHECK(std::string(e.what()).find("transpose") != std::string::npos);
    }
}

TEST_CASE("axiom violations carry a witness") {
    TempFile f("2\n1 2\n1 2\n"); // column 1 is constant
    try {
        load_quandle(f.path);
        FAIL("expected rejection");
    } catch (const QuandleError& e) {
        CHECK(std::string(e.what()).find("not a permutation") != std::string::npos);
    }
}

TEST_CASE("malformed files") {
    TempFile trunc("3\n1 3 2\n3 2 1\n");
    CHECK_THROWS_AS(load_quandle(trunc.path), QuandleError);
    // unreadable paths are IO errors, distinct from invalid quandle data
    CHECK_THROWS_AS(load_quandle("/nonexistent/path/q.txt"), std::runtime_error);
    CHECK_THROWS_WITH_AS(load_quandle("/nonexistent/path/q.txt"),
                         "cannot open /nonexistent/path/q.txt", std::runtime_error);
    TempFile badjson("{\"order\": 3, \"table\": [[1,3,2],[3,2,1]]}");
    CHECK_THROWS_AS(load_quandle(badjson.path), QuandleError);
}
