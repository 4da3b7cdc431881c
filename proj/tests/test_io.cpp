#include <doctest.h>

#include "stringex/error.hpp"
#include "stringex/io.hpp"
#include "support.hpp"

using namespace stringex;
using namespace stringex::test;
using nlohmann::json;

TEST_SUITE("io") {
  TEST_CASE("instance round trip") {
    const auto w = tri_word(cartan_tri_a1());
    const auto j = io::word_to_json(w);
    CHECK(j["origins"] == "BBBTTTBB");
    CHECK(io::word_from_json(j) == w);
  }

  TEST_CASE("origins default to all Bottom") {
    const auto j = json::parse(R"({"cartan": [[2,-1],[-1,2]], "bottom": [1,2,1]})");
    CHECK(io::word_from_json(j) == bottom_word({1, 2, 1}, cartan_a2()));
    const auto top = json::parse(R"({"cartan": [[2,-1],[-1,2]], "top": [1], "bottom": [1]})");
    CHECK_THROWS_AS(io::word_from_json(top), Error);
  }

  TEST_CASE("malformed instances") {
    for (const char* text : {R"([])", R"({"bottom": [1]})", R"({"cartan": 3, "bottom": [1]})",
                             R"({"cartan": [[2]], "bottom": "1"})",
                             R"({"cartan": [[2]], "bottom": [1.5]})",
                             R"({"cartan": [[2]], "bottom": [1], "top": [], "origins": 7})"}) {
      try {
        io::word_from_json(json::parse(text));
        FAIL("accepted " << text);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MalformedInput);
      }
    }
    try {
      io::word_from_json(json::parse(R"({"cartan": [[2,-1],[0,2]], "bottom": [1]})"));
      FAIL("accepted a non-Cartan grid");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotGeneralizedCartan);
    }
  }

  TEST_CASE("matrix round trip and canonical dump") {
    const auto b = exchange_matrix(bfz_word());
    const auto j = io::matrix_to_json(b);
    CHECK(j.dump() ==
          R"({"labels":["1:1","1:2","1:3","2:1"],"rows":[[0,1,0,-1],[-1,0,-1,1],[0,1,0,-1],[1,-1,1,0]]})");
    CHECK(io::matrix_from_json(j) == b);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"labels":["1:1"],"rows":[[0,1]]})")),
                    Error);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"labels":["x"],"rows":[[0]]})")), Error);
  }

  TEST_CASE("certificate round trip") {
    for (const auto& w : {bfz_word(), gls_word(), final_word(), bottom_word({2, 1, 1}, cartan_a2())}) {
      const auto cert = certify_pprime(w);
      const auto j = io::certificate_to_json(cert);
      const auto back = io::certificate_from_json(json::parse(j.dump()));
      CHECK(io::certificate_to_json(back) == j);
      CHECK(verify_certificate(back, exchange_matrix(w)).ok);
    }
  }

  TEST_CASE("sequences and label maps") {
    const MutationSeq s{{id(1, 2), id(1, 3)}};
    CHECK(io::seq_to_json(s).dump() == R"(["1:2","1:3"])");
    CHECK(io::seq_from_json(io::seq_to_json(s)) == s);
    const std::map<ClosedStringId, ClosedStringId> m{{id(1, 1), id(1, 2)}};
    CHECK(io::label_map_from_json(io::label_map_to_json(m)) == m);
    CHECK_THROWS_AS(io::seq_from_json(json::parse("{}")), Error);
  }
}
