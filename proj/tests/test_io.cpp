#include <sstream>

#include "cdc/errors.hpp"
#include "cdc/io.hpp"
#include "doctest.h"

using namespace cdc;

TEST_CASE("skeleton files parse with header, commas and comments") {
    std::istringstream in(
        "# n=10 d=4 k=3 m=7\n"
        "# provenance: test fixture\n"
        "38, 21\n"
        "11  # trailing comment\n");
    const SkeletonCode s = parse_skeleton(in);
    CHECK(s.n == 10);
    CHECK(s.d == 4);
    CHECK(s.k == 3);
    CHECK(s.m == 7);
    CHECK(s.vectors == std::vector<std::uint64_t>{38, 21, 11});
}

TEST_CASE("emit/parse round trip preserves the code") {
    SkeletonCode s;
    s.n = 11;
    s.d = 4;
    s.k = 3;
    s.m = 7;
    s.label = "v1";
    s.vectors = {44, 74, 25, 134, 69, 35};
    std::stringstream buffer;
    emit_skeleton(buffer, s);
    const SkeletonCode back = parse_skeleton(buffer);
    CHECK(back.n == s.n);
    CHECK(back.d == s.d);
    CHECK(back.k == s.k);
    CHECK(back.m == s.m);
    CHECK(back.label == s.label);
    CHECK(back.vectors == s.vectors);
}

TEST_CASE("parse rejects distance violations naming the pair") {
    std::istringstream in("# n=4 d=4 k=2\n3 5\n");
    CHECK_THROWS_WITH_AS(parse_skeleton(in), doctest::Contains("Hamming distance 2"),
                         ValidationError);
}

TEST_CASE("parse rejects weight mismatches, duplicates and malformed integers") {
    std::istringstream wrong_weight("# n=4 d=4 k=2\n7\n");
    CHECK_THROWS_WITH_AS(parse_skeleton(wrong_weight), doctest::Contains("weight"),
                         ValidationError);
    std::istringstream dup("# n=6 d=4 k=2\n33 33\n");
    CHECK_THROWS_WITH_AS(parse_skeleton(dup), doctest::Contains("duplicate"), ValidationError);
    std::istringstream bad("# n=6 d=4 k=2\n3x\n");
    CHECK_THROWS_WITH_AS(parse_skeleton(bad), doctest::Contains("malformed"), ValidationError);
    std::istringstream no_header("33 40\n");
    CHECK_THROWS_AS(parse_skeleton(no_header), ValidationError);
    std::istringstream partial_header("# n=6 d=4\n33\n");
    CHECK_THROWS_AS(parse_skeleton(partial_header), ValidationError);
}

TEST_CASE("restricted headers validate the block profile at parse time") {
    // 56 = 0000111000 has three ones in the first 7 positions
    std::istringstream in("# n=10 d=4 k=3 m=7\n56\n");
    CHECK_THROWS_WITH_AS(parse_skeleton(in), doctest::Contains("block profile"), ValidationError);
}

TEST_CASE("bundled fixtures load") {
    const std::string data = CDC_DATA_DIR;
    const SkeletonCode s = parse_skeleton_file(data + "/skeletons/S_10_7_4_3.sk");
    CHECK(s.vectors == std::vector<std::uint64_t>{38, 21, 11});
    CHECK(s.m == 7);

    const auto ml = load_multilevel_expectations(data + "/expected/multilevel_bounds.tsv");
    CHECK(ml.size() == 105);
    const auto lk = load_linkage_expectations(data + "/expected/linkage_bounds.tsv");
    CHECK(lk.size() == 121);
}
