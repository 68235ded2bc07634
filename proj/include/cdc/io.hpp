#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/skeleton.hpp"

namespace cdc {

// Skeleton file format:
//   line 1: `# n=<n> d=<d> k=<k> [m=<m>] [label=<s>]`
//   remaining lines: integer encodings separated by whitespace or commas;
//   `#` starts a comment. Integer encodings are the canonical on-disk form.
SkeletonCode parse_skeleton(std::istream& in, const std::string& origin = "<stream>");
SkeletonCode parse_skeleton_file(const std::string& path);
void emit_skeleton(std::ostream& out, const SkeletonCode& s);
void emit_skeleton_file(const std::string& path, const SkeletonCode& s);

// Expected-value fixtures bundled with the artifact (regression inputs).
struct MultilevelExpectation {
    long q;
    int n, k;
    std::string skeleton;  // file stem under data/skeletons
    BigInt expected;
};
struct LinkageExpectation {
    long q;
    int n, k, m;
    BigInt expected;
};

std::vector<MultilevelExpectation> load_multilevel_expectations(const std::string& path);
std::vector<LinkageExpectation> load_linkage_expectations(const std::string& path);

}  // namespace cdc
