#include "polynil/group_expr.hpp"

#include "polynil/oracle.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace polynil;

namespace {

FgAbelianGroup group_of(long long free_rank, const std::vector<long long>& factors) {
  std::vector<BigInt> big(factors.begin(), factors.end());
  return FgAbelianGroup::from_invariant_factors(BigInt(free_rank), big);
}

std::size_t offset_of_failure(const std::string& text) {
  try {
    parse_group(text);
  } catch (const GroupParseError& error) {
    return error.offset();
  }
  FAIL("expected a parse error for '", text, "'");
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("parsing canonical and non-canonical expressions") {
  CHECK(parse_group("Z^2 + Z/12 + Z/6 + Z/2") == group_of(2, {12, 6, 2}));
  CHECK(parse_group("Z/6 + Z/4") == group_of(0, {12, 2}));
  CHECK(parse_group("0") == FgAbelianGroup());
  CHECK(parse_group("Z/1").is_trivial());
  CHECK(parse_group("Z") == FgAbelianGroup::free_abelian(1));
  CHECK(parse_group("Z + Z + Z/2") == group_of(2, {2}));
  CHECK(parse_group("Z_6 + Z_4") == group_of(0, {12, 2}));   // subscript alias
  CHECK(parse_group("Z/2^3") == group_of(0, {2, 2, 2}));     // multiplicity
  CHECK(parse_group("Z/4^(3)") == group_of(0, {4, 4, 4}));   // parenthesized
  CHECK(parse_group("Z^(2)") == FgAbelianGroup::free_abelian(2));
  CHECK(parse_group("  Z ^ 2+Z / 4 ") == group_of(2, {4}));  // whitespace-insensitive
  CHECK(parse_group("0 + Z/3 + 0") == group_of(0, {3}));
  CHECK(parse_group("Z/123456789012345678901") ==
        FgAbelianGroup::from_invariant_factors(0, {BigInt("123456789012345678901")}));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK(offset_of_failure("") == 0);
  CHECK(offset_of_failure("Q") == 0);
  CHECK(offset_of_failure("Z +") == 3);
  CHECK(offset_of_failure("Z^") == 2);
  CHECK(offset_of_failure("Z^0") == 2);
  CHECK(offset_of_failure("Z/0") == 2);
  CHECK(offset_of_failure("Z//2") == 2);
  CHECK(offset_of_failure("Z/2 + + Z") == 6);
  CHECK(offset_of_failure("2Z") == 0);
  CHECK(offset_of_failure("Z/2 Z") == 4);
  CHECK(offset_of_failure("Z^(2") == 4);
}

TEST_CASE("Z/0 error suggests writing Z") {
  try {
    parse_group("Z/0");
    FAIL("expected a parse error");
  } catch (const GroupParseError& error) {
    CHECK(std::string(error.what()).find("write 'Z'") != std::string::npos);
  }
}

TEST_CASE("rendering canonical groups") {
  CHECK(render_group(FgAbelianGroup()) == "0");
  CHECK(render_group(FgAbelianGroup::free_abelian(1)) == "Z");
  CHECK(render_group(group_of(2, {12, 6, 2})) == "Z^2 + Z/12 + Z/6 + Z/2");
  CHECK(render_group(group_of(0, {2, 2})) == "Z/2 + Z/2");
}

TEST_CASE("render then parse is the identity on the group family") {
  for (const FgAbelianGroup& g : all_canonical_groups(4, 12)) {
    CHECK(parse_group(render_group(g)) == g);
  }
}

TEST_CASE("large runs render compactly and still round-trip") {
  const BigInt huge = pow(BigInt(10), 12);
  const FgAbelianGroup g = FgAbelianGroup::from_runs(huge, {{BigInt(2), huge}});
  const std::string text = render_group(g);
  CHECK(text == "Z^1000000000000 + Z/2^(1000000000000)");
  CHECK(parse_group(text) == g);
}
