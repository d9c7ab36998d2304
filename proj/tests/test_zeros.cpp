#include <doctest.h>

#include <charconv>
#include <sstream>
#include <string>

#include "zosc/common.hpp"
#include "zosc/zeros.hpp"

using namespace zosc;

namespace {

const ZeroTable& full_table() {
  static const ZeroTable t = load_zeros(ZOSC_ZEROS_FILE);
  return t;
}

// First ten ordinates as printed in standard tables.
const char* kFirstTen =
    "# test table\n"
    "14.134725141734693790\n"
    "21.022039638771554993\n"
    "25.010857580145688763\n"
    "30.424876125859513210\n"
    "32.935061587739189691\n"
    "37.586178158825671257\n"
    "40.918719012147495187\n"
    "43.327073280914999519\n"
    "48.005150881167159727\n"
    "49.773832477672302181\n";

}  // namespace

TEST_CASE("first line is parsed exactly") {
  std::istringstream in(kFirstTen);
  const auto t = parse_zeros(in, "inline");
  double expected = 0.0;
  const std::string s = "14.134725141734693790";
  std::from_chars(s.data(), s.data() + s.size(), expected);
  CHECK(t.gamma(0) == expected);
  CHECK(t.text(0) == s);
  CHECK(t.size() == 10);
}

TEST_CASE("limit truncates") {
  std::istringstream in(kFirstTen);
  const auto t = parse_zeros(in, "inline", 1);
  CHECK(t.size() == 1);
}

TEST_CASE("non-monotone input reports the line") {
  std::istringstream in("14.134725141734693790\n13.0\n");
  try {
    (void)parse_zeros(in, "bad");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("bad:2") != std::string::npos);
  }
  std::istringstream first("13.0\n14.134725141734693790\n");
  CHECK_THROWS_AS((void)parse_zeros(first, "bad"), DataError);
}

TEST_CASE("malformed tables are rejected") {
  std::istringstream empty("# nothing\n\n");
  CHECK_THROWS_AS((void)parse_zeros(empty, "empty"), DataError);
  std::istringstream neg("-14.1\n");
  CHECK_THROWS_AS((void)parse_zeros(neg, "neg"), DataError);
  std::istringstream junk("14.13x\n");
  CHECK_THROWS_AS((void)parse_zeros(junk, "junk"), DataError);
  std::istringstream mult("14.134725141734693790 0\n");
  CHECK_THROWS_AS((void)parse_zeros(mult, "mult"), DataError);
  CHECK_THROWS_AS((void)load_zeros("/nonexistent/zeros.txt"), DataError);
}

TEST_CASE("missing zeros break the counting check") {
  // Drop every other zero of the first 200: count below 100 falls to ~15.
  const auto& full = full_table();
  std::ostringstream os;
  for (std::size_t i = 0; i < 200; i += 2) os << full.text(i) << '\n';
  std::istringstream in(os.str());
  CHECK_THROWS_AS((void)parse_zeros(in, "sparse"), DataError);
}

TEST_CASE("count_below") {
  const auto& t = full_table();
  CHECK(count_below(t, 100.0) == 29);
  CHECK(count_below(t, 14.0) == 0);
  CHECK(count_below(t, 14.2) == 1);
  CHECK_THROWS_AS((void)count_below(t, t.max_gamma() + 1.0), DomainError);
  long long previous = 0;
  for (double T = 10.0; T < 2000.0; T += 0.37) {
    const long long c = count_below(t, T);
    CHECK(c >= previous);
    previous = c;
  }
}

TEST_CASE("multiplicity column") {
  std::istringstream in("14.134725141734693790 2\n21.022039638771554993\n25.010857580145688763\n");
  const auto t = parse_zeros(in, "mult");
  CHECK(t.multiplicity(0) == 2);
  CHECK(count_below(t, 22.0) == 3);
}

TEST_CASE("round trip is digit exact") {
  const auto& t = full_table();
  std::ostringstream os;
  t.write(os);
  std::istringstream in(os.str());
  const auto back = parse_zeros(in, "roundtrip");
  REQUIRE(back.size() == t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (back.text(i) != t.text(i) || back.gamma(i) != t.gamma(i)) {
      FAIL("mismatch at index " << i);
    }
  }
}

TEST_CASE("Riemann-von Mangoldt estimate") {
  CHECK(riemann_von_mangoldt(100.0) == doctest::Approx(29.0).epsilon(0.01));
  const auto& t = full_table();
  CHECK(t.size() == 100000);
  CHECK(t.max_gamma() > 74920.0);
}
