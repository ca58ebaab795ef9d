#include <doctest.h>

#include <random>

#include "bibnet/sampling.hpp"
#include "bibnet/strings.hpp"

using namespace bibnet;

TEST_CASE("trim and case helpers") {
  CHECK(text::trim("  a b \t") == "a b");
  CHECK(text::trim("   ").empty());
  CHECK(text::to_lower_ascii("USA Ç") == "usa Ç");
  CHECK(text::iequals("[Anonymous]", "[anonymous]"));
  CHECK_FALSE(text::iequals("abc", "abcd"));
  CHECK(text::title_case("UNITED KINGDOM") == "United Kingdom");
  CHECK(text::title_case("south korea") == "South Korea");
}

TEST_CASE("split keeps empty pieces") {
  auto parts = text::split("a;;b;", ";");
  REQUIRE(parts.size() == 4);
  CHECK(parts[1].empty());
  CHECK(parts[3].empty());
  CHECK(text::split("", ";").size() == 1);
}

TEST_CASE("utf-8 decoding") {
  CHECK(text::decode_utf8("Jim\xc3\xa9nez").size() == 7);
  CHECK(text::decode_utf8("\xe4\xb8\xad\xe6\x96\x87") == U"中文");
  auto bad = text::decode_utf8("a\xff" "b");
  REQUIRE(bad.size() == 3);
  CHECK(bad[1] == U'\uFFFD');
  // Truncated multi-byte sequence.
  CHECK(text::decode_utf8("\xc3").size() == 1);
}

TEST_CASE("number formatting") {
  CHECK(text::format_sig6(11.0 / 18) == "0.611111");
  CHECK(text::format_sig6(128) == "128");
  CHECK(text::format_fixed6(1.0 / 6) == "0.166667");
  CHECK(text::round_sig6(2.0 / 3) == doctest::Approx(0.666667).epsilon(1e-12));
}

TEST_CASE("csv quoting") {
  CHECK(text::csv_cell("plain") == "plain");
  CHECK(text::csv_cell("Smith, John") == "\"Smith, John\"");
  CHECK(text::csv_cell("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(text::csv_cell("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("bounded_random stays in range and covers it") {
  std::mt19937_64 rng(7);
  std::vector<int> seen(5, 0);
  for (int i = 0; i < 1000; ++i) {
    auto v = bounded_random(rng, 5);
    REQUIRE(v < 5);
    ++seen[v];
  }
  for (int c : seen) CHECK(c > 100);
}

TEST_CASE("sample_indices") {
  auto a = sample_indices(100, 10, 42);
  auto b = sample_indices(100, 10, 42);
  CHECK(a == b);
  REQUIRE(a.size() == 10);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  CHECK(a.back() < 100);
  CHECK(sample_indices(100, 10, 43) != a);
  auto all = sample_indices(5, 9, 1);
  CHECK(all == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(sample_indices(0, 3, 1).empty());
}
