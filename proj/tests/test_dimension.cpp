#include <catch2/catch_amalgamated.hpp>

#include "liedim/coset_reps.hpp"
#include "liedim/dimension.hpp"
#include "liedim/io.hpp"

using namespace liedim;

TEST_CASE("ratio strings") {
  CHECK(ratio_decimal(1, 3, 5) == "0.33333");
  CHECK(ratio_decimal(2, 1, 5) == "2.0000");
  CHECK(ratio_decimal(1, 1, 3) == "1.00");
  CHECK(ratio_decimal(1, 1000, 4) == "0.001000");
  CHECK(ratio_decimal(0, 7) == "0");
  CHECK(ratio_decimal(355, 113, 8) == "3.1415929");
  CHECK_THROWS_AS(ratio_decimal(1, 0), std::invalid_argument);
}

TEST_CASE("factorials and logs") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigNat("2432902008176640000"));
  CHECK(bignat_log(BigNat(272)) == Catch::Approx(std::log(272.0)));
  CHECK(bignat_log(bignat_pow(2, 100)) == Catch::Approx(100.0 * std::log(2.0)));
}

TEST_CASE("a-sequence values") {
  const auto a2 = a_sequence(2, 3);
  REQUIRE(a2.size() == 4);
  CHECK(a2[0] == 2);
  CHECK(a2[1] == 12);
  CHECK(a2[2] == 272);             // 12^2 + 2^7
  CHECK(a2[3] == 106752);          // 272^2 + 2^15

  const auto a3 = a_sequence(3, 2);
  CHECK(a3[0] == 6);
  CHECK(a3[1] == 702);             // 6^3 + 3^5 * 2
  CHECK(a3[2] == BigNat(604228734));  // 702^3 + 3^17 * 2

  for (int p : {2, 3}) {
    const auto a = a_sequence(p, 4);
    BigNat pm = 1;
    for (size_t m = 0; m < a.size(); ++m) {
      if (m > 0) CHECK(a[m] > a[m - 1]);
      // dominant term: a_m >= p^{2p^m - 1} (p-1)
      CHECK(a[m] >= bignat_pow(p, (2 * pm - 1).convert_to<int64_t>()) * (p - 1));
      pm *= p;
    }
  }
}

TEST_CASE("a-sequence counts representatives") {
  CHECK(a_sequence(2, 2)[0] == enumerate_X(2, 1).size());
  CHECK(a_sequence(2, 2)[1] == enumerate_X(2, 2).size());
  CHECK(a_sequence(2, 2)[2] == enumerate_X(2, 4).size());
  CHECK(a_sequence(3, 1)[0] == enumerate_X(3, 1).size());
  CHECK(a_sequence(3, 1)[1] == enumerate_X(3, 3).size());
}

TEST_CASE("dimension report for the known pairs") {
  const DimensionReport r = dimension_report(2, 3);
  CHECK(r.kappa.parts == std::vector<int>{1, 0});
  CHECK(r.N == 12);
  CHECK(r.dim_pf == 24);
  CHECK(r.dim_lie == 120);
  CHECK(r.liemax_upper == 96);
  CHECK(r.ratio == "0.200000000000000000000000000000");
  CHECK(r.sandwich_ok);

  const DimensionReport r1 = dimension_report(2, 1);
  CHECK(r1.N == 1);  // empty product at l = 1
  CHECK(r1.dim_pf == 1);
  CHECK(r1.dim_lie == 1);
  CHECK(r1.liemax_upper == 0);
  CHECK(r1.ratio.substr(0, 2) == "1.");

  const DimensionReport r32 = dimension_report(3, 2);
  CHECK(r32.kappa.parts == std::vector<int>{0, 0});
  CHECK(r32.N == 6);
  CHECK(r32.dim_pf == 12);
  CHECK(r32.dim_lie == 120);
  CHECK(r32.liemax_upper == 108);
}

TEST_CASE("multiples of p are rejected loudly") {
  CHECK_THROWS_WITH(dimension_report(2, 4), Catch::Matchers::ContainsSubstring("divisible"));
  CHECK_THROWS_WITH(dimension_report(3, 9), Catch::Matchers::ContainsSubstring("divisible"));
}

TEST_CASE("growth table rows, sandwich and decay") {
  const auto table = growth_table(2, 31);
  REQUIRE(table.size() == 16);  // odd k up to 31

  for (const auto& r : table) {
    CHECK(r.k % 2 == 1);
    CHECK(r.sandwich_ok);
    if (r.k > 1) {
      CHECK(r.sandwich_lo <= r.N);
      CHECK(r.N <= r.sandwich_hi);
    }
    CHECK(r.dim_pf <= r.dim_lie);
    CHECK(r.dim_pf + r.liemax_upper == r.dim_lie);
  }
  CHECK(table[1].k == 3);
  CHECK(table[1].N == 12);
  CHECK(table[2].k == 5);
  CHECK(table[2].N == 272);
  CHECK(table[3].k == 7);
  CHECK(table[3].N == 3264);  // a_2 * a_1

  // ratio strictly decreasing, checked by exact cross multiplication
  for (size_t i = 1; i < table.size(); ++i)
    CHECK(table[i - 1].dim_pf * table[i].dim_lie > table[i].dim_pf * table[i - 1].dim_lie);

  const auto t3 = growth_table(3, 10);
  for (const auto& r : t3) CHECK(r.sandwich_ok);
}

TEST_CASE("formula matches enumeration where feasible") {
  CHECK(dimension_report(2, 1).N == enumerate_X(2, 0).size());
  CHECK(dimension_report(2, 3).N == enumerate_X(2, 2).size());
  CHECK(dimension_report(2, 5).N == enumerate_X(2, 4).size());
  CHECK(dimension_report(3, 1).N == enumerate_X(3, 0).size());
  CHECK(dimension_report(3, 2).N == enumerate_X(3, 1).size());
}

TEST_CASE("report serialization") {
  const DimensionReport r = dimension_report(2, 3);
  const json j = report_to_json(r);
  CHECK(j["N"] == "12");
  CHECK(j["dim_pf"] == "24");
  CHECK(j["liemax_upper"] == "96");
  CHECK(j["kappa"] == json::array({1, 0}));
  CHECK(report_csv_header() == "p,k,kappa,N,dim_pf,dim_lie,liemax_upper,ratio");
  CHECK(report_csv_row(r) ==
        "2,3,\"[1,0]\",12,24,120,96,0.200000000000000000000000000000");
}

TEST_CASE("formula matches enumeration at composite kappa") {
  CHECK(dimension_report(2, 7).N == enumerate_X(2, 6).size());  // 3264 reps
}
