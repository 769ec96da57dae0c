#include <cstdlib>

#include <gtest/gtest.h>

#include "spectra/error.hpp"
#include "spectra/io.hpp"
#include "spectra/random.hpp"

namespace spectra {
namespace {

TEST(Format, RoundTripsSeventeenDigits) {
  Rng rng = derive_rng(701, 0);
  std::normal_distribution<double> g(0.0, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const double x = g(rng) * std::pow(10.0, i % 40 - 20);
    EXPECT_EQ(std::strtod(format_double(x).c_str(), nullptr), x);
  }
  EXPECT_EQ(format_double(NAN), "nan");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(MatrixJson, RoundTripIsExact) {
  Rng rng = derive_rng(702, 0);
  for (int n : {1, 3, 8}) {
    const CMatrix m = ginibre(rng, n);
    const nlohmann::json j = matrix_to_json(m);
    EXPECT_EQ(j.at("dim"), n);
    EXPECT_EQ(j.at("data").size(), static_cast<std::size_t>(n * n));
    EXPECT_EQ(matrix_from_json(nlohmann::json::parse(j.dump())), m);
  }
}

TEST(MatrixJson, RowMajorLayout) {
  CMatrix m(2, 2);
  m << cplx(1, 2), cplx(3, 4), cplx(5, 6), cplx(7, 8);
  const auto j = matrix_to_json(m);
  EXPECT_EQ(j.at("data")[1][0], 3.0);
  EXPECT_EQ(j.at("data")[2][1], 6.0);
}

TEST(MatrixJson, MalformedInputs) {
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"dim": 2, "data": [[1,0]]})")), ConfigError);
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"data": []})")), ConfigError);
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"dim": 1, "data": [[1]]})")), ConfigError);
}

TEST(FailJson, CarriesReproductionFields) {
  FailInstance f{"thm2", 42, 7, 2, 1.5, 0.0, 1.25, CMatrix::Identity(2, 2), CMatrix::Zero(2, 2)};
  const auto j = to_json(f);
  for (const char* key : {"checker", "seed", "trial", "dim", "p", "ratio", "A", "B"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(matrix_from_json(j.at("A")), f.a);
}

TEST(JacobiJson, RoundTripAndUnknownFields) {
  Rng rng = derive_rng(703, 0);
  JacobiSpec s = random_spec(rng, 3, false);
  s.trunc = 50;
  const JacobiSpec back = jacobi_spec_from_json(nlohmann::json::parse(jacobi_spec_to_json(s).dump()));
  EXPECT_EQ(back.support, s.support);
  EXPECT_EQ(back.a, s.a);
  EXPECT_EQ(back.b, s.b);
  EXPECT_EQ(back.c, s.c);
  EXPECT_EQ(back.trunc, 50);
  EXPECT_THROW(jacobi_spec_from_json(nlohmann::json::parse(R"({"support": 0, "bogus": 1})")), ConfigError);
  EXPECT_THROW(jacobi_spec_from_json(nlohmann::json::parse(R"({"support": 1, "b": [[0,0]]})")), ConfigError);
  EXPECT_THROW(jacobi_spec_from_json(nlohmann::json::parse(R"({"support": 0, "trunc": 4})")), ConfigError);
  const JacobiSpec minimal = jacobi_spec_from_json(nlohmann::json::parse(R"({"support": 0, "b": [[3, 0]]})"));
  EXPECT_EQ(minimal.b_at(0), cplx(3.0));
  EXPECT_EQ(minimal.a_at(0), cplx(1.0));
}

TEST(Csv, QuotingAndHeaders) {
  EXPECT_EQ(csv_line({"a", "b,c", "d\"e"}), "a,\"b,c\",\"d\"\"e\"\n");
  EXPECT_EQ(gallery_csv_header(), "case,params,closed_form,computed,abs_error,match\n");
  IneqReport r = make_report("thm2", 1.0, 2.0, 1.0, {});
  r.extras = {{"n_angles", 64}};
  EXPECT_EQ(report_csv_row(r), "thm2,1,1,2,0.5,PASS,n_angles=64\n");
}

}  // namespace
}  // namespace spectra
