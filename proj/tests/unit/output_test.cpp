// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "ets/error.hpp"
#include "ets/output.hpp"

namespace ets {
namespace {

SweepResult sample() {
  SweepPlan p;
  p.V_grid = {1.0, 7.5};
  p.d_grid = {0.25, 3.0, 4000.0};
  p.eta_grid = {0.3};
  return run_sweep(p);
}

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(5.656854249492380195), "5.65685424949");
  EXPECT_EQ(format_number(1.5e-20), "1.5e-20");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
}

TEST(Csv, HeaderAndFailedRow) {
  const SweepResult r[] = {sample()};
  std::ostringstream os;
  write_csv(r, os);
  const std::string s = os.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "family,inequality,V,d,eta,value,err,lr_bound,quantum_max,violated");
  EXPECT_NE(s.find("ghz3-cond,svetlichny3,1,4000,0.3,nan,nan,4,5.65685424949,false"), std::string::npos);
}

TEST(Csv, EmptyResultStillHasHeader) {
  std::ostringstream os;
  write_csv({}, os);
  std::istringstream is(os.str());
  EXPECT_TRUE(read_csv(is).empty());
}

TEST(RoundTrip, CsvAndJsonCarryTheSameNumbers) {
  const SweepResult r[] = {sample()};
  std::ostringstream c, j;
  write_csv(r, c);
  write_json(r, j, "unit");
  std::istringstream ci(c.str()), ji(j.str());
  const auto a = read_csv(ci), b = read_json(ji);
  ASSERT_EQ(a.size(), 6u);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].family, b[i].family);
    EXPECT_EQ(a[i].violated, b[i].violated);
    for (auto field : {&OutputRecord::V, &OutputRecord::d, &OutputRecord::eta, &OutputRecord::value,
                       &OutputRecord::err, &OutputRecord::lr_bound, &OutputRecord::quantum_max}) {
      const double x = a[i].*field, y = b[i].*field;
      if (std::isnan(x)) {
        EXPECT_TRUE(std::isnan(y));
      } else {
        EXPECT_EQ(x, y);
      }
    }
  }
}

TEST(Json, MetadataAndStatus) {
  const SweepResult r[] = {sample()};
  std::ostringstream os;
  write_json(r, os, "demo");
  const std::string s = os.str();
  EXPECT_NE(s.find("\"version\": \"" ETS_VERSION_STRING "\""), std::string::npos);
  EXPECT_NE(s.find("\"label\": \"demo\""), std::string::npos);
  EXPECT_NE(s.find("\"angle_provenance\": \"canonical\""), std::string::npos);
  EXPECT_NE(s.find("\"status\": \"failed\""), std::string::npos);
  EXPECT_NE(s.find("\"normalization\": \"prepared\""), std::string::npos);
}

TEST(Readers, RejectMalformedInput) {
  std::istringstream bad_header("a,b\n");
  EXPECT_THROW(read_csv(bad_header), Error);
  std::istringstream short_row("family,inequality,V,d,eta,value,err,lr_bound,quantum_max,violated\nx,y,1\n");
  EXPECT_THROW(read_csv(short_row), Error);
  std::istringstream bad_json("{\"rows\": 3");
  EXPECT_THROW(read_json(bad_json), Error);
  EXPECT_THROW(parse_format("xml"), Error);
}

}  // namespace
}  // namespace ets
