#include <gtest/gtest.h>

#include <json.hpp>

#include "epw/exterior.hpp"
#include "epw/lagrangian.hpp"
#include "epw/lattice.hpp"
#include "epw/serialize.hpp"
#include "epw/strata.hpp"

namespace {

using namespace epw;
using Json = nlohmann::json;

TEST(Fractions, Format) {
  EXPECT_EQ(fraction_string(Scalar(3)), "3/1");
  EXPECT_EQ(fraction_string(Scalar(-6) / 4), "-3/2");
  EXPECT_EQ(fraction_string(Scalar(0)), "0/1");
}

TEST(Matrices, RoundTrip) {
  QMatrix m = QMatrix::from_ints({{1, -2}, {0, 5}});
  m(0, 1) = Scalar(-7) / 3;
  std::string text = matrix_to_json(m);
  EXPECT_EQ(text, R"([["1/1","-7/3"],["0/1","5/1"]])");
  EXPECT_EQ(matrix_from_json(text), m);
  EXPECT_EQ(matrix_from_json(R"([["1","2/4"]])"), QMatrix::from_rows({{Scalar(1), Scalar(1) / 2}}, 2));
  EXPECT_THROW(matrix_from_json("[[1],[1,2]]"), PreconditionError);
  EXPECT_THROW(matrix_from_json("not json"), PreconditionError);
  EXPECT_THROW(matrix_from_json(R"([["1/0"]])"), std::exception);
}

TEST(Subspaces, RoundTrip) {
  Subspace t0 = tangent_lagrangian(Chart::standard().u0());
  std::string text = subspace_to_json(t0);
  Json j = Json::parse(text);
  EXPECT_EQ(j["ambient_dim"], 20);
  EXPECT_EQ(j["basis"].size(), 10u);
  EXPECT_EQ(subspace_from_json(text), t0);
  Subspace a = random_lagrangian(4);
  EXPECT_EQ(subspace_from_json(subspace_to_json(a)), a);
}

TEST(TriVectors, RoundTrip) {
  TriVector t = wedge3(unit_vector(0), unit_vector(1), unit_vector(2));
  t.coords[19] = Scalar(5) / 7;
  EXPECT_EQ(trivector_from_json(trivector_to_json(t)), t);
  EXPECT_THROW(trivector_from_json("[\"1/1\"]"), PreconditionError);
}

TEST(Lattices, RoundTrip) {
  IntegralLattice h = build_h_perp();
  std::string text = lattice_to_json(h);
  Json j = Json::parse(text);
  EXPECT_EQ(j["rank"], 22);
  EXPECT_EQ(j["labels"][20], "k");
  IntegralLattice back = lattice_from_json(text);
  EXPECT_EQ(back.gram(), h.gram());
  EXPECT_EQ(back.labels(), h.labels());
  EXPECT_THROW(lattice_from_json(R"({"gram": [[1, 2], [2, 4]]})"), PreconditionError);
}

TEST(StratumSamples, Shape) {
  StratumSample s;
  s.seed = 7;
  s.lagrangian_id = "gamma";
  s.samples = 3;
  s.histogram = {{0, 2}, {4, 1}};
  s.points.push_back({QMatrix::from_ints({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}), 4, true});
  Json j = Json::parse(stratum_sample_to_json(s));
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["max_corank"], 4);
  EXPECT_EQ(j["corank_histogram"]["0"], 2);
  EXPECT_EQ(j["corank_histogram"]["4"], 1);
  EXPECT_EQ(j["special_points"][0]["corank"], 4);
  EXPECT_EQ(j["special_points"][0]["special"], true);
  EXPECT_EQ(j["special_points"][0]["u"][0][0], "1/1");
}

TEST(HeegnerCsv, Rows) {
  std::vector<HeegnerEntry> rows;
  for (long e = 3; e <= 6; ++e) rows.push_back(heegner_classify(e));
  std::string csv = heegner_table_csv(rows);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "e,nonempty,div,square,class,witness");
  std::getline(in, line);
  EXPECT_EQ(line, "3,false,,,,");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("4,true,1,-2,\"(0,0)\",", 0), 0u) << line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("5,true,2,-10,", 0), 0u) << line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("6,true,2,-12,\"(1,1)\",", 0), 0u) << line;
}

}  // namespace
