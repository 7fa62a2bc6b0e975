#include <doctest.h>

#include "charvar/errors.hpp"
#include "charvar/io.hpp"

using namespace charvar;

TEST_CASE("scalars") {
  CHECK(scalar_from_json(Json("-3/6")) == ExactScalar(Rational(-1, 2)));
  CHECK(scalar_from_json(Json(4)) == ExactScalar(4));
  const ExactScalar w = ExactScalar::root_of_unity(3, 1);
  CHECK(scalar_from_json(scalar_to_json(w)) == w);
  CHECK(scalar_to_json(ExactScalar(Rational(2, 3))) == Json("2/3"));
  CHECK(point_from_text("-1,1/2,3") == std::vector<ExactScalar>{ExactScalar(-1), ExactScalar(Rational(1, 2)), ExactScalar(3)});
  CHECK_THROWS_AS(scalar_from_json(Json("1/0")), ValidationError);
  CHECK_THROWS_AS(scalar_from_json(Json("x")), ValidationError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"order": 0, "coeffs": []})")), ValidationError);
  CHECK_THROWS_AS(point_from_text(""), ValidationError);
}

TEST_CASE("arrangements and lattices round trip") {
  for (const auto& spec : std::vector<FamilySpec>{{"braid", 0, 4}, {"diamond"}, {"hessian"}, {"pencil", 0, 0, 4}, {"falk_pair"}})
    for (const auto& f : gen_family(spec)) {
      CAPTURE(f.name);
      const Json j = fixture_to_json(f);
      const ArrangementInput in = input_from_json(j);
      CHECK(in.lattice == f.lattice);
      CHECK(in.arrangement.has_value() == f.arrangement.has_value());
      CHECK(lattice_from_json(lattice_to_json(f.lattice)) == f.lattice);
    }
  const Deconed dec = decone(*gen_family({"diamond"}).front().arrangement);
  const Lattice2 lat = lattice_of(dec.affine);
  CHECK(lattice_from_json(lattice_to_json(lat)) == lat);
  CHECK(lattice_to_json(lat).contains("parallel"));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(input_from_json(Json::parse(R"({"n": 3})")), ValidationError);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"n": 4, "flats": [[1, 2]]})")), ValidationError);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"n": 4, "flats": [[1, 2, 3], [1, 2, 4]]})")), ValidationError);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"n": 4, "flats": [[0, 1, 2]]})")), ValidationError);
  CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"flavor": "affine3", "hyperplanes": []})")), ValidationError);
  CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"flavor": "central3", "hyperplanes": [[1, 0]]})")), ValidationError);
  Json mismatch = fixture_to_json(gen_family({"braid", 0, 4}).front());
  mismatch["flats"] = Json::parse("[[1, 2, 3]]");
  CHECK_THROWS_AS(input_from_json(mismatch), ValidationError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ValidationError);
}

TEST_CASE("membership queries") {
  const MembershipQuery q = query_from_json(Json::parse(R"({"point": ["-1", 1, {"order": 3, "coeffs": ["0", "1"]}], "k": 2})"));
  CHECK(q.k == 2);
  CHECK(q.point[2] == ExactScalar::root_of_unity(3, 1));
  CHECK(query_from_json(Json::parse(R"({"point": [1]})")).k == 1);
  CHECK_THROWS_AS(query_from_json(Json::parse(R"({"k": 1})")), ValidationError);
}

TEST_CASE("membership points of central arrangements") {
  const std::vector<ExactScalar> t{ExactScalar(2), ExactScalar(Rational(1, 3))};
  const auto lifted = lift_membership_point(t);
  CHECK(lifted.back() == ExactScalar(Rational(3, 2)));
  CHECK(decone_membership_point(lifted) == t);
  CHECK_THROWS_AS(decone_membership_point(t), ValidationError);
  CHECK_THROWS_AS(decone_membership_point({}), ValidationError);
}
